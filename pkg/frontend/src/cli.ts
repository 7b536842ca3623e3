import { writeFileSync } from "node:fs";
import { Command } from "commander";
import { FigureKind, FigureSpec, renderSpec } from "./figures.js";

const KINDS: FigureKind[] = ["sample-complexity", "restriction", "tester", "listdecode"];

export function runCli(argv: string[]): number {
  const program = new Command();
  program
    .name("boolfourier-plots")
    .exitOverride()
    .configureOutput({ writeErr: (s) => process.stderr.write(s) });
  program
    .command("render")
    .requiredOption("--kind <kind>", `one of ${KINDS.join(", ")}`)
    .requiredOption("--csv <path>", "experiment CSV from the boolfourier CLI")
    .requiredOption("--out <path>", "output SVG path")
    .option("--n <int>", "ambient dimension for reference overlays")
    .option("--k <int>", "sparsity for reference overlays")
    .action((opts) => {
      if (!KINDS.includes(opts.kind)) {
        throw new Error(`unknown kind ${opts.kind}; use one of ${KINDS.join(", ")}`);
      }
      const spec: FigureSpec = {
        kind: opts.kind,
        csv: opts.csv,
        out: opts.out,
        n: opts.n === undefined ? undefined : Number(opts.n),
        k: opts.k === undefined ? undefined : Number(opts.k),
      };
      writeFileSync(spec.out, renderSpec(spec));
    });
  try {
    program.parse(argv, { from: "user" });
  } catch (err) {
    if (err instanceof Error && err.message.startsWith("(outputHelp)")) return 0;
    process.stderr.write(`error: ${err instanceof Error ? err.message : String(err)}\n`);
    return 1;
  }
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(runCli(process.argv.slice(2)));
}
