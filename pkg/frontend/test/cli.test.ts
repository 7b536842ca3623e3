import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";
import { runCli } from "../src/cli";

const FIXTURES = join(__dirname, "..", "..", "fixtures");

describe("render command", () => {
  it("re-render is byte-identical", () => {
    const dir = mkdtempSync(join(tmpdir(), "plots-cli-"));
    const a = join(dir, "a.svg");
    const b = join(dir, "b.svg");
    const base = ["render", "--kind", "restriction", "--csv", join(FIXTURES, "restriction.csv")];
    expect(runCli([...base, "--out", a])).toBe(0);
    expect(runCli([...base, "--out", b])).toBe(0);
    expect(readFileSync(a)).toEqual(readFileSync(b));
  });

  it("writes every figure kind from its acceptance CSV", () => {
    const dir = mkdtempSync(join(tmpdir(), "plots-cli-"));
    const cases: [string, string][] = [
      ["sample-complexity", "sample-complexity.csv"],
      ["restriction", "restriction.csv"],
      ["tester", "tester.csv"],
      ["listdecode", "listdecode.csv"],
    ];
    for (const [kind, file] of cases) {
      const out = join(dir, `${kind}.svg`);
      const code = runCli([
        "render", "--kind", kind, "--csv", join(FIXTURES, file), "--out", out,
      ]);
      expect(code).toBe(0);
      expect(readFileSync(out, "utf8")).toContain("</svg>");
    }
  });

  it("rejects an unknown kind", () => {
    expect(
      runCli(["render", "--kind", "pie", "--csv", "x.csv", "--out", "x.svg"])
    ).toBe(1);
  });

  it("fails cleanly on a missing CSV", () => {
    const dir = mkdtempSync(join(tmpdir(), "plots-cli-"));
    expect(
      runCli([
        "render", "--kind", "tester",
        "--csv", join(dir, "absent.csv"),
        "--out", join(dir, "x.svg"),
      ])
    ).toBe(1);
  });
});
