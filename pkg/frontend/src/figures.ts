import { loadCsv, numericColumn, requireColumns, Table } from "./csv.js";
import { Figure, renderFigure } from "./svg.js";

export type FigureKind =
  | "sample-complexity"
  | "restriction"
  | "tester"
  | "listdecode";

export interface FigureSpec {
  kind: FigureKind;
  csv: string;
  out: string;
  // sample-complexity: vertical reference at q = n * k * log2(k)
  n?: number;
  k?: number;
}

function zip(xs: number[], ys: number[]): [number, number][] {
  return xs.map((x, i) => [x, ys[i]]);
}

function sampleComplexity(table: Table, spec: FigureSpec): Figure {
  const q = numericColumn(table, "q");
  const rate = numericColumn(table, "success_rate");
  const fig: Figure = {
    title: "Learning success rate vs sample count",
    xLabel: "samples q",
    yLabel: "success rate",
    series: [
      { label: "success rate", points: zip(q, rate), stroke: "#1f77b4", markers: true },
    ],
  };
  if (spec.n !== undefined && spec.k !== undefined && spec.k > 1) {
    const ref = spec.n * spec.k * Math.log2(spec.k);
    fig.series.push({
      label: "n k log2 k",
      points: [
        [ref, 0],
        [ref, 1],
      ],
      stroke: "#888888",
      dashed: true,
    });
  }
  return fig;
}

function restriction(table: Table): Figure {
  const r = numericColumn(table, "r");
  const rate = numericColumn(table, "non_boolean_rate");
  const bound = numericColumn(table, "bound");
  return {
    title: "Non-Boolean restriction probability vs subspace dimension",
    xLabel: "restriction dimension r",
    yLabel: "P[restriction non-Boolean]",
    series: [
      { label: "measured", points: zip(r, rate), stroke: "#1f77b4", markers: true },
      { label: "1 - L/2^r bound", points: zip(r, bound), stroke: "#d62728", dashed: true },
    ],
  };
}

function tester(table: Table): Figure {
  requireColumns(table, ["verdict", "queries_used"]);
  const queries = numericColumn(table, "queries_used");
  const verdicts = table.rows.map((row) => row["verdict"]);
  const total = verdicts.length;
  // rejection rate within a query budget: fraction of runs that rejected
  // using at most that many queries (binned at observed budgets)
  const budgets = [...new Set(queries)].sort((a, b) => a - b);
  const points: [number, number][] = budgets.map((b) => {
    const hits = verdicts.filter((v, i) => v === "reject" && queries[i] <= b).length;
    return [b, total === 0 ? 0 : hits / total];
  });
  return {
    title: "Tester rejection rate vs query budget",
    xLabel: "query budget",
    yLabel: "rejection rate",
    series: [{ label: "rejection rate", points, stroke: "#1f77b4", markers: true }],
  };
}

function listdecode(table: Table, spec: FigureSpec): Figure {
  const d = numericColumn(table, "d");
  const count = numericColumn(table, "count");
  let xs = d;
  let xLabel = "distance d";
  if (spec.n !== undefined && spec.k !== undefined && spec.k > 1) {
    const scale = (spec.n * spec.k * Math.log2(spec.k)) / Math.pow(2, spec.n);
    xs = d.map((v) => v * scale);
    xLabel = "n d k log2(k) / 2^n";
  }
  return {
    title: "List-decoding count growth",
    xLabel,
    yLabel: "count",
    series: [{ label: "count", points: zip(xs, count), stroke: "#1f77b4", markers: true }],
  };
}

export function buildFigure(spec: FigureSpec): Figure {
  const table = loadCsv(spec.csv);
  switch (spec.kind) {
    case "sample-complexity":
      return sampleComplexity(table, spec);
    case "restriction":
      return restriction(table);
    case "tester":
      return tester(table);
    case "listdecode":
      return listdecode(table, spec);
  }
}

export function renderSpec(spec: FigureSpec): string {
  return renderFigure(buildFigure(spec));
}
