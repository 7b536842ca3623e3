import { readFileSync } from "node:fs";
import Papa from "papaparse";

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

export function loadCsv(path: string): Table {
  const text = readFileSync(path, "utf8");
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new Error(`failed to parse ${path}: ${parsed.errors[0].message}`);
  }
  const columns = parsed.meta.fields ?? [];
  return { columns, rows: parsed.data };
}

export function requireColumns(table: Table, names: string[]): void {
  const missing = names.filter((n) => !table.columns.includes(n));
  if (missing.length > 0) {
    throw new Error(
      `missing CSV columns: ${missing.join(", ")} (have: ${table.columns.join(", ")})`
    );
  }
}

export function numericColumn(table: Table, name: string): number[] {
  requireColumns(table, [name]);
  return table.rows.map((row) => {
    const v = Number(row[name]);
    if (Number.isNaN(v)) {
      throw new Error(`non-numeric value ${JSON.stringify(row[name])} in column ${name}`);
    }
    return v;
  });
}
