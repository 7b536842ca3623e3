// Minimal deterministic SVG scene builder.  Fixed canvas, fixed number
// formatting, no timestamps or random ids, so identical inputs yield
// byte-identical files.

export const WIDTH = 640;
export const HEIGHT = 420;
export const MARGIN = { top: 32, right: 24, bottom: 48, left: 64 };

export interface Series {
  label: string;
  points: [number, number][];
  stroke: string;
  dashed?: boolean;
  markers?: boolean;
}

export interface Figure {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
}

// fixed-precision formatting; avoids locale and float-repr drift
export function fmt(v: number): string {
  if (v === 0) return "0";
  if (Number.isInteger(v) && Math.abs(v) < 1e9) return String(v);
  return v.toPrecision(6).replace(/\.?0+$/, "").replace(/\.?0+e/, "e");
}

interface Range {
  min: number;
  max: number;
}

function extent(values: number[]): Range {
  if (values.length === 0) return { min: 0, max: 1 };
  let min = Math.min(...values);
  let max = Math.max(...values);
  if (min === max) {
    min -= 0.5;
    max += 0.5;
  }
  return { min, max };
}

function ticks(range: Range, count: number): number[] {
  const span = range.max - range.min;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const err = span / count / step;
  const mult = err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1;
  const s = step * mult;
  const out: number[] = [];
  for (let t = Math.ceil(range.min / s) * s; t <= range.max + s / 1e6; t += s) {
    out.push(Math.abs(t) < s / 1e6 ? 0 : t);
  }
  return out;
}

export function renderFigure(fig: Figure): string {
  const xs = fig.series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = fig.series.flatMap((s) => s.points.map((p) => p[1]));
  const xr = extent(xs);
  const yr = extent(ys);
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const sx = (x: number) =>
    MARGIN.left + ((x - xr.min) / (xr.max - xr.min)) * plotW;
  const sy = (y: number) =>
    MARGIN.top + plotH - ((y - yr.min) / (yr.max - yr.min)) * plotH;
  const px = (v: number) => fmt(Math.round(v * 100) / 100);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<text x="${WIDTH / 2}" y="20" text-anchor="middle" font-size="14">${escapeXml(fig.title)}</text>`
  );

  // axes
  const x0 = MARGIN.left;
  const y0 = MARGIN.top + plotH;
  parts.push(
    `<g class="axes" stroke="black" fill="none"><path d="M ${x0} ${MARGIN.top} V ${y0} H ${x0 + plotW}"/></g>`
  );
  for (const t of ticks(xr, 8)) {
    const x = px(sx(t));
    parts.push(
      `<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 5}" stroke="black"/>` +
        `<text x="${x}" y="${y0 + 18}" text-anchor="middle" font-size="10">${fmt(t)}</text>`
    );
  }
  for (const t of ticks(yr, 6)) {
    const y = px(sy(t));
    parts.push(
      `<line x1="${x0 - 5}" y1="${y}" x2="${x0}" y2="${y}" stroke="black"/>` +
        `<text x="${x0 - 8}" y="${y}" text-anchor="end" dominant-baseline="middle" font-size="10">${fmt(t)}</text>`
    );
  }
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 8}" text-anchor="middle" font-size="12">${escapeXml(fig.xLabel)}</text>`
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${escapeXml(fig.yLabel)}</text>`
  );

  // data
  fig.series.forEach((s, i) => {
    if (s.points.length === 0) return;
    const d = s.points
      .map(([x, y], j) => `${j === 0 ? "M" : "L"} ${px(sx(x))} ${px(sy(y))}`)
      .join(" ");
    const dash = s.dashed ? ` stroke-dasharray="6 4"` : "";
    parts.push(
      `<path class="series" d="${d}" fill="none" stroke="${s.stroke}" stroke-width="1.5"${dash}/>`
    );
    if (s.markers) {
      for (const [x, y] of s.points) {
        parts.push(
          `<circle cx="${px(sx(x))}" cy="${px(sy(y))}" r="2.5" fill="${s.stroke}"/>`
        );
      }
    }
    const ly = MARGIN.top + 14 * (i + 1);
    parts.push(
      `<line x1="${WIDTH - MARGIN.right - 140}" y1="${ly}" x2="${WIDTH - MARGIN.right - 120}" y2="${ly}" stroke="${s.stroke}" stroke-width="1.5"${dash}/>` +
        `<text x="${WIDTH - MARGIN.right - 114}" y="${ly + 3}" font-size="10">${escapeXml(s.label)}</text>`
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
