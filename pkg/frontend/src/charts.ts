/** SVG chart builders. Pure string-in, string-out: no DOM access, so the
 * geometry is unit-testable in node and rendering is a plain innerHTML set.
 */

export interface Extent {
  min: number;
  max: number;
}

export interface ChartPoint {
  x: number;
  y: number;
}

export interface ChartSeries {
  label: string;
  color: string;
  points: [number, number][];
  dashed?: boolean;
}

export interface ChartMarker {
  x: number;
  y: number;
  color: string;
  label: string;
}

export interface LineChartOptions {
  width?: number;
  height?: number;
  xLabel: string;
  yLabel: string;
  series: ChartSeries[];
  markers?: ChartMarker[];
}

const MARGIN = { top: 16, right: 18, bottom: 42, left: 60 };

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Round tick steps of 1/2/5 x 10^k covering [lo, hi]. */
export function niceTicks(lo: number, hi: number, want = 5): number[] {
  if (!(hi > lo)) return [lo];
  const rawStep = (hi - lo) / Math.max(1, want);
  const power = Math.floor(Math.log10(rawStep));
  const base = Math.pow(10, power);
  let step = 10 * base;
  for (const mult of [1, 2, 5]) {
    if (mult * base >= rawStep) {
      step = mult * base;
      break;
    }
  }
  const ticks: number[] = [];
  let v = Math.ceil(lo / step) * step;
  for (; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

export function fmtTick(v: number): string {
  if (v === 0) return "0";
  if (Math.abs(v) >= 1000) return v.toFixed(0);
  const text = v.toFixed(2);
  return text.replace(/\.?0+$/, "");
}

export function linScale(
  domain: Extent,
  range: [number, number],
): (v: number) => number {
  const span = domain.max - domain.min;
  const k = span === 0 ? 0 : (range[1] - range[0]) / span;
  return (v: number) => range[0] + (v - domain.min) * k;
}

function padded(values: number[]): Extent {
  if (values.length === 0) return { min: 0, max: 1 };
  let min = Math.min(...values);
  let max = Math.max(...values);
  if (min === max) {
    min -= 1;
    max += 1;
  }
  const pad = (max - min) * 0.05;
  return { min: min - pad, max: max + pad };
}

function axes(
  x: (v: number) => number,
  y: (v: number) => number,
  xDomain: Extent,
  yDomain: Extent,
  width: number,
  height: number,
  xLabel: string,
  yLabel: string,
): string {
  const parts: string[] = [];
  const left = MARGIN.left;
  const right = width - MARGIN.right;
  const top = MARGIN.top;
  const bottom = height - MARGIN.bottom;

  for (const t of niceTicks(xDomain.min, xDomain.max)) {
    const px = x(t);
    parts.push(
      `<line class="grid" x1="${px.toFixed(1)}" y1="${top}" x2="${px.toFixed(1)}" y2="${bottom}"/>`,
      `<text class="tick" x="${px.toFixed(1)}" y="${bottom + 16}" text-anchor="middle">${fmtTick(t)}</text>`,
    );
  }
  for (const t of niceTicks(yDomain.min, yDomain.max)) {
    const py = y(t);
    parts.push(
      `<line class="grid" x1="${left}" y1="${py.toFixed(1)}" x2="${right}" y2="${py.toFixed(1)}"/>`,
      `<text class="tick" x="${left - 8}" y="${(py + 4).toFixed(1)}" text-anchor="end">${fmtTick(t)}</text>`,
    );
  }
  if (yDomain.min < 0 && yDomain.max > 0) {
    const py = y(0);
    parts.push(
      `<line class="zero" x1="${left}" y1="${py.toFixed(1)}" x2="${right}" y2="${py.toFixed(1)}"/>`,
    );
  }
  parts.push(
    `<line class="axis" x1="${left}" y1="${bottom}" x2="${right}" y2="${bottom}"/>`,
    `<line class="axis" x1="${left}" y1="${top}" x2="${left}" y2="${bottom}"/>`,
    `<text class="label" x="${(left + right) / 2}" y="${height - 6}" text-anchor="middle">${escapeXml(xLabel)}</text>`,
    `<text class="label" x="14" y="${(top + bottom) / 2}" text-anchor="middle" transform="rotate(-90 14 ${(top + bottom) / 2})">${escapeXml(yLabel)}</text>`,
  );
  return parts.join("");
}

export function lineChart(opts: LineChartOptions): string {
  const width = opts.width ?? 460;
  const height = opts.height ?? 330;
  const markers = opts.markers ?? [];
  const xs: number[] = [];
  const ys: number[] = [];
  for (const one of opts.series) {
    for (const [px, py] of one.points) {
      xs.push(px);
      ys.push(py);
    }
  }
  for (const m of markers) {
    xs.push(m.x);
    ys.push(m.y);
  }
  const xDomain = padded(xs);
  const yDomain = padded(ys);
  const x = linScale(xDomain, [MARGIN.left, width - MARGIN.right]);
  const y = linScale(yDomain, [height - MARGIN.bottom, MARGIN.top]);

  const parts: string[] = [
    `<svg class="chart" viewBox="0 0 ${width} ${height}" role="img">`,
    axes(x, y, xDomain, yDomain, width, height, opts.xLabel, opts.yLabel),
  ];
  for (const one of opts.series) {
    if (one.points.length === 0) continue;
    const path = one.points
      .map(
        ([px, py], idx) =>
          `${idx === 0 ? "M" : "L"}${x(px).toFixed(2)} ${y(py).toFixed(2)}`,
      )
      .join(" ");
    const dash = one.dashed ? ` stroke-dasharray="6 4"` : "";
    parts.push(
      `<path class="series" d="${path}" fill="none" stroke="${one.color}"${dash}>` +
        `<title>${escapeXml(one.label)}</title></path>`,
    );
  }
  for (const m of markers) {
    parts.push(
      `<circle class="marker" cx="${x(m.x).toFixed(2)}" cy="${y(m.y).toFixed(2)}" r="4.5" fill="${m.color}">` +
        `<title>${escapeXml(m.label)}</title></circle>`,
    );
  }
  parts.push(`</svg>`);
  return parts.join("");
}

export interface BarSegment {
  name: string;
  value: number;
}

export interface Bar {
  label: string;
  color: string;
  segments: BarSegment[];
}

export interface BarChartOptions {
  width?: number;
  height?: number;
  yLabel: string;
  bars: Bar[];
}

/** Opacity ladder distinguishing the segments of one bar. */
export const SEGMENT_OPACITY = [0.95, 0.7, 0.5, 0.3] as const;

export function stackedBarChart(opts: BarChartOptions): string {
  const width = opts.width ?? 460;
  const height = opts.height ?? 330;
  const tops: number[] = [0];
  const bottoms: number[] = [0];
  for (const bar of opts.bars) {
    let up = 0;
    let down = 0;
    for (const seg of bar.segments) {
      if (seg.value >= 0) up += seg.value;
      else down += seg.value;
    }
    tops.push(up);
    bottoms.push(down);
  }
  const yDomain = padded([Math.min(...bottoms), Math.max(...tops)]);
  const y = linScale(yDomain, [height - MARGIN.bottom, MARGIN.top]);
  const left = MARGIN.left;
  const right = width - MARGIN.right;

  const parts: string[] = [
    `<svg class="chart" viewBox="0 0 ${width} ${height}" role="img">`,
  ];
  for (const t of niceTicks(yDomain.min, yDomain.max)) {
    const py = y(t);
    parts.push(
      `<line class="grid" x1="${left}" y1="${py.toFixed(1)}" x2="${right}" y2="${py.toFixed(1)}"/>`,
      `<text class="tick" x="${left - 8}" y="${(py + 4).toFixed(1)}" text-anchor="end">${fmtTick(t)}</text>`,
    );
  }
  const zeroY = y(Math.max(yDomain.min, Math.min(yDomain.max, 0)));
  parts.push(
    `<line class="axis" x1="${left}" y1="${zeroY.toFixed(1)}" x2="${right}" y2="${zeroY.toFixed(1)}"/>`,
    `<text class="label" x="14" y="${(MARGIN.top + height - MARGIN.bottom) / 2}" text-anchor="middle" transform="rotate(-90 14 ${(MARGIN.top + height - MARGIN.bottom) / 2})">${escapeXml(opts.yLabel)}</text>`,
  );

  const slotWidth = (right - left) / Math.max(1, opts.bars.length);
  opts.bars.forEach((bar, idx) => {
    const cx = left + slotWidth * (idx + 0.5);
    const barWidth = slotWidth * 0.52;
    let up = 0;
    let down = 0;
    bar.segments.forEach((seg, segIdx) => {
      const opacity = SEGMENT_OPACITY[segIdx % SEGMENT_OPACITY.length];
      let y0: number;
      let y1: number;
      if (seg.value >= 0) {
        y0 = y(up + seg.value);
        y1 = y(up);
        up += seg.value;
      } else {
        y0 = y(down);
        y1 = y(down + seg.value);
        down += seg.value;
      }
      const rectY = Math.min(y0, y1);
      const rectH = Math.abs(y1 - y0);
      parts.push(
        `<rect class="segment" x="${(cx - barWidth / 2).toFixed(1)}" y="${rectY.toFixed(2)}" ` +
          `width="${barWidth.toFixed(1)}" height="${rectH.toFixed(2)}" ` +
          `fill="${bar.color}" fill-opacity="${opacity}">` +
          `<title>${escapeXml(`${bar.label} ${seg.name}: ${seg.value.toFixed(2)}`)}</title></rect>`,
      );
    });
    parts.push(
      `<text class="tick" x="${cx.toFixed(1)}" y="${height - MARGIN.bottom + 16}" text-anchor="middle">${escapeXml(bar.label)}</text>`,
      `<text class="total" x="${cx.toFixed(1)}" y="${(y(up) - 6).toFixed(1)}" text-anchor="middle">${fmtTick(up + down)}</text>`,
    );
  });
  parts.push(`</svg>`);
  return parts.join("");
}
