import type { Interval } from './api';

// Draws a barcode panel from interval JSON. Widths stay pixel-proportional
// to interval lengths; hovering a bar shows the exact [birth, death) pair.

export type BarcodeOptions = {
  widthPx?: number;
  barHeight?: number;
  gap?: number;
  axisMax?: number;
  color?: string;
};

const DEFAULTS = { widthPx: 560, barHeight: 10, gap: 4, color: '#2563eb' };

export function axisSpan(intervals: Interval[]): number {
  let max = 0;
  for (const [birth, death] of intervals) {
    max = Math.max(max, birth, death ?? 0);
  }
  return max > 0 ? max * 1.05 : 1;
}

const tooltip = (birth: number, death: number | null): string =>
  `[${birth}, ${death === null ? 'inf' : death})`;

export function barcodeSvg(intervals: Interval[], options: BarcodeOptions = {}): string {
  const { widthPx, barHeight, gap, color } = { ...DEFAULTS, ...options };
  const axisMax = options.axisMax ?? axisSpan(intervals);
  const rowStep = barHeight + gap;
  const height = intervals.length * rowStep + gap;
  const scale = (v: number) => (v / axisMax) * widthPx;

  let acm = `<svg xmlns="http://www.w3.org/2000/svg" class="barcode" width="${widthPx}" `;
  acm += `height="${height}" viewBox="0 0 ${widthPx} ${height}" role="img">`;
  intervals.forEach(([birth, death], i) => {
    const x = scale(birth);
    const y = gap + i * rowStep;
    const endX = death === null ? widthPx : scale(death);
    const w = Math.max(endX - x, 1);
    acm += `<rect class="bar" x="${x.toFixed(2)}" y="${y}" width="${w.toFixed(2)}" `;
    acm += `height="${barHeight}" fill="${color}">`;
    acm += `<title>${tooltip(birth, death)}</title></rect>`;
    if (death === null) {
      // open-ended bar: arrowhead flush with the right edge
      const midY = y + barHeight / 2;
      acm += `<path class="arrow" d="M ${widthPx - 8} ${y - 2} L ${widthPx} ${midY} `;
      acm += `L ${widthPx - 8} ${y + barHeight + 2} Z" fill="${color}"/>`;
    }
  });
  acm += '</svg>';
  return acm;
}
