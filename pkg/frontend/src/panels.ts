import type { BarcodeDoc, Interval, TeamSummary, TradeReport } from './api';
import { axisSpan, barcodeSvg } from './barcode';

// HTML builders for the three view blocks: team summary, team barcodes,
// and the side-by-side trade report.

const fmt = (v: number): string =>
  Math.abs(v) >= 1000 ? v.toFixed(1) : v.toPrecision(6).replace(/\.?0+$/, '');

const esc = (s: string): string =>
  s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;').replace(/"/g, '&quot;');

export function summaryPanel(summary: TeamSummary): string {
  const rows: [string, string][] = [
    ['sparsity', fmt(summary.sparsity_profile[0])],
    ['top line', fmt(summary.top_line)],
    ['mean bar length', fmt(summary.mean_bar_length)],
    ['loops above noise floor', String(summary.h1_count)],
    ['loop total length', fmt(summary.h1_total_length)],
    ['tunneling diameter', `${fmt(summary.tunneling.diameter)} (${esc(summary.tunneling.method)})`],
  ];
  const dl = rows
    .map(([k, v]) => `<div class="metric"><dt>${k}</dt><dd>${v}</dd></div>`)
    .join('');
  return `<dl class="metrics">${dl}</dl>`;
}

export function barcodePanel(title: string, intervals: Interval[], axisMax?: number): string {
  const body =
    intervals.length === 0
      ? '<p class="empty">no classes</p>'
      : barcodeSvg(intervals, { axisMax });
  return `<section class="panel"><h3>${esc(title)} <span class="count">${intervals.length}</span></h3>${body}</section>`;
}

export function teamBarcodes(doc: BarcodeDoc): string {
  // one shared axis so the two dimensions line up
  const axisMax = axisSpan([...doc.dim0, ...doc.dim1]);
  return (
    barcodePanel('dimension 0', doc.dim0, axisMax) +
    barcodePanel('dimension 1', doc.dim1, axisMax)
  );
}

// The trade response carries summaries, not interval lists, so the
// before/after panels re-present summary fields: dimension-0 bars are
// [0, v) for each merge scale in the sparsity profile plus the one bar
// that never dies, and dimension-1 shows one marker per surviving loop.
// Nothing is recomputed; every bar maps to a response field.
export function profileIntervals(summary: TeamSummary): Interval[] {
  const finite: Interval[] = summary.sparsity_profile.map((v) => [0, v]);
  return [...finite, [0, null]];
}

function h1Strip(summary: TeamSummary): string {
  if (summary.h1_count === 0) {
    return '<p class="empty">no classes</p>';
  }
  const marks = Array.from(
    { length: summary.h1_count },
    () => '<span class="h1-mark" title="loop above noise floor"></span>',
  ).join('');
  return `<div class="h1-strip">${marks}<span class="h1-note">total length ${fmt(summary.h1_total_length)}</span></div>`;
}

function tradeSide(label: string, summary: TeamSummary, axisMax: number): string {
  const bars = profileIntervals(summary);
  return `<article class="trade-side" data-side="${label}">
<h3>${label}</h3>
${summaryPanel(summary)}
<h4>dimension 0 <span class="count">${bars.length}</span></h4>
${barcodeSvg(bars, { axisMax })}
<h4>dimension 1 <span class="count">${summary.h1_count}</span></h4>
${h1Strip(summary)}
</article>`;
}

export function verdictBadge(verdict: TradeReport['verdict']): string {
  return `<span class="verdict verdict-${verdict}">${verdict}</span>`;
}

export function tradeView(report: TradeReport): string {
  const axisMax = axisSpan([
    ...profileIntervals(report.before),
    ...profileIntervals(report.after),
  ]);
  const deltas = Object.entries(report.deltas)
    .map(
      ([k, v]) =>
        `<tr><td>${esc(k)}</td><td class="num">${v >= 0 ? '+' : ''}${fmt(v)}</td></tr>`,
    )
    .join('');
  return `<div class="trade-report">
<header class="trade-header"><h2>trade result</h2>${verdictBadge(report.verdict)}</header>
<div class="trade-sides">
${tradeSide('before', report.before, axisMax)}
${tradeSide('after', report.after, axisMax)}
</div>
<table class="deltas"><thead><tr><th>metric</th><th>delta</th></tr></thead><tbody>${deltas}</tbody></table>
</div>`;
}
