// Draws the plane from flat Float64Arrays returned by the wasm module.
import init, { boundsCurves, syntheticTrajectory, analyzeSeries } from "./pkg/permplane_web.js";

const plane = document.getElementById("plane");
const histogram = document.getElementById("histogram");
const status = document.getElementById("status");
const num = (id) => Number(document.getElementById(id).value);

const PAD = 48;
let bounds = null; // { dimension, min: [[h, c]], max: [[h, c]] }
let cMax = 0.5;

function report(message, isError = false) {
  status.textContent = message;
  status.className = isError ? "error" : "";
}

function toPairs(flat, from, to) {
  const out = [];
  for (let i = from; i < to; i += 2) out.push([flat[i], flat[i + 1]]);
  return out;
}

function xy([h, c]) {
  const w = plane.width - 2 * PAD;
  const ht = plane.height - 2 * PAD;
  return [PAD + h * w, plane.height - PAD - (c / cMax) * ht];
}

function drawAxes(ctx) {
  ctx.clearRect(0, 0, plane.width, plane.height);
  ctx.strokeStyle = "#000";
  ctx.fillStyle = "#000";
  ctx.font = "12px system-ui";
  ctx.beginPath();
  ctx.moveTo(...xy([0, cMax]));
  ctx.lineTo(...xy([0, 0]));
  ctx.lineTo(...xy([1, 0]));
  ctx.stroke();
  for (let k = 0; k <= 5; k++) {
    const [x, y] = xy([k / 5, 0]);
    ctx.fillText((k / 5).toFixed(1), x - 8, y + 16);
    const [x2, y2] = xy([0, (k / 5) * cMax]);
    ctx.fillText(((k / 5) * cMax).toFixed(2), x2 - 36, y2 + 4);
  }
  ctx.fillText("H", plane.width / 2, plane.height - 10);
  ctx.fillText("C", 12, plane.height / 2);
}

function drawCurve(ctx, points) {
  ctx.beginPath();
  points.forEach((p, i) => (i ? ctx.lineTo(...xy(p)) : ctx.moveTo(...xy(p))));
  ctx.stroke();
}

function drawPoints(ctx, points, colour) {
  ctx.fillStyle = colour;
  for (const p of points) {
    const [x, y] = xy(p);
    ctx.beginPath();
    ctx.arc(x, y, 2.5, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function redraw(series = [], surrogate = []) {
  const ctx = plane.getContext("2d");
  drawAxes(ctx);
  if (bounds) {
    ctx.strokeStyle = "#888";
    drawCurve(ctx, bounds.min);
    drawCurve(ctx, bounds.max);
  }
  drawPoints(ctx, series, "#1f6fb4");
  drawPoints(ctx, surrogate, "#e0701b");
}

function drawHistogram(counts) {
  const ctx = histogram.getContext("2d");
  ctx.clearRect(0, 0, histogram.width, histogram.height);
  const top = Math.max(...counts, 1);
  const w = (histogram.width - 2 * PAD) / counts.length;
  ctx.fillStyle = "#1f6fb4";
  counts.forEach((c, i) => {
    const h = (c / top) * (histogram.height - 20);
    ctx.fillRect(PAD + i * w, histogram.height - h, Math.max(w - 1, 1), h);
  });
  ctx.fillStyle = "#000";
  ctx.fillText(`ordinal pattern counts (${counts.length} patterns, max ${top})`, PAD, 12);
}

function ensureBounds() {
  const dimension = num("dimension");
  if (bounds && bounds.dimension === dimension) return;
  const flat = boundsCurves(dimension, 1000);
  const nMin = flat[0];
  bounds = {
    dimension,
    min: toPairs(flat, 1, 1 + 2 * nMin),
    max: toPairs(flat, 1 + 2 * nMin, flat.length),
  };
  cMax = Math.max(...bounds.max.map(([, c]) => c)) * 1.08;
}

function guarded(action) {
  return () => {
    try {
      action();
    } catch (e) {
      report(e.message ?? String(e), true);
    }
  };
}

const mean = (pairs, k) => pairs.reduce((s, p) => s + p[k], 0) / pairs.length;

document.getElementById("draw-bounds").onclick = guarded(() => {
  bounds = null;
  ensureBounds();
  redraw();
  report(`Bounds for D = ${bounds.dimension} (${bounds.max.length} points on the upper curve).`);
});

document.getElementById("simulate").onclick = guarded(() => {
  ensureBounds();
  const flat = syntheticTrajectory(
    num("phi"), num("length"), num("dimension"), num("window"), num("step"), num("seed"));
  const n = flat[0];
  const series = toPairs(flat, 1, 1 + 2 * n);
  const surrogate = toPairs(flat, 1 + 2 * n, flat.length);
  redraw(series, surrogate);
  report(`${n} windows. Mean H: series ${mean(series, 0).toFixed(4)}, ` +
    `shuffled ${mean(surrogate, 0).toFixed(4)}. Mean C: series ${mean(series, 1).toFixed(4)}, ` +
    `shuffled ${mean(surrogate, 1).toFixed(4)}.`);
});

document.getElementById("analyze").onclick = guarded(() => {
  ensureBounds();
  const values = document.getElementById("values").value
    .split(/[\s,;]+/).filter((s) => s.length).map(Number);
  const flat = analyzeSeries(Float64Array.from(values), num("dimension"), num("window"), num("step"));
  const m = flat[0];
  const counts = Array.from(flat.slice(1, 1 + m));
  const series = toPairs(flat, 1 + m, flat.length);
  redraw(series);
  drawHistogram(counts);
  report(`${values.length} values, ${series.length} windows, mean H ${mean(series, 0).toFixed(4)}.`);
});

await init();
ensureBounds();
redraw();
report("Ready.");
