import init, { bounds_curve, thresholds, tsang_profile, form_factor } from "./pkg/paircorr_web.js";

const $ = (id) => document.getElementById(id);

// Draws series of [x, y] points with shared axes; series = [{points, color}].
function plot(canvas, series, { yZero = true } = {}) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 40;
  ctx.clearRect(0, 0, w, h);
  const xs = series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = series.flatMap((s) => s.points.map((p) => p[1])).filter(Number.isFinite);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  if (yZero) y0 = Math.min(y0, 0);
  if (y1 === y0) y1 = y0 + 1;
  const sx = (x) => pad + ((x - x0) / (x1 - x0)) * (w - 2 * pad);
  const sy = (y) => h - pad - ((y - y0) / (y1 - y0)) * (h - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(pad, sy(Math.max(y0, Math.min(0, y1))));
  ctx.lineTo(w - pad, sy(Math.max(y0, Math.min(0, y1))));
  ctx.moveTo(pad, pad / 2);
  ctx.lineTo(pad, h - pad);
  ctx.stroke();
  ctx.fillStyle = "#555";
  ctx.font = "11px sans-serif";
  ctx.fillText(x0.toPrecision(3), pad, h - pad + 14);
  ctx.fillText(x1.toPrecision(3), w - pad - 24, h - pad + 14);
  ctx.fillText(y1.toPrecision(3), 2, sy(y1) + 4);
  ctx.fillText(y0.toPrecision(3), 2, sy(y0));

  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    s.points.forEach(([x, y], i) => (i ? ctx.lineTo(sx(x), sy(y)) : ctx.moveTo(sx(x), sy(y))));
    ctx.stroke();
  }
}

const records = (flat, width) => {
  const out = [];
  for (let i = 0; i < flat.length; i += width) out.push(Array.from(flat.slice(i, i + width)));
  return out;
};

function drawBounds() {
  const k = $("bk").value;
  const bmax = Number($("bmax").value);
  try {
    const rows = records(bounds_curve(k, bmax, 181), 3);
    plot($("bounds"), [
      { points: rows.map((r) => [r[0], r[1]]), color: "#1f77b4" },
      { points: rows.map((r) => [r[0], r[2]]), color: "#d62728" },
    ]);
    const [simple, sc] = thresholds(k);
    $("bounds-out").textContent =
      `blue: 2 − C_b (at b=0: ${rows[0][1].toFixed(8)}); red: 3 − 2C_b. ` +
      `Bounds vanish at b = ${simple.toFixed(5)} and ${sc.toFixed(5)}.`;
  } catch (e) {
    $("bounds-out").textContent = String(e);
  }
}

function drawTsang() {
  const k = $("tk").value;
  const b = Number($("tb").value);
  const ratio = Number($("ty").value);
  $("ty-val").textContent = ratio.toFixed(2);
  try {
    const rows = records(tsang_profile(k, b, ratio * b, 40, 401), 2);
    plot($("tsang"), [{ points: rows, color: "#2ca02c" }]);
    const min = Math.min(...rows.map((r) => r[1]));
    $("tsang-out").textContent = `min Re K on |x| ≤ 40: ${min.toExponential(3)}`;
  } catch (e) {
    $("tsang-out").textContent = String(e);
  }
}

function drawForm() {
  const t = Number($("ft").value);
  const amax = Number($("fa").value);
  $("form-out").textContent = "computing zeros…";
  // Let the status text paint before the blocking computation.
  setTimeout(() => {
    try {
      const start = performance.now();
      const rows = records(form_factor(t, amax, 60), 3);
      plot($("form"), [
        { points: rows.map((r) => [r[0], r[1]]), color: "#1f77b4" },
        { points: rows.map((r) => [r[0], r[2]]), color: "#ff7f0e" },
      ]);
      const secs = ((performance.now() - start) / 1000).toFixed(1);
      $("form-out").textContent = `blue: empirical, orange: T^(−2α) log T + α (${secs}s)`;
    } catch (e) {
      $("form-out").textContent = String(e);
    }
  }, 20);
}

await init();
for (const id of ["bk", "bmax"]) $(id).addEventListener("input", drawBounds);
for (const id of ["tk", "tb", "ty"]) $(id).addEventListener("input", drawTsang);
$("fgo").addEventListener("click", drawForm);
drawBounds();
drawTsang();
drawForm();
