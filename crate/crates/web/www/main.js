import init, { distance_view, spectrum, verify_report } from "./pkg/helmlab_web.js";

const $ = (id) => document.getElementById(id);
let view = null;

// Diverging map: blue for negative, white at zero, red for positive.
function color(v, max) {
  const t = max === 0 ? 0 : Math.max(-1, Math.min(1, v / max));
  const a = Math.round(255 * (1 - Math.abs(t)));
  return t >= 0 ? `rgb(255,${a},${a})` : `rgb(${a},${a},255)`;
}

function heatmap(canvas, m) {
  const ctx = canvas.getContext("2d");
  const k = m.length, cell = canvas.width / k;
  const max = Math.max(...m.flat().map(Math.abs));
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let i = 0; i < k; i++)
    for (let j = 0; j < k; j++) {
      ctx.fillStyle = color(m[i][j], max);
      ctx.fillRect(j * cell, i * cell, Math.ceil(cell), Math.ceil(cell));
    }
}

function drawGraph(v) {
  const c = $("graph"), ctx = c.getContext("2d");
  const half = c.width / 2, r = half - 14;
  const at = (p) => [half + r * p.x, half + r * p.y];
  ctx.clearRect(0, 0, c.width, c.height);
  ctx.strokeStyle = "#888";
  for (const [a, b] of v.edges) {
    const [x1, y1] = at(v.positions[a]), [x2, y2] = at(v.positions[b]);
    ctx.beginPath(); ctx.moveTo(x1, y1); ctx.lineTo(x2, y2); ctx.stroke();
  }
  v.positions.forEach((p, i) => {
    const [x, y] = at(p);
    ctx.fillStyle = i === 0 ? "#d62728" : i < v.n ? "#1f77b4" : "#2ca02c";
    ctx.beginPath(); ctx.arc(x, y, 5, 0, 2 * Math.PI); ctx.fill();
  });
}

function drawSpectrum(t) {
  const c = $("spectrum"), ctx = c.getContext("2d");
  const pad = 30, w = c.width - 2 * pad, h = c.height - 2 * pad;
  const vals = t.rows.flatMap((r) => [r.re, r.analytic]);
  const lo = Math.min(0, ...vals) - 0.25, hi = Math.max(0, ...vals) + 0.25;
  const X = (j) => pad + (t.rows.length === 1 ? w / 2 : (j * w) / (t.rows.length - 1));
  const Y = (y) => pad + h - ((y - lo) / (hi - lo)) * h;
  ctx.clearRect(0, 0, c.width, c.height);
  ctx.strokeStyle = "#ccc"; ctx.fillStyle = "#555"; ctx.font = "11px sans-serif";
  ctx.beginPath(); ctx.moveTo(pad, Y(0)); ctx.lineTo(pad + w, Y(0)); ctx.stroke();
  ctx.fillText(hi.toFixed(2), 0, Y(hi) + 4);
  ctx.fillText(lo.toFixed(2), 0, Y(lo));
  for (const r of t.rows) {
    ctx.strokeStyle = "#999";
    ctx.beginPath(); ctx.arc(X(r.j), Y(r.analytic), 6, 0, 2 * Math.PI); ctx.stroke();
    ctx.fillStyle = "#1f77b4";
    ctx.beginPath(); ctx.arc(X(r.j), Y(r.re), 3, 0, 2 * Math.PI); ctx.fill();
    ctx.fillStyle = "#555";
    ctx.fillText(String(r.j), X(r.j) - 3, c.height - 8);
  }
}

function refreshSpectrum() {
  const n = Number($("n").value);
  const mat = document.querySelector("input[name=mat]:checked").value;
  try {
    const t = JSON.parse(spectrum(mat, n));
    drawSpectrum(t);
    $("spec-msg").textContent =
      `dots: f(w^j); rings: analytic; max |diff| = ${t.max_deviation.toExponential(2)}`;
  } catch (e) {
    $("spectrum").getContext("2d").clearRect(0, 0, 660, 220);
    $("spec-msg").textContent = e.message ?? String(e);
  }
}

function refresh() {
  const n = Number($("n").value);
  $("n-out").textContent = n;
  view = JSON.parse(distance_view(n));
  drawGraph(view);
  heatmap($("dist"), view.distance);
  heatmap($("inv"), view.inverse);
  $("inv-title").textContent = view.inverse_kind === "inverse" ? "D⁻¹" : "D† (Moore-Penrose)";
  $("facts").textContent =
    `order ${view.order}, det ${view.det}, rank ${view.rank}, inertia (${view.inertia.join(", ")}), α = ${view.alpha}`;
  $("checks").tBodies[0].replaceChildren();
  $("verify-msg").textContent = "";
  refreshSpectrum();
}

function hover(ev) {
  if (!view) return;
  const c = $("inv"), rect = c.getBoundingClientRect();
  const k = view.order;
  const j = Math.floor(((ev.clientX - rect.left) / rect.width) * k);
  const i = Math.floor(((ev.clientY - rect.top) / rect.height) * k);
  if (i < 0 || j < 0 || i >= k || j >= k) return;
  $("cell").textContent =
    `(${view.labels[i]}, ${view.labels[j]}): d = ${view.distance[i][j]}, entry = ${view.inverse_exact[i][j]}`;
}

function runChecks() {
  const n = Number($("n").value);
  const body = $("checks").tBodies[0];
  const r = JSON.parse(verify_report(n));
  body.replaceChildren(
    ...r.checks.map((c) => {
      const tr = document.createElement("tr");
      for (const [text, cls] of [[c.pass ? "PASS" : "FAIL", c.pass ? "pass" : "fail"], [c.name], [c.detail]]) {
        const td = document.createElement("td");
        td.textContent = text;
        if (cls) td.className = cls;
        tr.append(td);
      }
      return tr;
    }),
  );
  const failed = r.checks.filter((c) => !c.pass).length;
  $("verify-msg").textContent = `${r.checks.length - failed}/${r.checks.length} checks pass`;
}

await init();
$("n").addEventListener("input", refresh);
$("inv").addEventListener("mousemove", hover);
$("dist").addEventListener("mousemove", hover);
for (const el of document.querySelectorAll("input[name=mat]")) el.addEventListener("change", refreshSpectrum);
$("run").addEventListener("click", runChecks);
refresh();
