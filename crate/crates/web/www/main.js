import init, { curve_svg, evaluate, eval_fields, oscillator_svg } from "./pkg/smf_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => parseFloat($(id).value);

function show(plot, error, render) {
  try {
    $(plot).innerHTML = render();
    $(error).textContent = "";
  } catch (e) {
    $(plot).innerHTML = "";
    $(error).textContent = e.message ?? String(e);
  }
}

function drawCurve() {
  $("curve-s-val").textContent = num("curve-s").toFixed(2);
  $("curve-eps-val").textContent = num("curve-eps").toFixed(2);
  show("curve-plot", "curve-error", () =>
    curve_svg($("curve-kind").value, num("curve-s"), num("curve-eps"), parseInt($("curve-det").value), 720));
}

function drawTable() {
  const names = eval_fields();
  const values = evaluate(num("eval-s"), num("eval-eps"), parseInt($("eval-det").value), num("eval-theta"));
  $("eval-table").innerHTML = names
    .map((n, i) => `<tr><td>${n}</td><td>${Number.isNaN(values[i]) ? "undefined" : values[i].toPrecision(17)}</td></tr>`)
    .join("");
}

function drawOscillator() {
  $("osc-s-val").textContent = num("osc-s").toFixed(2);
  $("osc-eps-val").textContent = num("osc-eps").toFixed(2);
  show("osc-plot", "osc-error", () => oscillator_svg(num("osc-s"), num("osc-eps"), 2000));
}

await init();
for (const id of ["curve-kind", "curve-s", "curve-eps", "curve-det"]) $(id).addEventListener("input", drawCurve);
for (const id of ["eval-s", "eval-eps", "eval-theta", "eval-det"]) $(id).addEventListener("input", drawTable);
for (const id of ["osc-s", "osc-eps"]) $(id).addEventListener("input", drawOscillator);
drawCurve();
drawTable();
drawOscillator();
