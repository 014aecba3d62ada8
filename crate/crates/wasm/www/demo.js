import init, { sample, landscape, gadget } from "./pkg/mmin_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function fail(target, err) {
  target.innerHTML = "";
  const p = document.createElement("span");
  p.className = "error";
  p.textContent = String(err);
  target.appendChild(p);
}

function runSample() {
  const text = $("s-text").value.trim();
  try {
    const r = JSON.parse(sample(text, num("s-w"), num("s-k"), $("s-order").value));
    const hits = new Set(r.positions);
    const seq = $("s-seq");
    seq.innerHTML = "";
    [...text].forEach((c, i) => {
      const span = document.createElement("span");
      span.textContent = c;
      if (hits.has(i + 1)) span.className = "hit";
      seq.appendChild(span);
    });
    $("s-info").textContent =
      `positions ${r.positions.join(" ")}; ${r.count} minimizers over ${r.windows} windows ` +
      `(density ${r.density.toFixed(3)})`;
  } catch (e) {
    $("s-seq").textContent = "";
    fail($("s-info"), e);
  }
}

function runLandscape() {
  const bars = $("bars");
  bars.innerHTML = "";
  try {
    const r = JSON.parse(landscape($("s-text").value.trim(), num("s-w"), num("s-k")));
    for (const pt of r.points) {
      const bar = document.createElement("div");
      bar.style.height = `${(100 * pt.count) / Math.max(r.max, 1)}%`;
      bar.title = `${pt.order}: ${pt.count}`;
      if (pt.count === r.min) bar.className = "best";
      bar.addEventListener("click", () => {
        $("s-order").value = pt.order;
        runSample();
      });
      bars.appendChild(bar);
    }
    const best = r.points.find((p) => p.count === r.min);
    $("l-info").textContent =
      `${r.points.length} orderings; min ${r.min} (first: ${best.order}), max ${r.max}. ` +
      "Click a bar to sample under that ordering.";
  } catch (e) {
    fail($("l-info"), e);
  }
}

function runGadget() {
  const table = $("g-table");
  try {
    const r = JSON.parse(gadget(num("g-w"), num("g-k")));
    $("g-block").textContent = r.block;
    table.innerHTML =
      "<tr><th>case</th><th></th><th>a&lt;b</th><th>b&lt;a</th></tr>" +
      `<tr><td rowspan="2">${r.case}</td><td>closed form</td><td>${r.m_ab}</td><td>${r.m_ba}</td></tr>` +
      `<tr><td>measured</td><td>${r.measured_ab}</td><td>${r.measured_ba}</td></tr>`;
  } catch (e) {
    $("g-block").textContent = "";
    fail(table, e);
  }
}

await init();
$("s-run").addEventListener("click", runSample);
$("l-run").addEventListener("click", runLandscape);
$("g-run").addEventListener("click", runGadget);
runSample();
runGadget();
