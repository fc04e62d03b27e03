import init, { filter_word, diag_grid, filtration_atlas } from "./pkg/apfilter_web.js";

const $ = (id) => document.getElementById(id);

function show(el, text, isError) {
  el.textContent = text;
  el.className = isError ? "out error" : "out";
}

function updateFilter() {
  const word = $("fw-word").value;
  const a = $("fw-a").value;
  const b = $("fw-b").value;
  $("fw-a-val").textContent = a;
  $("fw-b-val").textContent = b;
  const view = $("fw-word-view");
  view.replaceChildren();
  try {
    const r = JSON.parse(filter_word(word, a, b));
    const kept = new Set(r.kept);
    [...word].forEach((ch, i) => {
      const span = document.createElement("span");
      span.textContent = ch;
      if (kept.has(i)) span.className = "kept";
      view.append(span);
    });
    show($("fw-out"), "w[s] = " + (r.result === "" ? "(empty)" : r.result));
  } catch (e) {
    show($("fw-out"), String(e), true);
  }
}

function updateDiag() {
  const grid = $("dg-grid");
  grid.replaceChildren();
  try {
    const r = JSON.parse(diag_grid($("dg-word").value));
    r.rows.forEach((row, i) => {
      const tr = document.createElement("tr");
      [...row].forEach((ch, j) => {
        const td = document.createElement("td");
        td.textContent = ch;
        if (i === j) td.className = "diag";
        tr.append(td);
      });
      grid.append(tr);
    });
    show($("dg-out"), "diag = " + r.diagonal);
  } catch (e) {
    show($("dg-out"), String(e), true);
  }
}

function runAtlas() {
  const table = $("at-table");
  table.replaceChildren();
  try {
    const r = JSON.parse(filtration_atlas($("at-dfa").value, $("at-family").value, 5));
    show($("at-summary"), `index ${r.index}, period ${r.period}: ${r.distinct} distinct languages`);
    const head = document.createElement("tr");
    for (const h of ["a", "b", "states", "words up to length 5"]) {
      const th = document.createElement("th");
      th.textContent = h;
      head.append(th);
    }
    table.append(head);
    for (const e of r.entries) {
      const tr = document.createElement("tr");
      for (const v of [e.a, e.b, e.states, e.sample.join(" ") || "-"]) {
        const td = document.createElement("td");
        td.textContent = v;
        tr.append(td);
      }
      table.append(tr);
    }
  } catch (e) {
    show($("at-summary"), String(e), true);
  }
}

await init();
for (const id of ["fw-word", "fw-a", "fw-b"]) $(id).addEventListener("input", updateFilter);
$("dg-word").addEventListener("input", updateDiag);
$("at-run").addEventListener("click", runAtlas);
updateFilter();
updateDiag();
runAtlas();
