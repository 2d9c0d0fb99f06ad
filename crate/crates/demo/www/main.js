import init, { phi_board, iota_view, rank_grid } from "./pkg/parity_board_demo.js";

const CELL = 22;
const SVG_NS = "http://www.w3.org/2000/svg";
const BLOCK_COLORS = ["#8ecae6", "#ffb703", "#90be6d", "#f28482", "#b8b8ff", "#f6bd60"];

const $ = (id) => document.getElementById(id);

function rect(svg, x, y, fill, text) {
  const r = document.createElementNS(SVG_NS, "rect");
  r.setAttribute("x", x);
  r.setAttribute("y", y);
  r.setAttribute("width", CELL - 2);
  r.setAttribute("height", CELL - 2);
  r.setAttribute("fill", fill);
  r.setAttribute("stroke", "#333");
  svg.appendChild(r);
  if (text !== undefined) {
    const t = document.createElementNS(SVG_NS, "text");
    t.setAttribute("x", x + CELL / 2 - 1);
    t.setAttribute("y", y + CELL / 2 + 4);
    t.setAttribute("text-anchor", "middle");
    t.setAttribute("font-size", "10");
    t.textContent = text;
    svg.appendChild(t);
  }
}

function clear(svg, rows, cols) {
  svg.replaceChildren();
  svg.setAttribute("width", cols * CELL + 4);
  svg.setAttribute("height", rows * CELL + 4);
}

function guarded(errId, fn) {
  try {
    $(errId).textContent = "";
    fn();
  } catch (e) {
    $(errId).textContent = String(e.message ?? e);
  }
}

let phiView = null;

function drawPhiStep() {
  if (!phiView) return;
  const step = Number($("phi-step").value);
  const snap = phiView.snapshots[step - 1];
  $("phi-step-label").textContent = `${step} / ${phiView.snapshots.length}`;
  const rows = Math.max(1, ...snap.cells.map((c) => c.row));
  const cols = Math.max(1, ...snap.cells.map((c) => c.col));
  const svg = $("phi-svg");
  clear(svg, rows, cols);
  for (const c of snap.cells) {
    const color = BLOCK_COLORS[(c.block - 1) % BLOCK_COLORS.length];
    const fill = c.cover_count === 2 ? color : "#fff";
    rect(svg, (c.col - 1) * CELL + 2, (c.row - 1) * CELL + 2, fill, `B${c.block}`);
  }
}

function runPhi() {
  guarded("phi-err", () => {
    phiView = JSON.parse(phi_board($("phi-input").value));
    const slider = $("phi-step");
    slider.max = phiView.snapshots.length;
    slider.value = phiView.snapshots.length;
    $("phi-facts").textContent =
      `a = ${phiView.a}, b = ${phiView.b}, delta = ${phiView.delta}\n` +
      `image = (${phiView.partition.join(",")}), weight ${phiView.weight}, ` +
      `a-Durfee rectangle ${phiView.durfee_rows} x ${phiView.durfee_rows + phiView.a}, ` +
      `in P(${phiView.a},${phiView.pab_b})\n` +
      `white cells are covered once, coloured cells twice`;
    drawPhiStep();
  });
}

function runIota() {
  guarded("iota-err", () => {
    const v = JSON.parse(iota_view($("iota-input").value));
    $("iota-facts").textContent =
      `${v.partition}: BG-rank ${v.bg_rank}, columns {${v.columns.join(",")}}\n` +
      `iota = (t = ${v.t}, delta = ${v.delta}), staircase of height ${v.k} shaded`;
    const rows = Math.max(1, ...v.cells.map((c) => c.row));
    const cols = Math.max(1, ...v.cells.map((c) => c.col));
    const svg = $("iota-svg");
    clear(svg, rows, cols);
    for (const c of v.cells) {
      const fill = c.staircase ? (c.sign > 0 ? "#555" : "#999") : (c.sign > 0 ? "#222" : "#eee");
      rect(svg, (c.col - 1) * CELL + 2, (c.row - 1) * CELL + 2, fill);
    }
  });
}

function runRank() {
  guarded("rank-err", () => {
    const v = JSON.parse(rank_grid(Number($("rank-n").value), Number($("rank-j").value)));
    const table = document.createElement("table");
    table.className = "grid";
    const head = table.insertRow();
    head.appendChild(Object.assign(document.createElement("th"), { textContent: "rank \\ n" }));
    for (const n of v.weights) {
      head.appendChild(Object.assign(document.createElement("th"), { textContent: n }));
    }
    v.ranks.forEach((j, r) => {
      const row = table.insertRow();
      row.appendChild(Object.assign(document.createElement("th"), { textContent: j }));
      v.weights.forEach((_, n) => {
        const cell = row.insertCell();
        const count = v.counts[r][n];
        cell.textContent = count === 0 ? "" : count;
        if (count !== v.closed_form[r][n]) cell.className = "bad";
      });
    });
    $("rank-table").replaceChildren(table);
  });
}

await init();
$("phi-go").addEventListener("click", runPhi);
$("phi-step").addEventListener("input", drawPhiStep);
$("iota-go").addEventListener("click", runIota);
$("rank-go").addEventListener("click", runRank);
runPhi();
runIota();
runRank();
