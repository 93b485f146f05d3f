import init, { turan, analyze, hunt } from "./pkg/qg_web.js";

const $ = (id) => document.getElementById(id);

function draw(canvas, faces, reps, hilbert) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const top = Math.max(...hilbert, 1);
  const pad = 28;
  const slot = (width - 2 * pad) / hilbert.length;
  const bar = Math.min(slot * 0.7, 80);
  const scale = (height - 2 * pad) / top;
  ctx.font = "12px system-ui";
  ctx.textAlign = "center";
  hilbert.forEach((h, k) => {
    const x = pad + k * slot + (slot - bar) / 2;
    const base = height - pad;
    const f = Number(faces[k]) * scale;
    const r = Number(reps[k]) * scale;
    ctx.fillStyle = "#4a7ab5";
    ctx.fillRect(x, base - f, bar, f);
    ctx.fillStyle = "#e0a040";
    ctx.fillRect(x, base - f - r, bar, r);
    ctx.fillStyle = "#222";
    ctx.fillText(String(h), x + bar / 2, base - f - r - 4);
    ctx.fillText("k=" + k, x + bar / 2, height - 8);
  });
}

function fail(target, err) {
  target.className = "facts error";
  target.textContent = String(err.message ?? err);
}

function show(target, lines) {
  target.className = "facts";
  target.textContent = lines.join("\n");
}

function runTuran() {
  try {
    const r = JSON.parse(turan($("orders").value));
    draw($("turan-chart"), r.faces, r.reps, r.hilbert);
    show($("turan-facts"), [
      `h = (${r.hilbert.join(", ")})`,
      `codimension ${r.codimension}`,
      `unimodal: ${r.unimodal}`,
      `totally non-unimodal: ${r.totally_nonunimodal}`,
    ]);
  } catch (e) {
    fail($("turan-facts"), e);
  }
}

function runAnalyze() {
  try {
    const r = JSON.parse(analyze($("complex").value));
    const s = r.summary;
    draw($("analyze-chart"), r.faces, r.reps, s.hilbert);
    const degrees = Object.entries(r.generator_counts.by_degree).map(([k, v]) => `${v} in degree ${k}`);
    show($("analyze-facts"), [
      `h = (${s.hilbert.join(", ")})`,
      `n = ${s.n} facets, m = ${s.m} vertices, socle degree ${s.socle_degree}`,
      `flag: ${s.flag}, facet connected: ${s.facet_connected}`,
      `presented by quadrics: ${s.presented_by_quadrics}` +
        (s.certificate ? `  (${s.certificate.kind.replaceAll("_", " ")})` : ""),
      `generators: ${degrees.join(", ")}`,
      `unimodal: ${r.unimodal}`,
    ]);
  } catch (e) {
    fail($("analyze-facts"), e);
  }
}

function runHunt() {
  try {
    const r = JSON.parse(hunt(Number($("degree").value), $("any").checked));
    show($("hunt-facts"), [`orders (${r.orders.join(", ")})`, `h = (${r.hilbert.join(", ")})`]);
    $("orders").value = r.orders.join(",");
    runTuran();
  } catch (e) {
    fail($("hunt-facts"), e);
  }
}

await init();
$("turan-go").onclick = runTuran;
$("analyze-go").onclick = runAnalyze;
$("hunt-go").onclick = runHunt;
runTuran();
runAnalyze();
