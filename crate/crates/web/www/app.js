import init, { construct, automorphisms, residueClasses } from "./pkg/rank3_web.js";

const $ = (id) => document.getElementById(id);
const out = $("out");
const canvas = $("canvas");
const ctx = canvas.getContext("2d");
const palette = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"];

function show(value, isError = false) {
  out.className = isError ? "error" : "";
  out.textContent = typeof value === "string" ? value : JSON.stringify(value, null, 2);
}

function circle(n) {
  const r = canvas.width / 2 - 20;
  const c = canvas.width / 2;
  return Array.from({ length: n }, (_, i) => {
    const t = (2 * Math.PI * i) / n - Math.PI / 2;
    return [c + r * Math.cos(t), c + r * Math.sin(t)];
  });
}

function drawGraph(n, edges) {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pos = circle(n);
  ctx.strokeStyle = "rgba(40, 60, 120, 0.25)";
  ctx.lineWidth = 1;
  for (const [u, v] of edges) {
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  ctx.fillStyle = "#223";
  for (const [x, y] of pos) {
    ctx.beginPath();
    ctx.arc(x, y, 3, 0, 2 * Math.PI);
    ctx.fill();
  }
}

// Nonzero elements of GF(q) placed at angle k for omega^k and coloured by
// residue class, so the classes show up as interleaved arithmetic progressions.
function drawClasses(q, classes, powers) {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pos = circle(powers.length);
  const colour = new Map();
  classes.forEach((cls, i) => cls.forEach((x) => colour.set(x, palette[i % palette.length])));
  pos.forEach(([x, y], k) => {
    ctx.fillStyle = colour.get(powers[k]);
    ctx.beginPath();
    ctx.arc(x, y, Math.max(2, Math.min(8, 600 / powers.length)), 0, 2 * Math.PI);
    ctx.fill();
  });
}

function run(f) {
  try {
    f();
  } catch (err) {
    show(String(err.message ?? err), true);
  }
}

await init();

$("construct").onclick = () =>
  run(() => {
    const g = JSON.parse(construct($("descriptor").value.trim()));
    if (g.edges) {
      drawGraph(g.n, g.edges);
    } else {
      ctx.clearRect(0, 0, canvas.width, canvas.height);
    }
    const { edges, ...rest } = g;
    show(rest);
  });

$("aut").onclick = () =>
  run(() => show(JSON.parse(automorphisms($("descriptor").value.trim(), Number($("budget").value)))));

$("residues").onclick = () =>
  run(() => {
    const r = JSON.parse(residueClasses(Number($("q").value), Number($("e").value)));
    drawClasses(r.q, r.classes, r.powers);
    show({ q: r.q, e: r.e, class_sizes: r.classes.map((c) => c.length) });
  });

$("construct").click();
