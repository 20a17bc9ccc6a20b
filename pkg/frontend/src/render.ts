/** SVG rendering of the current view state. Thin DOM layer: all decisions
 * (visibility, tint membership, badges) come from the pure state module. */

import type { ViewState } from "./state.js";
import { overlayMembers, visibleEdges, visibleNodes } from "./state.js";

export const SUPPORT_COLOR = "#2e8b57";
export const ATTACK_COLOR = "#c0392b";
export const FACT_FILL = "#f4b942";
export const NODE_FILL = "#7fa8d9";
export const OVERLAY_TINT = "#8e44ad";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface EdgePlan {
  src: string;
  dst: string;
  color: string;
  width: number;
  relation: string;
  tooltip: string;
}

export interface NodePlan {
  id: string;
  shape: "circle" | "square";
  fill: string;
  stroke: string;
  strokeWidth: number;
  pulse: boolean;
  tooltip: string;
}

export interface RenderPlan {
  edges: EdgePlan[];
  nodes: NodePlan[];
}

/** Pure description of what gets drawn; the DOM layer below just realizes it. */
export function renderPlan(state: ViewState): RenderPlan {
  const members = overlayMembers(state);
  const highlighted = new Set(state.highlighted);
  const edges: EdgePlan[] = visibleEdges(state).map((edge) => ({
    src: edge.src,
    dst: edge.dst,
    color: edge.relation === "attack" ? ATTACK_COLOR : SUPPORT_COLOR,
    width: edge.relation === "attack" ? 2.2 : 1.4,
    relation: edge.relation,
    tooltip: `${edge.src} -${edge.relation}-> ${edge.dst} (${edge.confidence.toFixed(2)})`,
  }));
  const nodes: NodePlan[] = visibleNodes(state).map((node) => ({
    id: node.id,
    shape: node.kind === "fact" ? "square" : "circle",
    fill: members.has(node.id) ? OVERLAY_TINT : node.kind === "fact" ? FACT_FILL : NODE_FILL,
    stroke:
      state.selected === node.id ? "#111" : members.has(node.id) ? OVERLAY_TINT : "#44444488",
    strokeWidth: members.has(node.id) ? 4 : state.selected === node.id ? 3 : 1.2,
    pulse: highlighted.has(node.id),
    tooltip: `${node.id} [section ${node.section}] ${node.text}`,
  }));
  return { edges, nodes };
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function renderGraph(
  container: HTMLElement,
  state: ViewState,
  onSelect: (id: string | null) => void,
  width = 900,
  height = 620,
): void {
  container.textContent = "";
  if (!state.graph) {
    const empty = document.createElement("p");
    empty.textContent = "no graph loaded";
    container.appendChild(empty);
    return;
  }
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width: "100%",
    class: "graph-canvas",
  });
  const defs = svgEl("defs", {});
  for (const [id, color] of [
    ["arrow-support", SUPPORT_COLOR],
    ["arrow-attack", ATTACK_COLOR],
  ] as const) {
    const marker = svgEl("marker", {
      id,
      viewBox: "0 0 10 10",
      refX: "18",
      refY: "5",
      markerWidth: "7",
      markerHeight: "7",
      orient: "auto-start-reverse",
    });
    marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: color }));
    defs.appendChild(marker);
  }
  svg.appendChild(defs);

  const positions = state.positions;
  const plan = renderPlan(state);
  for (const edge of plan.edges) {
    const from = positions[edge.src];
    const to = positions[edge.dst];
    if (!from || !to) continue;
    const line = svgEl("line", {
      x1: String(from.x),
      y1: String(from.y),
      x2: String(to.x),
      y2: String(to.y),
      stroke: edge.color,
      "stroke-width": String(edge.width),
      "marker-end": `url(#arrow-${edge.relation})`,
      opacity: "0.75",
    });
    const title = svgEl("title", {});
    title.textContent = edge.tooltip;
    line.appendChild(title);
    svg.appendChild(line);
  }

  for (const node of plan.nodes) {
    const at = positions[node.id];
    if (!at) continue;
    const group = svgEl("g", { class: "node-group", "data-node-id": node.id });
    const cssClass = node.pulse ? "node pulse" : "node";
    let shape: SVGElement;
    if (node.shape === "square") {
      // facts are square: visually distinct from assumption circles
      shape = svgEl("rect", {
        x: String(at.x - 9),
        y: String(at.y - 9),
        width: "18",
        height: "18",
        rx: "3",
        fill: node.fill,
        stroke: node.stroke,
        "stroke-width": String(node.strokeWidth),
        class: cssClass,
      });
    } else {
      shape = svgEl("circle", {
        cx: String(at.x),
        cy: String(at.y),
        r: "10",
        fill: node.fill,
        stroke: node.stroke,
        "stroke-width": String(node.strokeWidth),
        class: cssClass,
      });
    }
    const title = svgEl("title", {});
    title.textContent = node.tooltip;
    shape.appendChild(title);
    group.appendChild(shape);
    const label = svgEl("text", {
      x: String(at.x + 12),
      y: String(at.y + 4),
      class: "node-label",
    });
    label.textContent = node.id;
    group.appendChild(label);
    group.addEventListener("click", (event) => {
      event.stopPropagation();
      onSelect(node.id);
    });
    svg.appendChild(group);
  }
  svg.addEventListener("click", () => onSelect(null));
  container.appendChild(svg);
}

export function renderNodeDetail(container: HTMLElement, state: ViewState): void {
  container.textContent = "";
  if (!state.graph || !state.selected) {
    container.textContent = "click a node to inspect it";
    return;
  }
  const node = state.graph.nodes.find((n) => n.id === state.selected);
  if (!node) return;
  const head = document.createElement("strong");
  head.textContent = `${node.id} (${node.kind}, section ${node.section})`;
  const body = document.createElement("p");
  body.textContent = node.text;
  container.append(head, body);
}
