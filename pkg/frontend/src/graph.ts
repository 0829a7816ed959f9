/** SVG renderer for the layered association map.
 *
 * Edge classes are visually distinct per layer (solid / dashed /
 * dot-dashed), edge thickness tracks total_count, and node radius tracks
 * the weighted degree within the drawn response.  All numbers shown come
 * from the single layers response being rendered. */

import { layoutGraph } from "./layout.js";
import type { LayoutEdge } from "./layout.js";
import type { LayerEdge, LayerName } from "./types.js";
import type { Selection } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const EDGE_DASH: Record<LayerName, string> = {
  common: "", // solid
  specific_a: "7 4",
  specific_b: "2 4 9 4",
};

const MIN_STROKE = 1.5;
const MAX_STROKE = 7;
const MIN_RADIUS = 7;
const MAX_RADIUS = 22;

export interface GraphViewOptions {
  width?: number;
  height?: number;
  onSelect?: (selection: Selection) => void;
}

function scaled(
  value: number,
  max: number,
  lo: number,
  hi: number,
): number {
  if (max <= 0) {
    return lo;
  }
  return lo + (hi - lo) * Math.sqrt(value / max);
}

export function edgeSignature(
  edges: LayerEdge[],
  thresholds: string,
): string {
  const parts = edges
    .map((e) => `${e.layer}:${e.a}~${e.b}=${e.total_count}`)
    .sort();
  return `${thresholds}|${parts.join(";")}`;
}

export class GraphView {
  private readonly width: number;
  private readonly height: number;
  private readonly onSelect?: (selection: Selection) => void;

  constructor(
    private readonly container: HTMLElement,
    options: GraphViewOptions = {},
  ) {
    this.width = options.width ?? 720;
    this.height = options.height ?? 480;
    this.onSelect = options.onSelect;
  }

  /** Draw one response's edges.  An empty edge list renders an explicit
   * placeholder instead of a blank canvas. */
  render(
    edges: LayerEdge[],
    thresholds: string,
    selection: Selection | null = null,
  ): void {
    this.container.textContent = "";
    if (edges.length === 0) {
      const empty = document.createElement("p");
      empty.className = "map-empty";
      empty.textContent = "no shared associations at these thresholds";
      this.container.appendChild(empty);
      return;
    }

    const labels = new Map<string, string>();
    const degree = new Map<string, number>();
    for (const edge of edges) {
      labels.set(edge.a, edge.label_a);
      labels.set(edge.b, edge.label_b);
      degree.set(edge.a, (degree.get(edge.a) ?? 0) + edge.total_count);
      degree.set(edge.b, (degree.get(edge.b) ?? 0) + edge.total_count);
    }
    const nodes = [...labels.keys()];
    const layoutEdges: LayoutEdge[] = edges.map((e) => ({
      a: e.a,
      b: e.b,
      weight: e.total_count,
    }));
    const positions = layoutGraph(
      nodes,
      layoutEdges,
      edgeSignature(edges, thresholds),
      this.width,
      this.height,
    );

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${this.width} ${this.height}`);
    svg.setAttribute("class", "map-svg");
    const maxCount = Math.max(...edges.map((e) => e.total_count));
    const maxDegree = Math.max(...degree.values());

    for (const edge of edges) {
      const p = positions.get(edge.a)!;
      const q = positions.get(edge.b)!;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", p.x.toFixed(1));
      line.setAttribute("y1", p.y.toFixed(1));
      line.setAttribute("x2", q.x.toFixed(1));
      line.setAttribute("y2", q.y.toFixed(1));
      line.setAttribute("class", `edge edge-${edge.layer}`);
      line.setAttribute(
        "stroke-width",
        scaled(edge.total_count, maxCount, MIN_STROKE, MAX_STROKE).toFixed(2),
      );
      const dash = EDGE_DASH[edge.layer];
      if (dash) {
        line.setAttribute("stroke-dasharray", dash);
      }
      line.dataset.a = edge.a;
      line.dataset.b = edge.b;
      line.dataset.count = String(edge.total_count);
      if (
        selection?.kind === "association" &&
        ((selection.a === edge.a && selection.b === edge.b) ||
          (selection.a === edge.b && selection.b === edge.a))
      ) {
        line.classList.add("selected");
      }
      line.addEventListener("click", () => {
        this.onSelect?.({ kind: "association", a: edge.a, b: edge.b });
      });
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `${edge.label_a} - ${edge.label_b}: ${edge.total_count} (${edge.sharers.join(", ")})`;
      line.appendChild(title);
      svg.appendChild(line);
    }

    for (const node of nodes) {
      const p = positions.get(node)!;
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "node");
      group.dataset.concept = node;
      if (selection?.kind === "concept" && selection.a === node) {
        group.classList.add("selected");
      }
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", p.x.toFixed(1));
      circle.setAttribute("cy", p.y.toFixed(1));
      circle.setAttribute(
        "r",
        scaled(degree.get(node) ?? 0, maxDegree, MIN_RADIUS, MAX_RADIUS).toFixed(2),
      );
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", p.x.toFixed(1));
      text.setAttribute("y", (p.y - 26).toFixed(1));
      text.setAttribute("text-anchor", "middle");
      text.textContent = labels.get(node) ?? node;
      group.addEventListener("click", () => {
        this.onSelect?.({ kind: "concept", a: node });
      });
      group.appendChild(circle);
      group.appendChild(text);
      svg.appendChild(group);
    }

    this.container.appendChild(svg);
  }

  renderError(message: string): void {
    this.container.textContent = "";
    const banner = document.createElement("p");
    banner.className = "map-error";
    banner.textContent = message;
    this.container.appendChild(banner);
  }
}
