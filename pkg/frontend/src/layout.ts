/** Deterministic force-directed layout.  The seed derives from the layer
 * signature (edges + thresholds), so identical queries always draw the
 * same picture across sessions. */

export interface Point {
  x: number;
  y: number;
}

export interface LayoutEdge {
  a: string;
  b: string;
  weight: number;
}

/** FNV-1a, good enough to spread signatures over 32 bits. */
export function hashSignature(signature: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < signature.length; i++) {
    h ^= signature.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

/** mulberry32: tiny seeded PRNG with uniform output in [0, 1). */
export function seededRandom(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ITERATIONS = 200;
const REPULSION = 5000;
const SPRING = 0.02;
const CENTERING = 0.01;
const COOLING = 0.96;

/** Place nodes inside a width x height box.  Pure: same inputs (including
 * the signature) give byte-identical positions. */
export function layoutGraph(
  nodes: string[],
  edges: LayoutEdge[],
  signature: string,
  width: number,
  height: number,
): Map<string, Point> {
  const positions = new Map<string, Point>();
  if (nodes.length === 0) {
    return positions;
  }
  const rand = seededRandom(hashSignature(signature));
  const order = [...nodes].sort();
  for (const node of order) {
    positions.set(node, {
      x: width * (0.2 + 0.6 * rand()),
      y: height * (0.2 + 0.6 * rand()),
    });
  }
  if (order.length === 1) {
    positions.set(order[0]!, { x: width / 2, y: height / 2 });
    return positions;
  }
  const maxWeight = Math.max(1, ...edges.map((e) => e.weight));
  let temperature = Math.min(width, height) / 8;
  for (let step = 0; step < ITERATIONS; step++) {
    const force = new Map<string, Point>(
      order.map((n) => [n, { x: 0, y: 0 }]),
    );
    for (let i = 0; i < order.length; i++) {
      for (let j = i + 1; j < order.length; j++) {
        const p = positions.get(order[i]!)!;
        const q = positions.get(order[j]!)!;
        const dx = p.x - q.x;
        const dy = p.y - q.y;
        const dist2 = Math.max(1, dx * dx + dy * dy);
        const push = REPULSION / dist2;
        const dist = Math.sqrt(dist2);
        const fi = force.get(order[i]!)!;
        const fj = force.get(order[j]!)!;
        fi.x += (dx / dist) * push;
        fi.y += (dy / dist) * push;
        fj.x -= (dx / dist) * push;
        fj.y -= (dy / dist) * push;
      }
    }
    for (const edge of edges) {
      const p = positions.get(edge.a);
      const q = positions.get(edge.b);
      if (!p || !q) {
        continue;
      }
      const pull = SPRING * (0.5 + edge.weight / maxWeight);
      const fa = force.get(edge.a)!;
      const fb = force.get(edge.b)!;
      fa.x += (q.x - p.x) * pull;
      fa.y += (q.y - p.y) * pull;
      fb.x += (p.x - q.x) * pull;
      fb.y += (p.y - q.y) * pull;
    }
    for (const node of order) {
      const p = positions.get(node)!;
      const f = force.get(node)!;
      f.x += (width / 2 - p.x) * CENTERING;
      f.y += (height / 2 - p.y) * CENTERING;
      const magnitude = Math.max(1e-9, Math.hypot(f.x, f.y));
      const scale = Math.min(magnitude, temperature) / magnitude;
      p.x += f.x * scale;
      p.y += f.y * scale;
      const margin = 16;
      p.x = Math.min(width - margin, Math.max(margin, p.x));
      p.y = Math.min(height - margin, Math.max(margin, p.y));
    }
    temperature *= COOLING;
  }
  return positions;
}
