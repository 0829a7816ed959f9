import { describe, expect, it } from "vitest";

import {
  hashSignature,
  layoutGraph,
  seededRandom,
} from "../src/layout.js";
import type { LayoutEdge } from "../src/layout.js";

const NODES = ["honest", "work", "public", "space", "galleri"];
const EDGES: LayoutEdge[] = [
  { a: "honest", b: "work", weight: 6 },
  { a: "public", b: "space", weight: 4 },
  { a: "work", b: "galleri", weight: 2 },
];

describe("seeding", () => {
  it("hashes equal signatures equally and spreads different ones", () => {
    expect(hashSignature("common|x=1")).toBe(hashSignature("common|x=1"));
    expect(hashSignature("common|x=1")).not.toBe(hashSignature("common|x=2"));
    expect(hashSignature("")).toBeGreaterThanOrEqual(0);
  });

  it("yields a reproducible uniform stream", () => {
    const a = seededRandom(42);
    const b = seededRandom(42);
    const c = seededRandom(43);
    const seqA = Array.from({ length: 10 }, a);
    const seqB = Array.from({ length: 10 }, b);
    expect(seqA).toEqual(seqB);
    expect(seqA).not.toEqual(Array.from({ length: 10 }, c));
    for (const value of seqA) {
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(1);
    }
  });
});

describe("layoutGraph", () => {
  it("is deterministic for identical inputs", () => {
    const first = layoutGraph(NODES, EDGES, "sig-1", 720, 480);
    const second = layoutGraph(NODES, EDGES, "sig-1", 720, 480);
    expect([...first.entries()]).toEqual([...second.entries()]);
  });

  it("does not depend on node ordering", () => {
    const shuffled = [...NODES].reverse();
    const first = layoutGraph(NODES, EDGES, "sig-1", 720, 480);
    const second = layoutGraph(shuffled, EDGES, "sig-1", 720, 480);
    for (const node of NODES) {
      expect(second.get(node)).toEqual(first.get(node));
    }
  });

  it("moves when the signature changes", () => {
    const first = layoutGraph(NODES, EDGES, "sig-1", 720, 480);
    const second = layoutGraph(NODES, EDGES, "sig-2", 720, 480);
    const moved = NODES.some((n) => {
      const p = first.get(n)!;
      const q = second.get(n)!;
      return p.x !== q.x || p.y !== q.y;
    });
    expect(moved).toBe(true);
  });

  it("keeps every node finite and inside the margins", () => {
    for (const signature of ["a", "b", "c", "d"]) {
      const positions = layoutGraph(NODES, EDGES, signature, 300, 200);
      expect(positions.size).toBe(NODES.length);
      for (const point of positions.values()) {
        expect(Number.isFinite(point.x)).toBe(true);
        expect(Number.isFinite(point.y)).toBe(true);
        expect(point.x).toBeGreaterThanOrEqual(16);
        expect(point.x).toBeLessThanOrEqual(300 - 16);
        expect(point.y).toBeGreaterThanOrEqual(16);
        expect(point.y).toBeLessThanOrEqual(200 - 16);
      }
    }
  });

  it("centers a single node and returns nothing for none", () => {
    const single = layoutGraph(["only"], [], "sig", 400, 300);
    expect(single.get("only")).toEqual({ x: 200, y: 150 });
    expect(layoutGraph([], [], "sig", 400, 300).size).toBe(0);
  });

  it("places tightly coupled nodes closer than strangers", () => {
    const positions = layoutGraph(NODES, EDGES, "sig-близко", 720, 480);
    const dist = (a: string, b: string) => {
      const p = positions.get(a)!;
      const q = positions.get(b)!;
      return Math.hypot(p.x - q.x, p.y - q.y);
    };
    // honest~work share a heavy edge; honest and public share none
    expect(dist("honest", "work")).toBeLessThan(dist("honest", "public"));
  });
});
