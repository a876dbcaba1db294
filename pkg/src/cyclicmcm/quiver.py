"""Auslander-Reiten quiver of 1/n(1,a) and graph-description export."""

from __future__ import annotations

from dataclasses import dataclass

from .hj import DualGraph, GroupParams


@dataclass(frozen=True, order=True)
class Arrow:
    source: int
    target: int
    label: str


@dataclass(frozen=True)
class QuiverGraph:
    n: int
    a: int
    arrows: tuple[Arrow, ...]

    @property
    def vertices(self) -> range:
        return range(self.n)

    def in_degree(self, v: int) -> int:
        return sum(1 for arr in self.arrows if arr.target == v)

    def out_degree(self, v: int) -> int:
        return sum(1 for arr in self.arrows if arr.source == v)

    def successors(self, v: int) -> list[int]:
        return [arr.target for arr in self.arrows if arr.source == v]


@dataclass(frozen=True)
class ARSequenceData:
    target: int
    left: int
    middle: tuple[int, int]
    fundamental: bool


def build_ar_quiver(g: GroupParams) -> QuiverGraph:
    """Arrows (t-1) -> t labelled x and (t-a) -> t labelled y, for every t.

    Parallel x/y arrows (a = 1 or a = n - 1) are kept separate.
    """
    n, a = g.n, g.a
    arrows = []
    for t in range(n):
        arrows.append(Arrow((t - 1) % n, t, "x"))
        arrows.append(Arrow((t - a) % n, t, "y"))
    return QuiverGraph(n, a, tuple(arrows))


def ar_sequence(g: GroupParams, t: int) -> ARSequenceData:
    if not 0 <= t <= g.n - 1:
        raise ValueError(f"module index must lie in [0, {g.n - 1}], got {t}")
    n, a = g.n, g.a
    return ARSequenceData(
        target=t,
        left=(t - a - 1) % n,
        middle=((t - 1) % n, (t - a) % n),
        fundamental=t == 0,
    )


def quiver_to_dot(q: QuiverGraph) -> str:
    lines = [f"digraph ARQuiver_{q.n}_{q.a} {{"]
    lines.extend(f"  M{v};" for v in q.vertices)
    lines.extend(f'  M{arr.source} -> M{arr.target} [label="{arr.label}"];' for arr in q.arrows)
    lines.append("}")
    return "\n".join(lines) + "\n"


def dual_graph_to_dot(d: DualGraph) -> str:
    lines = ["graph DualGraph {"]
    lines.extend(f'  {v.name} [label="{v.self_intersection}"];' for v in d.vertices)
    for u, w in d.edges:
        lines.append(f"  {d.vertices[u - 1].name} -- {d.vertices[w - 1].name};")
    lines.append("}")
    return "\n".join(lines) + "\n"
