"""Finite combinatorial 2-complexes.

A complex is a set of vertices, a dict of oriented edges and a dict of
2-cells, each attached along a closed composable edge-path.  Identifiers
are opaque non-negative integers and every operation iterates in ascending
id order, so all derived data is reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence


class DirectedEdge(NamedTuple):
    """An edge traversed forward (sign +1) or backward (sign -1)."""

    edge: int
    sign: int

    def inverse(self) -> "DirectedEdge":
        return DirectedEdge(self.edge, -self.sign)


Path = tuple[DirectedEdge, ...]


def as_path(letters: Iterable[Sequence[int]]) -> Path:
    """Coerce [(edge, sign), ...] style input into a tuple of DirectedEdge."""
    out = []
    for item in letters:
        e, s = item
        if s not in (1, -1):
            raise ValueError(f"edge sign must be +1 or -1, got {s}")
        out.append(DirectedEdge(int(e), int(s)))
    return tuple(out)


def inverse_path(path: Path) -> Path:
    return tuple(d.inverse() for d in reversed(path))


def rotate_path(path: Path, r: int) -> Path:
    if not path:
        return path
    r %= len(path)
    return path[r:] + path[:r]


@dataclass(frozen=True)
class AttachingPath:
    """Closed edge-path of a 2-cell with a distinguished basepoint rotation.

    The path is read from index 0; ``rotation`` marks a preferred starting
    position so the same cell can be compared as a based word (literal) or
    as a cyclic word (over all rotations and both orientations).
    """

    edges: Path
    rotation: int = 0

    def __post_init__(self):
        object.__setattr__(self, "edges", as_path(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def rotated(self, r: int) -> Path:
        return rotate_path(self.edges, r)

    def based(self) -> Path:
        """The path read from the distinguished rotation."""
        return rotate_path(self.edges, self.rotation)


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: object
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, subject: object, detail: str) -> None:
        self.violations.append(Violation(kind, subject, detail))

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(f"{v.kind} {v.subject}: {v.detail}" for v in self.violations)


@dataclass
class TwoComplex:
    """vertices, edges (id -> (src, dst)) and 2-cells (id -> AttachingPath).

    Treated as immutable after construction; operations return new values.
    """

    vertices: frozenset[int]
    edges: dict[int, tuple[int, int]]
    cells: dict[int, AttachingPath]

    def __init__(self, vertices=(), edges=None, cells=None):
        self.vertices = frozenset(int(v) for v in vertices)
        self.edges = {int(e): (int(s), int(t)) for e, (s, t) in dict(edges or {}).items()}
        cells = dict(cells or {})
        norm = {}
        for c, p in cells.items():
            if not isinstance(p, AttachingPath):
                p = AttachingPath(as_path(p))
            norm[int(c)] = p
        self.cells = norm

    # -- dart bookkeeping ---------------------------------------------------

    def dart_source(self, d: DirectedEdge) -> int:
        s, t = self.edges[d.edge]
        return s if d.sign == 1 else t

    def dart_target(self, d: DirectedEdge) -> int:
        s, t = self.edges[d.edge]
        return t if d.sign == 1 else s

    def path_vertices(self, path: Path) -> list[int]:
        """Sources of each letter plus the final target."""
        verts = [self.dart_source(d) for d in path]
        if path:
            verts.append(self.dart_target(path[-1]))
        return verts

    def path_is_closed(self, path: Path) -> bool:
        if not path:
            return False
        for a, b in zip(path, path[1:]):
            if self.dart_target(a) != self.dart_source(b):
                return False
        return self.dart_target(path[-1]) == self.dart_source(path[0])

    def edge_ends_at(self, v: int) -> list[tuple[int, int]]:
        """Edge-ends incident to v: (edge, 0) at the source, (edge, 1) at the
        target.  A loop contributes both ends."""
        ends = []
        for e in sorted(self.edges):
            s, t = self.edges[e]
            if s == v:
                ends.append((e, 0))
            if t == v:
                ends.append((e, 1))
        return ends

    def copy(self) -> "TwoComplex":
        return TwoComplex(self.vertices, dict(self.edges), dict(self.cells))

    def size(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.cells))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TwoComplex)
            and self.vertices == other.vertices
            and self.edges == other.edges
            and self.cells == other.cells
        )


# ---------------------------------------------------------------------------
# validation and basic invariants
# ---------------------------------------------------------------------------


def validate(K: TwoComplex) -> ValidationReport:
    """Report every violated invariant with the offending identifier."""
    report = ValidationReport()
    for e in sorted(K.edges):
        s, t = K.edges[e]
        if s not in K.vertices:
            report.add("edge", e, f"source vertex {s} missing")
        if t not in K.vertices:
            report.add("edge", e, f"target vertex {t} missing")
    for c in sorted(K.cells):
        path = K.cells[c]
        if len(path) == 0:
            report.add("cell", c, "empty attaching path")
            continue
        missing = [d.edge for d in path.edges if d.edge not in K.edges]
        if missing:
            report.add("cell", c, f"unknown edges {sorted(set(missing))}")
            continue
        for i, (a, b) in enumerate(zip(path.edges, path.edges[1:])):
            if K.dart_target(a) != K.dart_source(b):
                report.add("cell", c, f"path not composable at position {i}")
        if K.dart_target(path.edges[-1]) != K.dart_source(path.edges[0]):
            report.add("cell", c, "path not closed")
        if not (0 <= path.rotation < len(path)):
            report.add("cell", c, f"rotation {path.rotation} out of range")
    return report


def require_valid(K: TwoComplex) -> None:
    report = validate(K)
    if not report.ok:
        raise ValueError(f"invalid complex: {report}")


def euler_characteristic(K: TwoComplex) -> int:
    require_valid(K)
    return len(K.vertices) - len(K.edges) + len(K.cells)


def components(K: TwoComplex) -> list[TwoComplex]:
    """Connected subcomplexes, sorted by least vertex id."""
    require_valid(K)
    parent = {v: v for v in K.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for e in K.edges:
        s, t = K.edges[e]
        union(s, t)
    groups: dict[int, set[int]] = {}
    for v in K.vertices:
        groups.setdefault(find(v), set()).add(v)
    parts = []
    for root in sorted(groups):
        verts = groups[root]
        edges = {e: st for e, st in K.edges.items() if st[0] in verts}
        cells = {
            c: p for c, p in K.cells.items() if K.dart_source(p.edges[0]) in verts
        }
        parts.append(TwoComplex(verts, edges, cells))
    return parts


def is_connected(K: TwoComplex) -> bool:
    return len(components(K)) == 1


# ---------------------------------------------------------------------------
# subdivision
# ---------------------------------------------------------------------------


def expand_dart(d: DirectedEdge, e: int, h_src: int, h_dst: int) -> Path:
    """Rewrite one traversal of edge e through its two half-edges.

    Both halves point away from the midpoint, so a forward traversal of
    e = (u -> v) becomes (h_src, -1) (h_dst, +1): into the midpoint along
    the u-side half, out along the v-side half.
    """
    if d.edge != e:
        return (d,)
    if d.sign == 1:
        return (DirectedEdge(h_src, -1), DirectedEdge(h_dst, 1))
    return (DirectedEdge(h_dst, -1), DirectedEdge(h_src, 1))


def subdivide_edge(K: TwoComplex, e: int) -> tuple[TwoComplex, int, tuple[int, int]]:
    """Split edge e at a new midpoint vertex.

    Returns (complex, midpoint id, (src-side half, dst-side half)); both
    half-edges are oriented with the midpoint as initial point.  Every
    attaching path crossing e is rewritten through the halves, preserving
    orientation, and the Euler characteristic is unchanged.
    """
    if e not in K.edges:
        raise ValueError(f"unknown edge id {e}")
    u, v = K.edges[e]
    midpoint = max(K.vertices, default=-1) + 1
    h_src = max(K.edges, default=-1) + 1
    h_dst = h_src + 1
    edges = {k: st for k, st in K.edges.items() if k != e}
    edges[h_src] = (midpoint, u)
    edges[h_dst] = (midpoint, v)
    cells = {}
    for c, p in K.cells.items():
        new_letters: list[DirectedEdge] = []
        new_rotation = 0
        for i, d in enumerate(p.edges):
            if i == p.rotation:
                new_rotation = len(new_letters)
            new_letters.extend(expand_dart(d, e, h_src, h_dst))
        cells[c] = AttachingPath(tuple(new_letters), new_rotation)
    K2 = TwoComplex(K.vertices | {midpoint}, edges, cells)
    return K2, midpoint, (h_src, h_dst)


# ---------------------------------------------------------------------------
# spanning trees and presentations
# ---------------------------------------------------------------------------


def bfs_tree(K: TwoComplex, basepoint: int) -> tuple[set[int], dict[int, Path]]:
    """Breadth-first spanning tree with ascending-id tie-breaking.

    Returns (tree edge ids, paths from the basepoint to each reached
    vertex along tree edges).
    """
    if basepoint not in K.vertices:
        raise ValueError(f"basepoint {basepoint} not a vertex")
    tree: set[int] = set()
    paths: dict[int, Path] = {basepoint: ()}
    frontier = [basepoint]
    while frontier:
        next_frontier = []
        for v in frontier:
            for e, end in K.edge_ends_at(v):
                s, t = K.edges[e]
                w = t if end == 0 else s
                if w in paths:
                    continue
                tree.add(e)
                step = DirectedEdge(e, 1 if end == 0 else -1)
                paths[w] = paths[v] + (step,)
                next_frontier.append(w)
        frontier = next_frontier
    return tree, paths


Word = tuple[DirectedEdge, ...]


def path_word(path: Path, tree: set[int]) -> Word:
    """Collapse tree edges of a path, keeping the non-tree letters."""
    return tuple(d for d in path if d.edge not in tree)


def reduce_word(word: Word) -> Word:
    out: list[DirectedEdge] = []
    for d in word:
        if out and out[-1].edge == d.edge and out[-1].sign == -d.sign:
            out.pop()
        else:
            out.append(d)
    return tuple(out)


def cyclic_reduce_word(word: Word) -> Word:
    word = reduce_word(word)
    while len(word) >= 2 and word[0].edge == word[-1].edge and word[0].sign == -word[-1].sign:
        word = reduce_word(word[1:-1])
    return word


@dataclass(frozen=True)
class Presentation:
    """Edge-path presentation: generators are non-tree edges, relators are
    attaching paths with tree letters dropped."""

    generators: tuple[int, ...]
    relators: tuple[Word, ...]
    basepoint: int
    tree_edges: frozenset[int]

    @property
    def generator_count(self) -> int:
        return len(self.generators)


def fundamental_group_presentation(K: TwoComplex, basepoint: int) -> Presentation:
    require_valid(K)
    comp = None
    for part in components(K):
        if basepoint in part.vertices:
            comp = part
            break
    if comp is None:
        raise ValueError(f"basepoint {basepoint} absent")
    tree, _ = bfs_tree(comp, basepoint)
    generators = tuple(sorted(e for e in comp.edges if e not in tree))
    relators = tuple(
        path_word(comp.cells[c].edges, tree) for c in sorted(comp.cells)
    )
    return Presentation(generators, relators, basepoint, frozenset(tree))


# ---------------------------------------------------------------------------
# cyclic comparison helpers
# ---------------------------------------------------------------------------


def cyclically_equal(p: Path, q: Path, both_orientations: bool = True) -> bool:
    """Equality of closed paths as cyclic words, optionally up to reversal."""
    if len(p) != len(q):
        return False
    if not p:
        return True
    candidates = [q]
    if both_orientations:
        candidates.append(inverse_path(q))
    for cand in candidates:
        for r in range(len(cand)):
            if rotate_path(cand, r) == p:
                return True
    return False


def based_power(path: Path, k: int) -> bool:
    """Whether the path is literally a k-th power S^k."""
    n = len(path)
    if k <= 0 or n % k:
        return False
    period = n // k
    return path == path[:period] * k


def max_power(path: Path) -> int:
    """Largest k with path = S^k as a based word."""
    n = len(path)
    for k in range(n, 0, -1):
        if based_power(path, k):
            return k
    return 1


# ---------------------------------------------------------------------------
# JSON round trip (canonical ordering by id, byte-stable)
# ---------------------------------------------------------------------------


def complex_to_obj(K: TwoComplex) -> dict:
    return {
        "vertices": sorted(K.vertices),
        "edges": [[e, *K.edges[e]] for e in sorted(K.edges)],
        "cells": [
            [c, [[d.edge, d.sign] for d in K.cells[c].edges]] for c in sorted(K.cells)
        ],
    }


def complex_from_obj(obj: dict) -> TwoComplex:
    edges = {e: (s, t) for e, s, t in obj.get("edges", [])}
    cells = {c: AttachingPath(as_path(p)) for c, p in obj.get("cells", [])}
    return TwoComplex(obj.get("vertices", []), edges, cells)


def complex_to_json(K: TwoComplex) -> str:
    return json.dumps(complex_to_obj(K), separators=(",", ":"), sort_keys=True)


def complex_from_json(text: str) -> TwoComplex:
    return complex_from_obj(json.loads(text))
