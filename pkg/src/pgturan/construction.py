"""The two partition constructions of PG-free hypergraphs, at desk scale.

`t2` partitions vertices into X plus (sum_{i=1..m} q^i - k) singleton-capped
parts; edges meet X in 1..q vertices and each small part at most once.  `t3`
(planes only) adds a Y part that edges may meet twice, plus M(q)-1 singleton-
capped parts.  Edge counting is exact combinatorics over the actual part
sizes; PG-freeness is audited by explicit embedding search.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

from .geometry import Geometry


class ConstructionError(ValueError):
    pass


DEFAULT_MAX_N = {2: 40, 3: 25}


@dataclass
class PartitionSpec:
    n: int
    q: int
    m: int
    scheme: str                  # "t2" | "t3"
    x_size: int
    y_sizes: tuple[int, ...]     # t2: the singleton-capped parts; t3: (y_size,)
    z_sizes: tuple[int, ...]     # t3 only, else ()
    rates: tuple[float, ...]
    k_or_M: int

    @property
    def sizes(self) -> tuple[int, ...]:
        return (self.x_size, *self.y_sizes, *self.z_sizes)

    @property
    def r(self) -> int:
        return self.q + 1

    def part_of_vertex(self) -> list[int]:
        """Part index per vertex: 0 is X, then the remaining parts in order."""
        out = []
        for part, size in enumerate(self.sizes):
            out.extend([part] * size)
        return out

    def edge_ok(self, counts) -> bool:
        """Whether a (q+1)-set with the given per-part counts is an edge."""
        x = counts[0]
        if not 1 <= x <= self.q:
            return False
        if self.scheme == "t2":
            return all(c <= 1 for c in counts[1:])
        if counts[1] > 2:
            return False
        return all(c <= 1 for c in counts[2:])


def _largest_remainder(n: int, targets: list[float]) -> list[int]:
    floors = [math.floor(t) for t in targets]
    rem = n - sum(floors)
    if rem < 0 or rem > len(targets):
        raise ConstructionError("rates do not sum to 1")
    order = sorted(range(len(targets)),
                   key=lambda i: (-(targets[i] - floors[i]), i))
    for i in order[:rem]:
        floors[i] += 1
    return floors


def make_partition(n: int, q: int, m: int, scheme: str, rates,
                   k: int | None = None, M: int | None = None) -> PartitionSpec:
    """Integer part sizes from rates by largest-remainder rounding.

    t2 rates: (alpha,) or (alpha, beta) with beta = 1 - (sum q^i - k) * alpha.
    t3 rates: (alpha, beta, gamma) with alpha + beta + (M-1) * gamma = 1.
    Every part size lands within 1 of its real target and the sizes sum to n.
    """
    if scheme == "t2":
        if k is None:
            raise ConstructionError("t2 needs k, the maximum blocking-set size")
        s = sum(q ** i for i in range(1, m + 1))
        t = s - k
        if t < 0:
            raise ConstructionError("k exceeds the part budget")
        alpha = float(rates[0])
        beta = 1.0 - t * alpha if len(rates) < 2 else float(rates[1])
        if alpha < -1e-12 or beta < -1e-12:
            raise ConstructionError("rates must be nonnegative")
        if abs(beta - (1.0 - t * alpha)) > 1e-9:
            raise ConstructionError("rates violate beta = 1 - t*alpha")
        sizes = _largest_remainder(n, [beta * n] + [alpha * n] * t)
        return PartitionSpec(n=n, q=q, m=m, scheme="t2",
                             x_size=sizes[0], y_sizes=tuple(sizes[1:]), z_sizes=(),
                             rates=(alpha, beta), k_or_M=k)
    if scheme == "t3":
        if M is None:
            raise ConstructionError("t3 needs M, the minimum passant-cover value")
        if m != 2:
            raise ConstructionError("t3 is a plane construction (m=2)")
        alpha, beta, gamma = (float(r) for r in rates)
        if min(alpha, beta, gamma) < -1e-12:
            raise ConstructionError("rates must be nonnegative")
        if abs(alpha + beta + (M - 1) * gamma - 1.0) > 1e-9:
            raise ConstructionError("rates violate alpha + beta + (M-1)*gamma = 1")
        sizes = _largest_remainder(n, [alpha * n, beta * n] + [gamma * n] * (M - 1))
        return PartitionSpec(n=n, q=q, m=2, scheme="t3",
                             x_size=sizes[0], y_sizes=(sizes[1],),
                             z_sizes=tuple(sizes[2:]),
                             rates=(alpha, beta, gamma), k_or_M=M)
    raise ConstructionError(f"unknown scheme {scheme!r}")


@dataclass
class Hypergraph:
    n: int
    r: int
    edges: list[tuple[int, ...]]
    parts: list[int] | None = None       # part index per vertex, when partitioned
    spec: PartitionSpec | None = None

    def edge_set(self) -> set[frozenset[int]]:
        return {frozenset(e) for e in self.edges}


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    return Hypergraph(n=n, r=r,
                      edges=[tuple(e) for e in itertools.combinations(range(n), r)])


def build_hypergraph(spec: PartitionSpec, max_n: int | None = None) -> Hypergraph:
    """Explicit edge list of the partition construction (desk scale only)."""
    cap = max_n if max_n is not None else DEFAULT_MAX_N.get(spec.q, 18)
    if spec.n > cap:
        raise ConstructionError(f"n={spec.n} beyond enumeration budget {cap}")
    part_of = spec.part_of_vertex()
    n_parts = len(spec.sizes)
    edges = []
    for combo in itertools.combinations(range(spec.n), spec.r):
        counts = [0] * n_parts
        for v in combo:
            counts[part_of[v]] += 1
        if spec.edge_ok(counts):
            edges.append(combo)
    return Hypergraph(n=spec.n, r=spec.r, edges=edges, parts=part_of, spec=spec)


def _elementary_symmetric(sizes, upto: int) -> list[int]:
    e = [0] * (upto + 1)
    e[0] = 1
    for s in sizes:
        for j in range(min(upto, len(e) - 1), 0, -1):
            e[j] += e[j - 1] * s
    return e


def count_edges_exact(spec: PartitionSpec) -> int:
    """Exact edge count from the part sizes alone (no enumeration)."""
    q, r = spec.q, spec.r
    if spec.scheme == "t2":
        e = _elementary_symmetric(spec.y_sizes, r)
        return sum(math.comb(spec.x_size, i) * e[r - i] for i in range(1, q + 1))
    e = _elementary_symmetric(spec.z_sizes, r)
    y = spec.y_sizes[0]
    total = 0
    for i in range(1, q + 1):
        for j in range(0, min(2, r - i) + 1):
            rest = r - i - j
            total += math.comb(spec.x_size, i) * math.comb(y, j) * e[rest]
    return total


def displayed_lower_bound(spec: PartitionSpec) -> int:
    """The floor-rate undercount the constructions are quoted with.

    Always at most count_edges_exact for partitions produced by
    make_partition, since every part size is at least the floored target.
    """
    n, q, r = spec.n, spec.q, spec.r
    if spec.scheme == "t2":
        alpha, beta = spec.rates
        t = len(spec.y_sizes)
        fb, fa = math.floor(beta * n), math.floor(alpha * n)
        return sum(math.comb(fb, i) * math.comb(t, r - i) * fa ** (r - i)
                   for i in range(1, q + 1))
    alpha, beta, gamma = spec.rates
    M = spec.k_or_M
    fa, fb, fg = math.floor(alpha * n), math.floor(beta * n), math.floor(gamma * n)
    total = 0
    for i in range(1, q + 1):
        for j in range(max(0, q + 2 - M - i), min(2, q + 1 - i) + 1):
            k = r - i - j
            total += (math.comb(M - 1, k) * math.comb(fa, i)
                      * math.comb(fb, j) * fg ** k)
    return total


# --- embedding search ---------------------------------------------------------

@dataclass
class SubgeometryResult:
    status: str                       # "yes" | "no" | "timeout"
    witness: dict[int, int] | None    # pattern point -> host vertex
    nodes: int


def _pattern_order(n_points: int, lines) -> list[int]:
    """Point order that closes fully-mapped lines as early as possible."""
    remaining = set(range(n_points))
    order: list[int] = []
    placed: set[int] = set()

    def gain(p):
        closes = sum(1 for ln in lines if p in ln and all(x in placed or x == p for x in ln))
        almost = sum(1 for ln in lines if p in ln
                     and sum(1 for x in ln if x in placed) == len(ln) - 2)
        support = sum(1 for ln in lines if p in ln
                      and any(x in placed for x in ln))
        return (closes, almost, support)

    # seed with the two highest-degree points of the first line
    first = min(lines, key=lambda ln: tuple(ln))
    for p in sorted(first):
        order.append(p)
        placed.add(p)
        remaining.discard(p)
    while remaining:
        best = max(sorted(remaining), key=gain)
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


def _search_colored(h: Hypergraph, pattern_lines, n_pts: int,
                    deadline, node_budget) -> SubgeometryResult:
    """Embedding search for partition hosts, factored through part counts.

    Vertices inside one part are interchangeable, so an embedding exists iff
    pattern points can be assigned parts, within capacity, such that every
    line's per-part count vector is an edge type.
    """
    spec = h.spec
    sizes = spec.sizes
    n_parts = len(sizes)
    order = _pattern_order(n_pts, pattern_lines)
    pos = {p: i for i, p in enumerate(order)}
    lines_by_last = [[] for _ in range(n_pts)]
    for ln in pattern_lines:
        last = max(pos[p] for p in ln)
        lines_by_last[last].append(ln)

    color = [-1] * n_pts
    used = [0] * n_parts
    nodes = 0
    out_status = "no"

    def line_counts(ln):
        counts = [0] * n_parts
        for p in ln:
            counts[color[p]] += 1
        return counts

    def feasible_partial(p_new) -> bool:
        # monotone caps can be checked on any line through the new point
        for ln in pattern_lines:
            if p_new not in ln:
                continue
            counts = [0] * n_parts
            mapped = 0
            for p in ln:
                if color[p] >= 0:
                    counts[color[p]] += 1
                    mapped += 1
            x = counts[0]
            if x > spec.q:
                return False
            if spec.scheme == "t2":
                if any(c > 1 for c in counts[1:]):
                    return False
            else:
                if counts[1] > 2 or any(c > 1 for c in counts[2:]):
                    return False
            if mapped == len(ln) and x < 1:
                return False
        return True

    def rec(step: int) -> bool:
        nonlocal nodes, out_status
        if step == n_pts:
            return True
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            out_status = "timeout"
            return False
        if deadline is not None and nodes % 2048 == 0 and time.monotonic() > deadline:
            out_status = "timeout"
            return False
        p = order[step]
        for part in range(n_parts):
            if used[part] >= sizes[part]:
                continue
            color[p] = part
            used[part] += 1
            if feasible_partial(p) and rec(step + 1):
                return True
            used[part] -= 1
            color[p] = -1
            if out_status == "timeout":
                return False
        return False

    if rec(0):
        # materialize: fresh vertices per part in index order
        starts = [sum(sizes[:i]) for i in range(n_parts)]
        next_free = list(starts)
        witness = {}
        for p in order:
            part = color[p]
            witness[p] = next_free[part]
            next_free[part] += 1
        return SubgeometryResult("yes", witness, nodes)
    return SubgeometryResult(out_status, None, nodes)


def _search_generic(h: Hypergraph, pattern_lines, n_pts: int,
                    deadline, node_budget) -> SubgeometryResult:
    """Backtracking over pattern points mapping into arbitrary hosts."""
    edge_set = h.edge_set()
    order = _pattern_order(n_pts, pattern_lines)
    pos = {p: i for i, p in enumerate(order)}
    closing = [[] for _ in range(n_pts)]     # lines fully mapped at this step
    pending = [[] for _ in range(n_pts)]     # lines missing one point after this step
    for ln in pattern_lines:
        steps = sorted(pos[p] for p in ln)
        closing[steps[-1]].append(ln)
        pending[steps[-2]].append(ln)

    image = [-1] * n_pts
    used: set[int] = set()
    nodes = 0
    out_status = "no"
    host_vertices = list(range(h.n))

    def rec(step: int) -> bool:
        nonlocal nodes, out_status
        if step == n_pts:
            return True
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            out_status = "timeout"
            return False
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            out_status = "timeout"
            return False
        p = order[step]
        for v in host_vertices:
            if v in used:
                continue
            image[p] = v
            ok = True
            for ln in closing[step]:
                if frozenset(image[x] for x in ln) not in edge_set:
                    ok = False
                    break
            if ok:
                # forward check: almost-complete lines must still be completable
                for ln in pending[step]:
                    mapped = [image[x] for x in ln if image[x] >= 0]
                    if len(mapped) != len(ln) - 1:
                        continue
                    base = frozenset(mapped)
                    if not any(base | {w} in edge_set
                               for w in host_vertices if w not in used and w != v):
                        ok = False
                        break
            if ok:
                used.add(v)
                if rec(step + 1):
                    return True
                used.discard(v)
                if out_status == "timeout":
                    return False
            image[p] = -1
        return False

    if rec(0):
        return SubgeometryResult("yes", {p: image[p] for p in range(n_pts)}, nodes)
    return SubgeometryResult(out_status, None, nodes)


def contains_subgeometry(h: Hypergraph, pattern: Geometry,
                         budget: float | None = None,
                         node_budget: int | None = None,
                         force_generic: bool = False) -> SubgeometryResult:
    """Search for a copy of the geometry inside the hypergraph.

    A witness is an injection of pattern points into host vertices mapping
    every line to an edge; "no" is only reported on exhausted search.
    Partition-built hosts use the part-count factorization unless
    force_generic is set.
    """
    if pattern.q + 1 != h.r:
        raise ConstructionError("pattern uniformity differs from the host's")
    if h.n < len(pattern.points):
        return SubgeometryResult("no", None, 0)
    pattern_lines = [tuple(ln.point_ids) for ln in pattern.lines]
    n_pts = len(pattern.points)
    deadline = time.monotonic() + budget if budget is not None else None
    if h.spec is not None and not force_generic:
        return _search_colored(h, pattern_lines, n_pts, deadline, node_budget)
    return _search_generic(h, pattern_lines, n_pts, deadline, node_budget)
