"""PG_m(q) as an indexed incidence structure and (q+1)-uniform hypergraph.

Points are one-dimensional subspaces of F_q^{m+1}, stored as coordinate
vectors normalized so the first nonzero coordinate is 1.  Lines are the
two-dimensional subspaces, stored both as sorted point-id tuples and (for
m=2) as normalized dual coordinate triples.  Incidence is kept in integer
bitsets so set operations in the search layers are single machine ops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .gf import FieldTable, FieldError, make_field, format_element, parse_element

MAX_GEOMETRY_Q = 16


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, ...]  # first nonzero coordinate equals 1


@dataclass(frozen=True)
class ProjLine:
    point_ids: tuple[int, ...]          # sorted, exactly q+1 of them
    dual: tuple[int, ...] | None = None  # normalized [x,y,z], m=2 only


@dataclass
class Geometry:
    m: int
    q: int
    field: FieldTable
    points: list[ProjPoint]
    lines: list[ProjLine]
    point_index: dict[tuple[int, ...], int]
    dual_index: dict[tuple[int, ...], int]          # m=2 only, else empty
    point_line_incidence: list[int]                 # bitset of line ids per point
    line_point_incidence: list[int]                 # bitset of point ids per line
    pair_line: list[list[int]] = field(repr=False)  # (point,point) -> line id

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    @property
    def all_points_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def normalize(self, vec) -> tuple[int, ...]:
        """Canonical representative of the projective point spanned by vec."""
        f = self.field
        lead = next((c for c in vec if c != 0), 0)
        if lead == 0:
            raise GeometryError("zero vector has no projective point")
        if lead == 1:
            return tuple(vec)
        s = f.inv(lead)
        return tuple(f.mul(s, c) for c in vec)

    def point_id(self, vec) -> int:
        return self.point_index[self.normalize(vec)]


def _enumerate_points(f: FieldTable, m: int) -> list[tuple[int, ...]]:
    # canonical representatives grouped by leading position: (1,*..), (0,1,*..), ...
    q = f.q
    pts = []
    for lead in range(m + 1):
        tail_len = m - lead
        for idx in range(q ** tail_len):
            tail = []
            t = idx
            for _ in range(tail_len):
                tail.append(t % q)
                t //= q
            pts.append((0,) * lead + (1,) + tuple(reversed(tail)))
    return pts


def _cross(f: FieldTable, u, v) -> tuple[int, int, int]:
    def term(a, b, c, d):
        return f.sub(f.mul(a, b), f.mul(c, d))
    return (
        term(u[1], v[2], u[2], v[1]),
        term(u[2], v[0], u[0], v[2]),
        term(u[0], v[1], u[1], v[0]),
    )


@lru_cache(maxsize=None)
def build_geometry(m: int, q: int, modulus: tuple[int, ...] | None = None) -> Geometry:
    """Construct PG_m(q) with full incidence data.

    The result is cached and must be treated as immutable.
    """
    if m < 2:
        raise GeometryError("projective dimension must be at least 2")
    if q > MAX_GEOMETRY_Q:
        raise GeometryError(f"geometry construction supports q <= {MAX_GEOMETRY_Q}")
    p, k = _factor_prime_power(q)
    f = make_field(p, k, modulus)

    coord_list = _enumerate_points(f, m)
    point_index = {c: i for i, c in enumerate(coord_list)}
    n = len(coord_list)
    assert n == sum(q ** i for i in range(m + 1))

    g = Geometry(
        m=m, q=q, field=f,
        points=[ProjPoint(c) for c in coord_list],
        lines=[],
        point_index=point_index,
        dual_index={},
        point_line_incidence=[0] * n,
        line_point_incidence=[],
        pair_line=[[-1] * n for _ in range(n)],
    )

    pair_line = g.pair_line
    for a in range(n):
        ua = coord_list[a]
        for b in range(a + 1, n):
            if pair_line[a][b] >= 0:
                continue
            ub = coord_list[b]
            ids = [a]
            for t in range(q):
                vec = tuple(f.add(f.mul(t, x), y) for x, y in zip(ua, ub))
                ids.append(g.point_id(vec))
            ids.sort()
            lid = len(g.lines)
            dual = None
            if m == 2:
                dual = g.normalize(_cross(f, ua, ub))
                g.dual_index[dual] = lid
            g.lines.append(ProjLine(tuple(ids), dual))
            mask = 0
            for pid in ids:
                mask |= 1 << pid
                g.point_line_incidence[pid] |= 1 << lid
            g.line_point_incidence.append(mask)
            for i, x in enumerate(ids):
                for y in ids[i + 1:]:
                    pair_line[x][y] = lid
                    pair_line[y][x] = lid
    return g


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            t = q
            while t % p == 0:
                t //= p
                k += 1
            if t != 1:
                raise GeometryError(f"{q} is not a prime power")
            return p, k
    raise GeometryError(f"{q} is not a prime power")


def line_through(g: Geometry, p1: int, p2: int) -> int:
    """Id of the unique line containing two distinct points."""
    if p1 == p2:
        raise GeometryError("line_through needs two distinct points")
    return g.pair_line[p1][p2]


def format_coords(g: Geometry, kind: str, obj_id: int) -> str:
    """Paper-style text for a point "(a,b,c)" or, for m=2, a line "[x,y,z]"."""
    f = g.field
    if kind == "point":
        inner = ",".join(format_element(f, c) for c in g.points[obj_id].coords)
        return f"({inner})"
    if kind == "line":
        line = g.lines[obj_id]
        if line.dual is None:
            raise GeometryError("dual line coordinates exist only for m=2")
        inner = ",".join(format_element(f, c) for c in line.dual)
        return f"[{inner}]"
    raise GeometryError(f"unknown kind {kind!r}")


def parse_coords(g: Geometry, text: str) -> tuple[str, int]:
    """Parse "(..)" as a point or "[..]" as a line; returns (kind, id)."""
    t = text.strip()
    if len(t) < 2:
        raise GeometryError(f"malformed coordinates {text!r}")
    open_, close = t[0], t[-1]
    body = t[1:-1]
    parts = [s for s in body.split(",") if s.strip() != ""]
    if len(parts) != g.m + 1:
        raise GeometryError(f"expected {g.m + 1} coordinates in {text!r}")
    try:
        vec = tuple(parse_element(g.field, s) for s in parts)
    except FieldError as exc:
        raise GeometryError(str(exc)) from exc
    if open_ == "(" and close == ")":
        return "point", g.point_id(vec)
    if open_ == "[" and close == "]":
        if g.m != 2:
            raise GeometryError("line coordinates exist only for m=2")
        dual = g.normalize(vec)
        try:
            return "line", g.dual_index[dual]
        except KeyError as exc:
            raise GeometryError(f"{text!r} is not a line of this plane") from exc
    raise GeometryError(f"malformed coordinates {text!r}")


def point_of(g: Geometry, text: str) -> int:
    kind, i = parse_coords(g, text)
    if kind != "point":
        raise GeometryError(f"{text!r} is not a point")
    return i


def line_of(g: Geometry, text: str) -> int:
    kind, i = parse_coords(g, text)
    if kind != "line":
        raise GeometryError(f"{text!r} is not a line")
    return i


def expected_point_count(m: int, q: int) -> int:
    return sum(q ** i for i in range(m + 1))


def expected_line_count(m: int, q: int) -> int:
    # Gaussian binomial [m+1 choose 2]_q
    num = (q ** (m + 1) - 1) * (q ** (m + 1) - q)
    den = (q ** 2 - 1) * (q ** 2 - q)
    return num // den
