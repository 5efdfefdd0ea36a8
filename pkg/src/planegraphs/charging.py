"""Cross-graph charging machinery: visibility, potential, families, charges.

The charging argument moves charge between vings (point-in-graph instances)
of *different* plane graphs of the same point set.  The unit of structure is
the family: starting from a graph where p is isolated, connect p to any
subset of the vertices it can see; a family of visibility j has exactly 2^j
members, one per subset.  Charges are dyadic rationals and every computation
here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .enumeration import PlaneGraph, _check_cap, workspace
from .geometry import PointSet


@dataclass(frozen=True)
class DyadicRational:
    """numerator / 2**exponent, normalized to odd numerator or exponent 0."""

    numerator: int
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")
        num, exp = self.numerator, self.exponent
        while exp > 0 and num != 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        if num == 0:
            exp = 0
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    @classmethod
    def one_over_pow2(cls, e: int) -> "DyadicRational":
        return cls(1, e)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        if not isinstance(other, DyadicRational):
            return NotImplemented
        e = max(self.exponent, other.exponent)
        num = (self.numerator << (e - self.exponent)) + (
            other.numerator << (e - other.exponent)
        )
        return DyadicRational(num, e)

    def _other_ratio(self, other) -> tuple[int, int] | None:
        if isinstance(other, DyadicRational):
            return other.numerator, 1 << other.exponent
        if isinstance(other, int):
            return other, 1
        if isinstance(other, Fraction):
            return other.numerator, other.denominator
        return None

    def __lt__(self, other):
        ratio = self._other_ratio(other)
        if ratio is None:
            return NotImplemented
        c, d = ratio
        return self.numerator * d < c << self.exponent

    def __le__(self, other):
        ratio = self._other_ratio(other)
        if ratio is None:
            return NotImplemented
        c, d = ratio
        return self.numerator * d <= c << self.exponent

    def __float__(self) -> float:
        return self.numerator / (1 << self.exponent)


@dataclass(frozen=True)
class FamilyRecord:
    """A family identified by its root: the graph where `point` is isolated."""

    point: int
    root: PlaneGraph
    visibility_j: int

    @property
    def member_count(self) -> int:
        return 1 << self.visibility_j


def visibility(ps: PointSet, g: PlaneGraph, p: int) -> int:
    """Number of q != p with segment pq absent from g and crossing no edge of g."""
    ws = workspace(ps)
    pair = ws.table.pair_index[p]
    edges = g.edges
    count = 0
    for q in range(ps.n):
        if q == p:
            continue
        k = pair[q]
        bit = 1 << k
        if not (edges & bit) and not (ws.cross[k] & edges):
            count += 1
    return count


def potential(ps: PointSet, g: PlaneGraph, p: int) -> int:
    """deg_g(p) plus the visibility of p in g; equals the family's visibility."""
    ws = workspace(ps)
    deg = (g.edges & ws.table.incident_masks[p]).bit_count()
    return deg + visibility(ps, g, p)


def family_root(ps: PointSet, g: PlaneGraph, p: int) -> PlaneGraph:
    """g minus all edges incident to p: the 0-ving graph of (p, g)'s family."""
    ws = workspace(ps)
    return PlaneGraph(g.edges & ~ws.table.incident_masks[p], ps.n)


def family_members(ps: PointSet, root: PlaneGraph, p: int) -> list[PlaneGraph]:
    """All 2^j graphs reachable by connecting p to visible vertices of `root`."""
    ws = workspace(ps)
    if root.edges & ws.table.incident_masks[p]:
        raise ValueError(f"point {p} is not isolated in the given root graph")
    pair = ws.table.pair_index[p]
    visible_segs = [
        pair[q]
        for q in range(ps.n)
        if q != p and not (ws.cross[pair[q]] & root.edges)
    ]
    members = []
    for sub in range(1 << len(visible_segs)):
        add = 0
        ss = sub
        while ss:
            lsb = ss & -ss
            add |= 1 << visible_segs[lsb.bit_length() - 1]
            ss ^= lsb
        blocked = 0
        mm = add
        while mm:
            lsb = mm & -mm
            blocked |= ws.cross[lsb.bit_length() - 1]
            mm ^= lsb
        edges = root.edges | add
        if blocked & edges:
            raise AssertionError("family member has a crossing pair")
        members.append(PlaneGraph(edges, ps.n))
    return members


def family_charge_profile(i: int, j: int) -> Fraction:
    """Per-ving charge C(j, i) / 2^j after spreading a j-family's i-ving charge."""
    if i < 0 or j < 0:
        raise ValueError("indices must be non-negative")
    if i > j:
        return Fraction(0)
    return Fraction(comb(j, i), 1 << j)


def max_family_charge(i: int) -> tuple[tuple[int, ...], Fraction]:
    """Maximize C(j, i)/2^j over j >= i, exactly.

    The search runs up to j = 8i; beyond 2i the term ratio
    (j+1) / (2 (j+1-i)) is < 1, so the tail is strictly decreasing and the
    finite search is conclusive.  The maximum sits on the plateau
    {2i-1, 2i} with value C(2i, i) / 4^i.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    best = Fraction(-1)
    argmax: list[int] = []
    for j in range(i, 8 * i + 1):
        value = family_charge_profile(i, j)
        if value > best:
            best, argmax = value, [j]
        elif value == best:
            argmax.append(j)
    j_tail = 8 * i
    tail_ratio = Fraction(j_tail + 1, 2 * (j_tail + 1 - i))
    if tail_ratio >= 1:
        raise AssertionError("tail of the charge profile failed to decrease")
    if argmax != [2 * i - 1, 2 * i] or best != Fraction(comb(2 * i, i), 4**i):
        raise AssertionError(f"unexpected charge maximum for i={i}: {argmax}")
    return tuple(argmax), best


def graph_charge_v0(ps: PointSet, g: PlaneGraph) -> DyadicRational:
    """Total redistributed 0-ving charge sitting in g: sum_p 2^-pt(p, g)."""
    n = ps.n
    top = n - 1  # potential is at most n-1
    num = 0
    for p in range(n):
        num += 1 << (top - potential(ps, g, p))
    return DyadicRational(num, top)


def lp_charge_cap(n: int) -> Fraction:
    """Exact optimum of v3/8 + v4/16 + (n-v3-v4)/32 under the degree bounds.

    Constraints: v3 <= 2n/3 - 1, 9 v3 + 2 v4 <= 6n - 6, v3, v4 >= 0,
    v3 + v4 <= n.  Solved by enumerating intersection points of constraint
    boundary pairs (2 variables, so vertex enumeration is exhaustive); the
    optimum is (11n - 6)/112 at v3 = (4n-6)/7, v4 = (3n+6)/7.
    """
    if n < 5:
        raise ValueError("the charge cap optimization requires n >= 5")
    # rows (a, b, c) meaning a*v3 + b*v4 <= c
    cons = [
        (Fraction(1), Fraction(0), Fraction(2 * n, 3) - 1),
        (Fraction(9), Fraction(2), Fraction(6 * n - 6)),
        (Fraction(-1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(-1), Fraction(0)),
        (Fraction(1), Fraction(1), Fraction(n)),
    ]

    def feasible(v3: Fraction, v4: Fraction) -> bool:
        return all(a * v3 + b * v4 <= c for a, b, c in cons)

    def objective(v3: Fraction, v4: Fraction) -> Fraction:
        return Fraction(n + 3 * v3 + v4, 32)

    best: Fraction | None = None
    arg = None
    for idx1 in range(len(cons)):
        for idx2 in range(idx1 + 1, len(cons)):
            a1, b1, c1 = cons[idx1]
            a2, b2, c2 = cons[idx2]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            v3 = (c1 * b2 - c2 * b1) / det
            v4 = (a1 * c2 - a2 * c1) / det
            if feasible(v3, v4):
                val = objective(v3, v4)
                if best is None or val > best:
                    best, arg = val, (v3, v4)
    if best is None:
        raise ValueError(f"infeasible charge optimization at n={n}")
    expected = Fraction(11 * n - 6, 112)
    if best != expected or arg != (Fraction(4 * n - 6, 7), Fraction(3 * n + 6, 7)):
        raise AssertionError(f"charge cap optimum mismatch at n={n}: {best} at {arg}")
    return best


def family_records(ps: PointSet, p: int, max_n: int | None = None) -> list[FamilyRecord]:
    """Every family of point p, identified by its root.

    Family roots of p are exactly the plane graphs in which p is isolated,
    enumerated as the crossing-free subsets of the non-incident segments.
    """
    _check_cap(ps, max_n)
    ws = workspace(ps)
    pair = ws.table.pair_index[p]
    cross = ws.cross
    others = [q for q in range(ps.n) if q != p]
    records: list[FamilyRecord] = []

    def record(edges: int) -> None:
        j = sum(1 for q in others if not (cross[pair[q]] & edges))
        records.append(
            FamilyRecord(point=p, root=PlaneGraph(edges, ps.n), visibility_j=j)
        )

    ws.enumerate_restricted(ws.full & ~ws.table.incident_masks[p], record)
    return records


def family_census(ps: PointSet, p: int, max_n: int | None = None) -> dict[int, int]:
    """census[j] = number of families of point p with visibility j.

    Same enumeration as family_records, kept in compact tallied form.
    """
    _check_cap(ps, max_n)
    ws = workspace(ps)
    pair = ws.table.pair_index[p]
    cross = ws.cross
    n = ps.n
    others = [q for q in range(n) if q != p]
    census: dict[int, int] = {}

    def tally(edges: int) -> None:
        j = 0
        for q in others:
            if not (cross[pair[q]] & edges):
                j += 1
        census[j] = census.get(j, 0) + 1

    ws.enumerate_restricted(ws.full & ~ws.table.incident_masks[p], tally)
    return dict(sorted(census.items()))


def charge_audit(ps: PointSet, max_n: int | None = None) -> dict:
    """Exhaustive audit: per-graph charges plus the family census per point.

    The two conservation identities are checked on the way: the total graph
    charge equals the number of 0-vings, and each point's family sizes sum
    to pg(P).
    """
    _check_cap(ps, max_n)
    ws = workspace(ps)
    n = ps.n
    pair = ws.table.pair_index
    inc = ws.table.incident_masks
    cross = ws.cross
    top = n - 1

    per_graph: list[dict] = []
    total_num = 0
    zero_vings = 0

    def scan(edges: int) -> None:
        nonlocal total_num, zero_vings
        num = 0
        for p in range(n):
            pt = 0
            row = pair[p]
            for q in range(n):
                if q == p:
                    continue
                k = row[q]
                if (edges >> k) & 1 or not (cross[k] & edges):
                    pt += 1
            num += 1 << (top - pt)
            if not (edges & inc[p]):
                zero_vings += 1
        total_num += num
        charge = DyadicRational(num, top)
        per_graph.append(
            {
                "graph": f"{edges:x}",
                "charge_numerator": charge.numerator,
                "charge_exponent": charge.exponent,
            }
        )

    ws.enumerate_restricted(ws.full, scan)
    pg = len(per_graph)
    total_charge = DyadicRational(total_num, top)
    if total_charge.as_fraction() != zero_vings:
        raise AssertionError("charge conservation failed: total != zero-ving count")

    census_rows = []
    for p in range(n):
        census = family_census(ps, p, max_n=max_n)
        if sum(mult << j for j, mult in census.items()) != pg:
            raise AssertionError(f"family sizes of point {p} do not sum to pg")
        for j, mult in census.items():
            census_rows.append({"point": p, "visibility_j": j, "multiplicity": mult})

    return {
        "pg": pg,
        "zero_ving_count": zero_vings,
        "total_charge_numerator": total_charge.numerator,
        "total_charge_exponent": total_charge.exponent,
        "per_graph_charges": per_graph,
        "family_census": census_rows,
    }
