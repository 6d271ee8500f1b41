"""Arithmetic in the 9-element field and the projective matrix group of
2x2 invertible matrices over it, realized as a permutation group.

The point of the module is the direct construction of the two
nonorientable regular embeddings of H(2,6): three explicit matrices
generate the projective group of order 720, and their right regular
action yields an admissible triple whose coset graph is H(2,6).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import hamming, is_isomorphic
from .maps import (
    AdmissibleTriple,
    coset_graph,
    invariants,
    petrie_dual,
    validate_admissible,
)
from .perms import Perm, element_order

__all__ = [
    "GF9",
    "Mat2",
    "MatGroup",
    "VerificationReport",
    "gf9_add",
    "gf9_elements",
    "gf9_inv",
    "gf9_mul",
    "M_LAM",
    "M_RHO",
    "M_TAU",
    "mat_closure",
    "mat_det",
    "mat_mul",
    "mat_scale",
    "pgl_closure",
    "pgl_triple",
    "proj_normalize",
    "psl_members",
    "verify_construction",
]


@dataclass(frozen=True)
class GF9:
    """a + b*i with coefficients mod 3 and i^2 = -1."""

    a: int
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 3)
        object.__setattr__(self, "b", self.b % 3)

    def __add__(self, other: "GF9") -> "GF9":
        return GF9(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "GF9":
        return GF9(-self.a, -self.b)

    def __sub__(self, other: "GF9") -> "GF9":
        return GF9(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "GF9") -> "GF9":
        return GF9(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __bool__(self) -> bool:
        return (self.a, self.b) != (0, 0)

    def inv(self) -> "GF9":
        if not self:
            raise ZeroDivisionError("inversion of zero in GF(9)")
        # conjugate over the norm: (a+bi)(a-bi) = a^2 + b^2, a unit of GF(3)
        norm = (self.a * self.a + self.b * self.b) % 3
        scale = 1 if norm == 1 else 2
        return GF9(self.a * scale, -self.b * scale)

    def __repr__(self) -> str:
        return f"GF9({self.a},{self.b})"


ZERO = GF9(0)
ONE = GF9(1)


def gf9_elements() -> tuple[GF9, ...]:
    return tuple(GF9(a, b) for a in range(3) for b in range(3))


def gf9_add(x: GF9, y: GF9) -> GF9:
    return x + y


def gf9_mul(x: GF9, y: GF9) -> GF9:
    return x * y


def gf9_inv(x: GF9) -> GF9:
    return x.inv()


def _squares() -> frozenset[GF9]:
    return frozenset(x * x for x in gf9_elements() if x)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over GF(9).  Projective identity is via proj_normalize."""

    m00: GF9
    m01: GF9
    m10: GF9
    m11: GF9

    def entries(self) -> tuple[GF9, GF9, GF9, GF9]:
        return (self.m00, self.m01, self.m10, self.m11)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(c for e in self.entries() for c in (e.a, e.b))


def mat_mul(p: Mat2, q: Mat2) -> Mat2:
    return Mat2(
        p.m00 * q.m00 + p.m01 * q.m10,
        p.m00 * q.m01 + p.m01 * q.m11,
        p.m10 * q.m00 + p.m11 * q.m10,
        p.m10 * q.m01 + p.m11 * q.m11,
    )


def mat_det(p: Mat2) -> GF9:
    return p.m00 * p.m11 - p.m01 * p.m10


def mat_scale(p: Mat2, c: GF9) -> Mat2:
    return Mat2(p.m00 * c, p.m01 * c, p.m10 * c, p.m11 * c)


def proj_normalize(p: Mat2) -> Mat2:
    """Scale so the first nonzero entry in row-major order is 1; two
    matrices represent the same projective element iff the results match."""
    for e in p.entries():
        if e:
            return mat_scale(p, e.inv())
    raise ValueError("cannot normalize the zero matrix")


# the generating matrices: entries are reduced mod 3, so -1 appears as 2
M_LAM = Mat2(GF9(-1), GF9(1), GF9(1), GF9(1))
M_RHO = Mat2(GF9(0), GF9(1, 1), GF9(-1), GF9(0))
M_TAU = Mat2(GF9(1), GF9(1), GF9(1), GF9(-1))


@dataclass(frozen=True)
class MatGroup:
    """Closure of projective matrix classes, canonically ordered."""

    elements: tuple[Mat2, ...]
    order: int
    generators: tuple[Mat2, ...]

    def __contains__(self, m: Mat2) -> bool:
        return proj_normalize(m) in set(self.elements)

    def __iter__(self):
        return iter(self.elements)


def mat_closure(generators: Sequence[Mat2], cap: int = 10_000) -> MatGroup:
    """Projective closure: products are normalized before dedup."""
    gens = tuple(proj_normalize(g) for g in generators)
    for g in gens:
        if not mat_det(g):
            raise ValueError(f"singular generator {g}")
    ident = Mat2(ONE, ZERO, ZERO, ONE)
    seen = {ident}
    queue = [ident]
    while queue:
        cur = queue.pop()
        for g in gens:
            nxt = proj_normalize(mat_mul(cur, g))
            if nxt not in seen:
                if len(seen) >= cap:
                    raise ValueError(f"matrix closure exceeded cap {cap}")
                seen.add(nxt)
                queue.append(nxt)
    elements = tuple(sorted(seen, key=Mat2.sort_key))
    return MatGroup(elements, len(elements), gens)


def pgl_closure() -> MatGroup:
    """The full projective group generated by the three matrices; order 720."""
    return mat_closure([M_LAM, M_RHO, M_TAU])


def psl_members(group: MatGroup) -> tuple[Mat2, ...]:
    """Classes whose determinant is a square: the index-2 simple subgroup."""
    squares = _squares()
    return tuple(m for m in group.elements if mat_det(m) in squares)


def _regular_perm(group: MatGroup, index: dict, m: Mat2) -> Perm:
    return Perm([index[proj_normalize(mat_mul(x, m))] for x in group.elements])


def pgl_triple() -> AdmissibleTriple:
    """The three generators as permutations of the 720 group elements via
    the right regular action (faithful), ready for the map engine."""
    group = pgl_closure()
    index = {m: i for i, m in enumerate(group.elements)}
    return AdmissibleTriple(
        _regular_perm(group, index, M_LAM),
        _regular_perm(group, index, M_RHO),
        _regular_perm(group, index, M_TAU),
    )


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failed(self) -> tuple[str, ...]:
        return tuple(name for name, passed, _ in self.checks if not passed)


def verify_construction(classify_records=None) -> VerificationReport:
    """Check every published property of the construction in one sweep.

    ``classify_records`` may carry a precomputed census of H(2,6) to avoid
    re-running the classifier.
    """
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, passed: bool, detail: str = "") -> None:
        checks.append((name, bool(passed), detail))

    group = pgl_closure()
    check("group_order_720", group.order == 720, f"order={group.order}")
    dihedral = mat_closure([M_RHO, M_TAU])
    check("rho_tau_dihedral_20", dihedral.order == 20, f"order={dihedral.order}")
    check("det_lam_is_one", mat_det(M_LAM) == ONE, repr(mat_det(M_LAM)))
    check(
        "lam_in_index2_subgroup",
        proj_normalize(M_LAM) in set(psl_members(group)),
        "",
    )

    t = pgl_triple()
    orders = (
        element_order(t.lam * t.rho),
        element_order(t.rho * t.tau),
        element_order(t.lam * t.rho * t.tau),
    )
    check("generator_word_orders_10_10_8", orders == (10, 10, 8), f"orders={orders}")

    report = validate_admissible(t, cap=1000)
    check("triple_validates", report.ok and report.group_order == 720,
          f"order={report.group_order}")

    inv = invariants(t, cap=1000)
    check("type_10_10_8", inv.type_triple == (10, 10, 8), inv.type_string)
    check("chi_minus_108", inv.chi == -108, f"chi={inv.chi}")
    check("genus_110", inv.genus == 110, f"genus={inv.genus}")
    check("nonorientable", not inv.orientable, "")
    check("faces_36", inv.faces == 36, f"F={inv.faces}")

    dual = petrie_dual(t)
    dinv = invariants(dual, cap=1000)
    check("dual_type_8_10_10", dinv.type_triple == (8, 10, 10), dinv.type_string)
    check("dual_chi_minus_99", dinv.chi == -99, f"chi={dinv.chi}")
    check("dual_genus_101", dinv.genus == 101, f"genus={dinv.genus}")
    check("dual_nonorientable", not dinv.orientable, "")
    check("dual_faces_45", dinv.faces == 45, f"F={dinv.faces}")

    try:
        graph = coset_graph(t, cap=1000)
        check("coset_graph_simple", True, "")
        check("coset_graph_36_vertices", graph.n == 36, f"n={graph.n}")
        check(
            "coset_graph_10_regular",
            all(graph.degree(v) == 10 for v in range(graph.n)),
            "",
        )
        target = hamming(2, 6)
        witness = is_isomorphic(graph, target)
        verified = witness is not None and all(
            (witness[b] in target.adj[witness[a]]) for a, b in graph.edges()
        )
        check("coset_graph_isomorphic_h26", verified, "")
    except Exception as exc:  # structured failure instead of a crash
        check("coset_graph_simple", False, str(exc))

    if classify_records is None:
        from .wreath import classify

        classify_records = classify(2, 6)
    census_types = sorted(r.invariants.type_triple for r in classify_records)
    check(
        "census_has_both_types",
        census_types == [(8, 10, 10), (10, 10, 8)],
        f"census={census_types}",
    )
    by_type = {r.invariants.type_triple: r.invariants for r in classify_records}
    check(
        "map_matches_census_record",
        by_type.get(inv.type_triple) == inv,
        "",
    )
    check(
        "dual_matches_census_record",
        by_type.get(dinv.type_triple) == dinv,
        "",
    )
    return VerificationReport(tuple(checks))
