"""Dense permutation algebra and brute-force group closure.

Everything works on explicit image arrays, and groups are realized as the
full set of their elements.  The map groups this package deals in have
order a few thousand at most, so plain breadth-first closure with a hash
set beats any clever machinery: membership, subgroup index and element
orders stay exact, cheap and deterministic.

Composition convention: ``p * q`` applies ``p`` first and ``q`` second,
so exponent notation composes the usual way, x^(pq) = (x^p)^q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "CapExceeded",
    "GroupClosure",
    "Perm",
    "closure",
    "compose",
    "contains",
    "element_order",
    "evaluate_word",
    "identity",
    "inverse",
    "is_involution",
    "perm_from_text",
    "perm_to_text",
    "power",
    "subgroup_index",
]

MAX_DEGREE = 1 << 16


class CapExceeded(Exception):
    """A closure grew past its element cap.

    This is normal control flow, not a failure: the census search uses a
    cap equal to the target group order and discards any candidate whose
    closure would overflow it.
    """

    def __init__(self, cap: int):
        super().__init__(f"group closure exceeded cap {cap}")
        self.cap = cap


class Perm:
    """A permutation of {0, ..., degree-1} stored as a dense image array."""

    __slots__ = ("images", "key")

    def __init__(self, images):
        arr = np.array(images, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("images must be a nonempty flat sequence")
        n = int(arr.size)
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the supported bound {MAX_DEGREE}")
        if arr.min() < 0 or arr.max() >= n or np.bincount(arr, minlength=n).max() != 1:
            raise ValueError("images is not a permutation of 0..degree-1")
        arr.setflags(write=False)
        self.images = arr
        self.key = arr.tobytes()

    @property
    def degree(self) -> int:
        return int(self.images.size)

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, k: int) -> "Perm":
        return power(self, k)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Perm") -> bool:
        # lexicographic on image sequences; the canonical element order
        if self.degree != other.degree:
            return self.degree < other.degree
        return self.images.tolist() < other.images.tolist()

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its least point."""
        imgs = self.images
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            nxt = int(imgs[start])
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = int(imgs[nxt])
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Perm(id, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Perm({body}, degree={self.degree})"


def identity(degree: int) -> Perm:
    return Perm(np.arange(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """Product p*q under the apply-p-first convention: images[i] = q[p[i]]."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Perm(q.images[p.images])


def inverse(p: Perm) -> Perm:
    inv = np.empty(p.degree, dtype=np.int64)
    inv[p.images] = np.arange(p.degree)
    return Perm(inv)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        return power(inverse(p), -k)
    acc = np.arange(p.degree)
    base = p.images
    while k:
        if k & 1:
            acc = base[acc]
        base = base[base]
        k >>= 1
    return Perm(acc)


def element_order(p: Perm) -> int:
    """Least k >= 1 with p^k = id; the lcm of the cycle lengths."""
    imgs = p.images
    seen = np.zeros(p.degree, dtype=bool)
    order = 1
    for start in range(p.degree):
        if seen[start]:
            continue
        length = 1
        seen[start] = True
        nxt = int(imgs[start])
        while nxt != start:
            seen[nxt] = True
            length += 1
            nxt = int(imgs[nxt])
        order = math.lcm(order, length)
    return order


def is_involution(p: Perm) -> bool:
    """True iff p != id and p^2 = id."""
    imgs = p.images
    idx = np.arange(p.degree)
    return bool(np.array_equal(imgs[imgs], idx) and not np.array_equal(imgs, idx))


@dataclass(frozen=True, eq=False)
class GroupClosure:
    """The full element set of a finitely generated permutation group.

    ``elements`` is sorted lexicographically by image sequence, so the
    ordering (and anything serialized from it) is reproducible; the
    identity always sits at index 0.
    """

    elements: tuple[Perm, ...]
    order: int
    generators: tuple[Perm, ...]
    _keys: frozenset = field(repr=False)

    @property
    def degree(self) -> int:
        return self.elements[0].degree

    def __contains__(self, p: Perm) -> bool:
        return isinstance(p, Perm) and p.key in self._keys

    def __iter__(self):
        return iter(self.elements)


def _closure_raw(gen_arrays: Sequence[np.ndarray], degree: int, cap: int):
    """Breadth-first closure over right multiplication by the generators.

    Returns (matrix, keyset) with one element per matrix row, in discovery
    order.  Raises CapExceeded as soon as the element count would pass
    ``cap``.
    """
    ident = np.arange(degree, dtype=np.int64)
    seen = {ident.tobytes()}
    rows = [ident]
    frontier = np.expand_dims(ident, 0)
    while frontier.shape[0]:
        fresh = []
        for g in gen_arrays:
            block = g[frontier]
            for row in block:
                key = row.tobytes()
                if key in seen:
                    continue
                if len(seen) >= cap:
                    raise CapExceeded(cap)
                seen.add(key)
                row = row.copy()
                rows.append(row)
                fresh.append(row)
        frontier = np.stack(fresh) if fresh else np.empty((0, degree), dtype=np.int64)
    return np.stack(rows), seen


def _lex_sorted(matrix: np.ndarray) -> np.ndarray:
    # np.lexsort's last key is primary, so feed the columns reversed
    return matrix[np.lexsort(matrix[:, ::-1].T)]


def closure(generators: Iterable[Perm], cap: int) -> GroupClosure:
    """Group generated by ``generators``, failing fast past ``cap`` elements."""
    gens = tuple(generators)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share a degree")
    matrix, seen = _closure_raw([g.images for g in gens], degree, cap)
    elements = tuple(Perm(row) for row in _lex_sorted(matrix))
    return GroupClosure(elements, len(elements), gens, frozenset(seen))


def contains(group: GroupClosure, p: Perm) -> bool:
    if p.degree != group.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {group.degree}")
    return p in group


def subgroup_index(group: GroupClosure, h_generators: Iterable[Perm]) -> int:
    """Index |G| / |<h_generators>|; the generators must lie in G."""
    h_gens = tuple(h_generators)
    for g in h_gens:
        if not contains(group, g):
            raise ValueError(f"subgroup generator {g!r} is not a member of the group")
    sub = closure(h_gens, cap=group.order)
    quot, rem = divmod(group.order, sub.order)
    if rem:
        raise AssertionError("Lagrange violated; closure is inconsistent")
    return quot


def evaluate_word(l: Perm, r: Perm, exponents: Sequence[int]) -> Perm:
    """The product l * r^m1 * l * r^m2 * ... * l * r^mk."""
    if l.degree != r.degree:
        raise ValueError(f"degree mismatch: {l.degree} != {r.degree}")
    acc = identity(l.degree)
    pow_cache: dict[int, Perm] = {}
    for m in exponents:
        if m not in pow_cache:
            pow_cache[m] = power(r, m)
        acc = acc * l * pow_cache[m]
    return acc


def perm_to_text(p: Perm) -> str:
    """Space-separated 0-based image list, e.g. ``1 0 2 3`` for (0 1)."""
    return " ".join(str(int(i)) for i in p.images)


def perm_from_text(text: str) -> Perm:
    return Perm([int(tok) for tok in text.split()])
