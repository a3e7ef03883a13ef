"""Exponent sequences, subsets of [n] with their interval decomposition,
and the twist sequences that drive the geometric action formulas.

Conventions used throughout the package:

* an :class:`ExponentSeq` ``w`` is a tuple whose entry ``w[i-1]`` is the
  multiplicity of ``i``; trailing zeros are stripped, so equal sequences
  are equal tuples;
* a :class:`SubsetQ` carries its ambient ``n`` and the maximal intervals
  ``[a(j), b(j)]``, ``j = 1..s``;
* a twist sequence ``h`` is a plain tuple of length ``n`` with ``h[i-1]``
  the entry at position ``i``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


class Inadmissible(ValueError):
    """Twist sequence overflows one of the intervals of ``Q``."""


class ExponentSeq(tuple):
    """Eventually-zero sequence of nonnegative integers.

    Accepts an iterable of multiplicities (``(2, 0, 1)`` means
    ``w_1 = 2, w_3 = 1``) or a sparse mapping ``{index: multiplicity}``.
    ``+`` is componentwise, unlike plain tuples.
    """

    __slots__ = ()

    def __new__(cls, entries=()):
        if type(entries) is cls:
            return entries
        if isinstance(entries, dict):
            top = max((i for i, m in entries.items() if m), default=0)
            vals = [0] * top
            for i, m in entries.items():
                if i < 1:
                    raise ValueError(f"index must be positive, got {i}")
                if m:
                    vals[i - 1] = m
        else:
            vals = list(entries)
        for m in vals:
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"multiplicities must be nonnegative integers, got {m!r}")
        while vals and vals[-1] == 0:
            vals.pop()
        return super().__new__(cls, vals)

    @classmethod
    def eps(cls, m: int) -> "ExponentSeq":
        """The sequence with a single 1 in position ``m``."""
        if m < 1:
            raise ValueError("eps(m) needs m >= 1")
        return cls([0] * (m - 1) + [1])

    @classmethod
    def parse(cls, text: str) -> "ExponentSeq":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed sequence literal {text!r}") from exc

    def to_text(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    @property
    def weight(self) -> int:
        """Sum of i * w_i, i.e. half the grading."""
        return sum(i * m for i, m in enumerate(self, 1))

    @property
    def grading(self) -> int:
        return 2 * self.weight

    @property
    def num_parts(self) -> int:
        return sum(self)

    def mult(self, i: int) -> int:
        return self[i - 1] if 0 < i <= len(self) else 0

    def items(self):
        return [(i, m) for i, m in enumerate(self, 1) if m]

    def parts(self) -> list[int]:
        """Multiset of indices, largest first (the partition reading)."""
        out = []
        for i in range(len(self), 0, -1):
            out.extend([i] * self[i - 1])
        return out

    @classmethod
    def from_parts(cls, parts) -> "ExponentSeq":
        counts: dict[int, int] = {}
        for p in parts:
            if p:
                counts[p] = counts.get(p, 0) + 1
        return cls(counts)

    def __add__(self, other):
        return ExponentSeq(seq_add(self, tuple(other)))

    __radd__ = __add__

    def __repr__(self):
        return f"ExponentSeq({tuple(self)!r})"


def seq_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + tuple(a[len(b):])


def grading(omega) -> int:
    return 2 * sum(i * m for i, m in enumerate(omega, 1))


def eps(m: int) -> ExponentSeq:
    return ExponentSeq.eps(m)


def sort_key(seq):
    """Canonical order: grading first, then lexicographic with the lowest
    index most significant and larger multiplicities first.

    Within one grading no canonical tuple is a prefix of another, so the
    negated tuple compares correctly.
    """
    return (grading(seq), tuple(-x for x in seq))


@lru_cache(maxsize=None)
def sequences_of_weight(w: int) -> tuple[ExponentSeq, ...]:
    """All sequences with sum i*w_i = w (partitions of w), canonically sorted."""
    out = []

    def rec(remaining, largest, parts):
        if remaining == 0:
            out.append(ExponentSeq.from_parts(parts))
            return
        for p in range(min(remaining, largest), 0, -1):
            parts.append(p)
            rec(remaining - p, p, parts)
            parts.pop()

    rec(w, w, [])
    return tuple(sorted(out, key=sort_key))


def sequences_of_grading(d: int) -> tuple[ExponentSeq, ...]:
    if d < 0 or d % 2:
        return ()
    return sequences_of_weight(d // 2)


def sequences_up_to_grading(d: int) -> list[ExponentSeq]:
    return [w for g in range(0, d + 1, 2) for w in sequences_of_grading(g)]


class SubsetQ:
    """Finite subset of ``[n]`` with its maximal-interval decomposition."""

    __slots__ = ("n", "elements", "intervals", "mask", "_hash")

    def __init__(self, elements=(), n: int | None = None):
        els = tuple(sorted(set(elements)))
        if n is None:
            n = els[-1] if els else 0
        if els and (els[0] < 1 or els[-1] > n):
            raise ValueError(f"subset {list(els)} does not lie in [{n}]")
        ivs = []
        for e in els:
            if ivs and ivs[-1][1] == e - 1:
                ivs[-1][1] = e
            else:
                ivs.append([e, e])
        self.n = n
        self.elements = els
        self.intervals = tuple((a, b) for a, b in ivs)
        mask = 0
        for e in els:
            mask |= 1 << (e - 1)
        self.mask = mask
        self._hash = hash((n, els))

    @classmethod
    def full(cls, n: int) -> "SubsetQ":
        return cls(range(1, n + 1), n)

    @classmethod
    def interval(cls, a: int, b: int, n: int) -> "SubsetQ":
        return cls(range(a, b + 1), n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "SubsetQ":
        return cls((i + 1 for i in range(n) if (mask >> i) & 1), n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SubsetQ":
        text = text.strip()
        if not text:
            return cls((), n)
        try:
            els = [int(t) for t in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed subset literal {text!r}") from exc
        return cls(els, n)

    def to_text(self) -> str:
        return ",".join(map(str, self.elements))

    @property
    def s(self) -> int:
        return len(self.intervals)

    def a(self, j: int) -> int:
        """Left end of interval ``j``; ``a(s+1) = n+1``."""
        if j == self.s + 1:
            return self.n + 1
        return self.intervals[j - 1][0]

    def b(self, j: int) -> int:
        """Right end of interval ``j``; ``b(0) = 0``."""
        if j == 0:
            return 0
        return self.intervals[j - 1][1]

    def starts(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.intervals)

    def interval_lengths(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.intervals)

    def interval_of(self, i: int) -> int:
        """Index ``j`` of the interval containing ``i``."""
        for j, (a, b) in enumerate(self.intervals, 1):
            if a <= i <= b:
                return j
        raise ValueError(f"{i} is not in {self!r}")

    def complement(self) -> "SubsetQ":
        return SubsetQ((i for i in range(1, self.n + 1) if i not in self), self.n)

    def __and__(self, other: "SubsetQ") -> "SubsetQ":
        return SubsetQ(set(self.elements) & set(other.elements), max(self.n, other.n))

    def __or__(self, other: "SubsetQ") -> "SubsetQ":
        return SubsetQ(set(self.elements) | set(other.elements), max(self.n, other.n))

    def __sub__(self, other: "SubsetQ") -> "SubsetQ":
        return SubsetQ(set(self.elements) - set(other.elements), self.n)

    def __contains__(self, i) -> bool:
        return (self.mask >> (i - 1)) & 1 == 1 if i >= 1 else False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, SubsetQ):
            return NotImplemented
        return self.n == other.n and self.elements == other.elements

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SubsetQ({list(self.elements)}, n={self.n})"


def subsets(n: int):
    """All subsets of ``[n]`` in mask order."""
    for mask in range(1 << n):
        yield SubsetQ.from_mask(mask, n)


def type_of(Q: SubsetQ) -> ExponentSeq:
    """Number of maximal intervals of each cardinality."""
    counts: dict[int, int] = {}
    for ln in Q.interval_lengths():
        counts[ln] = counts.get(ln, 0) + 1
    return ExponentSeq(counts)


# ---------------------------------------------------------------- twists

def _check_support(h, Q: SubsetQ):
    if len(h) != Q.n:
        raise ValueError(f"twist sequence has length {len(h)}, expected {Q.n}")
    for i, v in enumerate(h, 1):
        if v < 0:
            raise ValueError("twist entries must be nonnegative")
        if v and i not in Q:
            raise ValueError(f"twist sequence is nonzero at {i}, outside {Q!r}")


def in_K(h, Q: SubsetQ) -> bool:
    starts = set(Q.starts())
    return all(v == 0 or i in starts for i, v in enumerate(h, 1))


def is_admissible(h, Q: SubsetQ) -> bool:
    """Every tail sum over an interval fits: sum_{i=l}^{b} h_i <= b - l + 1."""
    _check_support(h, Q)
    for a, b in Q.intervals:
        tail = 0
        for l in range(b, a - 1, -1):
            tail += h[l - 1]
            if tail > b - l + 1:
                return False
    return True


def h_set(h, n: int) -> SubsetQ:
    """``h[n] = {m : sum_{i=l}^m h_i < m - l + 1 for all l <= m}``."""
    if len(h) != n:
        raise ValueError(f"twist sequence has length {len(h)}, expected {n}")
    keep = []
    for m in range(1, n + 1):
        acc = 0
        for l in range(m, 0, -1):
            acc += h[l - 1]
            if acc >= m - l + 1:
                break
        else:
            keep.append(m)
    return SubsetQ(keep, n)


def apply_hQ(h, Q: SubsetQ) -> SubsetQ:
    """The subset ``hQ``, computed interval by interval.

    Raises :class:`Inadmissible` when ``h`` overflows an interval; such
    sequences label monomials that vanish in the ring of ``X_Q``.
    """
    if not is_admissible(h, Q):
        raise Inadmissible(f"{tuple(h)} is not admissible for {Q!r}")
    keep = []
    for a, b in Q.intervals:
        for m in range(a, b + 1):
            acc = 0
            for l in range(m, a - 1, -1):
                acc += h[l - 1]
                if acc >= m - l + 1:
                    break
            else:
                keep.append(m)
    return SubsetQ(keep, Q.n)


def support_S(h, Q: SubsetQ) -> set[int]:
    hQ = apply_hQ(h, Q)
    return {j for j, (a, b) in enumerate(Q.intervals, 1)
            if any(a <= m <= b for m in hQ)}


def twist_add(h, k):
    return tuple(x + y for x, y in zip(h, k))


def twist_key(h):
    return tuple((i, v) for i, v in enumerate(h, 1) if v)


def _arrangements(positions, parts, n):
    """Distinct placements of the multiset ``parts`` on distinct positions."""
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    values = sorted(counts)
    out = []
    h = [0] * n

    def rec(idx, left):
        if left == 0:
            out.append(tuple(h))
            return
        if len(positions) - idx < left:
            return
        pos = positions[idx]
        rec(idx + 1, left)
        for v in values:
            if counts[v]:
                counts[v] -= 1
                h[pos - 1] = v
                rec(idx + 1, left - 1)
                h[pos - 1] = 0
                counts[v] += 1

    rec(0, len(parts))
    return out


def enumerate_block(Q: SubsetQ, psi, kind: str = "H") -> list[tuple[int, ...]]:
    """Admissible members of the block H(Q, psi) or K(Q, psi).

    A member has ``psi_i`` entries equal to ``i`` and zeros elsewhere,
    supported on ``Q`` (kind ``"H"``) or on the interval starts (``"K"``).
    Inadmissible sequences are left out.  Order is lexicographic on the
    list of ``(position, value)`` pairs.
    """
    psi = ExponentSeq(psi)
    if kind == "H":
        positions = Q.elements
    elif kind == "K":
        positions = Q.starts()
    else:
        raise ValueError(f"kind must be 'H' or 'K', not {kind!r}")
    cands = _arrangements(positions, psi.parts(), Q.n)
    return sorted((h for h in cands if is_admissible(h, Q)), key=twist_key)


def enumerate_K(Q: SubsetQ) -> list[tuple[int, ...]]:
    """All admissible k in K(Q): entry k_{a(j)} ranges over 0..|I(j)|."""
    n = Q.n
    out = []
    for vals in product(*(range(b - a + 2) for a, b in Q.intervals)):
        k = [0] * n
        for (a, _), v in zip(Q.intervals, vals):
            k[a - 1] = v
        out.append(tuple(k))
    return sorted(out, key=twist_key)


def block_of(h) -> ExponentSeq:
    """The sequence psi whose block contains ``h``."""
    return ExponentSeq.from_parts(h)
