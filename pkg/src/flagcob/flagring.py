"""The truncated cobordism ring of ``X_Q`` and its characteristic numbers.

As a module over the coefficients, the ring of ``X_Q`` is free on the
square-free monomials ``x^R``, ``R`` a subset of ``Q``; products are
reduced with ``x_i^2 = x_i x_{i+1}``, where ``x_i = 0`` for ``i`` outside
``Q``.  Pushforward to a point sends ``x^R`` to the product over the
intervals ``I(j)`` of ``g_{|I(j)| - |I(j) & R|}``; this table is taken as
the model's axiom.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from flagcob import kernels
from flagcob.combinatorics import ExponentSeq, SubsetQ
from flagcob.seriesalg import GPoly
from flagcob.symmfun import expand_monomial_sym


class ContextMismatch(ValueError):
    pass


class NotCovered(ValueError):
    """Like-kind intersection whose subsets do not cover ``[n]``."""


class FlagContext:
    """Ambient ``[n]`` and the subset ``Q`` whose subvariety ``X_Q`` we work on."""

    __slots__ = ("Q",)

    def __init__(self, Q: SubsetQ | int):
        if isinstance(Q, int):
            Q = SubsetQ.full(Q)
        self.Q = Q

    @property
    def n(self) -> int:
        return self.Q.n

    @property
    def qmask(self) -> int:
        return self.Q.mask

    def __eq__(self, other):
        return isinstance(other, FlagContext) and self.Q == other.Q

    def __hash__(self):
        return hash(self.Q)

    def __repr__(self):
        return f"FlagContext(n={self.n}, Q={list(self.Q.elements)})"


def _as_context(ctx) -> FlagContext:
    return ctx if isinstance(ctx, FlagContext) else FlagContext(ctx)


def _mask_of(R) -> int:
    if isinstance(R, SubsetQ):
        return R.mask
    m = 0
    for i in R:
        m |= 1 << (i - 1)
    return m


def _elements(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class FlagElem:
    """Element of the ring of ``X_Q``: ``{R (bitmask): coefficient}``."""

    __slots__ = ("context", "_terms")

    def __init__(self, context, terms=None):
        self.context = _as_context(context)
        raw = {}
        for R, c in (terms or {}).items():
            mask = R if isinstance(R, int) else _mask_of(R)
            if mask & ~self.context.qmask:
                raise ValueError(f"{_elements(mask)} is not a subset of Q")
            c = GPoly._coerce(c)
            if c:
                raw[mask] = dict(c.terms)
        self._terms = raw

    @classmethod
    def _raw(cls, context, terms):
        e = cls.__new__(cls)
        e.context = context
        e._terms = terms
        return e

    # constructors ----------------------------------------------------
    @classmethod
    def zero(cls, ctx) -> "FlagElem":
        return cls._raw(_as_context(ctx), {})

    @classmethod
    def scalar(cls, ctx, c) -> "FlagElem":
        c = GPoly._coerce(c)
        return cls._raw(_as_context(ctx), {0: dict(c.terms)} if c else {})

    @classmethod
    def one(cls, ctx) -> "FlagElem":
        return cls.scalar(ctx, 1)

    @classmethod
    def x_set(cls, ctx, R) -> "FlagElem":
        """Square-free monomial ``x^R`` (zero unless ``R`` lies in ``Q``)."""
        ctx = _as_context(ctx)
        mask = _mask_of(R)
        if mask & ~ctx.qmask:
            return cls.zero(ctx)
        return cls._raw(ctx, {mask: {(): 1}})

    @classmethod
    def x(cls, ctx, i: int) -> "FlagElem":
        """The left orientation class ``x_i``."""
        return cls.x_set(ctx, [i])

    @classmethod
    def monomial(cls, ctx, exps, coeff=1) -> "FlagElem":
        """``coeff * prod x_i^exps[i]``; ``exps`` maps position to exponent
        or is a sequence indexed from position 1."""
        ctx = _as_context(ctx)
        if isinstance(exps, dict):
            top = max(exps, default=0)
            vec = [0] * top
            for i, e in exps.items():
                vec[i - 1] += e
        else:
            vec = list(exps)
        mask = kernels.flag_reduce(vec, ctx.qmask)
        coeff = GPoly._coerce(coeff)
        if mask < 0 or not coeff:
            return cls.zero(ctx)
        return cls._raw(ctx, {mask: dict(coeff.terms)})

    # arithmetic ------------------------------------------------------
    def _check(self, other: "FlagElem"):
        if self.context != other.context:
            raise ContextMismatch(f"{self.context!r} vs {other.context!r}")

    def __add__(self, other):
        if not isinstance(other, FlagElem):
            other = FlagElem.scalar(self.context, other)
        self._check(other)
        out = {r: dict(c) for r, c in self._terms.items()}
        for r, c in other._terms.items():
            acc = out.setdefault(r, {})
            for k, v in c.items():
                s = acc.get(k, 0) + v
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return FlagElem._raw(self.context, {r: c for r, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return FlagElem._raw(self.context, {r: {k: -v for k, v in c.items()}
                                            for r, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, GPoly)):
            other = FlagElem.scalar(self.context, other)
        if not isinstance(other, FlagElem):
            return NotImplemented
        self._check(other)
        return FlagElem._raw(self.context,
                             kernels.flag_mul(self._terms, other._terms, self.context.qmask))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = FlagElem.one(self.context)
        for _ in range(e):
            out = out * self
            if not out:
                break
        return out

    def __eq__(self, other):
        if not isinstance(other, FlagElem):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self):
        return hash((self.context, frozenset((r, frozenset(c.items()))
                                             for r, c in self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # inspection ------------------------------------------------------
    def coeff(self, R) -> GPoly:
        return GPoly._raw(dict(self._terms.get(_mask_of(R), {})))

    def terms(self):
        """``[(R as sorted tuple, GPoly)]`` in canonical order."""
        items = [(tuple(_elements(r)), GPoly._raw(dict(c))) for r, c in self._terms.items()]
        return sorted(items, key=lambda t: (len(t[0]), t[0]))

    def __repr__(self):
        body = " + ".join(f"({c.format('g')})·x^{{{','.join(map(str, R))}}}"
                          for R, c in self.terms()) or "0"
        return f"FlagElem[{body}]"

    def to_json(self) -> dict:
        return {"context": {"n": str(self.context.n), "Q": self.context.Q.to_text()},
                "terms": [{"R": ",".join(map(str, R)), "coeff": c.to_json()}
                          for R, c in self.terms()]}

    @classmethod
    def from_json(cls, data) -> "FlagElem":
        n = int(data["context"]["n"])
        ctx = FlagContext(SubsetQ.parse(data["context"]["Q"], n))
        return cls(ctx, {SubsetQ.parse(t["R"], n).elements: GPoly.from_json(t["coeff"])
                         for t in data["terms"]})


def mul(e1: FlagElem, e2: FlagElem) -> FlagElem:
    return e1 * e2


def basis(ctx) -> list[FlagElem]:
    """The square-free monomials ``x^R``, ``R`` a subset of ``Q``."""
    ctx = _as_context(ctx)
    els = ctx.Q.elements
    out = []
    for bits in range(1 << len(els)):
        R = [e for t, e in enumerate(els) if (bits >> t) & 1]
        out.append(FlagElem.x_set(ctx, R))
    return out


# ---------------------------------------------------------------- rewriting

def rewrite_normal_form(exps, ctx, choose=None):
    """Reduce ``prod x_i^exps[i-1]`` one rewrite step at a time.

    ``choose(candidates)`` picks which redex to rewrite next (default:
    leftmost).  A redex is a position with exponent >= 2, or a position
    outside ``Q`` with a positive exponent (which kills the monomial).
    Returns the square-free support as a sorted tuple, or ``None`` for 0.
    """
    ctx = _as_context(ctx)
    e = list(exps)
    while True:
        cands = [i for i, v in enumerate(e, 1) if v >= 2 or (v and i not in ctx.Q)]
        if not cands:
            return tuple(i for i, v in enumerate(e, 1) if v)
        i = cands[0] if choose is None else choose(cands)
        if i not in ctx.Q:
            return None
        e[i - 1] -= 1
        if i == len(e):
            e.append(0)
        e[i] += 1


# ---------------------------------------------------------------- classes

def right_class(ctx, i: int) -> FlagElem:
    """``x_{i,r} = sum_m g_m x_i^(m+1)``, truncated where the powers vanish."""
    ctx = _as_context(ctx)
    if i not in ctx.Q:
        raise ValueError(f"{i} is not in {ctx.Q!r}")
    xi = FlagElem.x(ctx, i)
    out = FlagElem.zero(ctx)
    power = xi
    m = 0
    while power:
        out = out + power * GPoly.gen(m)
        power = power * xi
        m += 1
    return out


@lru_cache(maxsize=None)
def right_power(ctx: FlagContext, i: int, k: int) -> FlagElem:
    if k == 0:
        return FlagElem.one(ctx)
    return right_power(ctx, i, k - 1) * right_class(ctx, i)


def y_to_x(i: int, ctx) -> FlagElem:
    """``y_i = -x_i + x_{i+1}`` in the ring of ``B_n`` (``x_{n+1} = 0``)."""
    ctx = _as_context(ctx)
    if ctx.Q != SubsetQ.full(ctx.n):
        raise ValueError("y-classes are defined on B_n itself (Q = [n])")
    if not 1 <= i <= ctx.n:
        raise ValueError(f"index {i} outside [{ctx.n}]")
    out = -FlagElem.x(ctx, i)
    if i < ctx.n:
        out = out + FlagElem.x(ctx, i + 1)
    return out


# ---------------------------------------------------------------- duality

def _pushforward_mask(Q: SubsetQ, mask: int) -> tuple:
    key: dict[int, int] = {}
    for a, b in Q.intervals:
        d = (b - a + 1) - sum((mask >> (i - 1)) & 1 for i in range(a, b + 1))
        if d:
            key[d] = key.get(d, 0) + 1
    return tuple(ExponentSeq(key))


def pushforward(e: FlagElem) -> GPoly:
    """Evaluation on the fundamental class of ``X_Q``."""
    Q = e.context.Q
    out: dict[tuple, int] = {}
    for mask, c in e._terms.items():
        g = _pushforward_mask(Q, mask)
        for k, v in kernels.poly_mul(c, {g: 1}).items():
            out[k] = out.get(k, 0) + v
    return GPoly._raw({k: v for k, v in out.items() if v})


def augment(p: GPoly) -> int:
    """``g_k -> 0`` for ``k > 0``."""
    return p.constant_term()


def kronecker_U(e: FlagElem) -> int:
    """Pushforward followed by the augmentation to ordinary U-theory."""
    return augment(pushforward(e))


def restrict(e: FlagElem, R: SubsetQ) -> FlagElem:
    """Restrict along ``X_R -> X_Q`` for ``R`` inside ``Q``."""
    if R.n != e.context.n or R.mask & ~e.context.qmask:
        raise ValueError(f"{R!r} is not inside {e.context!r}")
    ctx = FlagContext(R)
    return FlagElem._raw(ctx, {m: dict(c) for m, c in e._terms.items()
                               if not m & ~R.mask})


def pairing_U(Q: SubsetQ, R: SubsetQ) -> int:
    """``<x^Q, x_R>``: restrict ``x^Q`` to ``X_R`` and evaluate."""
    ctx = FlagContext(SubsetQ.full(Q.n))
    return kronecker_U(restrict(FlagElem.x_set(ctx, Q.elements), R))


# ---------------------------------------------------------------- characteristic numbers

def left_chern_sum(ctx, psi) -> FlagElem:
    """``m_psi`` over the left roots ``x_i``, ``i`` in ``Q``."""
    ctx = _as_context(ctx)
    roots = ctx.Q.elements
    out = FlagElem.zero(ctx)
    for h in expand_monomial_sym(psi, roots):
        exps = {pos: v for pos, v in zip(roots, h) if v}
        out = out + FlagElem.monomial(ctx, exps)
    return out


def right_chern_sum(ctx, omega) -> FlagElem:
    """``m_omega`` over the right roots ``x_{a(j),r}``."""
    ctx = _as_context(ctx)
    roots = ctx.Q.starts()
    out = FlagElem.zero(ctx)
    for k in expand_monomial_sym(omega, roots):
        term = FlagElem.one(ctx)
        for a, v in zip(roots, k):
            if v:
                term = term * right_power(ctx, a, v)
        out = out + term
    return out


@lru_cache(maxsize=None)
def char_number(Q: SubsetQ, psi, omega) -> GPoly:
    """``<cbar_psi(nu_l) c_omega(nu_r), [X_Q]>`` with the basic structure.

    Left classes use the roots ``x_i`` (i in Q); right classes use the
    right orientation classes at the interval starts.
    """
    ctx = FlagContext(Q)
    psi, omega = ExponentSeq(psi), ExponentSeq(omega)
    left = left_chern_sum(ctx, psi)
    if not left:
        return GPoly.zero()
    right = right_chern_sum(ctx, omega)
    return pushforward(left * right)


def singular_left_oracle(n: int, h: int) -> list[GPoly]:
    """``<x_{h,l}^m, [B_n]>`` for ``0 <= m <= n+1-h``."""
    ctx = FlagContext(n)
    xh = FlagElem.x(ctx, h)
    return [pushforward(xh ** m) for m in range(n + 2 - h)]


def singular_right_oracle(n: int, h: int) -> list[GPoly]:
    """``<x_{h,r}^m, [B_n]>`` for ``0 <= m <= n+1-h``."""
    ctx = FlagContext(n)
    return [pushforward(right_power(ctx, h, m)) for m in range(n + 2 - h)]


# ---------------------------------------------------------------- intersections

class Intersection(NamedTuple):
    kind: str  # "X" or "Y"
    subset: SubsetQ
    context: SubsetQ  # ambient in which ``subset`` names the subvariety


def intersect(kind_a: str, A: SubsetQ, kind_b: str, B: SubsetQ, n: int) -> Intersection | None:
    """Transverse intersections of the subvarieties ``X_A`` / ``Y_A`` of ``B_n``.

    Like kinds need ``A | B = [n]`` (else :class:`NotCovered`); a mixed pair
    gives ``X_{A & B}`` inside ``B(Z_{B^})`` when they cover, else ``None``.
    """
    for kind in (kind_a, kind_b):
        if kind not in ("X", "Y"):
            raise ValueError(f"kind must be 'X' or 'Y', not {kind!r}")
    A = SubsetQ(A.elements, n)
    B = SubsetQ(B.elements, n)
    covers = len(A | B) == n
    full = SubsetQ.full(n)
    if kind_a == kind_b:
        if not covers:
            raise NotCovered(f"{list(A.elements)} and {list(B.elements)} do not cover [{n}]")
        return Intersection(kind_a, A & B, full)
    if kind_a == "Y":
        A, B = B, A
    if not covers:
        return None
    return Intersection("X", A & B, B)
