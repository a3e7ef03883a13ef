"""Monomial symmetric functions and the complement transform.

The complement alphabet ``y`` of an alphabet ``x`` is defined by
``E_x(t) E_y(t) = 1`` (equivalently ``p_k(y) = -p_k(x)``).  Expanding
``m_psi(y)`` in the monomial basis of ``x`` gives the integers
``lambda[psi, omega]`` relating tangential operations to the standard
basis.  Everything is done with integer arithmetic: ``m -> e`` by
leading-term elimination, ``e(y)`` by inverting ``E_x``, and back to ``m``
by explicit multiplication in a finite set of variables.
"""

from __future__ import annotations

from functools import lru_cache

from flagcob import kernels
from flagcob.combinatorics import ExponentSeq, _arrangements, sequences_of_grading, sort_key
from flagcob.seriesalg import GPoly


class SymExpr:
    """Symmetric polynomial in the monomial basis: ``{ExponentSeq: int}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[ExponentSeq, int] = {}
        for k, v in dict(terms or {}).items():
            k = ExponentSeq(k)
            clean[k] = clean.get(k, 0) + v
        self.terms = {k: v for k, v in clean.items() if v}

    def coeff(self, omega) -> int:
        return self.terms.get(ExponentSeq(omega), 0)

    def __add__(self, other: "SymExpr") -> "SymExpr":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymExpr(out)

    def __mul__(self, c: int) -> "SymExpr":
        return SymExpr({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def __repr__(self):
        body = " + ".join(f"{v}*m{tuple(k)}" for k, v in self.items()) or "0"
        return f"SymExpr({body})"


def expand_monomial_sym(omega, roots) -> dict[tuple[int, ...], int]:
    """All distinct monomials of ``m_omega`` in the given roots.

    Returns ``{exponent vector aligned with roots: 1}``; empty when
    ``omega`` has more parts than there are roots.
    """
    omega = ExponentSeq(omega)
    r = len(roots)
    if omega.num_parts > r:
        return {}
    return {h: 1 for h in _arrangements(tuple(range(1, r + 1)), omega.parts(), r)}


# ---------------------------------------------------------------- internals

def _partition(omega) -> tuple[int, ...]:
    return tuple(ExponentSeq(omega).parts())


def _conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


@lru_cache(maxsize=None)
def _elementary(k: int, nvars: int) -> dict:
    """``e_k`` as an explicit polynomial in ``nvars`` variables."""
    if k > nvars:
        return {}
    vecs = _arrangements(tuple(range(1, nvars + 1)), [1] * k, nvars)
    return {v: 1 for v in vecs}


@lru_cache(maxsize=None)
def _e_product_in_m(mu: tuple[int, ...], nvars: int) -> dict:
    """``prod e_{mu_i}`` in the m-basis, as ``{partition tuple: int}``."""
    poly = {(0,) * nvars: 1}
    for part in mu:
        poly = kernels.poly_mul(poly, _elementary(part, nvars))
    out = {}
    for vec, c in poly.items():
        if all(vec[i] >= vec[i + 1] for i in range(nvars - 1)):
            lam = tuple(v for v in vec if v)
            out[lam] = c
    return out


@lru_cache(maxsize=None)
def _m_in_e(lam: tuple[int, ...], nvars: int) -> dict:
    """``m_lam`` in the e-basis: ``{mu (partition of e-indices): int}``."""
    target = {lam: 1}
    result: dict[tuple, int] = {}
    while target:
        lead = max(target)  # lex-largest partition is the leading monomial
        c = target[lead]
        mu = _conjugate(lead)
        result[mu] = result.get(mu, 0) + c
        for nu, v in _e_product_in_m(mu, nvars).items():
            s = target.get(nu, 0) - c * v
            if s:
                target[nu] = s
            else:
                target.pop(nu, None)
    return result


@lru_cache(maxsize=None)
def _complement_elementary(top: int) -> tuple:
    """``e_k(y)`` for ``k <= top`` as polynomials in ``e_1(x), e_2(x), ...``.

    ``GPoly`` doubles as the polynomial ring in the e's here.
    """
    ey = [GPoly.one()]
    for k in range(1, top + 1):
        acc = GPoly.zero()
        for i in range(1, k + 1):
            acc = acc + GPoly.gen(i) * ey[k - i]
        ey.append(-acc)
    return tuple(ey)


# ---------------------------------------------------------------- public

@lru_cache(maxsize=None)
def complement_transform(psi) -> SymExpr:
    """``m_psi(y)`` in the m-basis of ``x``; coefficients are lambda[psi, .]."""
    psi = ExponentSeq(psi)
    nvars = psi.weight
    if nvars == 0:
        return SymExpr({(): 1})
    ey = _complement_elementary(nvars)
    in_e = GPoly.zero()
    for mu, c in _m_in_e(_partition(psi), nvars).items():
        term = GPoly.const(c)
        for part in mu:
            term = term * ey[part]
        in_e = in_e + term
    out: dict[ExponentSeq, int] = {}
    for key, c in in_e.terms.items():
        mu = tuple(ExponentSeq(key).parts())
        for lam, v in _e_product_in_m(mu, nvars).items():
            w = ExponentSeq.from_parts(lam)
            out[w] = out.get(w, 0) + c * v
    return SymExpr(out)


def lambda_row(psi) -> dict[ExponentSeq, int]:
    return dict(complement_transform(ExponentSeq(psi)).terms)


@lru_cache(maxsize=None)
def lambda_matrix(grading: int):
    """``(basis, rows)`` with ``rows[i][j] = lambda[basis[i], basis[j]]``.

    The basis is every sequence of the given grading, canonically ordered.
    """
    basis = sequences_of_grading(grading)
    rows = []
    for psi in basis:
        t = complement_transform(psi)
        rows.append(tuple(t.coeff(w) for w in basis))
    return basis, tuple(rows)
