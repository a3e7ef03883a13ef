"""The Hopf algebra S_* = Z[b_1, b_2, ...] and the actions of its dual S*.

The coproduct is composition of the series ``B(t) = sum b_n t^(n+1)``:

    delta(b_n) = sum_k (b)^(k+1)_(n-k) (x) b_k

and the antipode is computed by the defining recursion
``sum chi(a1) a2 = counit(a)``, one monomial at a time.  An operation
``s_w`` of S* is represented by its index ``w``; pairing with ``b^psi`` is
coefficient extraction.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from flagcob.combinatorics import ExponentSeq
from flagcob.seriesalg import GPoly, GTensor, series_power_component
from flagcob.symmfun import lambda_row


@lru_cache(maxsize=None)
def coproduct_generator(n: int) -> GTensor:
    """``delta(b_n)``."""
    out = GTensor._raw({})
    for k in range(n + 1):
        out = out + GTensor.pure(series_power_component(k + 1, n - k), GPoly.gen(k))
    return out


@lru_cache(maxsize=None)
def coproduct_monomial(key: tuple) -> GTensor:
    key = tuple(ExponentSeq(key))
    if not key:
        return GTensor.one()
    # peel off one generator and recurse, so every sub-monomial is cached
    i = max(j for j, m in enumerate(key, 1) if m)
    rest = list(key)
    rest[i - 1] -= 1
    return coproduct_monomial(tuple(ExponentSeq(rest))) * coproduct_generator(i)


def coproduct(p: GPoly) -> GTensor:
    out: dict = {}
    for k, c in p.terms.items():
        for kk, v in coproduct_monomial(k).terms.items():
            out[kk] = out.get(kk, 0) + c * v
    return GTensor._raw({k: v for k, v in out.items() if v})


def counit(p: GPoly) -> int:
    return p.constant_term()


@lru_cache(maxsize=None)
def antipode_monomial(key: tuple) -> GPoly:
    """``chi(b^key)`` from ``sum chi(a1) a2 = counit``, solved for the
    ``a1 = b^key`` term; every other ``a1`` has lower degree."""
    key = tuple(ExponentSeq(key))
    if not key:
        return GPoly.one()
    acc = GPoly.zero()
    for (l, r), c in coproduct_monomial(key).terms.items():
        if l == key:
            continue
        acc = acc + antipode_monomial(l) * GPoly._raw({r: c})
    return -acc


def antipode(p: GPoly) -> GPoly:
    out = GPoly.zero()
    for k, c in p.terms.items():
        out = out + antipode_monomial(k) * c
    return out


def pair(omega, p: GPoly) -> int:
    """``<s_omega, p>``: the coefficient of ``b^omega``."""
    return p.coeff(omega)


def pair_antipode(omega, key: tuple) -> int:
    """``<chi(s_omega), b^key> = <s_omega, chi(b^key)>``."""
    return antipode_monomial(key).terms.get(tuple(ExponentSeq(omega)), 0)


def act_right(omega, p: GPoly) -> GPoly:
    """``s_r a = sum <s, a2> a1``."""
    w = tuple(ExponentSeq(omega))
    return coproduct(p).contract_right(lambda r: 1 if r == w else 0)


def act_left(omega, p: GPoly) -> GPoly:
    """``s_l a = sum <chi(s), a1> a2``."""
    w = tuple(ExponentSeq(omega))
    return coproduct(p).contract_left(
        lambda l: antipode_monomial(l).terms.get(w, 0))


def act_left_tangential(psi, p: GPoly) -> GPoly:
    """Left action of ``sbar_psi = sum_w lambda[psi, w] s_w``."""
    row = {tuple(w): c for w, c in lambda_row(psi).items()}

    def weight(l):
        chi = antipode_monomial(l).terms
        return sum(c * chi.get(w, 0) for w, c in row.items())

    return coproduct(p).contract_left(weight)


def splittings(omega):
    """All ordered pairs ``(psi, theta)`` with ``psi + theta = omega``."""
    omega = ExponentSeq(omega)
    for left in product(*(range(m + 1) for m in omega)):
        psi = ExponentSeq(left)
        theta = ExponentSeq(m - x for m, x in zip(omega, left))
        yield psi, theta


def act_adjoint(omega, p: GPoly) -> GPoly:
    """Diagonal action through the Cartan coproduct of S*."""
    out = GPoly.zero()
    for psi, theta in splittings(omega):
        out = out + act_left(psi, act_right(theta, p))
    return out


@lru_cache(maxsize=None)
def dual_product(omega, theta) -> dict:
    """``s_omega * s_theta`` in S*, as ``{mu: coefficient of s_mu}``.

    Read off from ``<s t, a> = sum <s, a1><t, a2>``.
    """
    from flagcob.combinatorics import sequences_of_weight

    omega, theta = ExponentSeq(omega), ExponentSeq(theta)
    key = (tuple(omega), tuple(theta))
    out = {}
    for mu in sequences_of_weight(omega.weight + theta.weight):
        c = coproduct_monomial(tuple(mu)).terms.get(key, 0)
        if c:
            out[mu] = c
    return out


def act_right_combination(combo: dict, p: GPoly) -> GPoly:
    out = GPoly.zero()
    for w, c in combo.items():
        out = out + act_right(w, p) * c
    return out


def act_left_combination(combo: dict, p: GPoly) -> GPoly:
    out = GPoly.zero()
    for w, c in combo.items():
        out = out + act_left(w, p) * c
    return out


def coproduct_from_right_action(p: GPoly, max_weight: int) -> GTensor:
    """Rebuild ``delta(p) = sum_w s_{w,r}(p) (x) b^w`` from the action."""
    from flagcob.combinatorics import sequences_of_weight

    out = GTensor._raw({})
    for wt in range(max_weight + 1):
        for w in sequences_of_weight(wt):
            out = out + GTensor.pure(act_right(w, p), GPoly.monomial(w))
    return out
