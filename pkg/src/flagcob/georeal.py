"""Geometric realizations: the action formulas on the classes ``X_Q``, the
coproduct and antipode, twisted classes, and the closed-form
specializations.

Every function here works purely from the combinatorics of ``Q`` and the
twist blocks; none of them touches the flag ring or the Hopf algebra, so
they can be checked against both.
"""

from __future__ import annotations

from functools import lru_cache

from flagcob.combinatorics import (
    ExponentSeq,
    SubsetQ,
    apply_hQ,
    enumerate_block,
    enumerate_K,
    h_set,
    is_admissible,
    twist_add,
    type_of,
)
from flagcob.seriesalg import GPoly, GTensor, gbar, series_power_component


class TwistedClass:
    """``X`` of a surviving subset ``base`` with the basic double structure
    amended by ``twists[j-1]`` on the factor of original interval ``j``."""

    __slots__ = ("original", "base", "twists")

    def __init__(self, original: SubsetQ, base: SubsetQ, twists=None):
        if base.mask & ~original.mask:
            raise ValueError(f"{base!r} is not inside {original!r}")
        s = original.s
        twists = tuple(twists) if twists is not None else (0,) * s
        if len(twists) != s:
            raise ValueError(f"need {s} twists, got {len(twists)}")
        for m, ln in zip(twists, original.interval_lengths()):
            if m < 0 or m > ln:
                raise ValueError(f"twist {m} out of range for an interval of length {ln}")
        self.original = original
        self.base = base
        self.twists = twists

    def deficits(self) -> tuple[int, ...]:
        """``|I(j) & base|`` for each original interval."""
        return tuple(sum(1 for i in range(a, b + 1) if i in self.base)
                     for a, b in self.original.intervals)

    def __repr__(self):
        return f"TwistedClass(base={list(self.base.elements)}, twists={self.twists})"


def eval_twisted(t: TwistedClass, originalQ: SubsetQ | None = None) -> GPoly:
    """Class of a twisted manifold: ``prod_j (g)^(m(j)+1)_{d(j)}``."""
    if originalQ is not None and originalQ != t.original:
        raise ValueError("twisted class was built over a different Q")
    out = GPoly.one()
    for m, d in zip(t.twists, t.deficits()):
        out = out * series_power_component(m + 1, d)
    return out


def _twists_at_starts(Q: SubsetQ, k) -> tuple[int, ...]:
    return tuple(k[a - 1] for a in Q.starts())


@lru_cache(maxsize=None)
def geom_act_right(Q: SubsetQ, omega) -> GPoly:
    """Right action of ``s_omega`` on ``X_Q``: sum over K(Q, omega)."""
    out = GPoly.zero()
    for k in enumerate_block(Q, omega, "K"):
        out = out + eval_twisted(TwistedClass(Q, apply_hQ(k, Q), _twists_at_starts(Q, k)))
    return out


@lru_cache(maxsize=None)
def geom_act_left(Q: SubsetQ, psi) -> GPoly:
    """Left action of the tangential ``sbar_psi`` on ``X_Q``: sum over H(Q, psi)
    of the basic class of ``X_{Q, hQ}``, one factor per original interval."""
    out = GPoly.zero()
    for h in enumerate_block(Q, psi, "H"):
        out = out + eval_twisted(TwistedClass(Q, apply_hQ(h, Q)))
    return out


@lru_cache(maxsize=None)
def geom_act_both(Q: SubsetQ, psi, omega) -> GPoly:
    """``sbar_{psi,l} (x) s_{omega,r}`` on ``X_Q``."""
    out = GPoly.zero()
    ks = enumerate_block(Q, omega, "K")
    for h in enumerate_block(Q, psi, "H"):
        for k in ks:
            hk = twist_add(h, k)
            if not is_admissible(hk, Q):
                continue
            out = out + eval_twisted(TwistedClass(Q, apply_hQ(hk, Q), _twists_at_starts(Q, k)))
    return out


def geom_coproduct(Q: SubsetQ) -> GTensor:
    """``X_Q -> sum_{K(Q)} (X^k_{Q,kQ}, X_{Q - kQ})``."""
    out = GTensor._raw({})
    for k in enumerate_K(Q):
        kQ = apply_hQ(k, Q)
        left = eval_twisted(TwistedClass(Q, kQ, _twists_at_starts(Q, k)))
        right = GPoly.monomial(type_of(Q - kQ))
        out = out + GTensor.pure(left, right)
    return out


def geom_antipode(Q: SubsetQ) -> GPoly:
    """Swap the normal bundles: each factor ``B_l`` becomes ``gbar_l``."""
    out = GPoly.one()
    for ln in Q.interval_lengths():
        out = out * gbar(ln)
    return out


def basic_class(Q: SubsetQ) -> GPoly:
    """``g^{type(Q)}``."""
    return GPoly.monomial(type_of(Q))


# ---------------------------------------------------------------- closed forms

def eps_left_closed_form(Q: SubsetQ, m: int) -> GPoly:
    """``sbar_{eps(m),l}(X_Q)`` summed interval by interval."""
    out = GPoly.zero()
    for j, (a, b) in enumerate(Q.intervals):
        if b - a < m - 1:
            continue
        rest = SubsetQ([e for e in Q if not a <= e <= b], Q.n)
        term = GPoly.monomial(type_of(rest)) * GPoly.gen(b - a + 1 - m)
        out = out + term * (b - m + 1 - a + 1)
    return out


def eps_right_closed_form(Q: SubsetQ, m: int) -> GPoly:
    """``s_{eps(m),r}(X_Q) = sum_j X^{m:j}_{Q - [a(j), a(j)+m-1]}``."""
    out = GPoly.zero()
    for j, (a, b) in enumerate(Q.intervals):
        if b - a < m - 1:
            continue
        base = SubsetQ([e for e in Q if not a <= e <= a + m - 1], Q.n)
        twists = [0] * Q.s
        twists[j] = m
        out = out + eval_twisted(TwistedClass(Q, base, twists))
    return out


def full_right_closed_form(n: int, omega) -> GPoly:
    """``s_{omega,r}(X_[n])``: ``(g)^(m+1)_(n-m)`` for ``omega = eps(m)``, else 0."""
    omega = ExponentSeq(omega)
    if not omega:
        return GPoly.gen(n)
    if omega.num_parts != 1 or len(omega) > n:
        return GPoly.zero()
    m = len(omega)
    return series_power_component(m + 1, n - m)


def full_left_closed_form(n: int, psi) -> GPoly:
    """``sbar_{psi,l}(X_[n]) = sum_{H([n],psi)} Y_{h[n]}``; each ``Y_R`` is ``B_|R|``."""
    out = GPoly.zero()
    for h in enumerate_block(SubsetQ.full(n), psi, "H"):
        out = out + GPoly.gen(len(h_set(h, n)))
    return out


# ---------------------------------------------------------------- singular maps

def singular_map_coefficients(n: int, h: int) -> tuple[list[GPoly], list[GPoly]]:
    """Coefficients of ``q_h: B_n -> CP^(n-h+1)`` in the left and right bases.

    left[m] = g_{n-m}; right[m] = sum_{j>=m} g_{n-j} (g)^m_{j-m}, with
    ``0 <= m, j <= n+1-h``.
    """
    if not 1 <= h <= n:
        raise ValueError("need 1 <= h <= n")
    top = n + 1 - h
    left = [GPoly.gen(n - m) for m in range(top + 1)]
    right = []
    for m in range(top + 1):
        acc = GPoly.zero()
        for j in range(m, top + 1):
            acc = acc + GPoly.gen(n - j) * series_power_component(m, j - m)
        right.append(acc)
    return left, right


def convert_left_to_right(left: list[GPoly]) -> list[GPoly]:
    """Rewrite ``sum L_m beta_{m,l}`` in the right basis using
    ``beta_{m,l} = sum_k (g)^k_{m-k} beta_{k,r}``."""
    top = len(left) - 1
    out = []
    for k in range(top + 1):
        acc = GPoly.zero()
        for m in range(k, top + 1):
            acc = acc + left[m] * series_power_component(k, m - k)
        out.append(acc)
    return out
