"""Verification suites.

Each suite yields :class:`Check` records comparing two computational paths
on one input.  Records are sorted before they are returned, so reports are
byte-identical across runs.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement

from flagcob import flagring, georeal, hopf
from flagcob.combinatorics import (
    ExponentSeq,
    SubsetQ,
    apply_hQ,
    h_set,
    is_admissible,
    sequences_of_grading,
    sequences_of_weight,
    sequences_up_to_grading,
    subsets,
)
from flagcob.flagring import FlagContext, FlagElem
from flagcob.seriesalg import (
    GPoly,
    generator_series,
    identity_series,
    reversion,
    reversion_coefficients,
    series_power_component,
    substitute_series,
)
from flagcob.symmfun import lambda_matrix


@dataclass(frozen=True, order=True)
class Check:
    suite: str
    check: str
    input: str
    lhs: str
    rhs: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return asdict(self)


def _check(suite, check, inp, lhs, rhs, a, b) -> Check:
    ok = a == b
    detail = "" if ok else f"{a} != {b}"
    return Check(suite, check, inp, lhs, rhs, "pass" if ok else "fail", detail)


def _mono(w) -> str:
    return "b^" + ExponentSeq(w).to_text()


# ---------------------------------------------------------------- hopf

def _triple(acc, key, c):
    s = acc.get(key, 0) + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def coassoc_sides(key):
    delta = hopf.coproduct_monomial(key)
    left: dict = {}
    right: dict = {}
    for (a1, a2), c in delta.terms.items():
        for (b1, b2), d in hopf.coproduct_monomial(a1).terms.items():
            _triple(left, (b1, b2, a2), c * d)
        for (b1, b2), d in hopf.coproduct_monomial(a2).terms.items():
            _triple(right, (a1, b1, b2), c * d)
    return left, right


def suite_hopf(max_grading: int = 16, mult_grading: int = 12) -> list[Check]:
    out = []
    S = "hopf"
    for w in sequences_up_to_grading(max_grading):
        key = tuple(w)
        p = GPoly.monomial(w)
        inp = _mono(w)
        delta = hopf.coproduct_monomial(key)
        left, right = coassoc_sides(key)
        out.append(_check(S, "coassociativity", inp, "(d x id)d", "(id x d)d", left, right))
        out.append(_check(S, "counit-left", inp, "(e x id)d", "id",
                          delta.contract_left(lambda l: 1 if not l else 0), p))
        out.append(_check(S, "counit-right", inp, "(id x e)d", "id",
                          delta.contract_right(lambda r: 1 if not r else 0), p))
        lhs = GPoly.zero()
        rhs = GPoly.zero()
        for (l, r), c in delta.terms.items():
            lhs = lhs + hopf.antipode_monomial(l) * GPoly._raw({r: c})
            rhs = rhs + GPoly._raw({l: c}) * hopf.antipode_monomial(r)
        unit = GPoly.const(hopf.counit(p))
        out.append(_check(S, "antipode-left", inp, "sum chi(a1)a2", "e(a)1", lhs, unit))
        out.append(_check(S, "antipode-right", inp, "sum a1chi(a2)", "e(a)1", rhs, unit))
        out.append(_check(S, "antipode-involution", inp, "chi(chi(a))", "a",
                          hopf.antipode(hopf.antipode(p)), p))
    monos = sequences_up_to_grading(mult_grading)
    for u, v in combinations_with_replacement(monos, 2):
        if ExponentSeq(u).grading + ExponentSeq(v).grading > mult_grading:
            continue
        pu, pv = GPoly.monomial(u), GPoly.monomial(v)
        out.append(_check(S, "antipode-multiplicative", f"{_mono(u)}*{_mono(v)}",
                          "chi(pq)", "chi(p)chi(q)",
                          hopf.antipode(pu * pv), hopf.antipode(pu) * hopf.antipode(pv)))
    return sorted(out)


def suite_reversion(max_deg: int = 10) -> list[Check]:
    out = []
    S = "reversion"
    rev = reversion(max_deg)
    for n in range(1, max_deg + 1):
        chi = hopf.antipode(GPoly.gen(n))
        out.append(_check(S, "antipode-is-reversion", f"n={n}", "chi(b_n)", "gbar_n",
                          chi, rev[n - 1]))
        out.append(_check(S, "lagrange", f"n={n}", "(n+1)chi(b_n)", "(b)^-(n+1)_n",
                          chi * (n + 1), series_power_component(-(n + 1), n)))
    g = generator_series(max_deg)
    gb = reversion_coefficients(max_deg)
    ident = identity_series(max_deg)
    out.append(_check(S, "inverse", f"deg<={max_deg}", "g o gbar", "t",
                      substitute_series(g, gb, max_deg), ident))
    out.append(_check(S, "inverse", f"deg<={max_deg}", "gbar o g", "t",
                      substitute_series(gb, g, max_deg), ident))
    return sorted(out)


def suite_lambda(max_grading: int = 12) -> list[Check]:
    """Involution and triangularity of the lambda matrix.

    Triangularity is checked in the direction that holds for the
    complement transform: lambda[psi, w] = 0 unless sum(w) <= sum(psi).
    """
    out = []
    S = "lambda"
    for d in range(2, max_grading + 1, 2):
        basis, rows = lambda_matrix(d)
        size = len(basis)
        sq = [[sum(rows[i][k] * rows[k][j] for k in range(size)) for j in range(size)]
              for i in range(size)]
        eye = [[int(i == j) for j in range(size)] for i in range(size)]
        out.append(_check(S, "involution", f"grading={d}", "L*L", "I", sq, eye))
        bad = [(basis[i].to_text(), basis[j].to_text())
               for i in range(size) for j in range(size)
               if rows[i][j] and basis[j].num_parts > basis[i].num_parts]
        out.append(_check(S, "triangularity", f"grading={d}", "nonzero entries",
                          "sum(w) <= sum(psi)", bad, []))
    return sorted(out)


# ---------------------------------------------------------------- geometry

def suite_actions(max_n: int = 4) -> list[Check]:
    """Three-path agreement for the left, right and combined actions."""
    out = []
    S = "actions"
    for n in range(1, max_n + 1):
        seqs = sequences_up_to_grading(2 * n)
        for Q in subsets(n):
            p = georeal.basic_class(Q)
            qs = f"Q={Q.to_text() or '{}'},n={n}"
            for psi in seqs:
                inp = f"{qs},psi={psi.to_text()}"
                geo = georeal.geom_act_left(Q, psi)
                alg = hopf.act_left_tangential(psi, p)
                orc = flagring.char_number(Q, psi, ExponentSeq())
                out.append(_check(S, "left", inp, "geometric", "algebraic", geo, alg))
                out.append(_check(S, "left", inp, "geometric", "oracle", geo, orc))
            for om in seqs:
                inp = f"{qs},omega={om.to_text()}"
                geo = georeal.geom_act_right(Q, om)
                alg = hopf.act_right(om, p)
                orc = flagring.char_number(Q, ExponentSeq(), om)
                out.append(_check(S, "right", inp, "geometric", "algebraic", geo, alg))
                out.append(_check(S, "right", inp, "geometric", "oracle", geo, orc))
            for psi in seqs:
                for om in seqs:
                    inp = f"{qs},psi={psi.to_text()},omega={om.to_text()}"
                    geo = georeal.geom_act_both(Q, psi, om)
                    orc = flagring.char_number(Q, psi, om)
                    alg = hopf.act_left_tangential(psi, hopf.act_right(om, p))
                    out.append(_check(S, "both", inp, "geometric", "oracle", geo, orc))
                    out.append(_check(S, "both", inp, "geometric", "algebraic", geo, alg))
    return sorted(out)


def suite_realization(max_n: int = 5, antipode_n: int | None = None) -> list[Check]:
    out = []
    S = "realization"
    for Q in subsets(max_n):
        p = georeal.basic_class(Q)
        inp = f"Q={Q.to_text() or '{}'}"
        out.append(_check(S, "coproduct", inp, "geometric", "algebraic",
                          georeal.geom_coproduct(Q), hopf.coproduct(p)))
    for Q in subsets(antipode_n or max_n):
        p = georeal.basic_class(Q)
        inp = f"Q={Q.to_text() or '{}'}"
        out.append(_check(S, "antipode", inp, "geometric", "algebraic",
                          georeal.geom_antipode(Q), hopf.antipode(p)))
    return sorted(out)


def suite_twisted(max_n: int = 8) -> list[Check]:
    out = []
    S = "twisted"
    for n in range(1, max_n + 1):
        Q = SubsetQ.full(n)
        for m in range(n + 1):
            tc = georeal.TwistedClass(Q, SubsetQ.interval(m + 1, n, n), [m])
            val = georeal.eval_twisted(tc)
            om = ExponentSeq.eps(m) if m else ExponentSeq()
            inp = f"n={n},m={m}"
            out.append(_check(S, "single-interval", inp, "eval_twisted", "oracle",
                              val, flagring.char_number(Q, ExponentSeq(), om)))
            out.append(_check(S, "single-interval", inp, "eval_twisted", "(g)^(m+1)_(n-m)",
                              val, series_power_component(m + 1, n - m)))
        for d in range(2, 2 * n + 1, 2):
            for om in sequences_of_grading(d):
                if om.num_parts == 1:
                    continue
                inp = f"n={n},omega={om.to_text()}"
                out.append(_check(S, "non-eps-vanishing", inp, "geometric", "0",
                                  georeal.geom_act_right(Q, om), GPoly.zero()))
                out.append(_check(S, "non-eps-vanishing", inp, "algebraic", "0",
                                  hopf.act_right(om, GPoly.gen(n)), GPoly.zero()))
    return sorted(out)


def suite_closed_forms(max_n: int = 6) -> list[Check]:
    out = []
    S = "closed-forms"
    for Q in subsets(max_n):
        for m in range(1, max_n + 1):
            inp = f"Q={Q.to_text() or '{}'},m={m}"
            e = ExponentSeq.eps(m)
            out.append(_check(S, "eps-left", inp, "closed form", "geometric",
                              georeal.eps_left_closed_form(Q, m), georeal.geom_act_left(Q, e)))
            out.append(_check(S, "eps-right", inp, "closed form", "geometric",
                              georeal.eps_right_closed_form(Q, m), georeal.geom_act_right(Q, e)))
    for n in range(1, max_n + 1):
        for om in sequences_up_to_grading(2 * n):
            inp = f"n={n},w={om.to_text()}"
            out.append(_check(S, "full-right", inp, "closed form", "geometric",
                              georeal.full_right_closed_form(n, om),
                              georeal.geom_act_right(SubsetQ.full(n), om)))
            out.append(_check(S, "full-left", inp, "closed form", "geometric",
                              georeal.full_left_closed_form(n, om),
                              georeal.geom_act_left(SubsetQ.full(n), om)))
    return sorted(out)


def suite_duality(max_n: int = 5, bn_max: int = 8) -> list[Check]:
    out = []
    S = "duality"
    for Q in subsets(max_n):
        for R in subsets(max_n):
            out.append(_check(S, "x-duality", f"Q={Q.to_text() or '{}'},R={R.to_text() or '{}'}",
                              "<x^Q,x_R>", "delta", flagring.pairing_U(Q, R), int(Q == R)))
    for n in range(0, bn_max + 1):
        out.append(_check(S, "pushforward-one", f"n={n}", "pushforward(1)", "g_n",
                          flagring.pushforward(FlagElem.one(FlagContext(n))), GPoly.gen(n)))
    return sorted(out)


def suite_singular(max_n: int = 8) -> list[Check]:
    out = []
    S = "singular"
    for n in range(1, max_n + 1):
        for h in range(1, n + 1):
            left, right = georeal.singular_map_coefficients(n, h)
            inp = f"n={n},h={h}"
            out.append(_check(S, "left", inp, "formula", "oracle",
                              left, flagring.singular_left_oracle(n, h)))
            out.append(_check(S, "right", inp, "formula", "oracle",
                              right, flagring.singular_right_oracle(n, h)))
            out.append(_check(S, "convert", inp, "converted left", "right",
                              georeal.convert_left_to_right(left), right))
    return sorted(out)


def suite_ring(max_n: int = 5, max_degree: int = 10, trials: int = 1000,
               basis_n: int = 10, seed: int = 0) -> list[Check]:
    out = []
    S = "ring"
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(1, max_n)
        Q = SubsetQ.from_mask(rng.randrange(1 << n), n)
        deg = rng.randint(0, max_degree)
        exps = [0] * n
        for _ in range(deg):
            exps[rng.randrange(n)] += 1
        inp = f"trial={t},Q={Q.to_text() or '{}'},n={n},exps={','.join(map(str, exps))}"
        leftmost = flagring.rewrite_normal_form(exps, Q)
        shuffled = flagring.rewrite_normal_form(exps, Q, choose=rng.choice)
        fast = FlagElem.monomial(FlagContext(Q), exps)
        fast_nf = fast.terms()[0][0] if fast else None
        out.append(_check(S, "confluence", inp, "random order", "leftmost", shuffled, leftmost))
        out.append(_check(S, "confluence", inp, "kernel", "leftmost", fast_nf, leftmost))
    for n in range(0, basis_n + 1):
        out.append(_check(S, "basis-count", f"n={n}", "len(basis)", "2^n",
                          len(flagring.basis(FlagContext(n))), 2 ** n))
    return sorted(out)


def suite_combinatorics(max_n: int = 6) -> list[Check]:
    """``hQ = Q & h[n]`` over all admissible h with |h| <= 2n."""
    out = []
    S = "combinatorics"
    for n in range(1, max_n + 1):
        for Q in subsets(n):
            for total in range(n + 1):
                for parts in _compositions(total, len(Q)):
                    h = [0] * n
                    for pos, v in zip(Q.elements, parts):
                        h[pos - 1] = v
                    h = tuple(h)
                    if not is_admissible(h, Q):
                        continue
                    out.append(_check(S, "hQ", f"Q={Q.to_text() or '{}'},h={h}",
                                      "apply_hQ", "Q & h[n]",
                                      apply_hQ(h, Q), Q & h_set(h, n)))
    return sorted(out)


def _compositions(total, slots):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


SUITES = {
    "hopf": lambda max_n, max_grading: suite_hopf(max_grading, min(max_grading, 12)),
    "reversion": lambda max_n, max_grading: suite_reversion(max(1, max_grading // 2)),
    "lambda": lambda max_n, max_grading: suite_lambda(max_grading),
    "actions": lambda max_n, max_grading: suite_actions(max_n),
    "realization": lambda max_n, max_grading: suite_realization(max_n),
    "twisted": lambda max_n, max_grading: suite_twisted(max_n),
    "closed-forms": lambda max_n, max_grading: suite_closed_forms(max_n),
    "duality": lambda max_n, max_grading: suite_duality(max_n, max_n),
    "singular": lambda max_n, max_grading: suite_singular(max_n),
    "ring": lambda max_n, max_grading: suite_ring(max_n, max_grading),
    "combinatorics": lambda max_n, max_grading: suite_combinatorics(max_n),
}


def run_suite(name: str, max_n: int = 4, max_grading: int = 10) -> list[Check]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](max_n, max_grading))
        return sorted(out)
    return SUITES[name](max_n, max_grading)


def clear_caches():
    """Empty every memo table, so timings start cold."""
    from flagcob import combinatorics, seriesalg, symmfun

    for mod in (combinatorics, seriesalg, symmfun, hopf, flagring, georeal):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()
