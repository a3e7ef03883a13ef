"""Acceptance gate: one PASS/FAIL line per criterion.

All comparisons are exact integer equality.  Run with ``-s`` to see the
lines as they happen; they are also repeated in the terminal summary.
"""

import time

from flagcob import flagring, georeal, hopf, verify
from flagcob.combinatorics import (
    ExponentSeq,
    SubsetQ,
    apply_hQ,
    enumerate_block,
    h_set,
    is_admissible,
    type_of,
)
from flagcob.flagring import FlagContext, FlagElem, intersect
from flagcob.georeal import TwistedClass, eval_twisted
from flagcob.seriesalg import GPoly, GTensor, reversion, reversion_coefficients, series_power_component
from flagcob.symmfun import complement_transform, expand_monomial_sym, lambda_matrix, lambda_row

E = ExponentSeq
b1, b2 = GPoly.gen(1), GPoly.gen(2)
one = GPoly.one()

RESULTS: list[str] = []


def report(number, title, failures, extra=""):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title}"
    if extra:
        line += f" ({extra})"
    if failures:
        line += f" -- {len(failures)} failing, first: {failures[0]}"
    RESULTS.append(line)
    print(line)
    assert not failures, line


def failing(checks):
    return [f"{c.suite}:{c.check} [{c.input}] {c.detail}" for c in checks if not c.ok]


def test_criterion_01_hopf_axioms():
    verify.clear_caches()
    t0 = time.perf_counter()
    checks = verify.suite_hopf(max_grading=16, mult_grading=16)
    elapsed = time.perf_counter() - t0
    bad = failing(checks)
    if elapsed >= 60:
        bad.append(f"took {elapsed:.1f}s, limit 60s")
    report(1, "Hopf axioms through grading 16", bad, f"{len(checks)} checks, {elapsed:.2f}s")


def test_criterion_02_reversion():
    checks = verify.suite_reversion(max_deg=10)
    report(2, "antipode = reversion, Lagrange form, mutual inverses", failing(checks),
           f"{len(checks)} checks")


def test_criterion_03_lambda():
    bad = []
    for d in range(2, 13, 2):
        basis, rows = lambda_matrix(d)
        size = len(basis)
        for i in range(size):
            for j in range(size):
                sq = sum(rows[i][k] * rows[k][j] for k in range(size))
                if sq != int(i == j):
                    bad.append(f"grading {d}: (L^2)[{i}][{j}] = {sq}")
        # triangularity as stated: nonzero lambda[psi, w] needs sum(w) >= sum(psi)
        for i, psi in enumerate(basis):
            for j, w in enumerate(basis):
                if rows[i][j] and w.num_parts < psi.num_parts:
                    bad.append(f"grading {d}: lambda[{psi.to_text()}, {w.to_text()}] = "
                               f"{rows[i][j]} with sum(w) < sum(psi)")
    if lambda_matrix(2)[1] != ((-1,),):
        bad.append(f"eps(1) row {lambda_matrix(2)[1]}")
    if lambda_matrix(4)[1] != ((1, 1), (0, -1)):
        bad.append(f"grading-4 matrix {lambda_matrix(4)[1]}")
    report(3, "lambda involution, triangularity, goldens", bad)


def test_criterion_04_three_paths():
    verify.clear_caches()
    t0 = time.perf_counter()
    checks = verify.suite_actions(max_n=5)
    elapsed = time.perf_counter() - t0
    bad = failing(checks)
    if elapsed >= 300:
        bad.append(f"took {elapsed:.1f}s, limit 300s")
    report(4, "geometric = algebraic = oracle for Q in [n], n <= 5", bad,
           f"{len(checks)} checks, {elapsed:.2f}s")


def test_criterion_05_realization():
    checks = verify.suite_realization(max_n=5)
    report(5, "geometric coproduct and antipode for Q in [5]", failing(checks),
           f"{len(checks)} checks")


def test_criterion_06_twisted_and_vanishing():
    checks = verify.suite_twisted(max_n=8)
    report(6, "twisted single intervals n <= 8, non-eps vanishing", failing(checks),
           f"{len(checks)} checks")


def test_criterion_07_left_closed_form():
    checks = [c for c in verify.suite_closed_forms(max_n=6) if c.check == "eps-left"]
    report(7, "left closed form for Q in [6], m <= 6", failing(checks), f"{len(checks)} checks")


def test_criterion_08_duality():
    checks = verify.suite_duality(max_n=5, bn_max=8)
    report(8, "Kronecker duality on [5], pushforward of 1 is g_n for n <= 8", failing(checks),
           f"{len(checks)} checks")


def test_criterion_09_singular_maps():
    checks = verify.suite_singular(max_n=8)
    report(9, "left/right coefficients agree after conversion, n <= 8", failing(checks),
           f"{len(checks)} checks")


def test_criterion_10_ring():
    checks = verify.suite_ring(max_n=5, max_degree=10, trials=1000, basis_n=10)
    report(10, "rewrite confluence (1000 instances) and basis count 2^n", failing(checks),
           f"{len(checks)} checks")


# ---------------------------------------------------------------- goldens

def _goldens():
    B2, B3 = FlagContext(2), FlagContext(3)
    Q124 = SubsetQ([1, 2, 4], 4)
    full = SubsetQ.full

    def T(*pairs):
        out = GTensor._raw({})
        for c, l, r in pairs:
            out = out + GTensor.pure(l, r) * c
        return out

    g1, g2 = b1, b2
    return [
        ("h_set((1,0), 2)", lambda: h_set((1, 0), 2), SubsetQ([2], 2)),
        ("h_set((0,1), 2)", lambda: h_set((0, 1), 2), SubsetQ([1], 2)),
        ("hQ (1,0) on [2]", lambda: apply_hQ((1, 0), full(2)), SubsetQ([2], 2)),
        ("(2,0) inadmissible on [1]", lambda: is_admissible((2,), full(1)), False),
        ("hQ h_1=2 on {1,2,4}", lambda: apply_hQ((2, 0, 0, 0), Q124), SubsetQ([4], 4)),
        ("hQ h_4=1 on {1,2,4}", lambda: apply_hQ((0, 0, 0, 1), Q124), SubsetQ([1, 2], 4)),
        ("K([2], eps1)", lambda: enumerate_block(full(2), E.eps(1), "K"), [(1, 0)]),
        ("H([2], eps1)", lambda: enumerate_block(full(2), E.eps(1), "H"), [(1, 0), (0, 1)]),
        ("type {1,2,4}", lambda: type_of(Q124), E((1, 1))),
        ("(b)^-2_1", lambda: series_power_component(-2, 1), -2 * b1),
        ("(b)^3_1", lambda: series_power_component(3, 1), 3 * b1),
        ("(b)^2_2", lambda: series_power_component(2, 2), 2 * b2 + b1 ** 2),
        ("gbar_1", lambda: reversion(2)[0], -b1),
        ("gbar_2", lambda: reversion(2)[1], 2 * b1 ** 2 - b2),
        ("gbar_0", lambda: reversion_coefficients(1)[0], one),
        ("m_eps(m) one root", lambda: expand_monomial_sym(E.eps(3), ("z",)), {(3,): 1}),
        ("m_(2) one root", lambda: expand_monomial_sym(E((2,)), ("z",)), {}),
        ("complement eps1", lambda: lambda_row(E.eps(1)), {E.eps(1): -1}),
        ("complement eps2", lambda: lambda_row(E.eps(2)), {E.eps(2): -1}),
        ("complement (2)", lambda: complement_transform(E((2,))).terms, {E((2,)): 1, E.eps(2): 1}),
        ("lambda grading 2", lambda: lambda_matrix(2)[1], ((-1,),)),
        ("lambda grading 4", lambda: lambda_matrix(4)[1], ((1, 1), (0, -1))),
        ("delta b1", lambda: hopf.coproduct(b1), T((1, b1, one), (1, one, b1))),
        ("delta b2", lambda: hopf.coproduct(b2), T((1, b2, one), (2, b1, b1), (1, one, b2))),
        ("delta b1^2", lambda: hopf.coproduct(b1 ** 2),
         T((1, b1 ** 2, one), (2, b1, b1), (1, one, b1 ** 2))),
        ("chi b1", lambda: hopf.antipode(b1), -b1),
        ("chi b2", lambda: hopf.antipode(b2), 2 * b1 ** 2 - b2),
        ("s_1,r(b2)", lambda: hopf.act_right(E.eps(1), b2), 2 * b1),
        ("s_1,r(b2 b1)", lambda: hopf.act_right(E.eps(1), b2 * b1), 2 * b1 ** 2 + b2),
        ("s_1,l(b1)", lambda: hopf.act_left(E.eps(1), b1), -one),
        ("s_1,l(b2)", lambda: hopf.act_left(E.eps(1), b2), -2 * b1),
        ("sbar_1,l(b1)", lambda: hopf.act_left_tangential(E.eps(1), b1), one),
        ("sbar_1,l(b2)", lambda: hopf.act_left_tangential(E.eps(1), b2), 2 * b1),
        ("ad s_1 (b1)", lambda: hopf.act_adjoint(E.eps(1), b1), GPoly.zero()),
        ("ad s_1 (b2)", lambda: hopf.act_adjoint(E.eps(1), b2), GPoly.zero()),
        ("x_1^3 in B_3", lambda: FlagElem.x(B3, 1) ** 3, FlagElem.x_set(B3, [1, 2, 3])),
        ("x_{1,r} in B_1", lambda: flagring.right_class(FlagContext(1), 1),
         FlagElem.x(FlagContext(1), 1)),
        ("x_{1,r} in B_2", lambda: flagring.right_class(B2, 1),
         FlagElem.x(B2, 1) + FlagElem.x_set(B2, [1, 2]) * g1),
        ("x_{2,r} in B_2", lambda: flagring.right_class(B2, 2), FlagElem.x(B2, 2)),
        ("pi(x^[3]) in B_3", lambda: flagring.pushforward(FlagElem.x_set(B3, [1, 2, 3])), one),
        ("pi(1) on {1,2,4}", lambda: flagring.pushforward(FlagElem.one(FlagContext(Q124))), g2 * g1),
        ("<1, x_[2]>", lambda: flagring.kronecker_U(FlagElem.one(B2)), 0),
        ("<x^{1}, x_{1,3}>", lambda: flagring.pairing_U(SubsetQ([1], 3), SubsetQ([1, 3], 3)), 0),
        ("char [2] eps1,0", lambda: flagring.char_number(full(2), E.eps(1), E()), 2 * g1),
        ("char [4] 0,eps2", lambda: flagring.char_number(full(4), E(), E.eps(2)),
         series_power_component(3, 2)),
        ("char {1,2,4} 0,0", lambda: flagring.char_number(Q124, E(), E()), g1 * g2),
        ("y_1 in B_2", lambda: flagring.y_to_x(1, B2), -FlagElem.x(B2, 1) + FlagElem.x(B2, 2)),
        ("X_[2] meet Y_{2}", lambda: tuple(intersect("X", full(2), "Y", SubsetQ([2], 2), 2)),
         ("X", SubsetQ([2], 2), SubsetQ([2], 2))),
        ("twisted [2] base {2} m=1",
         lambda: eval_twisted(TwistedClass(full(2), SubsetQ([2], 2), [1])), 2 * g1),
        ("twisted zero twists {1,2,4}", lambda: eval_twisted(TwistedClass(Q124, Q124)), g1 * g2),
        ("geom right [2] eps1", lambda: georeal.geom_act_right(full(2), E.eps(1)), 2 * g1),
        ("geom right {1,2,4} eps1", lambda: georeal.geom_act_right(Q124, E.eps(1)),
         2 * g1 ** 2 + g2),
        ("geom left [2] eps1", lambda: georeal.geom_act_left(full(2), E.eps(1)), 2 * g1),
        ("geom left [1] eps2", lambda: georeal.geom_act_left(full(1), E.eps(2)), GPoly.zero()),
        ("geom both [2] eps1 eps1", lambda: georeal.geom_act_both(full(2), E.eps(1), E.eps(1)),
         2 * one),
        ("geom coproduct [1]", lambda: georeal.geom_coproduct(full(1)), T((1, g1, one), (1, one, g1))),
        ("geom coproduct [2]", lambda: georeal.geom_coproduct(full(2)),
         T((1, g2, one), (2, g1, g1), (1, one, g2))),
        ("geom antipode [1]", lambda: georeal.geom_antipode(full(1)), -g1),
        ("geom antipode [2]", lambda: georeal.geom_antipode(full(2)), 2 * g1 ** 2 - g2),
        ("geom antipode {1,3}", lambda: georeal.geom_antipode(SubsetQ([1, 3], 3)), g1 ** 2),
        ("singular map n=2 h=1", lambda: georeal.singular_map_coefficients(2, 1)[0], [g2, g1, one]),
        ("singular map n=2 h=2", lambda: georeal.singular_map_coefficients(2, 2)[0], [g2, g1]),
    ]


def test_criterion_11_regression_goldens():
    bad = []
    goldens = _goldens()
    for label, compute, expected in goldens:
        got = compute()
        if got != expected:
            bad.append(f"{label}: {got!r} != {expected!r}")
    report(11, "pinned example values", bad, f"{len(goldens)} goldens")
