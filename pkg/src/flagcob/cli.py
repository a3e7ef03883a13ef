"""Command-line interface.

Every verb prints either aligned text or line-delimited JSON records with
the fields ``input``, ``operation``, ``result`` and ``status``.  Numbers in
records are decimal strings; sequences and subsets use the comma literals
accepted on the command line.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from flagcob import flagring, georeal, hopf, verify
from flagcob.combinatorics import ExponentSeq, SubsetQ
from flagcob.flagring import FlagContext, FlagElem
from flagcob.seriesalg import GPoly, GTensor
from flagcob.symmfun import lambda_matrix, lambda_row

MAX_N = 8
MAX_GRADING = 20
MAX_TABLE_GRADING = 24
MAX_TABLE_N = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- parsing

def _seq(text: str) -> ExponentSeq:
    try:
        return ExponentSeq.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _subset(text: str, ambient: int | None) -> SubsetQ:
    if ambient is None:
        raise UsageError("--subset needs --ambient")
    if ambient < 0 or ambient > MAX_N * 4:
        raise UsageError(f"--ambient {ambient} out of range")
    try:
        return SubsetQ.parse(text, ambient)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _bounded(value: int, lo: int, hi: int, flag: str) -> int:
    if not lo <= value <= hi:
        raise UsageError(f"{flag} {value} outside [{lo}, {hi}]")
    return value


# ---------------------------------------------------------------- records

def record(inp: dict, operation: str, result, status: str = "ok") -> dict:
    return {"input": {k: str(v) for k, v in inp.items()}, "operation": operation,
            "result": result, "status": status}


def decode_result(rec: dict):
    """Rebuild the value carried by an emitted record."""
    op = rec["operation"]
    res = rec["result"]
    if op in ("coproduct", "geom-coproduct"):
        return GTensor.from_json(res)
    if op in ("antipode", "act", "char-number", "geom-antipode", "geom-twisted"):
        return GPoly.from_json(res)
    if op == "pushforward":
        return FlagElem.from_json(res["element"]), GPoly.from_json(res["value"])
    if op == "lambda-row":
        return [ExponentSeq.parse(b) for b in res["basis"]], [int(c) for c in res["row"]]
    if op.startswith("verify:"):
        return dict(res)
    raise ValueError(f"unknown operation {op!r}")


def _emit(out, fmt: str, records: list[dict], texts: list[str]):
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    else:
        for line in texts:
            out.write(line + "\n")


def _var(args) -> str:
    return "g" if getattr(args, "subset", None) is not None else "b"


# ---------------------------------------------------------------- verbs

def cmd_coproduct(args, out):
    w = _seq(args.monomial)
    val = hopf.coproduct(GPoly.monomial(w))
    _emit(out, args.format, [record({"monomial": w.to_text()}, "coproduct", val.to_json())],
          [f"delta({GPoly.monomial(w).format()}) = {val.format()}"])
    return 0


def cmd_antipode(args, out):
    w = _seq(args.monomial)
    val = hopf.antipode(GPoly.monomial(w))
    _emit(out, args.format, [record({"monomial": w.to_text()}, "antipode", val.to_json())],
          [f"chi({GPoly.monomial(w).format()}) = {val.format()}"])
    return 0


def _combo_left(Q, omega, evaluate):
    """``s_omega,l`` through tangential values, using that lambda is an involution."""
    out = GPoly.zero()
    for psi, c in lambda_row(omega).items():
        out = out + evaluate(Q, psi) * c
    return out


def _act_value(side, op, p, Q, path):
    zero = ExponentSeq()
    if path == "algebraic":
        if side == "right":
            return hopf.act_right(op, p)
        if side == "left":
            return hopf.act_left(op, p)
        if side == "tangential":
            return hopf.act_left_tangential(op, p)
        return hopf.act_adjoint(op, p)
    if path == "geometric":
        right = georeal.geom_act_right
        tang = georeal.geom_act_left
        both = georeal.geom_act_both
    else:
        def right(Q, w):
            return flagring.char_number(Q, zero, w)

        def tang(Q, psi):
            return flagring.char_number(Q, psi, zero)

        def both(Q, psi, w):
            return flagring.char_number(Q, psi, w)

    if side == "right":
        return right(Q, op)
    if side == "tangential":
        return tang(Q, op)
    if side == "left":
        return _combo_left(Q, op, tang)
    out = GPoly.zero()
    for psi, theta in hopf.splittings(op):
        out = out + _combo_left(Q, psi, lambda Q_, mu: both(Q_, mu, theta))
    return out


def cmd_act(args, out):
    op = _seq(args.op)
    if (args.monomial is None) == (args.subset is None):
        raise UsageError("act needs exactly one of --monomial or --subset")
    inp = {"side": args.side, "op": op.to_text(), "path": args.path}
    if args.monomial is not None:
        if args.path != "algebraic":
            raise UsageError(f"--path {args.path} needs --subset")
        w = _seq(args.monomial)
        p = GPoly.monomial(w)
        Q = None
        inp["monomial"] = w.to_text()
        name = p.format()
    else:
        Q = _subset(args.subset, args.ambient)
        p = georeal.basic_class(Q)
        inp.update(subset=Q.to_text(), ambient=Q.n)
        name = f"X_{{{Q.to_text()}}}"
    val = _act_value(args.side, op, p, Q, args.path)
    var = _var(args)
    _emit(out, args.format, [record(inp, "act", val.to_json())],
          [f"s_{{{op.to_text()}}},{args.side}({name}) = {val.format(var)}"])
    return 0


def cmd_char_number(args, out):
    Q = _subset(args.subset, args.ambient)
    psi, omega = _seq(args.psi), _seq(args.omega)
    val = flagring.char_number(Q, psi, omega)
    inp = {"subset": Q.to_text(), "ambient": Q.n, "psi": psi.to_text(), "omega": omega.to_text()}
    _emit(out, args.format, [record(inp, "char-number", val.to_json())],
          [f"<c_{psi.to_text()},l c_{omega.to_text()},r, [X_{{{Q.to_text()}}}]> = {val.format('g')}"])
    return 0


def cmd_geom(args, out):
    Q = _subset(args.subset, args.ambient)
    inp = {"subset": Q.to_text(), "ambient": Q.n}
    if args.what == "coproduct":
        val = georeal.geom_coproduct(Q)
        text = f"delta(X_{{{Q.to_text()}}}) = {val.format('g')}"
    elif args.what == "antipode":
        val = georeal.geom_antipode(Q)
        text = f"chi(X_{{{Q.to_text()}}}) = {val.format('g')}"
    else:
        if args.base is None:
            raise UsageError("geom twisted needs --base")
        base = _subset(args.base, args.ambient)
        try:
            twists = [int(t) for t in args.twists.split(",")] if args.twists else None
            tc = georeal.TwistedClass(Q, base, twists)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        val = georeal.eval_twisted(tc)
        inp.update(base=base.to_text(), twists=",".join(map(str, tc.twists)))
        text = f"X^{{{inp['twists']}}}_{{{base.to_text()}}} = {val.format('g')}"
    _emit(out, args.format, [record(inp, f"geom-{args.what}", val.to_json())], [text])
    return 0


def cmd_verify(args, out):
    max_n = _bounded(args.max_n, 1, MAX_N, "--max-n")
    max_grading = _bounded(args.max_grading, 2, MAX_GRADING, "--max-grading")
    checks = verify.run_suite(args.suite, max_n, max_grading)
    failed = [c for c in checks if not c.ok]
    records = [record({"suite": c.suite, "case": c.input}, f"verify:{c.check}",
                      {"lhs": c.lhs, "rhs": c.rhs, "detail": c.detail}, c.status)
               for c in checks]
    texts = []
    for suite in sorted({c.suite for c in checks}):
        mine = [c for c in checks if c.suite == suite]
        bad = sum(not c.ok for c in mine)
        texts.append(f"{suite:<14} {len(mine) - bad:>6}/{len(mine):<6} {'PASS' if not bad else 'FAIL'}")
    for c in failed:
        texts.append(f"  FAIL {c.suite}:{c.check} [{c.input}] {c.lhs} vs {c.rhs}: {c.detail}")
    _emit(out, args.format, records, texts)
    return 1 if failed else 0


def _table_lambda(args):
    if args.grading is None:
        raise UsageError("tables --what lambda needs --grading")
    d = _bounded(args.grading, 0, MAX_TABLE_GRADING, "--grading")
    if d % 2:
        raise UsageError("--grading must be even")
    basis, rows = lambda_matrix(d)
    labels = [b.to_text() for b in basis]
    records = [record({"grading": d, "psi": labels[i]}, "lambda-row",
                      {"basis": labels, "row": [str(c) for c in row]})
               for i, row in enumerate(rows)]
    width = max([len(x) for x in labels] + [3])
    texts = [" " * width + " | " + " ".join(f"{x:>{width}}" for x in labels)]
    for label, row in zip(labels, rows):
        texts.append(f"{label:>{width}} | " + " ".join(f"{c:>{width}}" for c in row))
    return records, texts


def _table_pushforward(args):
    if args.n is None:
        raise UsageError("tables --what pushforward needs --n")
    n = _bounded(args.n, 0, MAX_TABLE_N, "--n")
    ctx = FlagContext(n)
    records, texts = [], []
    for e in flagring.basis(ctx):
        R = e.terms()[0][0]
        val = flagring.pushforward(e)
        label = ",".join(map(str, R))
        records.append(record({"n": n, "R": label}, "pushforward",
                              {"element": e.to_json(), "value": val.to_json()}))
        texts.append(f"pi(x^{{{label}}}) = {val.format('g')}")
    return records, texts


def _table_coproduct(args):
    if args.max_n is None:
        raise UsageError("tables --what coproduct needs --max-n")
    top = _bounded(args.max_n, 0, MAX_N, "--max-n")
    records, texts = [], []
    for k in range(1, top + 1):
        w = ExponentSeq.eps(k)
        val = hopf.coproduct_generator(k)
        records.append(record({"monomial": w.to_text()}, "coproduct", val.to_json()))
        texts.append(f"delta(b_{k}) = {val.format()}")
    return records, texts


def cmd_tables(args, out):
    build = {"lambda": _table_lambda, "pushforward": _table_pushforward,
             "coproduct": _table_coproduct}[args.what]
    records, texts = build(args)
    _emit(out, args.format, records, texts)
    return 0


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="flagcob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("coproduct", parents=[common], help="coproduct of a monomial b^w")
    p.add_argument("--monomial", required=True)
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", parents=[common], help="antipode of a monomial b^w")
    p.add_argument("--monomial", required=True)
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("act", parents=[common], help="action of an operation")
    p.add_argument("--side", choices=("left", "right", "tangential", "adjoint"), required=True)
    p.add_argument("--op", required=True)
    p.add_argument("--monomial")
    p.add_argument("--subset")
    p.add_argument("--ambient", type=int)
    p.add_argument("--path", choices=("algebraic", "geometric", "oracle"), default="algebraic")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("char-number", parents=[common], help="characteristic number of X_Q")
    p.add_argument("--subset", required=True)
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--psi", default="")
    p.add_argument("--omega", default="")
    p.set_defaults(func=cmd_char_number)

    p = sub.add_parser("geom", parents=[common], help="geometric coproduct, antipode, twisted class")
    p.add_argument("what", choices=("coproduct", "antipode", "twisted"))
    p.add_argument("--subset", required=True)
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--base")
    p.add_argument("--twists")
    p.set_defaults(func=cmd_geom)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-grading", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", parents=[common], help="dump reference tables")
    p.add_argument("--what", choices=("lambda", "pushforward", "coproduct"), required=True)
    p.add_argument("--grading", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_tables)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"flagcob: error: {str(exc).splitlines()[0]}\n")
        return 2


def main(argv=None) -> int:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
