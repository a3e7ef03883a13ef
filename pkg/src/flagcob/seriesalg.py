"""Sparse integer polynomials in the generators ``b_1, b_2, ...`` and the
formal-series calculus built on them.

The generators are written ``b`` in Hopf-algebra contexts and ``g`` in
geometric ones; they are the same objects.  ``b_0 = g_0 = 1`` is the empty
monomial.  Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

from functools import lru_cache

from flagcob import kernels
from flagcob.combinatorics import ExponentSeq, sort_key


def _canon(key) -> tuple:
    key = tuple(key)
    if key and key[-1] == 0:
        key = tuple(ExponentSeq(key))
    return key


def _weight(key) -> int:
    return sum(i * m for i, m in enumerate(key, 1))


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _seq_text(key) -> str:
    return ",".join(map(str, key)) if key else "0"


def _seq_parse(text) -> tuple:
    if isinstance(text, (list, tuple)):
        return _canon(text)
    return _canon(int(t) for t in text.split(","))


def format_monomial(key, var="b", unicode=False) -> str:
    parts = []
    for i, m in enumerate(key, 1):
        if not m:
            continue
        if m == 1:
            parts.append(f"{var}_{i}")
        elif unicode:
            parts.append(f"{var}_{i}" + str(m).translate(_SUPERSCRIPT))
        else:
            parts.append(f"{var}_{i}^{m}")
    return " ".join(parts)


def _format_terms(items, fmt) -> str:
    if not items:
        return "0"
    out = []
    for idx, (key, c) in enumerate(items):
        mono = fmt(key)
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag} {mono}" if mono else str(mag))
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class GPoly:
    """Integer polynomial in ``b_1, b_2, ...``; ``terms`` maps exponent
    tuples to nonzero ints."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple, int] = {}
        if terms:
            for k, v in dict(terms).items():
                if not isinstance(v, int):
                    raise TypeError(f"coefficients must be int, got {type(v).__name__}")
                k = _canon(k)
                clean[k] = clean.get(k, 0) + v
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "GPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "GPoly":
        return cls._raw({})

    @classmethod
    def const(cls, c: int) -> "GPoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def one(cls) -> "GPoly":
        return cls.const(1)

    @classmethod
    def gen(cls, k: int) -> "GPoly":
        """The generator ``b_k``; ``gen(0)`` is 1."""
        if k < 0:
            raise ValueError("generator index must be >= 0")
        if k == 0:
            return cls.one()
        return cls._raw({tuple(ExponentSeq.eps(k)): 1})

    @classmethod
    def monomial(cls, omega, coeff: int = 1) -> "GPoly":
        return cls._raw({tuple(ExponentSeq(omega)): coeff} if coeff else {})

    @staticmethod
    def _coerce(other):
        if isinstance(other, GPoly):
            return other
        if isinstance(other, int):
            return GPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return GPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return GPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return GPoly.zero()
            return GPoly._raw({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, GPoly):
            return NotImplemented
        return GPoly._raw(kernels.poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = GPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, omega) -> int:
        return self.terms.get(tuple(ExponentSeq(omega)), 0)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def homogeneous(self, weight: int) -> "GPoly":
        """Component of grading ``2 * weight``."""
        return GPoly._raw({k: v for k, v in self.terms.items() if _weight(k) == weight})

    def weights(self) -> set[int]:
        return {_weight(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def grading(self) -> int | None:
        """Grading of a homogeneous nonzero polynomial, else ``None``."""
        ws = self.weights()
        return 2 * ws.pop() if len(ws) == 1 else None

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def map_terms(self, fn) -> "GPoly":
        """Linear extension of ``fn(exponent tuple) -> GPoly``."""
        out = GPoly.zero()
        for k, v in self.terms.items():
            out = out + fn(k) * v
        return out

    def format(self, var: str = "b", unicode: bool = False) -> str:
        return _format_terms(self.items(), lambda k: format_monomial(k, var, unicode))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GPoly({self.format()})"

    def to_json(self) -> list:
        return [{"exp": _seq_text(k), "coeff": str(v)} for k, v in self.items()]

    @classmethod
    def from_json(cls, data) -> "GPoly":
        return cls({_seq_parse(t["exp"]): int(t["coeff"]) for t in data})


class GTensor:
    """Integer combination of pairs of monomials: an element of S_* (x) S_*."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple, int] = {}
        for (l, r), v in dict(terms or {}).items():
            k = (_canon(l), _canon(r))
            clean[k] = clean.get(k, 0) + v
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, terms):
        t = cls.__new__(cls)
        t.terms = terms
        return t

    @classmethod
    def one(cls):
        return cls._raw({((), ()): 1})

    @classmethod
    def pure(cls, left: GPoly, right: GPoly) -> "GTensor":
        """``left (x) right``."""
        out = {}
        for kl, vl in left.terms.items():
            for kr, vr in right.terms.items():
                out[(kl, kr)] = vl * vr
        return cls._raw(out)

    def __add__(self, other):
        if not isinstance(other, GTensor):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return GTensor._raw(out)

    def __neg__(self):
        return GTensor._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GTensor._raw({k: v * other for k, v in self.terms.items()} if other else {})
        if not isinstance(other, GTensor):
            return NotImplemented
        return GTensor._raw(kernels.tensor_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = GTensor.one()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GTensor):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, left, right) -> int:
        return self.terms.get((tuple(ExponentSeq(left)), tuple(ExponentSeq(right))), 0)

    def items(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1])))

    def contract_left(self, fn) -> GPoly:
        """``sum fn(a1) * a2`` with ``fn`` returning an int per monomial."""
        out: dict[tuple, int] = {}
        for (l, r), v in self.terms.items():
            c = fn(l)
            if c:
                out[r] = out.get(r, 0) + c * v
        return GPoly._raw({k: v for k, v in out.items() if v})

    def contract_right(self, fn) -> GPoly:
        out: dict[tuple, int] = {}
        for (l, r), v in self.terms.items():
            c = fn(r)
            if c:
                out[l] = out.get(l, 0) + c * v
        return GPoly._raw({k: v for k, v in out.items() if v})

    def format(self, var: str = "b", unicode: bool = False) -> str:
        def fmt(key):
            l, r = key
            return f"{format_monomial(l, var, unicode) or '1'} ⊗ {format_monomial(r, var, unicode) or '1'}"

        if not self.terms:
            return "0"
        out = []
        for idx, (key, c) in enumerate(self.items()):
            mag = abs(c)
            body = fmt(key) if mag == 1 else f"{mag} {fmt(key)}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GTensor({self.format()})"

    def to_json(self) -> list:
        return [{"left": _seq_text(l), "right": _seq_text(r), "coeff": str(v)}
                for (l, r), v in self.items()]

    @classmethod
    def from_json(cls, data) -> "GTensor":
        return cls({(_seq_parse(t["left"]), _seq_parse(t["right"])): int(t["coeff"])
                    for t in data})


# ------------------------------------------------------------ series calculus

def _series_mul(A, B, top):
    """Product of two truncated series (lists of GPoly indexed by degree)."""
    out = [GPoly.zero() for _ in range(top + 1)]
    for i, a in enumerate(A[: top + 1]):
        if not a:
            continue
        for j, b in enumerate(B[: top + 1 - i]):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def _generalized_binomial(n: int, i: int) -> int:
    num = 1
    den = 1
    for t in range(i):
        num *= n - t
        den *= t + 1
    return num // den


@lru_cache(maxsize=None)
def _u_powers(k: int) -> tuple:
    """``u^i`` truncated at degree ``k`` for ``u = b_1 t + b_2 t^2 + ...``."""
    u = [GPoly.zero()] + [GPoly.gen(j) for j in range(1, k + 1)]
    pows = [[GPoly.one()] + [GPoly.zero()] * k]
    for _ in range(k):
        pows.append(_series_mul(pows[-1], u, k))
    return tuple(tuple(p) for p in pows)


@lru_cache(maxsize=None)
def power_components(n: int, k: int) -> tuple:
    """``((b)^n_0, ..., (b)^n_k)`` for any integer ``n``.

    Uses the binomial series of ``(1 + u)^n`` with ``u = b - 1``; only
    ``u^i`` with ``i <= k`` reach degree ``k``.
    """
    pows = _u_powers(k)
    out = []
    for d in range(k + 1):
        acc = GPoly.zero()
        for i in range(d + 1):
            c = _generalized_binomial(n, i)
            if c:
                acc = acc + pows[i][d] * c
        out.append(acc)
    return tuple(out)


def series_power_component(n: int, k: int) -> GPoly:
    """The grading-``2k`` component of ``(sum_j b_j)^n``."""
    if k < 0:
        return GPoly.zero()
    return power_components(n, k)[k]


@lru_cache(maxsize=None)
def _reversion(maxdeg: int) -> tuple:
    rev = [GPoly.one()]
    for d in range(1, maxdeg + 1):
        acc = GPoly.zero()
        for m in range(d):
            acc = acc + rev[m] * series_power_component(m + 1, d - m)
        rev.append(-acc)
    return tuple(rev)


def reversion(maxdeg: int) -> list[GPoly]:
    """``[gbar_1, ..., gbar_maxdeg]``: coefficients of the compositional
    inverse of ``t + b_1 t^2 + b_2 t^3 + ...``.

    Solved degree by degree from ``t = sum_n gbar_n B(t)^(n+1)``.
    """
    if maxdeg < 1:
        raise ValueError("maxdeg must be >= 1")
    return list(_reversion(maxdeg)[1:])


def reversion_coefficients(maxdeg: int) -> list[GPoly]:
    """Same as :func:`reversion` with ``gbar_0 = 1`` prepended."""
    return list(_reversion(maxdeg))


def gbar(n: int) -> GPoly:
    return _reversion(max(n, 1))[n]


def identity_series(top: int) -> list[GPoly]:
    return [GPoly.one()] + [GPoly.zero()] * top


def generator_series(top: int) -> list[GPoly]:
    """``[1, b_1, ..., b_top]``: the series ``sum b_m t^(m+1)``."""
    return [GPoly.gen(m) for m in range(top + 1)]


def substitute_series(outer, inner, target: int) -> list[GPoly]:
    """Coefficients ``c_0..c_target`` of
    ``sum_n a_n (sum_m b_m t^(m+1))^(n+1) = sum_d c_d t^(d+1)``.
    """
    outer = [GPoly._coerce(a) for a in outer]
    inner = [GPoly._coerce(b) for b in inner]
    if not inner or inner[0] != 1 or (outer and outer[0] != 1):
        raise ValueError("series must have unit leading coefficient")
    inner = (inner + [GPoly.zero()] * (target + 1))[: target + 1]
    out = [GPoly.zero() for _ in range(target + 1)]
    power = list(inner)  # (inner/t)^(n+1), starting at n = 0
    for n in range(min(len(outer), target + 1)):
        a = outer[n]
        if a:
            for d in range(n, target + 1):
                if power[d - n]:
                    out[d] = out[d] + a * power[d - n]
        if n < target:
            power = _series_mul(power, inner, target)
    return out
