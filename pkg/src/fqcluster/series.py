"""Exact sparse polynomials and truncated power series in ``s, t, q, x``.

Two value types live here:

``Polynomial``
    A finite, exact polynomial.  Used for distribution polynomials, cluster
    polynomials, q-analogues and FQSym coefficients.

``TruncatedSeries``
    A power series known only inside a box ``e_v <= T_v`` (one bound per
    variable).  Binary operations intersect the boxes, and reading a
    coefficient outside the box raises :class:`TruncationError` instead of
    returning a silent zero.

Coefficients are Python ints whenever they are integral and ``Fraction``
otherwise; no floating point is used anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "VARS", "Polynomial", "TruncatedSeries", "TruncationError",
    "q_factorial", "q_binomial", "q_integer", "hadamard_t", "hadamard_pow",
    "hadamard_inv", "hadamard_sum", "hadamard_identity", "substitute",
    "sqrt_one_plus", "x_slice", "mul", "invert", "format_terms", "parse_terms",
]

VARS = ("s", "t", "q", "x")
_IDX = {v: i for i, v in enumerate(VARS)}
_ZERO4 = (0, 0, 0, 0)

Number = Union[int, Fraction]
Exp = tuple  # (e_s, e_t, e_q, e_x)


class TruncationError(ValueError):
    pass


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _exp(var: str, k: int = 1) -> Exp:
    e = [0, 0, 0, 0]
    e[_IDX[var]] = k
    return tuple(e)


def _mono_str(e: Exp) -> str:
    parts = []
    for v, k in zip(VARS, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def _sort_key(e: Exp):
    return (sum(e), e)


def format_terms(terms: Mapping[Exp, Number]) -> str:
    """Canonical text: by total degree, then lexicographic in (s, t, q, x)."""
    if not terms:
        return "0"
    out = []
    for e in sorted(terms, key=_sort_key):
        c = terms[e]
        mono = _mono_str(e)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_terms(text: str) -> dict[Exp, Number]:
    """Inverse of :func:`format_terms` (also accepts ``**`` for powers)."""
    text = text.replace("**", "^").replace(" ", "")
    if text in ("", "0"):
        return {}
    out: dict[Exp, Number] = {}
    for sign, body in _TERM_RE.findall(text):
        coeff: Number = 1
        e = [0, 0, 0, 0]
        for factor in body.split("*"):
            if factor in _IDX:
                e[_IDX[factor]] += 1
            elif "^" in factor:
                v, k = factor.split("^")
                e[_IDX[v]] += int(k)
            else:
                coeff *= Fraction(factor)
        if sign == "-":
            coeff = -coeff
        key = tuple(e)
        out[key] = _norm(out.get(key, 0) + coeff)
        if out[key] == 0:
            del out[key]
    return out


class Polynomial:
    """Exact multivariate polynomial in (s, t, q, x)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Number] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != 4 or min(e) < 0:
                        raise ValueError(f"bad exponent {e}")
                    clean[tuple(e)] = _norm(c)
        self.terms: dict[Exp, Number] = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "Polynomial":
        return cls({_ZERO4: c})

    @classmethod
    def var(cls, name: str, k: int = 1) -> "Polynomial":
        return cls({_exp(name, k): 1})

    @classmethod
    def monomial(cls, c: Number = 1, s: int = 0, t: int = 0, q: int = 0, x: int = 0):
        return cls({(s, t, q, x): c})

    @classmethod
    def univariate(cls, var: str, coeffs: Iterable[Number]) -> "Polynomial":
        return cls({_exp(var, k): c for k, c in enumerate(coeffs)})

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return cls(parse_terms(text))

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (a0, a1, a2, a3), ca in self.terms.items():
            for (b0, b1, b2, b3), cb in other.terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
                out[e] = out.get(e, 0) + ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Polynomial.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({format_terms(self.terms)!r})"

    def __str__(self):
        return format_terms(self.terms)

    # -- queries ----------------------------------------------------------
    def coeff(self, s: int = 0, t: int = 0, q: int = 0, x: int = 0) -> Number:
        return self.terms.get((s, t, q, x), 0)

    def degree(self, var: str) -> int:
        i = _IDX[var]
        return max((e[i] for e in self.terms), default=-1)

    def variables(self) -> set[str]:
        return {v for e in self.terms for v, k in zip(VARS, e) if k}

    def coeff_list(self, var: str = "t") -> list[Number]:
        """Dense coefficient list of a polynomial in ``var`` alone."""
        i = _IDX[var]
        if any(k for e in self.terms for j, k in enumerate(e) if j != i):
            raise ValueError(f"{self} is not univariate in {var}")
        out = [0] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def evaluate(self, **values: Number) -> "Polynomial":
        """Substitute numbers for some variables."""
        idx = [(_IDX[v], val) for v, val in values.items()]
        out: dict = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, val in idx:
                c = c * val ** e2[i] if e2[i] else c
                e2[i] = 0
            key = tuple(e2)
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    def compose(self, **images: "Polynomial") -> "Polynomial":
        """Substitute polynomials for variables (all simultaneously)."""
        idx = [(_IDX[v], Polynomial._coerce(p)) for v, p in images.items()]
        cache: dict = {}
        out = Polynomial()
        for e, c in self.terms.items():
            e2 = list(e)
            term = Polynomial.const(c)
            for i, p in idx:
                k = e2[i]
                e2[i] = 0
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = p ** k
                    term = term * cache[key]
            out = out + term * Polynomial({tuple(e2): 1})
        return out

    def map_monomials(self, fn) -> "Polynomial":
        """Apply ``fn(exp) -> exp`` to every monomial (coefficients kept)."""
        out: dict = {}
        for e, c in self.terms.items():
            e2 = tuple(fn(e))
            out[e2] = out.get(e2, 0) + c
        return Polynomial(out)

    def to_series(self, trunc) -> "TruncatedSeries":
        return TruncatedSeries(self.terms, trunc)

    def to_json(self) -> list:
        return [[list(e[:3]), str(c)] for e, c in sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        return cls({(e[0], e[1], e[2], 0): _parse_number(c) for e, c in data})


def _parse_number(text: str) -> Number:
    return _norm(Fraction(text))


class TruncatedSeries:
    """Sparse exact power series in (s, t, q, x) with per-variable truncation."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Mapping[Exp, Number] | None = None, trunc=(0, 0, 0, 0)):
        trunc = _as_trunc(trunc)
        T0, T1, T2, T3 = trunc
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c and e[0] <= T0 and e[1] <= T1 and e[2] <= T2 and e[3] <= T3:
                    clean[e] = _norm(c)
        self.coeffs: dict[Exp, Number] = clean
        self.trunc: tuple[int, int, int, int] = trunc

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Number, trunc) -> "TruncatedSeries":
        return cls({_ZERO4: c}, trunc)

    @classmethod
    def var(cls, name: str, trunc, k: int = 1) -> "TruncatedSeries":
        return cls({_exp(name, k): 1}, trunc)

    @classmethod
    def geometric(cls, var: str, trunc, ratio: Number = 1) -> "TruncatedSeries":
        """``1/(1 - ratio*var)`` truncated."""
        trunc = _as_trunc(trunc)
        top = trunc[_IDX[var]]
        return cls({_exp(var, k): Fraction(ratio) ** k for k in range(top + 1)}, trunc)

    # -- basic protocol ---------------------------------------------------
    def with_trunc(self, trunc) -> "TruncatedSeries":
        trunc = _as_trunc(trunc)
        if any(a > b for a, b in zip(trunc, self.trunc)):
            raise TruncationError(f"cannot widen truncation {self.trunc} to {trunc}")
        return TruncatedSeries(self.coeffs, trunc)

    def coeff(self, s: int = 0, t: int = 0, q: int = 0, x: int = 0) -> Number:
        e = (s, t, q, x)
        if any(a > b for a, b in zip(e, self.trunc)):
            raise TruncationError(f"coefficient {e} lies beyond truncation {self.trunc}")
        return self.coeffs.get(e, 0)

    def __getitem__(self, e: Exp) -> Number:
        return self.coeff(*e)

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> Number:
        return self.coeffs.get(_ZERO4, 0)

    def order(self, var: str | None = None) -> int | None:
        """Minimum degree (total, or in ``var``) over the support; None if zero."""
        if not self.coeffs:
            return None
        if var is None:
            return min(sum(e) for e in self.coeffs)
        i = _IDX[var]
        return min(e[i] for e in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def equal_up_to(self, other: "TruncatedSeries") -> bool:
        """Equality on the common truncation box."""
        box = _meet(self.trunc, other.trunc)
        a = TruncatedSeries(self.coeffs, box)
        b = TruncatedSeries(other.coeffs, box)
        return a.coeffs == b.coeffs

    def __repr__(self):
        return f"TruncatedSeries({format_terms(self.coeffs)!r}, trunc={self.trunc})"

    def __str__(self):
        return format_terms(self.coeffs) + f"  [trunc s,t,q,x <= {self.trunc}]"

    # -- ring operations --------------------------------------------------
    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.const(other, self.trunc)
        if isinstance(other, Polynomial):
            return TruncatedSeries(other.terms, self.trunc)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        box = _meet(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(out, box)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries({e: -c for e, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Number) -> "TruncatedSeries":
        return TruncatedSeries({e: v * c for e, v in self.coeffs.items()}, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(self, invert(other))

    def __rtruediv__(self, other):
        return self._lift(other) * invert(self)

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        out = TruncatedSeries.const(1, self.trunc)
        base = self
        while k:
            if k & 1:
                out = mul(out, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return out

    # -- slicing ----------------------------------------------------------
    def slice(self, var: str, k: int) -> "TruncatedSeries":
        """Coefficient of ``var^k`` as a series in the other variables."""
        i = _IDX[var]
        if k > self.trunc[i]:
            raise TruncationError(f"{var}^{k} lies beyond truncation {self.trunc}")
        trunc = list(self.trunc)
        trunc[i] = 0
        out = {}
        for e, c in self.coeffs.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return TruncatedSeries(out, trunc)

    def shift(self, var: str, k: int) -> "TruncatedSeries":
        """Multiply by ``var^k`` (k may be negative if the division is exact)."""
        i = _IDX[var]
        if k < 0 and any(e[i] < -k for e in self.coeffs):
            raise ValueError(f"series is not divisible by {var}^{-k}")
        trunc = list(self.trunc)
        trunc[i] = trunc[i] + k
        if trunc[i] < 0:
            raise TruncationError("shift leaves no known coefficients")
        out = {}
        for e, c in self.coeffs.items():
            e2 = list(e)
            e2[i] += k
            out[tuple(e2)] = c
        return TruncatedSeries(out, trunc)

    def evaluate(self, var: str, value: Number) -> "TruncatedSeries":
        """Set a variable to a number (only exact when the series is polynomial in it)."""
        i = _IDX[var]
        trunc = list(self.trunc)
        trunc[i] = 0
        out: dict = {}
        for e, c in self.coeffs.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            key = tuple(e2)
            out[key] = out.get(key, 0) + c * (value ** k if k else 1)
        return TruncatedSeries(out, trunc)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)


def _as_trunc(trunc) -> tuple[int, int, int, int]:
    if isinstance(trunc, Mapping):
        trunc = tuple(trunc.get(v, 0) for v in VARS)
    trunc = tuple(int(k) for k in trunc)
    if len(trunc) != 4 or min(trunc) < 0:
        raise ValueError(f"bad truncation {trunc}")
    return trunc


def _meet(a, b):
    return (min(a[0], b[0]), min(a[1], b[1]), min(a[2], b[2]), min(a[3], b[3]))


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    box = _meet(f.trunc, g.trunc)
    T0, T1, T2, T3 = box
    if len(f.coeffs) > len(g.coeffs):
        f, g = g, f
    gl = sorted(g.coeffs.items(), key=lambda kv: kv[0][3])
    out: dict = {}
    get = out.get
    for (a0, a1, a2, a3), ca in f.coeffs.items():
        if a0 > T0 or a1 > T1 or a2 > T2 or a3 > T3:
            continue
        room3 = T3 - a3
        for (b0, b1, b2, b3), cb in gl:
            if b3 > room3:
                break
            e0 = a0 + b0
            e1 = a1 + b1
            e2 = a2 + b2
            if e0 > T0 or e1 > T1 or e2 > T2:
                continue
            e = (e0, e1, e2, a3 + b3)
            out[e] = get(e, 0) + ca * cb
    return TruncatedSeries(out, box)


def _total_bound(trunc) -> int:
    return sum(trunc)


def invert(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant term."""
    c = f.constant_term()
    if c == 0:
        raise ZeroDivisionError("not invertible: zero constant term")
    inv_c = Fraction(1) / c if not isinstance(c, Fraction) else 1 / c
    g = TruncatedSeries.const(inv_c, f.trunc)
    # Newton: each step doubles the total degree to which g is correct.
    reach, target = 1, _total_bound(f.trunc) + 1
    two = TruncatedSeries.const(2, f.trunc)
    while reach < target:
        g = mul(g, two - mul(f, g))
        reach *= 2
    return g


def sqrt_one_plus(f: TruncatedSeries) -> TruncatedSeries:
    """Principal square root of ``1 + f`` for ``f`` with zero constant term."""
    if f.constant_term() != 0:
        raise ValueError("sqrt_one_plus needs a series with zero constant term")
    one = TruncatedSeries.const(1, f.trunc)
    target = one + f
    g = one
    reach, bound = 1, _total_bound(f.trunc) + 1
    half = Fraction(1, 2)
    while reach < bound:
        g = (g + mul(target, invert(g))).scale(half)
        reach *= 2
    return g


# -- Hadamard product in t ---------------------------------------------------

def _t_slices(f: TruncatedSeries) -> dict[int, dict]:
    out: dict[int, dict] = {}
    for (e0, e1, e2, e3), c in f.coeffs.items():
        out.setdefault(e1, {})[(e0, 0, e2, e3)] = c
    return out


def hadamard_t(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise product in t, ordinary product in s, q, x."""
    box = _meet(f.trunc, g.trunc)
    slice_box = (box[0], 0, box[2], box[3])
    fs, gs = _t_slices(f), _t_slices(g)
    out: dict = {}
    for k, fk in fs.items():
        if k > box[1] or k not in gs:
            continue
        prod = mul(TruncatedSeries(fk, slice_box), TruncatedSeries(gs[k], slice_box))
        for (e0, _, e2, e3), c in prod.coeffs.items():
            out[(e0, k, e2, e3)] = c
    return TruncatedSeries(out, box)


def hadamard_identity(trunc) -> TruncatedSeries:
    """``1/(1-t)``, the identity for the Hadamard product in t."""
    return TruncatedSeries.geometric("t", trunc)


def hadamard_pow(f: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        return hadamard_pow(hadamard_inv(f), -n)
    out = hadamard_identity(f.trunc)
    for _ in range(n):
        out = hadamard_t(out, f)
    return out


def hadamard_inv(f: TruncatedSeries) -> TruncatedSeries:
    box = f.trunc
    slice_box = (box[0], 0, box[2], box[3])
    fs = _t_slices(f)
    out: dict = {}
    for k in range(box[1] + 1):
        sl = TruncatedSeries(fs.get(k, {}), slice_box)
        if sl.constant_term() == 0:
            raise ZeroDivisionError(f"t-slice of degree {k} is not invertible")
        for (e0, _, e2, e3), c in invert(sl).coeffs.items():
            out[(e0, k, e2, e3)] = c
    return TruncatedSeries(out, box)


def hadamard_sum(f: TruncatedSeries, n_max: int | None = None) -> TruncatedSeries:
    """``sum_{n=0}^{n_max} f^{*<n>}`` with a running accumulator.

    When ``f`` has no x^0 part, powers beyond the x-truncation vanish, so the
    default ``n_max`` is ``T_x``.
    """
    if n_max is None:
        if f.order("x") is not None and f.order("x") < 1:
            raise ValueError("default Hadamard sum needs f with positive x-order")
        n_max = f.trunc[3]
    term = hadamard_identity(f.trunc)
    acc = term
    for _ in range(n_max):
        term = hadamard_t(term, f)
        acc = acc + term
    return acc


# -- substitution ------------------------------------------------------------

def substitute(f: TruncatedSeries, var: str, g: TruncatedSeries) -> TruncatedSeries:
    """Compose ``f`` with ``var := g``.

    Sound only when ``g`` has positive order in some variable ``w``: the
    dropped terms ``var^k`` with ``k > T_var`` then only reach w-degrees above
    ``order_w(g) * (T_var + 1) - 1``, which becomes the new bound on ``w``.
    """
    i = _IDX[var]
    top = f.trunc[i]
    trunc = list(_meet(f.trunc, g.trunc))
    trunc[i] = g.trunc[i]
    if not g.is_zero():
        positive = {w: o for w in VARS if (o := g.order(w))}
        if not positive:
            raise ValueError("unbounded substitution: image has no positive-order variable")
        for w, o in positive.items():
            j = _IDX[w]
            trunc[j] = min(trunc[j], o * (top + 1) - 1)
    trunc = tuple(trunc)
    parts: dict[int, dict] = {}
    for e, c in f.coeffs.items():
        e2 = list(e)
        k = e2[i]
        e2[i] = 0
        parts.setdefault(k, {})[tuple(e2)] = c
    out = TruncatedSeries({}, trunc)
    power = TruncatedSeries.const(1, trunc)
    g_t = TruncatedSeries(g.coeffs, trunc)
    for k in range(top + 1):
        if k:
            power = mul(power, g_t)
            if power.is_zero():
                break
        if k in parts:
            out = out + mul(TruncatedSeries(parts[k], trunc), power)
    return out


def x_slice(f: TruncatedSeries, n: int) -> TruncatedSeries:
    return f.slice("x", n)


# -- q-analogues ---------------------------------------------------------------

def _qpoly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(a[k + len(b) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


def q_integer(k: int) -> Polynomial:
    """``[k]_q = 1 + q + ... + q^(k-1)``."""
    return Polynomial.univariate("q", [1] * k)


def _q_factorial_list(n: int) -> list[int]:
    out = [1]
    for k in range(2, n + 1):
        out = _qpoly_mul(out, [1] * k)
    return out


def q_factorial(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return Polynomial.univariate("q", _q_factorial_list(n))


def q_binomial(n: int, k: int) -> Polynomial:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    num = _q_factorial_list(n)
    den = _qpoly_mul(_q_factorial_list(k), _q_factorial_list(n - k))
    return Polynomial.univariate("q", _qpoly_divexact(num, den))


