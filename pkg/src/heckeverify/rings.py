"""Exact rational scalars and univariate Laurent polynomials.

All spectral-parameter dependence in the library lives in one formal
multiplicative variable ``u``.  Coefficients are exact rationals; a Laurent
polynomial is a finite map ``degree -> coefficient`` with no stored zeros,
so equality of polynomials is equality of dicts.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAUnit

try:  # gmpy2.mpq is an order of magnitude faster than Fraction at this workload
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction


def rat(num, den=1) -> Rational:
    """Exact rational ``num/den`` in canonical reduced form."""
    return Rational(num, den)


_ZERO = rat(0)
_ONE = rat(1)


def rat_str(x) -> str:
    """Canonical ``num/den`` string (den always printed positive)."""
    n, d = x.numerator, x.denominator
    return f"{n}/{d}"


class LaurentPoly:
    """Finite map degree -> nonzero Rational in one multiplicative variable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for deg, c in terms.items():
                c = c if isinstance(c, Rational) else rat(c)
                if c != 0:
                    t[int(deg)] = c
        self.terms = t

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def unit(cls, deg: int = 1, c=1) -> "LaurentPoly":
        """The single term ``c * u^deg``."""
        return cls({deg: c})

    # -- basic queries ------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    @property
    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def min_deg(self) -> int:
        return min(self.terms)

    def max_deg(self) -> int:
        return max(self.terms)

    def coeff(self, deg: int):
        return self.terms.get(deg, _ZERO)

    def constant_value(self):
        """The value of a constant polynomial as a Rational."""
        if not self.terms:
            return _ZERO
        if set(self.terms) != {0}:
            raise ValueError("polynomial is not constant")
        return self.terms[0]

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for deg, c in other.terms.items():
            s = t.get(deg, _ZERO) + c
            if s:
                t[deg] = s
            else:
                del t[deg]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {d: -c for d, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            t: dict = {}
            _mul_into(t, self.terms, other.terms)
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = t
            return out
        if isinstance(other, (int, Rational, Fraction)):
            c = other if isinstance(other, Rational) else rat(other)
            if c == 0:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {d: v * c for d, v in self.terms.items()}
            return out
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.invert_unit() ** (-n)
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Rational, Fraction)):
            return self.terms == LaurentPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- specific operations -------------------------------------------
    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``u^k``."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {d + k: c for d, c in self.terms.items()}
        return out

    def compose_power(self, k: int) -> "LaurentPoly":
        """Substitute ``u -> u^k`` (k nonzero)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {d * k: c for d, c in self.terms.items()}
        return out

    def invert_unit(self) -> "LaurentPoly":
        """Inverse of a single-term polynomial ``c*u^k`` -> ``c^-1 u^-k``."""
        if len(self.terms) != 1:
            raise NotAUnit(f"not a unit: {self}")
        (deg, c), = self.terms.items()
        return LaurentPoly({-deg: _ONE / c})

    def derivative_at_one(self):
        """Additive-variable derivative at the unit point.

        With ``u = exp(-2*lam)``, d/d(lam) at lam = 0 equals
        ``sum_k (-2k) * coeff_k``.
        """
        total = _ZERO
        for d, c in self.terms.items():
            total += rat(-2 * d) * c
        return total

    def evaluate(self, x):
        """Evaluate at a nonzero rational point."""
        x = x if isinstance(x, Rational) else rat(x)
        total = _ZERO
        for d, c in self.terms.items():
            total += c * x**d
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for d in sorted(self.terms):
            c = self.terms[d]
            if d == 0:
                mono = rat_str(c)
            else:
                var = "u" if d == 1 else f"u^{d}"
                mono = var if c == 1 else (f"-{var}" if c == -1 else f"{rat_str(c)}*{var}")
            if parts and not mono.startswith("-"):
                parts.append("+" + mono)
            else:
                parts.append(mono)
        return "".join(parts)

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Rational, Fraction)):
        return LaurentPoly.const(x)
    return NotImplemented


def _mul_into(acc: dict, a: dict, b: dict) -> None:
    """acc += a*b on raw term dicts (hot path for matrix products)."""
    if not a or not b:
        return
    for da, ca in a.items():
        for db, cb in b.items():
            d = da + db
            s = acc.get(d)
            if s is None:
                acc[d] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    acc[d] = s
                else:
                    del acc[d]


# ---------------------------------------------------------------------------
# polynomial gcd and exact ratios
# ---------------------------------------------------------------------------

def _to_dense(p: LaurentPoly) -> tuple[int, list]:
    """Split ``p = u^shift * P`` with ``P`` an ordinary poly, nonzero constant term."""
    shift = p.min_deg()
    top = p.max_deg()
    coeffs = [p.coeff(d) for d in range(shift, top + 1)]
    return shift, coeffs


def _dense_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = _ONE / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _dense_trim(a)


def _dense_gcd(a: list, b: list) -> list:
    a, b = _dense_trim(list(a)), _dense_trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    inv = _ONE / a[-1]
    return [c * inv for c in a]


class LaurentRatio:
    """Reduced exact ratio ``num/den`` of Laurent polynomials.

    Canonical form: ``den`` is an ordinary polynomial with constant term 1;
    any common factor (including monomials) sits in ``num``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        self.num = num
        self.den = den

    @property
    def is_scalar(self) -> bool:
        return self.den == LaurentPoly.const(1) and self.num.is_constant

    @property
    def is_single_term(self) -> bool:
        return self.den == LaurentPoly.const(1) and self.num.is_single_term

    def scalar_value(self):
        if not self.is_scalar:
            raise ValueError(f"ratio {self} is not a scalar")
        return self.num.coeff(0)

    def __eq__(self, other):
        if not isinstance(other, LaurentRatio):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == LaurentPoly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def lp_ratio(a: LaurentPoly, b: LaurentPoly) -> LaurentRatio | None:
    """Reduced exact ratio ``a/b`` over the rational-function field.

    Returns ``r = (p, q)`` with ``a*q == b*p`` exactly.  ``(0, 0)`` gives
    ratio 1; ``(0, b!=0)`` gives ratio 0; ``(a!=0, 0)`` has no ratio.
    """
    if b.is_zero:
        return LaurentRatio(LaurentPoly.const(1), LaurentPoly.const(1)) if a.is_zero else None
    if a.is_zero:
        return LaurentRatio(LaurentPoly.zero(), LaurentPoly.const(1))
    sa, da = _to_dense(a)
    sb, db = _to_dense(b)
    g = _dense_gcd(da, db)
    p, rp = _dense_divmod(da, g)
    q, rq = _dense_divmod(db, g)
    assert not rp and not rq
    c = q[0]
    p = [x / c for x in p]
    q = [x / c for x in q]
    num = LaurentPoly({sa - sb + i: x for i, x in enumerate(p)})
    den = LaurentPoly({i: x for i, x in enumerate(q)})
    return LaurentRatio(num, den)


def lp_proportional(a: LaurentPoly, b: LaurentPoly) -> LaurentRatio | None:
    """Single-term ratio ``a/b`` when one exists, else None.

    Scalar proportionality is up-to-monomial: ``(u, u^3) -> u^-2`` and
    ``(2+2u, 1+u) -> 2`` qualify, ``(1+u, 1+2u)`` does not.
    """
    r = lp_ratio(a, b)
    if r is None:
        return None
    if r.num.is_zero or r.is_single_term:
        return r
    return None
