"""Exact arithmetic over Q and over the rational-function field Q(t, p).

``t`` is the degeneration variable and ``p`` the single formal family
parameter; nothing else in the toolkit ever needs another indeterminate,
so scalars are reduced ratios of bivariate Laurent polynomials with
``Fraction`` coefficients.  All values are immutable and all operations
pure, hence freely shareable between workers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Rational = Fraction


class DomainError(ZeroDivisionError):
    """Division by zero or an inadmissible exact substitution."""


class PoleError(ArithmeticError):
    """The value has a pole at t = 0, so its limit there does not exist."""


def _fgcd(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(gcd(a.numerator, b.numerator), lcm(a.denominator, b.denominator))


# ---------------------------------------------------------------------------
# univariate helpers; polynomials as {exponent: Fraction} with exponents >= 0
# ---------------------------------------------------------------------------

def _u_trim(f: dict) -> dict:
    return {e: c for e, c in f.items() if c}


def _u_sub_scaled(f: dict, g: dict, q: Fraction, shift: int) -> dict:
    out = dict(f)
    for e, c in g.items():
        k = e + shift
        nc = out.get(k, Fraction(0)) - q * c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


def _u_divmod(f: dict, g: dict) -> tuple[dict, dict]:
    if not g:
        raise DomainError("univariate division by zero")
    dg = max(g)
    lg = g[dg]
    quo: dict = {}
    rem = dict(f)
    while rem:
        dr = max(rem)
        if dr < dg:
            break
        q = rem[dr] / lg
        quo[dr - dg] = q
        rem = _u_sub_scaled(rem, g, q, dr - dg)
    return quo, rem


def _u_gcd(f: dict, g: dict) -> dict:
    a, b = _u_trim(f), _u_trim(g)
    while b:
        a, b = b, _u_divmod(a, b)[1]
    if not a:
        return {}
    lead = a[max(a)]
    return {e: c / lead for e, c in a.items()}


def _u_div_exact(f: dict, g: dict) -> dict:
    quo, rem = _u_divmod(f, g)
    if rem:
        raise ArithmeticError("inexact univariate division")
    return quo


class LaurentPoly:
    """Bivariate Laurent polynomial in (t, p).

    ``terms`` maps exponent pairs (a, b) to nonzero Fraction coefficients;
    that map is the canonical form, so structural equality of the maps is
    equality of polynomials.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        if terms:
            self.terms = {k: v for k, v in terms.items() if v}
        else:
            self.terms = {}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(q) -> "LaurentPoly":
        q = Fraction(q)
        return LaurentPoly({(0, 0): q}) if q else LaurentPoly()

    @staticmethod
    def monomial(coef, a: int = 0, b: int = 0) -> "LaurentPoly":
        coef = Fraction(coef)
        return LaurentPoly({(a, b): coef}) if coef else LaurentPoly()

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {(0, 0)}:
            raise ValueError(f"not a constant: {self}")
        return self.terms[(0, 0)]

    def uses_t(self) -> bool:
        return any(a for a, _ in self.terms)

    def uses_p(self) -> bool:
        return any(b for _, b in self.terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, Fraction(0)) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        res = LaurentPoly()
        res.terms = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly()
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return _P_ZERO
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                nv = out.get(k, Fraction(0)) + c1 * c2
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        res = LaurentPoly()
        res.terms = out
        return res

    def scale(self, q: Fraction) -> "LaurentPoly":
        if not q:
            return _P_ZERO
        res = LaurentPoly()
        res.terms = {k: v * q for k, v in self.terms.items()}
        return res

    def shift(self, da: int, db: int) -> "LaurentPoly":
        res = LaurentPoly()
        res.terms = {(a + da, b + db): c for (a, b), c in self.terms.items()}
        return res

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise DomainError("negative power of a polynomial")
        out = _P_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure ----------------------------------------------------------

    def min_t(self) -> int:
        return min(a for a, _ in self.terms)

    def min_p(self) -> int:
        return min(b for _, b in self.terms)

    def lead_key(self) -> tuple[int, int]:
        return max(self.terms)

    def content(self) -> Fraction:
        c = Fraction(0)
        for v in self.terms.values():
            c = _fgcd(c, v)
        return c

    def p_slices(self) -> dict:
        """Split into {p-exponent: univariate-in-t dict}."""
        out: dict = {}
        for (a, b), c in self.terms.items():
            out.setdefault(b, {})[a] = c
        return out

    def t_slices(self) -> dict:
        out: dict = {}
        for (a, b), c in self.terms.items():
            out.setdefault(a, {})[b] = c
        return out

    # -- substitutions ------------------------------------------------------

    def subs_t0(self) -> "LaurentPoly":
        """Keep the t-degree-0 part; only meaningful when min_t >= 0."""
        res = LaurentPoly()
        res.terms = {(0, b): c for (a, b), c in self.terms.items() if a == 0}
        return res

    def rescale_t(self, L: int) -> "LaurentPoly":
        res = LaurentPoly()
        res.terms = {(a * L, b): c for (a, b), c in self.terms.items()}
        return res

    def eval_num(self, tv: Fraction, pv: Fraction) -> Fraction:
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            if (a < 0 and tv == 0) or (b < 0 and pv == 0):
                raise DomainError("evaluation at a pole of a Laurent monomial")
            total += c * tv**a * pv**b
        return total

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact multivariate division (raises if the quotient is not exact)."""
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        if self.is_zero():
            return _P_ZERO
        # shift both into true polynomials first
        fa, fb = self.min_t(), self.min_p()
        ga, gb = other.min_t(), other.min_p()
        f = self.shift(-min(fa, 0) if fa < 0 else 0, -min(fb, 0) if fb < 0 else 0)
        sa = min(fa, 0) if fa < 0 else 0
        sb = min(fb, 0) if fb < 0 else 0
        g = other.shift(-min(ga, 0) if ga < 0 else 0, -min(gb, 0) if gb < 0 else 0)
        ta = min(ga, 0) if ga < 0 else 0
        tb = min(gb, 0) if gb < 0 else 0
        quo: dict = {}
        rem = dict(f.terms)
        gl_key = g.lead_key()
        gl = g.terms[gl_key]
        while rem:
            rk = max(rem)
            qa, qb = rk[0] - gl_key[0], rk[1] - gl_key[1]
            if qa < 0 or qb < 0:
                raise ArithmeticError("inexact polynomial division")
            q = rem[rk] / gl
            quo[(qa, qb)] = q
            for (a, b), c in g.terms.items():
                k = (a + qa, b + qb)
                nv = rem.get(k, Fraction(0)) - q * c
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        res = LaurentPoly()
        res.terms = quo
        return res.shift(sa - ta, sb - tb)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            c = self.terms[(a, b)]
            factors = []
            if a:
                factors.append("t" if a == 1 else f"t^{a}")
            if b:
                factors.append("p" if b == 1 else f"p^{b}")
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            term = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else ("-" + out[2:])

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


_P_ZERO = LaurentPoly()
_P_ONE = LaurentPoly({(0, 0): Fraction(1)})


def _poly_uni_gcd_reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Cancel polynomial factors when the denominator is univariate.

    This covers every division the toolkit performs: denominators come from
    determinants of basis changes (univariate in t) or from eliminations over
    Q(p) (univariate in p).  Genuinely mixed denominators are left alone and
    equality falls back to cross-multiplication.
    """
    if den.is_const():
        return num, den
    if not den.uses_p():
        dslice = {a: c for (a, _), c in den.terms.items()}
        g = dslice
        for sl in num.p_slices().values():
            g = _u_gcd(g, sl)
            if not g or max(g) == 0:
                return num, den
        new_den = LaurentPoly({(a, 0): c for a, c in _u_div_exact(dslice, g).items()})
        new_num_terms: dict = {}
        for b, sl in num.p_slices().items():
            for a, c in _u_div_exact(sl, g).items():
                new_num_terms[(a, b)] = c
        return LaurentPoly(new_num_terms), new_den
    if not den.uses_t():
        dslice = {b: c for (_, b), c in den.terms.items()}
        g = dslice
        for sl in num.t_slices().values():
            g = _u_gcd(g, sl)
            if not g or max(g) == 0:
                return num, den
        new_den = LaurentPoly({(0, b): c for b, c in _u_div_exact(dslice, g).items()})
        new_num_terms = {}
        for a, sl in num.t_slices().items():
            for b, c in _u_div_exact(sl, g).items():
                new_num_terms[(a, b)] = c
        return LaurentPoly(new_num_terms), new_den
    return num, den


class Scalar:
    """Element of Q(t, p): a reduced ratio num/den of Laurent polynomials.

    Reduction removes monomial and rational-content factors, cancels
    univariate polynomial gcds, and normalizes the denominator to be a true
    polynomial with leading coefficient 1 under the lexicographic term order.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = _P_ONE, *, _reduced: bool = False):
        if _reduced:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise DomainError("zero denominator")
        if num.is_zero():
            self.num = _P_ZERO
            self.den = _P_ONE
            return
        # joint monomial factor
        da = min(num.min_t(), den.min_t())
        db = min(num.min_p(), den.min_p())
        if da or db:
            num = num.shift(-da, -db)
            den = den.shift(-da, -db)
        if not den.is_const():
            num, den = _poly_uni_gcd_reduce(num, den)
        # monic positive denominator
        lead = den.terms[den.lead_key()]
        if lead != 1:
            inv = 1 / lead
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @staticmethod
    def of(q) -> "Scalar":
        if isinstance(q, Scalar):
            return q
        return Scalar(LaurentPoly.const(q))

    @staticmethod
    def t_pow(a: int) -> "Scalar":
        return Scalar(LaurentPoly.monomial(1, a, 0))

    @staticmethod
    def p_pow(b: int) -> "Scalar":
        return Scalar(LaurentPoly.monomial(1, 0, b))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_rational(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def as_fraction(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def is_param_free(self) -> bool:
        return not (self.num.uses_p() or self.den.uses_p())

    def is_t_free(self) -> bool:
        return not (self.num.uses_t() or self.den.uses_t())

    # -- field operations ----------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, _reduced=True)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        den_one_l = self.den is _P_ONE or self.den.is_const() and self.den.const_value() == 1
        den_one_r = other.den is _P_ONE or other.den.is_const() and other.den.const_value() == 1
        if den_one_l and den_one_r:
            return Scalar(self.num * other.num, _P_ONE, _reduced=True)
        return Scalar(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.num.is_zero():
            raise DomainError("division by zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise DomainError("inverse of zero")
        return Scalar(self.den, self.num)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar(self.num**k, self.den**k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.of(other)
            else:
                return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        # reduction is complete on all paths that arise, but cross-multiply
        # anyway so that equality always agrees with the field structure
        return (self.num * other.den) == (other.num * self.den)

    __hash__ = None  # mutable-free but equality is semantic; do not hash

    # -- substitutions and limits --------------------------------------------

    def eval_at_zero(self) -> "Scalar":
        """Value at t = 0 as an element of Q(p); PoleError if none exists."""
        num, den = self.num, self.den
        if num.is_zero():
            return ZERO
        # after reduction both parts are true polynomials in t
        d0 = den.subs_t0()
        if d0.is_zero():
            raise PoleError(f"pole at t = 0 in {self}")
        return Scalar(num.subs_t0(), d0)

    def subs_p(self, value: "Scalar") -> "Scalar":
        """Substitute p := value (an exact scalar, possibly involving t)."""
        if not (self.num.uses_p() or self.den.uses_p()):
            return self

        def sub(poly: LaurentPoly) -> Scalar:
            total = ZERO
            for (a, b), c in poly.terms.items():
                term = Scalar(LaurentPoly.monomial(c, a, 0), _P_ONE, _reduced=True)
                if b:
                    term = term * value**b
                total = total + term
            return total

        return sub(self.num) / sub(self.den)

    def rescale_t(self, L: int) -> "Scalar":
        """Substitute t := t^L, multiplying every t-exponent by L (L >= 1)."""
        if L == 1:
            return self
        return Scalar(self.num.rescale_t(L), self.den.rescale_t(L))

    def eval_num(self, tv, pv) -> Fraction:
        tv, pv = Fraction(tv), Fraction(pv)
        d = self.den.eval_num(tv, pv)
        if d == 0:
            raise DomainError(f"denominator vanishes at ({tv}, {pv})")
        return self.num.eval_num(tv, pv) / d

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_const() and self.den.const_value() == 1:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar(_P_ZERO, _P_ONE, _reduced=True)
ONE = Scalar(_P_ONE, _P_ONE, _reduced=True)
T = Scalar.t_pow(1)
P = Scalar.p_pow(1)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Field arithmetic dispatch; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def rescale_exponents(s: Scalar, L: int) -> Scalar:
    """Global substitution t := s^L; limits at 0 are preserved since L >= 1."""
    if L < 1:
        raise ValueError("L must be a positive integer")
    return s.rescale_t(L)
