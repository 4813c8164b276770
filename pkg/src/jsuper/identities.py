"""Superidentity and graded polynomial identity checks.

The Jordan superidentity is evaluated on homogeneous basis quadruples only;
multilinearity makes that sufficient, and symbolic coefficients over Q(p)
make one check cover all family parameter values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import P, Scalar, ZERO
from .algebra import SuperAlgebra

EVEN = 0
ODD = 1


def _basis_name(J: SuperAlgebra, idx: int) -> str:
    return f"e{idx + 1}" if idx < J.m else f"f{idx - J.m + 1}"


def _sparse_pretty(J: SuperAlgebra, vec: dict) -> str:
    if not vec:
        return "0"
    parts = []
    for k in sorted(vec):
        c = vec[k]
        name = _basis_name(J, k)
        parts.append(name if c == Scalar.of(1) else f"({c})*{name}")
    return " + ".join(parts)


def jordan_super_value(J: SuperAlgebra, w: int, x: int, y: int, z: int) -> dict:
    """Left-hand side of the Jordan superidentity on combined basis indices.

    Returns a sparse coordinate dict; empty means the quadruple vanishes.
    """
    par = J.parity_of
    pw, px, py, pz = par(w), par(x), par(y), par(z)
    tab = J.basis_products()
    sp = J.sparse_product

    def base(i, j):
        return tab.get((i, j), {})

    def signed(acc, vec, sign):
        for k, v in vec.items():
            cur = acc.get(k)
            nv = v if sign > 0 else -v
            cur = nv if cur is None else cur + nv
            if cur:
                acc[k] = cur
            else:
                acc.pop(k, None)

    acc: dict = {}
    # (wx)(yz) + (-1)^{|x||y|} (wy)(xz) + (-1)^{(|x|+|y|)|z|} (wz)(xy)
    signed(acc, sp(base(w, x), base(y, z)), 1)
    signed(acc, sp(base(w, y), base(x, z)), -1 if (px * py) % 2 else 1)
    signed(acc, sp(base(w, z), base(x, y)), -1 if ((px + py) * pz) % 2 else 1)
    # - (-1)^{|w||x|} x(w(yz)) - (-1)^{|y|(|w|+|x|)} y(w(xz))
    # - (-1)^{|z|(|w|+|x|+|y|)} z(w(xy))
    ux = {x: Scalar.of(1)}
    uy = {y: Scalar.of(1)}
    uz = {z: Scalar.of(1)}
    signed(acc, sp(ux, sp({w: Scalar.of(1)}, base(y, z))), -1 if not (pw * px) % 2 else 1)
    signed(acc, sp(uy, sp({w: Scalar.of(1)}, base(x, z))), -1 if not (py * (pw + px)) % 2 else 1)
    signed(acc, sp(uz, sp({w: Scalar.of(1)}, base(x, y))), -1 if not (pz * (pw + px + py)) % 2 else 1)
    return acc


@dataclass
class Counterexample:
    """First failing quadruple of a superidentity sweep, in lex order."""

    quadruple: tuple
    names: tuple
    value: str


def check_supercommutativity(J: SuperAlgebra) -> bool:
    """c symmetric, gamma skew-symmetric with zero diagonal."""
    for i in range(J.m):
        for j in range(J.m):
            if J.c[i][j] != J.c[j][i]:
                return False
    for i in range(J.n):
        for j in range(J.n):
            for k in range(J.m):
                if J.gamma[i][j][k] != -J.gamma[j][i][k]:
                    return False
        if any(J.gamma[i][i][k] for k in range(J.m)):
            return False
    return True


def check_jordan_superidentity(J: SuperAlgebra):
    """Sweep all homogeneous basis quadruples of the superidentity.

    Returns None when the identity holds identically over Q(p); otherwise the
    lexicographically first failing quadruple with its value.
    """
    d = J.dim
    for w in range(d):
        for x in range(d):
            for y in range(d):
                for z in range(d):
                    val = jordan_super_value(J, w, x, y, z)
                    if val:
                        names = tuple(_basis_name(J, i) for i in (w, x, y, z))
                        return Counterexample((w, x, y, z), names, _sparse_pretty(J, val))
    return None


def check_associativity(J: SuperAlgebra) -> bool:
    """(xy)z = x(yz) on all homogeneous basis triples."""
    d = J.dim
    tab = J.basis_products()
    sp = J.sparse_product
    one = Scalar.of(1)
    for x in range(d):
        for y in range(d):
            for z in range(d):
                left = sp(tab.get((x, y), {}), {z: one})
                right = sp({x: one}, tab.get((y, z), {}))
                for k in set(left) | set(right):
                    if left.get(k, ZERO) != right.get(k, ZERO):
                        return False
    return True


# ---------------------------------------------------------------------------
# graded multilinear identities
# ---------------------------------------------------------------------------
#
# Compact grammar: variables x1, x2... (even) and y1, y2... (odd); `*` for the
# product; parentheses for bracketing; terms may carry rational coefficients
# and powers of the family parameter p, joined by + and -.  Example:
#     (y1*y2)*x1
#     x1*(x2*y1) + x2*(x1*y1) - 2*p*((x1*x2)*y1)


class IdentityParseError(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    coeff: Scalar
    tree: tuple  # ("var", name) | ("mul", left, right)


class GradedIdentity:
    """A multilinear graded polynomial with typed variable slots."""

    def __init__(self, monomials, text: str, name: str | None = None):
        self.monomials = tuple(monomials)
        self.text = text
        self.name = name or text
        vars_per = [sorted(_tree_vars(mon.tree)) for mon in self.monomials]
        if not vars_per or any(v != vars_per[0] for v in vars_per):
            raise IdentityParseError("all terms must use the same variable set")
        seen = _tree_vars(self.monomials[0].tree, check_multilinear=True)
        self.variables = tuple(sorted(seen))
        self.uses_param = any(not mon.coeff.is_param_free() for mon in self.monomials)

    def __str__(self) -> str:
        return self.text

    def _assignments(self, J: SuperAlgebra):
        from itertools import product as iproduct

        ranges = []
        for v in self.variables:
            if v.startswith("x"):
                ranges.append(range(J.m))
            else:
                ranges.append(range(J.m, J.m + J.n))
        return iproduct(*ranges)

    def evaluate(self, J: SuperAlgebra, assignment) -> dict:
        env = dict(zip(self.variables, assignment))
        one = Scalar.of(1)

        def ev(tree) -> dict:
            if tree[0] == "var":
                return {env[tree[1]]: one}
            left = ev(tree[1])
            if not left:
                return {}
            right = ev(tree[2])
            if not right:
                return {}
            return J.sparse_product(left, right)

        acc: dict = {}
        for mon in self.monomials:
            vec = ev(mon.tree)
            for k, v in vec.items():
                term = mon.coeff * v
                cur = acc.get(k)
                cur = term if cur is None else cur + term
                if cur:
                    acc[k] = cur
                else:
                    acc.pop(k, None)
        return acc

    def holds_on(self, J: SuperAlgebra) -> bool:
        """True iff the identity vanishes for every homogeneous assignment."""
        for assignment in self._assignments(J):
            if self.evaluate(J, assignment):
                return False
        return True

    def constant_failure_witness(self, J: SuperAlgebra):
        """An assignment whose value has a nonzero parameter-free coordinate.

        Such a witness falsifies the identity on J for every parameter value,
        which is what a sound non-degeneration certificate needs.
        """
        for assignment in self._assignments(J):
            val = self.evaluate(J, assignment)
            for k, v in val.items():
                if v.is_param_free() and v.is_t_free():
                    names = tuple(_basis_name(J, i) for i in assignment)
                    return names, _sparse_pretty(J, val)
        return None


def _tree_vars(tree, check_multilinear: bool = False, seen=None):
    if seen is None:
        seen = set()
    if tree[0] == "var":
        if check_multilinear and tree[1] in seen:
            raise IdentityParseError(f"variable {tree[1]} occurs twice; identity not multilinear")
        seen.add(tree[1])
        return seen
    _tree_vars(tree[1], check_multilinear, seen)
    _tree_vars(tree[2], check_multilinear, seen)
    return seen


def _tokenize(text: str):
    import re

    token_re = re.compile(r"\s*([xy]\d+|p\b|\d+/\d+|\d+|[()*+-])")
    pos = 0
    out = []
    while pos < len(text):
        mt = token_re.match(text, pos)
        if not mt:
            raise IdentityParseError(f"bad identity syntax at {text[pos:]!r}")
        out.append(mt.group(1))
        pos = mt.end()
    return out


def parse_identity(text: str, name: str | None = None) -> GradedIdentity:
    """Parse the compact identity grammar into a GradedIdentity."""
    from fractions import Fraction

    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_factor():
        tok = peek()
        if tok == "(":
            take()
            tree = parse_product()
            if peek() != ")":
                raise IdentityParseError("expected ')'")
            take()
            return ("tree", tree)
        if tok is None:
            raise IdentityParseError("unexpected end of identity")
        take()
        if tok == "p":
            return ("coef", P)
        if tok[0] in "xy":
            return ("tree", ("var", tok))
        return ("coef", Scalar.of(Fraction(tok)))

    def parse_product():
        coeff = Scalar.of(1)
        tree = None
        while True:
            kind, val = parse_factor()
            if kind == "coef":
                coeff = coeff * val
            else:
                tree = val if tree is None else ("mul", tree, val)
            if peek() == "*":
                take()
                continue
            break
        if tree is None:
            raise IdentityParseError("term without variables")
        return ("scaled", coeff, tree) if coeff != Scalar.of(1) else tree

    def unwrap(t):
        if t[0] == "scaled":
            return t[1], t[2]
        return Scalar.of(1), t

    monomials = []
    sign = 1
    if peek() == "-":
        take()
        sign = -1
    while True:
        coeff, tree = unwrap(parse_product())
        if sign < 0:
            coeff = -coeff
        monomials.append(Monomial(coeff, tree))
        tok = peek()
        if tok is None:
            break
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        else:
            raise IdentityParseError(f"unexpected token {tok!r}")
        take()
    return GradedIdentity(monomials, text.strip(), name=name)


def check_graded_identity(J: SuperAlgebra, p) -> bool:
    """True iff the multilinear identity p vanishes on J."""
    if isinstance(p, str):
        p = parse_identity(p)
    return p.holds_on(J)
