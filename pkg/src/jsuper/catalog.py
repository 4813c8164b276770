"""Parsers and printers for the corpus file formats.

All formats are line-oriented UTF-8 text with exact numerals only.

Catalog files::

    [superalgebra]
    name = (2,3)_31^lambda
    even = 2
    odd = 3
    params = lambda nonzero
    product e1*e1 = e2
    product f1*f3 = lambda*e2
    expect_obs = NA
    expect_nilindex = 5
    expect_aut = 4
    expect_ann = (1,0)

Certificate files::

    [degeneration]
    source = "(2,3)_31^lambda"
    target = "(2,3)_10"
    param lambda = t^-1
    basis E1 = e1
    basis E2 = t^-1*e2
    basis F1 = f1
    ...

Coordinate terms are +/- separated products of a rational literal, a power
t^q with q a rational literal (1/2 allowed; normalized on use), and one
source basis name.  Non-degeneration tables and identity lists use the same
section/key conventions.  parse -> print -> parse is the identity on values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .field import Scalar, ZERO, ONE
from .algebra import GradedVector, ParamSpec, SuperAlgebra


class ParseError(ValueError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line = line_no
        self.reason = reason


def _lines(text: str):
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield idx, line


_RAT = r"-?\d+(?:/\d+)?"
_BASIS = re.compile(r"^[ef]\d+$")


def _parse_rat(tok: str, line_no: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"bad rational literal {tok!r}")


# ---------------------------------------------------------------------------
# catalogs
# ---------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    algebra: SuperAlgebra
    expect_obs: str | None = None
    expect_nilindex: int | None = None
    expect_aut: int | None = None
    expect_ann: tuple | None = None
    products: list = field(default_factory=list)  # raw (kind, i, j, combo) for printing


@dataclass
class Catalog:
    type_key: tuple
    entries: list

    def __post_init__(self):
        self.by_name = {e.name: e for e in self.entries}

    def __getitem__(self, name: str) -> CatalogEntry:
        return self.by_name[name]

    def resolve(self, token: str) -> str:
        """Accept either a full name or the bare suffix after the type."""
        if token in self.by_name:
            return token
        full = f"({self.type_key[0]},{self.type_key[1]})_{token}"
        if full in self.by_name:
            return full
        raise KeyError(token)


def _parse_combo(expr: str, m: int, n: int, param: str | None, line_no: int) -> GradedVector:
    """A +/- separated linear combination of basis names with rational and
    parameter coefficients."""
    even = [ZERO] * m
    odd = [ZERO] * n
    for sign, term in _split_terms(expr, line_no):
        coeff = Scalar.of(sign)
        basis = None
        for factor in term.split("*"):
            factor = factor.strip()
            if not factor:
                raise ParseError(line_no, f"empty factor in {term!r}")
            if _BASIS.match(factor):
                if basis is not None:
                    raise ParseError(line_no, f"two basis names in one term: {term!r}")
                basis = factor
            elif factor == param:
                coeff = coeff * Scalar.p_pow(1)
            elif re.fullmatch(_RAT, factor):
                coeff = coeff * Scalar.of(_parse_rat(factor, line_no))
            else:
                raise ParseError(line_no, f"unknown factor {factor!r}")
        if basis is None:
            raise ParseError(line_no, f"term without a basis name: {term!r}")
        idx = int(basis[1:]) - 1
        if basis[0] == "e":
            if idx < 0 or idx >= m:
                raise ParseError(line_no, f"basis {basis} out of range")
            even[idx] = even[idx] + coeff
        else:
            if idx < 0 or idx >= n:
                raise ParseError(line_no, f"basis {basis} out of range")
            odd[idx] = odd[idx] + coeff
    return GradedVector(even, odd)


def _split_terms(expr: str, line_no: int):
    """Yield (sign, term-text) pairs; minus binds to the following term."""
    out = []
    depth = 0
    cur = ""
    sign = 1
    for ch in expr:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and (cur.strip() or not out and not cur.strip()):
            if not cur.strip() and not out:
                # leading sign
                sign = -1 if ch == "-" else 1
                continue
            if cur.strip():
                out.append((sign, cur.strip()))
                sign = -1 if ch == "-" else 1
                cur = ""
                continue
        cur += ch
    if cur.strip():
        out.append((sign, cur.strip()))
    if not out:
        raise ParseError(line_no, f"empty expression {expr!r}")
    return out


def parse_catalog(text: str) -> Catalog:
    entries = []
    names = set()
    cur: dict | None = None
    cur_line = 0

    def flush():
        nonlocal cur
        if cur is None:
            return
        for key in ("name", "even", "odd"):
            if key not in cur:
                raise ParseError(cur["_line"], f"missing key {key!r}")
        m, n = cur["even"], cur["odd"]
        params = (cur["param_spec"],) if cur.get("param_spec") else ()
        try:
            alg = SuperAlgebra.from_products(m, n, cur.get("products", []), params=params, name=cur["name"])
        except ValueError as exc:
            raise ParseError(cur["_line"], str(exc))
        entry = CatalogEntry(
            name=cur["name"],
            algebra=alg,
            expect_obs=cur.get("expect_obs"),
            expect_nilindex=cur.get("expect_nilindex"),
            expect_aut=cur.get("expect_aut"),
            expect_ann=cur.get("expect_ann"),
            products=cur.get("raw_products", []),
        )
        entries.append(entry)
        cur = None

    for line_no, line in _lines(text):
        if line == "[superalgebra]":
            flush()
            cur = {"_line": line_no}
            continue
        if cur is None:
            raise ParseError(line_no, "content outside a [superalgebra] section")
        if line.startswith("product "):
            body = line[len("product "):]
            if "=" not in body:
                raise ParseError(line_no, "product line must contain '='")
            lhs, rhs = body.split("=", 1)
            lhs = lhs.strip()
            mt = re.fullmatch(r"([ef]\d+)\s*\*\s*([ef]\d+)", lhs)
            if not mt:
                raise ParseError(line_no, f"bad product pair {lhs!r}")
            b1, b2 = mt.group(1), mt.group(2)
            m, n = cur["even"], cur["odd"]
            param = cur.get("param_name")
            combo = _parse_combo(rhs.strip(), m, n, param, line_no)
            i = int(b1[1:]) - 1
            j = int(b2[1:]) - 1
            if b1[0] == "e" and b2[0] == "e":
                kind = "ee"
            elif b1[0] == "e" and b2[0] == "f":
                kind = "ef"
            elif b1[0] == "f" and b2[0] == "f":
                kind = "ff"
            else:
                raise ParseError(line_no, "write even*odd products as e*f, not f*e")
            if (b1[0] == "e" and i >= m) or (b2[0] == "e" and j >= m):
                raise ParseError(line_no, f"basis out of range in {lhs!r}")
            if (b1[0] == "f" and i >= n) or (b2[0] == "f" and j >= n):
                raise ParseError(line_no, f"basis out of range in {lhs!r}")
            expected_parity = {"ee": "even", "ef": "odd", "ff": "even"}[kind]
            if combo.parity not in (expected_parity, "even" if combo.is_zero() else expected_parity):
                raise ParseError(line_no, f"parity violation in product {lhs!r}")
            cur.setdefault("products", []).append((kind, i, j, combo))
            cur.setdefault("raw_products", []).append((kind, i, j, rhs.strip()))
            continue
        if "=" not in line:
            raise ParseError(line_no, f"expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "name":
            if value in names:
                raise ParseError(line_no, f"duplicate name {value!r}")
            names.add(value)
            cur["name"] = value
        elif key in ("even", "odd"):
            cur[key] = int(value)
        elif key == "params":
            parts = value.split()
            if len(parts) != 2:
                raise ParseError(line_no, "params must be '<name> <domain>'")
            cur["param_name"] = parts[0]
            cur["param_spec"] = ParamSpec(parts[0], parts[1])
        elif key == "expect_obs":
            cur["expect_obs"] = value
        elif key == "expect_nilindex":
            cur["expect_nilindex"] = int(value)
        elif key == "expect_aut":
            cur["expect_aut"] = int(value)
        elif key == "expect_ann":
            mt = re.fullmatch(r"\((\d+),\s*(\d+)\)", value)
            if not mt:
                raise ParseError(line_no, f"bad annihilator type {value!r}")
            cur["expect_ann"] = (int(mt.group(1)), int(mt.group(2)))
        else:
            raise ParseError(line_no, f"unknown key {key!r}")
    flush()
    if not entries:
        return Catalog((0, 0), [])
    type_key = (entries[0].algebra.m, entries[0].algebra.n)
    for e in entries:
        if (e.algebra.m, e.algebra.n) != type_key:
            raise ParseError(0, f"mixed types in one catalog: {e.name}")
    return Catalog(type_key, entries)


def print_catalog(cat: Catalog) -> str:
    out = []
    for e in cat.entries:
        out.append("[superalgebra]")
        out.append(f"name = {e.name}")
        out.append(f"even = {e.algebra.m}")
        out.append(f"odd = {e.algebra.n}")
        for spec in e.algebra.params:
            out.append(f"params = {spec.name} {spec.domain}")
        for kind, i, j, rhs in e.products:
            b1 = ("e" if kind[0] == "e" else "f") + str(i + 1)
            b2 = ("e" if kind[1] == "e" else "f") + str(j + 1)
            out.append(f"product {b1}*{b2} = {rhs}")
        if e.expect_obs is not None:
            out.append(f"expect_obs = {e.expect_obs}")
        if e.expect_nilindex is not None:
            out.append(f"expect_nilindex = {e.expect_nilindex}")
        if e.expect_aut is not None:
            out.append(f"expect_aut = {e.expect_aut}")
        if e.expect_ann is not None:
            out.append(f"expect_ann = ({e.expect_ann[0]},{e.expect_ann[1]})")
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# parametrized basis changes and degeneration certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoordTerm:
    coeff: Fraction
    t_exp: Fraction
    basis: int  # index inside its parity block


@dataclass(frozen=True)
class ParamBasisChange:
    even_vectors: tuple  # m tuples of CoordTerm (even coordinates only)
    odd_vectors: tuple  # n tuples of CoordTerm (odd coordinates only)

    def t_exponents(self):
        for vec in self.even_vectors + self.odd_vectors:
            for term in vec:
                yield term.t_exp


@dataclass(frozen=True)
class DegenerationCertificate:
    source: str
    target: str
    change: ParamBasisChange
    param_name: str | None = None
    param_curve: tuple | None = None  # ((coeff, t_exp), ...) or "symbolic-target"
    note: str | None = None

    def curve_is_symbolic_target(self) -> bool:
        return self.param_curve == "symbolic-target"


_TPOW = re.compile(r"^t(?:\^\(?(-?\d+(?:/\d+)?)\)?)?$")


def _parse_coord_terms(expr: str, m: int, n: int, line_no: int):
    """Coordinate expression over the source basis; returns (even, odd) term
    lists with Fraction t-exponents (possibly non-integral, pre-normalization)."""
    even_terms: dict = {}
    odd_terms: dict = {}
    for sign, term in _split_terms(expr, line_no):
        coeff = Fraction(sign)
        t_exp = Fraction(0)
        basis = None
        for factor in term.split("*"):
            factor = factor.strip()
            mt = _TPOW.match(factor)
            if mt:
                t_exp += Fraction(mt.group(1)) if mt.group(1) else Fraction(1)
            elif _BASIS.match(factor):
                if basis is not None:
                    raise ParseError(line_no, f"two basis names in one term: {term!r}")
                basis = factor
            elif re.fullmatch(_RAT, factor):
                coeff *= _parse_rat(factor, line_no)
            else:
                raise ParseError(line_no, f"unknown factor {factor!r}")
        if basis is None:
            raise ParseError(line_no, f"term without a basis name: {term!r}")
        idx = int(basis[1:]) - 1
        if basis[0] == "e":
            if idx >= m:
                raise ParseError(line_no, f"basis {basis} out of range")
            key = (idx, t_exp)
            even_terms[key] = even_terms.get(key, Fraction(0)) + coeff
        else:
            if idx >= n:
                raise ParseError(line_no, f"basis {basis} out of range")
            key = (idx, t_exp)
            odd_terms[key] = odd_terms.get(key, Fraction(0)) + coeff
    ev = tuple(CoordTerm(c, q, i) for (i, q), c in sorted(even_terms.items()) if c)
    od = tuple(CoordTerm(c, q, i) for (i, q), c in sorted(odd_terms.items()) if c)
    return ev, od


def parse_certificates(text: str, cat: Catalog):
    certs = []
    cur: dict | None = None
    cur_line = 0

    def flush():
        nonlocal cur
        if cur is None:
            return
        for key in ("source", "target"):
            if key not in cur:
                raise ParseError(cur["_line"], f"missing {key}")
        m, n = cat.type_key
        even_vecs = cur.get("E", {})
        odd_vecs = cur.get("F", {})
        if sorted(even_vecs) != list(range(m)) or sorted(odd_vecs) != list(range(n)):
            raise ParseError(cur["_line"], "certificate must define E1..Em and F1..Fn exactly once")
        for k, (ev, od) in even_vecs.items():
            if od:
                raise ParseError(cur["_line"], f"E{k + 1} must be grading-preserving (even coordinates only)")
        for k, (ev, od) in odd_vecs.items():
            if ev:
                raise ParseError(cur["_line"], f"F{k + 1} must be grading-preserving (odd coordinates only)")
        change = ParamBasisChange(
            tuple(even_vecs[k][0] for k in range(m)),
            tuple(odd_vecs[k][1] for k in range(n)),
        )
        certs.append(
            DegenerationCertificate(
                source=cur["source"],
                target=cur["target"],
                change=change,
                param_name=cur.get("param_name"),
                param_curve=cur.get("param_curve"),
                note=cur.get("note"),
            )
        )
        cur = None

    for line_no, line in _lines(text):
        if line == "[degeneration]":
            flush()
            cur = {"_line": line_no}
            continue
        if cur is None:
            raise ParseError(line_no, "content outside a [degeneration] section")
        if line.startswith("basis "):
            body = line[len("basis "):]
            if "=" not in body:
                raise ParseError(line_no, "basis line must contain '='")
            lhs, rhs = (part.strip() for part in body.split("=", 1))
            mt = re.fullmatch(r"([EF])(\d+)", lhs)
            if not mt:
                raise ParseError(line_no, f"bad basis vector name {lhs!r}")
            which, k = mt.group(1), int(mt.group(2)) - 1
            m, n = cat.type_key
            ev, od = _parse_coord_terms(rhs, m, n, line_no)
            cur.setdefault(which, {})
            if k in cur[which]:
                raise ParseError(line_no, f"duplicate basis vector {lhs}")
            cur[which][k] = (ev, od)
            continue
        if line.startswith("param "):
            body = line[len("param "):]
            if "=" not in body:
                raise ParseError(line_no, "param line must contain '='")
            pname, rhs = (part.strip() for part in body.split("=", 1))
            cur["param_name"] = pname
            if rhs == "gamma0":
                cur["param_curve"] = "symbolic-target"
            else:
                terms = []
                for sign, term in _split_terms(rhs, line_no):
                    coeff = Fraction(sign)
                    t_exp = Fraction(0)
                    for factor in term.split("*"):
                        factor = factor.strip()
                        mt = _TPOW.match(factor)
                        if mt:
                            t_exp += Fraction(mt.group(1)) if mt.group(1) else Fraction(1)
                        elif re.fullmatch(_RAT, factor):
                            coeff *= _parse_rat(factor, line_no)
                        else:
                            raise ParseError(line_no, f"unknown factor {factor!r} in parameter curve")
                    terms.append((coeff, t_exp))
                cur["param_curve"] = tuple(terms)
            continue
        if "=" not in line:
            raise ParseError(line_no, f"expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        value = value.strip('"')
        if key in ("source", "target"):
            try:
                cur[key] = cat.resolve(value)
            except KeyError:
                raise ParseError(line_no, f"unknown {key} name {value!r}")
        elif key == "note":
            cur["note"] = value
        else:
            raise ParseError(line_no, f"unknown key {key!r}")
    flush()
    return certs


def _fmt_texp(q: Fraction) -> str:
    if q == 1:
        return "t"
    return f"t^{q}"


def _fmt_coord_terms(ev, od) -> str:
    parts = []
    for terms, prefix in ((ev, "e"), (od, "f")):
        for term in terms:
            factors = []
            if abs(term.coeff) != 1:
                factors.append(str(abs(term.coeff)))
            if term.t_exp:
                factors.append(_fmt_texp(term.t_exp))
            factors.append(f"{prefix}{term.basis + 1}")
            text = "*".join(factors)
            parts.append(("- " if term.coeff < 0 else "+ ") + text)
    joined = " ".join(parts)
    return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]


def print_certificates(certs) -> str:
    out = []
    for cert in certs:
        out.append("[degeneration]")
        out.append(f'source = "{cert.source}"')
        out.append(f'target = "{cert.target}"')
        if cert.param_name is not None:
            if cert.curve_is_symbolic_target():
                rhs = "gamma0"
            else:
                parts = []
                for coeff, t_exp in cert.param_curve:
                    factors = []
                    if abs(coeff) != 1 or not t_exp:
                        factors.append(str(abs(coeff)))
                    if t_exp:
                        factors.append(_fmt_texp(t_exp))
                    text = "*".join(factors)
                    parts.append(("- " if coeff < 0 else "+ ") + text)
                rhs = " ".join(parts)
                rhs = rhs[2:] if rhs.startswith("+ ") else "-" + rhs[2:]
            out.append(f"param {cert.param_name} = {rhs}")
        if cert.note:
            out.append(f"note = {cert.note}")
        for k, vec in enumerate(cert.change.even_vectors):
            out.append(f"basis E{k + 1} = {_fmt_coord_terms(vec, ())}")
        for k, vec in enumerate(cert.change.odd_vectors):
            out.append(f"basis F{k + 1} = {_fmt_coord_terms((), vec)}")
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# non-degeneration tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReasonSpec:
    klass: str
    parity: int | None = None  # 0 even, 1 odd where applicable
    identity: str | None = None
    note: str | None = None

    def render(self) -> str:
        if self.klass in ("power_dims", "annihilator", "center"):
            return f"{self.klass} {'even' if self.parity == 0 else 'odd'}"
        if self.klass == "graded_identity":
            return f"identity {self.identity}"
        if self.klass == "external_citation":
            return f"external {self.note}"
        return self.klass


@dataclass(frozen=True)
class NonDegRow:
    sources: tuple
    targets: tuple
    reason: ReasonSpec

    def pairs(self):
        for s in self.sources:
            for t in self.targets:
                yield (s, t)


_REASON_KLASSES = {
    "a_functor",
    "f_functor",
    "even_part",
    "nilindex",
    "jordan_algebra",
    "closed_set_R",
    "associativity",
}


def _parse_reason(value: str, line_no: int) -> ReasonSpec:
    parts = value.split(None, 1)
    head = parts[0]
    rest = parts[1].strip() if len(parts) > 1 else ""
    if head in _REASON_KLASSES:
        if rest:
            raise ParseError(line_no, f"reason {head} takes no argument")
        return ReasonSpec(head)
    if head in ("power_dims", "annihilator", "center"):
        if rest not in ("even", "odd"):
            raise ParseError(line_no, f"reason {head} needs 'even' or 'odd'")
        return ReasonSpec(head, parity=0 if rest == "even" else 1)
    if head == "identity":
        if not rest:
            raise ParseError(line_no, "reason identity needs an expression")
        return ReasonSpec("graded_identity", identity=rest)
    if head == "external":
        return ReasonSpec("external_citation", note=rest or None)
    raise ParseError(line_no, f"unknown reason {value!r}")


def parse_nondeg_table(text: str, cat: Catalog):
    rows = []
    cur: dict | None = None

    def resolve_list(value: str, line_no: int):
        names = []
        for token in value.split(","):
            token = token.strip()
            if not token:
                continue
            try:
                names.append(cat.resolve(token))
            except KeyError:
                raise ParseError(line_no, f"unknown catalog name {token!r}")
        if not names:
            raise ParseError(line_no, "empty name list")
        return tuple(names)

    def flush():
        nonlocal cur
        if cur is None:
            return
        for key in ("sources", "targets", "reason"):
            if key not in cur:
                raise ParseError(cur["_line"], f"missing {key}")
        rows.append(NonDegRow(cur["sources"], cur["targets"], cur["reason"]))
        cur = None

    for line_no, line in _lines(text):
        if line == "[nondegeneration]":
            flush()
            cur = {"_line": line_no}
            continue
        if cur is None:
            raise ParseError(line_no, "content outside a [nondegeneration] section")
        if "=" not in line:
            raise ParseError(line_no, f"expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "sources":
            cur["sources"] = resolve_list(value, line_no)
        elif key == "targets":
            cur["targets"] = resolve_list(value, line_no)
        elif key == "reason":
            cur["reason"] = _parse_reason(value, line_no)
        else:
            raise ParseError(line_no, f"unknown key {key!r}")
    flush()
    return rows


def print_nondeg_table(rows, cat: Catalog) -> str:
    prefix = f"({cat.type_key[0]},{cat.type_key[1]})_"

    def short(name: str) -> str:
        return name[len(prefix):] if name.startswith(prefix) else name

    out = []
    for row in rows:
        out.append("[nondegeneration]")
        out.append("sources = " + ", ".join(short(s) for s in row.sources))
        out.append("targets = " + ", ".join(short(t) for t in row.targets))
        out.append(f"reason = {row.reason.render()}")
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# identity lists and imported edges
# ---------------------------------------------------------------------------


def parse_identity_list(text: str):
    from .identities import parse_identity

    idents = []
    cur: dict | None = None

    def flush():
        nonlocal cur
        if cur is None:
            return
        if "expr" not in cur:
            raise ParseError(cur["_line"], "missing expr")
        idents.append(parse_identity(cur["expr"], name=cur.get("name")))
        cur = None

    for line_no, line in _lines(text):
        if line == "[identity]":
            flush()
            cur = {"_line": line_no}
            continue
        if cur is None:
            raise ParseError(line_no, "content outside an [identity] section")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in ("name", "expr"):
            cur[key] = value
        else:
            raise ParseError(line_no, f"unknown key {key!r}")
    flush()
    return idents


def print_identity_list(idents) -> str:
    out = []
    for ident in idents:
        out.append("[identity]")
        if ident.name != ident.text:
            out.append(f"name = {ident.name}")
        out.append(f"expr = {ident.text}")
        out.append("")
    return "\n".join(out)


@dataclass(frozen=True)
class ImportedEdge:
    source: str
    target: str
    note: str | None = None


def parse_imported_edges(text: str, cat: Catalog):
    edges = []
    cur: dict | None = None

    def flush():
        nonlocal cur
        if cur is None:
            return
        for key in ("source", "target"):
            if key not in cur:
                raise ParseError(cur["_line"], f"missing {key}")
        edges.append(ImportedEdge(cur["source"], cur["target"], cur.get("note")))
        cur = None

    for line_no, line in _lines(text):
        if line == "[imported]":
            flush()
            cur = {"_line": line_no}
            continue
        if cur is None:
            raise ParseError(line_no, "content outside an [imported] section")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip().strip('"')
        if key in ("source", "target"):
            try:
                cur[key] = cat.resolve(value)
            except KeyError:
                raise ParseError(line_no, f"unknown catalog name {value!r}")
        elif key == "note":
            cur["note"] = value
        else:
            raise ParseError(line_no, f"unknown key {key!r}")
    flush()
    return edges


def print_imported_edges(edges) -> str:
    out = []
    for e in edges:
        out.append("[imported]")
        out.append(f'source = "{e.source}"')
        out.append(f'target = "{e.target}"')
        if e.note:
            out.append(f"note = {e.note}")
        out.append("")
    return "\n".join(out)
