"""Degeneration certificates, the non-degeneration battery, and the
closed-set evidence check.

A certificate is verified by normalizing fractional t-exponents (global
substitution t := s^L), substituting the parameter curve into the source,
applying the parametrized change of basis over Q(t), taking the limit of
every structure constant at t = 0, and comparing bit-exactly against the
target's constants.

The battery applies the necessary conditions for degeneration in a fixed
cheap-first order and reports the first violated one as a certificate of
non-degeneration.  For family nodes the automorphism-dimension condition is
adjusted for the extra parameter dimension of the orbit-union closure; all
other conditions are uniform over family members (generic symbolic values
bound every member), so they transfer to union closures unchanged.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .field import LaurentPoly, P, PoleError, Scalar, ZERO, ONE
from .linalg import Matrix, SingularMatrixError
from .algebra import BasisChange, SuperAlgebra, apply_basis_change
from .catalog import (
    Catalog,
    CoordTerm,
    DegenerationCertificate,
    NonDegRow,
    ParamBasisChange,
    ReasonSpec,
)
from . import invariants as inv
from .identities import check_associativity

#: reviewer-chosen sample values for the free target parameter of a
#: family-to-family certificate, checked on top of the symbolic run
TARGET_PARAM_SAMPLES = (Fraction(2), Fraction(-1), Fraction(1, 3))


@dataclass
class DegenerationResult:
    status: str  # "ok" | "pole" | "mismatch" | "singular"
    detail: str = ""
    mismatches: tuple = ()
    checked_samples: tuple = ()

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _exponent_lcm(cert: DegenerationCertificate) -> int:
    dens = [q.denominator for q in cert.change.t_exponents()]
    if cert.param_curve and not cert.curve_is_symbolic_target():
        dens.extend(q.denominator for _, q in cert.param_curve)
    return lcm(*dens) if dens else 1


def _t_monomial(coeff: Fraction, q: Fraction) -> Scalar:
    if q.denominator != 1:
        raise ValueError(f"t-exponent {q} not cleared by the global substitution")
    return Scalar(LaurentPoly.monomial(coeff, int(q), 0))


def _matrices(change: ParamBasisChange, m: int, n: int, L: int):
    """Columns are the new basis vectors, with t-exponents cleared by L."""
    T = [[ZERO] * m for _ in range(m)]
    S = [[ZERO] * n for _ in range(n)]
    for k, vec in enumerate(change.even_vectors):
        for term in vec:
            T[term.basis][k] = T[term.basis][k] + _t_monomial(term.coeff, term.t_exp * L)
    for k, vec in enumerate(change.odd_vectors):
        for term in vec:
            S[term.basis][k] = S[term.basis][k] + _t_monomial(term.coeff, term.t_exp * L)
    return Matrix(T), Matrix(S)


def _curve_scalar(curve, L: int) -> Scalar:
    total = ZERO
    for coeff, t_exp in curve:
        total = total + _t_monomial(coeff, t_exp * L)
    return total


def _limit_algebra(J: SuperAlgebra):
    """eval_at_zero on every structure constant; PoleError propagates."""

    def lim3(tensor):
        return [[[x.eval_at_zero() for x in row] for row in pl] for pl in tensor]

    return SuperAlgebra(J.m, J.n, lim3(J.c), lim3(J.rho), lim3(J.gamma), params=J.params)


def _compare(J: SuperAlgebra, target: SuperAlgebra):
    """List of differing structure constants (block, i, j, k, got, want)."""
    diffs = []
    for block, left, right in (("c", J.c, target.c), ("rho", J.rho, target.rho), ("gamma", J.gamma, target.gamma)):
        for i, pl in enumerate(left):
            for j, row in enumerate(pl):
                for k, x in enumerate(row):
                    if x != right[i][j][k]:
                        diffs.append((block, i + 1, j + 1, k + 1, str(x), str(right[i][j][k])))
    return diffs


def verify_degeneration(cert: DegenerationCertificate, cat: Catalog) -> DegenerationResult:
    """Check one certificate end to end; never raises for expected failures."""
    source = cat[cert.source].algebra
    target = cat[cert.target].algebra
    L = _exponent_lcm(cert)
    try:
        T, S = _matrices(cert.change, cat.type_key[0], cat.type_key[1], L)
    except ValueError as exc:
        return DegenerationResult("singular", detail=str(exc))

    def run(src: SuperAlgebra, tgt: SuperAlgebra, label: str):
        try:
            g = BasisChange(T, S)
        except SingularMatrixError as exc:
            return DegenerationResult("singular", detail=f"{label}: {exc}")
        moved = apply_basis_change(src, g)
        try:
            limit = _limit_algebra(moved)
        except PoleError as exc:
            return DegenerationResult("pole", detail=f"{label}: {exc}")
        diffs = _compare(limit, tgt)
        if diffs:
            return DegenerationResult("mismatch", detail=label, mismatches=tuple(diffs))
        return DegenerationResult("ok", detail=label)

    if cert.param_name is not None and cert.curve_is_symbolic_target():
        # family-to-family schema: symbolic over Q(gamma0) plus sample values
        if not source.params or not target.params:
            return DegenerationResult("mismatch", detail="symbolic-target certificate needs family endpoints")
        res = run(source.subs_param(P), target, "symbolic gamma0")
        if not res.ok:
            return res
        checked = []
        for sample in TARGET_PARAM_SAMPLES:
            if not target.params[0].admissible(sample):
                continue
            r = run(source.subs_param(sample), target.subs_param(sample), f"gamma0={sample}")
            if not r.ok:
                return r
            checked.append(sample)
        return DegenerationResult("ok", detail="symbolic + samples", checked_samples=tuple(checked))

    src = source
    if cert.param_name is not None:
        if not source.params:
            return DegenerationResult("mismatch", detail="certificate substitutes a parameter the source does not have")
        if cert.param_name != source.params[0].name:
            return DegenerationResult("mismatch", detail=f"unknown parameter {cert.param_name!r}")
        src = source.subs_param(_curve_scalar(cert.param_curve, L))
    elif source.params and not target.params:
        # family source, no substitution: target must be reached symbolically
        pass
    if target.params and cert.param_name is None:
        return DegenerationResult("mismatch", detail="family target needs a parameter substitution")
    tgt = target
    if target.params and not cert.curve_is_symbolic_target() and cert.param_curve is not None:
        # fixed target member, e.g. the gamma = 1 member reached from a family
        curve = _curve_scalar(cert.param_curve, L)
        if not curve.is_rational():
            return DegenerationResult("mismatch", detail="single-member target needs a constant parameter value")
        tgt = target.subs_param(curve.as_fraction())
    return run(src, tgt, "direct")


def universal_certificate(cat: Catalog, source: str, target: str) -> DegenerationCertificate:
    """The scaling certificate that contracts any superalgebra to the trivial
    one: every new basis vector is t times the old one."""
    m, n = cat.type_key
    change = ParamBasisChange(
        tuple((CoordTerm(Fraction(1), Fraction(1), k),) for k in range(m)),
        tuple((CoordTerm(Fraction(1), Fraction(1), k),) for k in range(n)),
    )
    return DegenerationCertificate(source=source, target=target, change=change)


# ---------------------------------------------------------------------------
# the non-degeneration battery
# ---------------------------------------------------------------------------

INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    source: str
    target: str
    klass: str
    detail: str = ""

    @property
    def conclusive(self) -> bool:
        return self.klass != INCONCLUSIVE


class BatteryContext:
    """Catalog-level caches shared by battery runs."""

    def __init__(self, cat: Catalog, identities=()):
        self.cat = cat
        self.identities = tuple(identities)
        self._holds: dict = {}

    def identity_holds(self, ident, J: SuperAlgebra) -> bool:
        key = (ident.name, id(J))
        val = self._holds.get(key)
        if val is None:
            val = ident.holds_on(J)
            self._holds[key] = val
        return val


def _aut_fires(a_src: int, a_tgt: int, src_family: bool, tgt_family: bool, top: bool) -> bool:
    """Violation test for the automorphism-dimension condition.

    Orbit-union closures of one-parameter families gain one dimension, and
    recursive calls must tolerate isomorphic functor images, hence the
    case-split thresholds.
    """
    if src_family and tgt_family:
        return a_src >= a_tgt + 1
    if src_family:
        # the union closure gains the parameter dimension over single orbits
        return a_src >= a_tgt + 2
    # single source: member-wise for family targets; recursive calls must
    # tolerate isomorphic functor images, hence the strict threshold there
    return a_src >= a_tgt + (0 if top else 1)


def battery(ctx: BatteryContext, src: SuperAlgebra, tgt: SuperAlgebra, depth: int = 2, top: bool = True) -> Verdict:
    """First violated necessary condition for src -> tgt, else inconclusive."""
    sname = src.name or "J"
    tname = tgt.name or "J'"
    if src is tgt or src.same_constants(tgt):
        return Verdict(sname, tname, INCONCLUSIVE, "reflexive pair")
    src_fam, tgt_fam = src.is_family(), tgt.is_family()

    a_src = inv.even_derivation_dim(src)
    a_tgt = inv.even_derivation_dim(tgt)
    if _aut_fires(a_src, a_tgt, src_fam, tgt_fam, top):
        return Verdict(sname, tname, "aut_dim", f"dim Aut {a_src} vs {a_tgt}")

    nil_s, nil_t = inv.nilindex(src), inv.nilindex(tgt)
    if nil_s < nil_t:
        return Verdict(sname, tname, "nilindex", f"{nil_s} < {nil_t}")

    pd_s, pd_t = inv.power_dims(src), inv.power_dims(tgt)
    for k in range(max(len(pd_s), len(pd_t))):
        ds = pd_s[k].as_tuple() if k < len(pd_s) else (0, 0)
        dt = pd_t[k].as_tuple() if k < len(pd_t) else (0, 0)
        for i in (0, 1):
            if ds[i] < dt[i]:
                return Verdict(
                    sname, tname, "power_dims",
                    f"dim(J^{k + 2})_{i} = {ds[i]} < {dt[i]}",
                )

    ann_s = inv.annihilator(src)[0].as_tuple()
    ann_t = inv.annihilator(tgt)[0].as_tuple()
    for i in (0, 1):
        if ann_s[i] > ann_t[i]:
            return Verdict(sname, tname, "annihilator", f"dim(Ann)_{i} = {ann_s[i]} > {ann_t[i]}")

    z_s = inv.assoc_center(src).as_tuple()
    z_t = inv.assoc_center(tgt).as_tuple()
    for i in (0, 1):
        if z_s[i] > z_t[i]:
            return Verdict(sname, tname, "center", f"dim(Z)_{i} = {z_s[i]} > {z_t[i]}")

    if check_associativity(src) and not check_associativity(tgt):
        return Verdict(sname, tname, "associativity", "source associative, target not")

    for ident in ctx.identities:
        if ident.uses_param and src_fam:
            # parameter-weighted identities vary over the family, so they do
            # not pass to union closures; skip them for family sources
            continue
        if ctx.identity_holds(ident, src):
            witness = ident.constant_failure_witness(tgt)
            if witness is not None:
                names, value = witness
                return Verdict(
                    sname, tname, "graded_identity",
                    f"{ident.name}: fails on target at {names} with value {value}",
                )

    if depth > 0:
        for maker, klass in ((inv.a_functor, "a_functor"), (inv.f_functor, "f_functor"), (inv.even_part, "even_part")):
            sub = battery(ctx, maker(src), maker(tgt), depth=depth - 1, top=False)
            if sub.conclusive:
                return Verdict(sname, tname, klass, f"inner {sub.klass}: {sub.detail}")

    return Verdict(sname, tname, INCONCLUSIVE, "")


def targeted_check(ctx: BatteryContext, src: SuperAlgebra, tgt: SuperAlgebra, reason: ReasonSpec):
    """Check exactly the certificate class a table row claims.

    Returns a Verdict with that class when the claimed condition is indeed
    violated, else None.
    """
    sname = src.name or "J"
    tname = tgt.name or "J'"
    klass = reason.klass
    if klass == "aut_dim":
        a_src, a_tgt = inv.even_derivation_dim(src), inv.even_derivation_dim(tgt)
        if _aut_fires(a_src, a_tgt, src.is_family(), tgt.is_family(), top=True):
            return Verdict(sname, tname, klass, f"dim Aut {a_src} vs {a_tgt}")
        return None
    if klass == "nilindex":
        ns, nt = inv.nilindex(src), inv.nilindex(tgt)
        return Verdict(sname, tname, klass, f"{ns} < {nt}") if ns < nt else None
    if klass == "power_dims":
        pd_s, pd_t = inv.power_dims(src), inv.power_dims(tgt)
        for k in range(max(len(pd_s), len(pd_t))):
            ds = pd_s[k].as_tuple() if k < len(pd_s) else (0, 0)
            dt = pd_t[k].as_tuple() if k < len(pd_t) else (0, 0)
            if ds[reason.parity] < dt[reason.parity]:
                return Verdict(sname, tname, klass, f"dim(J^{k + 2})_{reason.parity} = {ds[reason.parity]} < {dt[reason.parity]}")
        return None
    if klass == "annihilator":
        s = inv.annihilator(src)[0].as_tuple()[reason.parity]
        t = inv.annihilator(tgt)[0].as_tuple()[reason.parity]
        return Verdict(sname, tname, klass, f"dim(Ann)_{reason.parity} = {s} > {t}") if s > t else None
    if klass == "center":
        s = inv.assoc_center(src).as_tuple()[reason.parity]
        t = inv.assoc_center(tgt).as_tuple()[reason.parity]
        return Verdict(sname, tname, klass, f"dim(Z)_{reason.parity} = {s} > {t}") if s > t else None
    if klass == "associativity":
        if check_associativity(src) and not check_associativity(tgt):
            return Verdict(sname, tname, klass, "source associative, target not")
        return None
    if klass == "graded_identity":
        from .identities import parse_identity

        ident = parse_identity(reason.identity)
        if ident.uses_param and src.is_family():
            return None
        if ident.holds_on(src):
            witness = ident.constant_failure_witness(tgt)
            if witness is not None:
                return Verdict(sname, tname, klass, f"{ident.text} fails on target at {witness[0]}")
        return None
    if klass == "jordan_algebra":
        # realized through item (vi): find a shipped identity that the source
        # satisfies and the target constantly violates; the choice is logged
        for ident in ctx.identities:
            if ident.uses_param and src.is_family():
                continue
            if ctx.identity_holds(ident, src):
                witness = ident.constant_failure_witness(tgt)
                if witness is not None:
                    return Verdict(sname, tname, "graded_identity", f"via {ident.name} at {witness[0]}")
        return None
    if klass in ("a_functor", "f_functor", "even_part"):
        maker = {"a_functor": inv.a_functor, "f_functor": inv.f_functor, "even_part": inv.even_part}[klass]
        sub = battery(ctx, maker(src), maker(tgt), depth=1, top=False)
        if sub.conclusive:
            return Verdict(sname, tname, klass, f"inner {sub.klass}: {sub.detail}")
        return None
    return None


@dataclass
class RowVerdict:
    source: str
    target: str
    paper_reason: str
    status: str  # certified | certified_other | flagged | contradicted | failed
    detail: str = ""


def verify_nondeg_rows(ctx: BatteryContext, rows, reachable=None):
    """Per-pair verdicts for the rows of one non-degeneration table.

    ``reachable`` is the set of verified-degeneration reachability pairs; a
    row pair found there is a fatal inconsistency between the tables.
    """
    out = []
    for row in rows:
        for s, t in row.pairs():
            paper = row.reason.render()
            if row.reason.klass == "external_citation":
                out.append(RowVerdict(s, t, paper, "flagged", "external citation; not machine-verified"))
                continue
            if reachable is not None and (s, t) in reachable:
                out.append(
                    RowVerdict(
                        s, t, paper, "contradicted",
                        "pair is reachable through verified degeneration certificates",
                    )
                )
                continue
            if row.reason.klass == "closed_set_R":
                out.append(RowVerdict(s, t, paper, "flagged", "closed-set membership evidence, not a proof"))
                continue
            src = ctx.cat[s].algebra
            tgt = ctx.cat[t].algebra
            hit = targeted_check(ctx, src, tgt, row.reason)
            if hit is not None:
                out.append(RowVerdict(s, t, paper, "certified", f"{hit.klass}: {hit.detail}"))
                continue
            verdict = battery(ctx, src, tgt)
            if verdict.conclusive:
                out.append(RowVerdict(s, t, paper, "certified_other", f"{verdict.klass}: {verdict.detail}"))
            else:
                out.append(RowVerdict(s, t, paper, "failed", "battery inconclusive"))
    return out


# ---------------------------------------------------------------------------
# closed-set evidence for the one pair the invariants cannot separate
# ---------------------------------------------------------------------------


@dataclass
class ClosedSetReport:
    source: str
    target: str
    witness_change: str
    witness_in_set: bool
    raw_source_in_set: bool
    raw_target_in_set: bool
    samples: int
    members_found: int
    note: str = "consistent with the closed-orbit argument (evidence, not a proof)"


def _in_closed_set(J: SuperAlgebra) -> bool:
    """Membership in R: both even generators kill f2 and f3, and f2 f3 = 0."""
    for i in range(2):
        for j in (1, 2):
            if any(J.rho[i][j]):
                return False
    if any(J.gamma[1][2]):
        return False
    return True


def closed_set_check(cat: Catalog, samples: int = 10000, seed: int = 0) -> ClosedSetReport:
    """Evidence run for the pair ((2,3)_30, (2,3)_7).

    (a) the defining conditions of R are linear equations in the structure
    constants, so R is Zariski-closed by construction; (b) a signed odd basis
    permutation found by bounded search carries the source representative
    into R; (c) no sampled point of the target orbit lies in R.
    """
    source = cat["(2,3)_30"].algebra
    target = cat["(2,3)_7"].algebra

    raw_source = _in_closed_set(source)
    raw_target = _in_closed_set(target)

    witness = None
    from itertools import permutations, product as iproduct

    for perm in permutations(range(3)):
        for signs in iproduct((1, -1), repeat=3):
            S = [[ZERO] * 3 for _ in range(3)]
            for col, (row, sg) in enumerate(zip(perm, signs)):
                S[row][col] = Scalar.of(sg)
            g = BasisChange(Matrix.identity(2), Matrix(S))
            moved = apply_basis_change(source, g)
            if _in_closed_set(moved):
                witness = (perm, signs)
                break
        if witness:
            break

    rng = random.Random(seed)
    members = 0
    # membership only constrains the products E_i * F_j (j in {2,3}) and
    # F2 * F3 as vectors, so no basis inversion is needed per sample
    for _ in range(samples):
        while True:
            T = [[Fraction(rng.randint(-6, 6)) for _ in range(2)] for _ in range(2)]
            if T[0][0] * T[1][1] - T[0][1] * T[1][0] != 0:
                break
        while True:
            S = [[Fraction(rng.randint(-6, 6)) for _ in range(3)] for _ in range(3)]
            det = (
                S[0][0] * (S[1][1] * S[2][2] - S[1][2] * S[2][1])
                - S[0][1] * (S[1][0] * S[2][2] - S[1][2] * S[2][0])
                + S[0][2] * (S[1][0] * S[2][1] - S[1][1] * S[2][0])
            )
            if det != 0:
                break
        # target (2,3)_7: e1 f2 = f1 and f1 f3 = e2 are the only products
        in_set = True
        for i in range(2):
            for j in (1, 2):
                # E_i * F_j = sum_a T[a][i] sum_b S[b][j] (e_a f_b); only (a,b)=(0,1) is nonzero
                if T[0][i] * S[1][j] != 0:
                    in_set = False
                    break
            if not in_set:
                break
        if in_set:
            # F2 * F3 = sum_{a<b} (S[a][1] S[b][2] - S[b][1] S[a][2]) f_a f_b; only (0,2) nonzero
            if S[0][1] * S[2][2] - S[2][1] * S[0][2] != 0:
                in_set = False
        if in_set:
            members += 1

    perm, signs = witness if witness else ((0, 1, 2), (1, 1, 1))
    witness_text = ", ".join(
        f"F{col + 1} = {'-' if sg < 0 else ''}f{row + 1}" for col, (row, sg) in enumerate(zip(perm, signs))
    )
    return ClosedSetReport(
        source="(2,3)_30",
        target="(2,3)_7",
        witness_change=witness_text if witness else "none found",
        witness_in_set=witness is not None,
        raw_source_in_set=raw_source,
        raw_target_in_set=raw_target,
        samples=samples,
        members_found=members,
    )
