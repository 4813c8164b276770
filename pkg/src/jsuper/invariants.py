"""Invariant quantities of a superalgebra: the power filtration and nilindex,
graded annihilator and associative center, the even-derivation dimension
reported as dim Aut, the orbit dimension, the a/F functor images and the
even part, all aggregated into a fingerprint.

Family entries are computed symbolically over Q(p); ranks there are generic
ranks, which the sampled-value consistency checks in the test suite guard.
Results are cached on the algebra instance, so repeated battery runs stay
cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Scalar, ZERO, ONE
from .linalg import Matrix, echelon_basis
from .algebra import SuperAlgebra, GradedVector


class NotNilpotentError(ArithmeticError):
    """The power filtration stabilized at a nonzero subspace."""


@dataclass(frozen=True)
class GradedDims:
    even: int
    odd: int

    def as_tuple(self):
        return (self.even, self.odd)

    def __str__(self) -> str:
        return f"({self.even},{self.odd})"


class GradedSubspace:
    """Canonical graded subspace: reduced row bases per graded component."""

    __slots__ = ("even", "odd", "m", "n")

    def __init__(self, m, n, even_vectors, odd_vectors):
        self.m = m
        self.n = n
        self.even = tuple(echelon_basis(even_vectors, m))
        self.odd = tuple(echelon_basis(odd_vectors, n))

    @property
    def dims(self) -> GradedDims:
        return GradedDims(len(self.even), len(self.odd))

    def is_zero(self) -> bool:
        return not (self.even or self.odd)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedSubspace) and self.even == other.even and self.odd == other.odd

    __hash__ = None


def full_space(J: SuperAlgebra) -> GradedSubspace:
    ev = [tuple(ONE if k == i else ZERO for k in range(J.m)) for i in range(J.m)]
    od = [tuple(ONE if k == i else ZERO for k in range(J.n)) for i in range(J.n)]
    return GradedSubspace(J.m, J.n, ev, od)


def product_space(J: SuperAlgebra, U: GradedSubspace, V: GradedSubspace):
    """Spanning vectors (not yet reduced) of U*V, split by parity."""
    even_out, odd_out = [], []

    def vec_product(ue, uo, ve, vo):
        u = {i: c for i, c in enumerate(ue) if c}
        u.update({J.m + i: c for i, c in enumerate(uo) if c})
        v = {i: c for i, c in enumerate(ve) if c}
        v.update({J.m + i: c for i, c in enumerate(vo) if c})
        res = J.sparse_product(u, v)
        if not res:
            return
        ev = tuple(res.get(k, ZERO) for k in range(J.m))
        od = tuple(res.get(J.m + k, ZERO) for k in range(J.n))
        if any(ev):
            even_out.append(ev)
        if any(od):
            odd_out.append(od)

    zeros_e = (ZERO,) * J.m
    zeros_o = (ZERO,) * J.n
    for ue in U.even:
        for ve in V.even:
            vec_product(ue, zeros_o, ve, zeros_o)
        for vo in V.odd:
            vec_product(ue, zeros_o, zeros_e, vo)
    for uo in U.odd:
        for ve in V.even:
            vec_product(zeros_e, uo, ve, zeros_o)
        for vo in V.odd:
            vec_product(zeros_e, uo, zeros_e, vo)
    return even_out, odd_out


def power_filtration(J: SuperAlgebra):
    """Graded dimensions of J^2 >= J^3 >= ... plus the nilindex.

    Follows the recursion J^{k+1} = J^k J + J^{k-1} J^2 + ... + J J^k.
    Raises NotNilpotentError when the filtration stabilizes at nonzero.
    """
    cached = J._cache.get("powers")
    if cached is not None:
        return cached
    spaces = [full_space(J)]  # spaces[k] = J^{k+1}
    dims = []
    while True:
        k = len(spaces)  # computing J^{k+1}
        ev_all, od_all = [], []
        for i in range(k):
            ev, od = product_space(J, spaces[i], spaces[k - 1 - i])
            ev_all.extend(ev)
            od_all.extend(od)
        nxt = GradedSubspace(J.m, J.n, ev_all, od_all)
        if nxt.is_zero():
            nilindex = k + 1
            break
        if nxt == spaces[-1]:
            raise NotNilpotentError(f"{J!r}: power filtration stabilized at {nxt.dims}")
        spaces.append(nxt)
        dims.append(nxt.dims)
        if len(spaces) > J.dim + 2:
            raise NotNilpotentError(f"{J!r}: filtration does not terminate")
    result = (tuple(dims), nilindex, tuple(spaces))
    J._cache["powers"] = result
    return result


def nilindex(J: SuperAlgebra) -> int:
    return power_filtration(J)[1]


def power_dims(J: SuperAlgebra):
    """GradedDims of J^k for k = 2, 3, ...; empty for the zero algebra."""
    return power_filtration(J)[0]


def _kernel_graded(J: SuperAlgebra, rows_for_even, rows_for_odd):
    """Solve two independent kernel problems, one per graded component."""
    def solve(nunk, rows):
        rows = [r for r in rows if any(r)]
        if not rows:
            return [tuple(ONE if k == i else ZERO for k in range(nunk)) for i in range(nunk)]
        return Matrix(rows).nullspace()

    even_basis = solve(J.m, rows_for_even) if J.m else []
    odd_basis = solve(J.n, rows_for_odd) if J.n else []
    return even_basis, odd_basis


def annihilator(J: SuperAlgebra):
    """Graded dimensions and reduced basis of Ann(J) = {a | aJ = 0}."""
    cached = J._cache.get("ann")
    if cached is not None:
        return cached
    m, n = J.m, J.n
    # even unknowns: rows indexed by (partner basis element, output coordinate)
    even_rows = []
    for j in range(m):
        for k in range(m):
            even_rows.append(tuple(J.c[i][j][k] for i in range(m)))
    for j in range(n):
        for k in range(n):
            even_rows.append(tuple(J.rho[i][j][k] for i in range(m)))
    odd_rows = []
    for j in range(m):
        for k in range(n):
            odd_rows.append(tuple(J.rho[j][i][k] for i in range(n)))  # f_i e_j = e_j f_i
    for j in range(n):
        for k in range(m):
            odd_rows.append(tuple(J.gamma[i][j][k] for i in range(n)))
    ev, od = _kernel_graded(J, even_rows, odd_rows)
    result = (GradedDims(len(ev), len(od)), tuple(ev), tuple(od))
    J._cache["ann"] = result
    return result


def assoc_center(J: SuperAlgebra):
    """Graded dimensions of Z(J) = {a | (a,J,J)=(J,a,J)=(J,J,a)=0}."""
    cached = J._cache.get("center")
    if cached is not None:
        return cached
    m, n = J.m, J.n
    d = J.dim
    tab = J.basis_products()
    sp = J.sparse_product
    one = ONE

    def assoc_columns(a_idx, x, y):
        """Associator (a, x, y) for basis a; returns sparse dict."""
        ax = tab.get((a_idx, x), {})
        left = sp(ax, {y: one})
        xy = tab.get((x, y), {})
        right = sp({a_idx: one}, xy)
        out = dict(left)
        for k, v in right.items():
            cur = out.get(k, ZERO) - v
            if cur:
                out[k] = cur
            else:
                out.pop(k, None)
        return out

    def rows_for(indices):
        rows = []
        nunk = len(indices)
        for x in range(d):
            for y in range(d):
                # three slot positions: (a,x,y), (x,a,y), (x,y,a)
                for slot in range(3):
                    cols = []
                    for a_idx in indices:
                        if slot == 0:
                            vec = assoc_columns(a_idx, x, y)
                        elif slot == 1:
                            axy = sp(tab.get((x, a_idx), {}), {y: one})
                            ay = sp({x: one}, tab.get((a_idx, y), {}))
                            vec = dict(axy)
                            for k, v in ay.items():
                                cur = vec.get(k, ZERO) - v
                                if cur:
                                    vec[k] = cur
                                else:
                                    vec.pop(k, None)
                        else:
                            xya = sp(tab.get((x, y), {}), {a_idx: one})
                            ya = sp({x: one}, tab.get((y, a_idx), {}))
                            vec = dict(xya)
                            for k, v in ya.items():
                                cur = vec.get(k, ZERO) - v
                                if cur:
                                    vec[k] = cur
                                else:
                                    vec.pop(k, None)
                        cols.append(vec)
                    for k in sorted({kk for vec in cols for kk in vec}):
                        rows.append(tuple(vec.get(k, ZERO) for vec in cols))
        return rows

    even_rows = rows_for(list(range(m)))
    odd_rows = rows_for(list(range(m, d)))
    ev, od = _kernel_graded(J, even_rows, odd_rows)
    result = GradedDims(len(ev), len(od))
    J._cache["center"] = result
    return result


def even_derivation_dim(J: SuperAlgebra) -> int:
    """Dimension of parity-preserving derivations; reported as dim Aut(J)."""
    cached = J._cache.get("der")
    if cached is not None:
        return cached
    m, n = J.m, J.n
    nunk = m * m + n * n

    def t_idx(a, i):  # D(e_i) = sum_a T[a][i] e_a
        return a * m + i

    def s_idx(b, j):  # D(f_j) = sum_b S[b][j] f_b
        return m * m + b * n + j

    rows = []
    # pair (e_i, e_j): sum_k c[i][j][k] T[b][k] = sum_a T[a][i] c[a][j][b] + sum_a T[a][j] c[i][a][b]
    for i in range(m):
        for j in range(i, m):
            for b in range(m):
                row = [ZERO] * nunk
                for k in range(m):
                    if J.c[i][j][k]:
                        row[t_idx(b, k)] = row[t_idx(b, k)] + J.c[i][j][k]
                for a in range(m):
                    if J.c[a][j][b]:
                        row[t_idx(a, i)] = row[t_idx(a, i)] - J.c[a][j][b]
                    if J.c[i][a][b]:
                        row[t_idx(a, j)] = row[t_idx(a, j)] - J.c[i][a][b]
                if any(row):
                    rows.append(tuple(row))
    # pair (e_i, f_j): sum_k rho[i][j][k] S[b][k] = sum_a T[a][i] rho[a][j][b] + sum_a S[a][j] rho[i][a][b]
    for i in range(m):
        for j in range(n):
            for b in range(n):
                row = [ZERO] * nunk
                for k in range(n):
                    if J.rho[i][j][k]:
                        row[s_idx(b, k)] = row[s_idx(b, k)] + J.rho[i][j][k]
                for a in range(m):
                    if J.rho[a][j][b]:
                        row[t_idx(a, i)] = row[t_idx(a, i)] - J.rho[a][j][b]
                for a in range(n):
                    if J.rho[i][a][b]:
                        row[s_idx(a, j)] = row[s_idx(a, j)] - J.rho[i][a][b]
                if any(row):
                    rows.append(tuple(row))
    # pair (f_i, f_j): sum_k gamma[i][j][k] T[b][k] = sum_a S[a][i] gamma[a][j][b] + sum_a S[a][j] gamma[i][a][b]
    for i in range(n):
        for j in range(i + 1, n):
            for b in range(m):
                row = [ZERO] * nunk
                for k in range(m):
                    if J.gamma[i][j][k]:
                        row[t_idx(b, k)] = row[t_idx(b, k)] + J.gamma[i][j][k]
                for a in range(n):
                    if J.gamma[a][j][b]:
                        row[s_idx(a, i)] = row[s_idx(a, i)] - J.gamma[a][j][b]
                    if J.gamma[i][a][b]:
                        row[s_idx(a, j)] = row[s_idx(a, j)] - J.gamma[i][a][b]
                if any(row):
                    rows.append(tuple(row))

    rows = [r for r in rows if any(r)]
    dim = nunk if not rows else nunk - Matrix(rows).rank()
    J._cache["der"] = dim
    return dim


def orbit_dim(J: SuperAlgebra) -> int:
    """dim O(J) = dim G - dim Aut(J) with dim G = m^2 + n^2."""
    return J.m * J.m + J.n * J.n - even_derivation_dim(J)


def a_functor(J: SuperAlgebra) -> SuperAlgebra:
    """Keep only the odd-odd products (0, 0, gamma)."""
    cached = J._cache.get("a_functor")
    if cached is not None:
        return cached
    zero_c = [[[ZERO] * J.m for _ in range(J.m)] for _ in range(J.m)]
    zero_rho = [[[ZERO] * J.n for _ in range(J.n)] for _ in range(J.m)]
    out = SuperAlgebra(
        J.m, J.n, zero_c, zero_rho, J.gamma, params=J.params,
        name=None if J.name is None else f"a({J.name})",
    ).drop_unused_params()
    _check_functor_image(out)
    J._cache["a_functor"] = out
    return out


def f_functor(J: SuperAlgebra) -> SuperAlgebra:
    """Keep only the even-even and even-odd products (c, rho, 0)."""
    cached = J._cache.get("f_functor")
    if cached is not None:
        return cached
    zero_gamma = [[[ZERO] * J.m for _ in range(J.n)] for _ in range(J.n)]
    out = SuperAlgebra(
        J.m, J.n, J.c, J.rho, zero_gamma, params=J.params,
        name=None if J.name is None else f"F({J.name})",
    ).drop_unused_params()
    _check_functor_image(out)
    J._cache["f_functor"] = out
    return out


def _check_functor_image(out: SuperAlgebra):
    from .identities import check_jordan_superidentity, check_supercommutativity

    if not check_supercommutativity(out):
        raise ArithmeticError(f"functor image {out!r} lost supercommutativity")
    bad = check_jordan_superidentity(out)
    if bad is not None:
        raise ArithmeticError(f"functor image {out!r} violates the superidentity at {bad.names}")


def even_part(J: SuperAlgebra) -> SuperAlgebra:
    """The even component as a type (m, 0) algebra, reusing all machinery."""
    cached = J._cache.get("even_part")
    if cached is not None:
        return cached
    out = SuperAlgebra(
        J.m, 0, J.c, [[] for _ in range(J.m)], [], params=J.params,
        name=None if J.name is None else f"{J.name}|0",
    ).drop_unused_params()
    J._cache["even_part"] = out
    return out


@dataclass(frozen=True)
class InvariantFingerprint:
    """Deterministic aggregate of the invariants of one superalgebra."""

    type_key: tuple
    nilindex: int
    power_dims: tuple
    ann: tuple
    center: tuple
    der_even_dim: int
    orbit_dim: int
    associative: bool
    a_fingerprint: "InvariantFingerprint | None" = None
    f_fingerprint: "InvariantFingerprint | None" = None

    def render(self) -> str:
        pd = " ".join(f"J^{k + 2}={d}" for k, d in enumerate(self.power_dims))
        return (
            f"nilindex={self.nilindex} {pd or 'J^2=0'} ann=({self.ann[0]},{self.ann[1]}) "
            f"center=({self.center[0]},{self.center[1]}) aut={self.der_even_dim} "
            f"orbit={self.orbit_dim} assoc={'A' if self.associative else 'NA'}"
        )


def fingerprint(J: SuperAlgebra, depth: int = 1) -> InvariantFingerprint:
    from .identities import check_associativity

    key = ("fingerprint", depth)
    cached = J._cache.get(key)
    if cached is not None:
        return cached
    dims, nil, _ = power_filtration(J)
    ann_dims = annihilator(J)[0]
    center_dims = assoc_center(J)
    der = even_derivation_dim(J)
    fp = InvariantFingerprint(
        type_key=(J.m, J.n),
        nilindex=nil,
        power_dims=tuple(d.as_tuple() for d in dims),
        ann=ann_dims.as_tuple(),
        center=center_dims.as_tuple(),
        der_even_dim=der,
        orbit_dim=J.m * J.m + J.n * J.n - der,
        associative=check_associativity(J),
        a_fingerprint=fingerprint(a_functor(J), depth=0) if depth > 0 else None,
        f_fingerprint=fingerprint(f_functor(J), depth=0) if depth > 0 else None,
    )
    J._cache[key] = fp
    return fp
