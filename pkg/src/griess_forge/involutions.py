"""Miyamoto involutions as exact linear maps, and their group data.

A map is a square matrix over Q or Q(z) whose columns are the images of
the basis of a finite-dimensional algebra (or of the theta-even basis of
a weight-two algebra, through the adapter).  tau-involutions negate the
1/16 eigenspace of the adjoint action of a central-charge-1/2 Virasoro
vector; sigma-involutions of sigma-type vectors negate the parity-odd
sectors.  Eigenspaces are found by kernel computations over the closed
candidate weight list of the matching unitary series, and every
constructed involution can be pushed through the full automorphism check.
"""

from fractions import Fraction

from .linalg import (identity, mat_mul, mat_vec, mat_eq, kernel,
                     inverse, solve_matrix)
from .minimal import charge_to_m, highest_weight, all_labels, sigma_type_set

F = Fraction

__all__ = [
    "W2Space", "ad_matrix", "ad_spectrum", "tau_involution", "sigma_involution",
    "is_automorphism", "map_order", "transposition_scan", "group_closure",
    "restrict_map", "eigenspace_rows",
]


class W2Space:
    """Adapter exposing a W2Algebra through the FDAlgebra protocol."""

    def __init__(self, alg):
        self.alg = alg
        self.dim = alg.dim
        self.names = ["b%d" % k for k in range(alg.dim)]

    def product_vec(self, u, v):
        a = self.alg.from_class_coords(u)
        b = self.alg.from_class_coords(v)
        return self.alg.class_coords(self.alg.product(a, b))

    def form_vec(self, u, v):
        a = self.alg.from_class_coords(u)
        b = self.alg.from_class_coords(v)
        return self.alg.form(a, b)

    def is_virasoro(self, u):
        from .w2 import virasoro_check
        ok, c = virasoro_check(self.alg, self.alg.from_class_coords(u))
        return ok, c

    def element_vec(self, w2elem):
        return self.alg.class_coords(w2elem)


def ad_matrix(space, v):
    """Matrix of the adjoint action x -> v . x; columns are basis images."""
    cols = []
    for j in range(space.dim):
        e = [F(0)] * space.dim
        e[j] = F(1)
        cols.append(space.product_vec(v, e))
    return [[cols[j][i] for j in range(space.dim)] for i in range(space.dim)]


def ad_spectrum(space, v, candidates=None):
    """Eigenspace decomposition of ad(v) over the closed candidate list.

    v must be a simple Virasoro vector of unitary central charge; the
    candidates default to {2} union the weights of the matching series.
    Raises if the eigenspaces do not fill the space (reporting the
    residual dimension), or if the eigenvalue-2 space is not the line
    through v itself.
    """
    ok, c = space.is_virasoro(v)
    if not ok:
        raise ValueError("ad_spectrum needs a Virasoro vector")
    check_two = False
    if candidates is None:
        m = charge_to_m(c)
        if m is None:
            raise ValueError("central charge %s is not in the unitary series" % (c,))
        hset = {highest_weight(m, r, s) for r, s in all_labels(m)}
        candidates = sorted({F(2)} | hset)
        check_two = F(2) not in hset
    mat = ad_matrix(space, v)
    eigen = {}
    total = 0
    n = space.dim
    for lam in candidates:
        shifted = [[mat[i][j] - (lam if i == j else 0) for j in range(n)]
                   for i in range(n)]
        basis = kernel(shifted)
        if basis:
            eigen[lam] = basis
            total += len(basis)
    if total != n:
        raise ValueError("adjoint action is not semisimple over the candidate "
                         "list: eigenspaces fill %d of %d" % (total, n))
    if check_two and F(2) in eigen and len(eigen[F(2)]) != 1:
        raise ValueError("eigenvalue-2 space has dimension %d"
                         % len(eigen[F(2)]))
    return eigen


def eigenspace_rows(eigen, values):
    rows = []
    for lam in values:
        rows.extend(eigen.get(lam, []))
    return rows


def _signed_map(space, eigen, minus_values):
    n = space.dim
    cols = []
    signs = []
    for lam, basis in sorted(eigen.items()):
        s = -1 if lam in minus_values else 1
        for b in basis:
            cols.append(b)
            signs.append(s)
    bmat = [[cols[j][i] for j in range(n)] for i in range(n)]
    binv = inverse(bmat)
    scaled = [[signs[i] * binv[i][j] for j in range(n)] for i in range(n)]
    return mat_mul(bmat, scaled)


def tau_involution(space, e, verify=True):
    """The involution negating the 1/16 sector of an Ising vector."""
    ok, c = space.is_virasoro(e)
    if not ok or c != F(1, 2):
        raise ValueError("tau needs a central charge 1/2 Virasoro vector")
    eigen = ad_spectrum(space, e)
    allowed = {F(2), F(0), F(1, 2), F(1, 16)}
    if not set(eigen) <= allowed:
        raise ValueError("adjoint spectrum %s is not of Ising type"
                         % sorted(eigen))
    mat = _signed_map(space, eigen, {F(1, 16)})
    if verify and not is_automorphism(space, mat):
        raise AssertionError("tau map failed the automorphism check")
    return mat


def sigma_involution(space, v, m, verify=True):
    """The parity involution of a sigma-type Virasoro vector (m = 1 or 4)."""
    ok, c = space.is_virasoro(v)
    if not ok:
        raise ValueError("sigma needs a Virasoro vector")
    if m == 1:
        if c != F(1, 2):
            raise ValueError("m = 1 sigma needs central charge 1/2")
        minus = {F(1, 2)}
    elif m == 4:
        if c != F(6, 7):
            raise ValueError("m = 4 sigma needs central charge 6/7")
        minus = {F(5), F(12, 7), F(1, 7)}
    else:
        raise ValueError("sigma is implemented for m in {1, 4}")
    eigen = ad_spectrum(space, v)
    allowed = {F(2)} | sigma_type_set(m)
    if not set(eigen) <= allowed:
        raise ValueError("vector is not of sigma type: spectrum %s"
                         % sorted(eigen))
    mat = _signed_map(space, eigen, minus)
    if verify and not is_automorphism(space, mat):
        raise AssertionError("sigma map failed the automorphism check")
    return mat


def is_automorphism(space, mat):
    """f(a.b) = f(a).f(b) and <fa, fb> = <a, b> on all basis pairs."""
    n = space.dim
    cols = [[mat[i][j] for i in range(n)] for j in range(n)]
    basis = identity(n)
    for i in range(n):
        for j in range(i, n):
            p = space.product_vec(basis[i], basis[j])
            lhs = mat_vec(mat, p)
            rhs = space.product_vec(cols[i], cols[j])
            if lhs != rhs:
                return False
            if space.form_vec(cols[i], cols[j]) != space.form_vec(basis[i], basis[j]):
                return False
    return True


def map_order(mat, cap=24):
    """Least k <= cap with mat^k = 1."""
    n = len(mat)
    ident = identity(n)
    power = mat
    for k in range(1, cap + 1):
        if mat_eq(power, ident):
            return k
        power = mat_mul(power, mat)
    raise ValueError("order exceeds cap %d" % cap)


def transposition_scan(space, vectors, kind, cap=24):
    """Pairwise orders of the involutions attached to the given vectors.

    kind 'tau_ising' builds tau maps and flags orders above 6; kind
    'sigma_c67' builds m = 4 sigma maps and flags orders above 3.
    Returns (orders, violations, maps) with orders[i][j] the order of
    map_i . map_j.
    """
    if kind == "tau_ising":
        maps = [tau_involution(space, v) for v in vectors]
        bound = 6
    elif kind == "sigma_c67":
        maps = [sigma_involution(space, v, 4) for v in vectors]
        bound = 3
    else:
        raise ValueError("kind must be tau_ising or sigma_c67")
    k = len(maps)
    orders = [[None] * k for _ in range(k)]
    violations = []
    for i in range(k):
        for j in range(k):
            o = map_order(mat_mul(maps[i], maps[j]), cap)
            orders[i][j] = o
            if i != j and o > bound:
                violations.append((i, j, o))
    return orders, violations, maps


def group_closure(generators, cap=10000):
    """Closure of the generators under composition, by exact matrix equality."""
    def freeze(m):
        return tuple(tuple(x for x in row) for row in m)

    gens = [freeze(g) for g in generators]
    n = len(generators[0])
    ident = freeze(identity(n))
    seen = {ident}
    ordered = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                prod = freeze(mat_mul([list(r) for r in a], [list(r) for r in g]))
                if prod not in seen:
                    seen.add(prod)
                    ordered.append(prod)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise ValueError("group closure exceeded cap %d" % cap)
        frontier = nxt
    return len(ordered), [[list(r) for r in m] for m in ordered]


def restrict_map(space, mat, rows):
    """Matrix of the map on the subspace spanned by the given rows.

    The rows are coordinate vectors; raises if the map does not preserve
    their span.
    """
    k = len(rows)
    n = len(rows[0])
    a = [[rows[i][t] for i in range(k)] for t in range(n)]
    rhs = [[None] * k for _ in range(n)]
    for j in range(k):
        img = mat_vec(mat, rows[j])
        for t in range(n):
            rhs[t][j] = img[t]
    x = solve_matrix(a, rhs)
    if x is None:
        raise ValueError("map does not preserve the subspace")
    # verify exactly (solve_matrix zero-fills free variables)
    for j in range(k):
        img = mat_vec(mat, rows[j])
        back = [sum((x[i][j] * rows[i][t] for i in range(k)
                     if x[i][j] and rows[i][t]), F(0)) for t in range(n)]
        if back != list(img):
            raise ValueError("map does not preserve the subspace")
    return [[x[i][j] for j in range(k)] for i in range(k)]
