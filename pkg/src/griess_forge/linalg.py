"""Dense exact linear algebra over Q or Q(z).

Matrices are lists of rows; entries are Fraction or CycNum, mixed freely
(the operators promote).  Everything here is plain field Gaussian
elimination with a mild "sparsest pivot" preference; the matrices in this
package stay below a few hundred rows, so no fraction-free or modular
tricks are used.
"""

from fractions import Fraction

__all__ = [
    "identity", "zeros", "transpose", "mat_mul", "mat_vec", "mat_add",
    "mat_sub", "mat_scale", "mat_eq", "solve", "solve_matrix", "kernel",
    "rank", "inverse", "det", "mat_pow", "row_span_coords",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


def identity(n):
    return [[_F1 if i == j else _F0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[_F0] * n for _ in range(m)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([sum((x * y for x, y in zip(row, col) if x and y), _F0)
                    for col in bt])
    return out


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), _F0) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(r) == len(s) and all(x == y for x, y in zip(r, s))
               for r, s in zip(a, b))


def mat_pow(a, n):
    out = identity(len(a))
    base = [row[:] for row in a]
    while n:
        if n & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        n >>= 1
    return out


def _row_weight(row):
    return sum(1 for x in row if x)


def _echelon(a, b=None):
    """In-place reduced row echelon form of a (and the same row ops on b).

    Returns the list of pivot columns.  Pivot rows are chosen among the
    candidates by least number of nonzero entries.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    piv_cols = []
    r = 0
    for c in range(n):
        best = None
        best_w = None
        for i in range(r, m):
            if a[i][c]:
                w = _row_weight(a[i])
                if best is None or w < best_w:
                    best, best_w = i, w
        if best is None:
            continue
        if best != r:
            a[r], a[best] = a[best], a[r]
            if b is not None:
                b[r], b[best] = b[best], b[r]
        p = a[r][c]
        if p != 1:
            inv = 1 / p if isinstance(p, Fraction) else p.inverse()
            a[r] = [x * inv for x in a[r]]
            if b is not None:
                b[r] = [x * inv for x in b[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                if b is not None:
                    b[i] = [x - f * y for x, y in zip(b[i], b[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    return piv_cols


def solve_matrix(a, rhs):
    """One exact solution X of A X = RHS, or None if inconsistent.

    A is m x n, RHS is m x k; free variables are set to zero.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if len(rhs) != m:
        raise ValueError("shape mismatch: %d equations, %d right-hand rows"
                         % (m, len(rhs)))
    if any(len(row) != n for row in a):
        raise ValueError("ragged coefficient matrix")
    aug = [row[:] for row in a]
    r = [row[:] for row in rhs]
    piv = _echelon(aug, r)
    k = len(rhs[0]) if rhs else 0
    # after rref every row past the pivots is zero, so a nonzero rhs there
    # means the system is inconsistent
    for i in range(len(piv), m):
        if any(r[i][t] for t in range(k)):
            return None
    x = zeros(n, k)
    for i, c in enumerate(piv):
        x[c] = r[i][:]
    return x


def solve(a, b):
    """One exact solution x of A x = b (b a vector), or None."""
    x = solve_matrix(a, [[t] for t in b])
    if x is None:
        return None
    return [row[0] for row in x]


def kernel(a):
    """Basis of the right kernel of A, as a list of vectors."""
    m = len(a)
    n = len(a[0]) if m else 0
    red = [row[:] for row in a]
    piv = _echelon(red)
    piv_set = set(piv)
    free = [c for c in range(n) if c not in piv_set]
    basis = []
    for fc in free:
        v = [_F0] * n
        v[fc] = _F1
        for i, c in enumerate(piv):
            v[c] = -red[i][fc]
        basis.append(v)
    return basis


def rank(a):
    red = [row[:] for row in a]
    return len(_echelon(red))


def inverse(a):
    n = len(a)
    red = [row[:] for row in a]
    inv = identity(n)
    piv = _echelon(red, inv)
    if len(piv) != n:
        raise ValueError("matrix is singular")
    return inv


def det(a):
    n = len(a)
    m = [row[:] for row in a]
    d = _F1
    for c in range(n):
        p = None
        for i in range(c, n):
            if m[i][c]:
                p = i
                break
        if p is None:
            return _F0 * d
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        pv = m[c][c]
        d = d * pv
        inv = 1 / pv if isinstance(pv, Fraction) else pv.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def is_positive_definite(gram):
    """Exact test via the pivots of symmetric elimination (rationals only)."""
    n = len(gram)

    def conv(x):
        return x.rational_part() if hasattr(x, "rational_part") else Fraction(x)

    a = [[conv(x) for x in row] for row in gram]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                return False
    for i in range(n):
        if a[i][i] <= 0:
            return False
        inv = 1 / a[i][i]
        for j in range(i + 1, n):
            f = a[i][j] * inv
            if f:
                for k in range(i + 1, n):
                    a[j][k] -= f * a[i][k]
    return True


def row_span_coords(rows, v):
    """Coordinates of v in the span of the given rows, or None.

    Used to express elements in the basis of a subspace: returns c with
    sum(c_i * rows_i) = v.
    """
    if not rows:
        return None if any(v) else []
    a = [[rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]
    return solve(a, list(v))
