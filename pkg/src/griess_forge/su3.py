"""The order-3 permutation, its diagonalizer, and their transpose relations.

All entries live in Q(z) (z a primitive 12th root of unity): the cube
roots of unity are z^4-powers and 1/sqrt(3) = (2z - z^3)/3.  The checks
are exact matrix identities: the conjugation tau = s r s^{-1} with r the
diagonal of cube roots, unitarity and symmetry of s, s^4 = 1, and the
transpose-inverse relations that drive the order-8 dihedral interplay
with the lattice involution X -> (X^T)^{-1}.
"""

from fractions import Fraction

from .exact import CycNum, zeta, sqrt3
from .linalg import mat_mul, mat_eq, identity, inverse, det, transpose, mat_pow

__all__ = ["su3_data", "theta_matrix_relations", "conj_transpose", "is_unitary"]

F = Fraction


def _c(x):
    return x if isinstance(x, CycNum) else CycNum(x)


def su3_data():
    """(tau, s, r): the 3-cycle, the unitary symmetric diagonalizer, and
    the diagonal of cube roots, with s^{-1} tau s = r verified."""
    z = zeta(3)
    z2 = zeta(3, 2)
    one = CycNum(1)
    zero = CycNum(0)
    tau = [[zero, one, zero], [zero, zero, one], [one, zero, zero]]
    inv_sqrt3 = sqrt3() * F(1, 3)
    s = [[z * inv_sqrt3, z2 * inv_sqrt3, inv_sqrt3],
         [z2 * inv_sqrt3, z * inv_sqrt3, inv_sqrt3],
         [inv_sqrt3, inv_sqrt3, inv_sqrt3]]
    r = [[z, zero, zero], [zero, z2, zero], [zero, zero, one]]
    # the displayed normalization of s is unitary with det(s) = -i (a
    # primitive fourth root, consistent with s^4 = 1); rescaling it into
    # the special unitary group would destroy s = s^T and s^4 = 1, so the
    # determinant is recorded rather than forced to 1
    checks = {
        "det(tau) = 1": det(tau) == 1,
        "det(r) = 1": det(r) == 1,
        "det(s) = -i": det(s) == zeta(4, 3),
        "det(s)^4 = 1": det(s) ** 4 == 1,
        "s unitary": is_unitary(s),
        "tau unitary": is_unitary(tau),
        "s^{-1} tau s = r": mat_eq(mat_mul(inverse(s), mat_mul(tau, s)), r),
        "tau^3 = 1": mat_eq(mat_pow(tau, 3), identity(3)),
        "s symmetric": mat_eq(transpose(s), s),
        "s^4 = 1": mat_eq(mat_pow(s, 4), identity(3)),
    }
    bad = [k for k, v in checks.items() if not v]
    if bad:
        raise AssertionError("matrix identities failed: %s" % ", ".join(bad))
    return tau, s, r


def conj_transpose(a):
    return [[_c(x).conjugate() for x in row] for row in zip(*a)]


def is_unitary(a):
    return mat_eq(mat_mul(a, conj_transpose(a)), identity(len(a)))


def theta_matrix_relations():
    """Verification record for the transpose-inverse action theta(X) = (X^T)^{-1}.

    Returns {name: bool}; everything must hold exactly.
    """
    tau, s, r = su3_data()

    def theta(x):
        return transpose(inverse(x))

    record = {
        "theta is an involution on s": mat_eq(theta(theta(s)), s),
        "theta is an involution on tau": mat_eq(theta(theta(tau)), tau),
        "theta(s) = s^3": mat_eq(theta(s), mat_pow(s, 3)),
        "theta(tau) = tau": mat_eq(theta(tau), tau),
        "theta(r) = conj(r)": mat_eq(theta(r), [[_c(x).conjugate() for x in row]
                                                for row in r]),
        # in the group generated by s and theta one has theta s theta = theta(s),
        # so theta s theta s^{-1} = s^2 reduces to theta(s) s^{-1} = s^2
        "theta(s) s^{-1} = s^2": mat_eq(mat_mul(theta(s), inverse(s)),
                                        mat_pow(s, 2)),
    }
    return record
