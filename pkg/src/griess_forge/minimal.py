"""Unitary Virasoro minimal-model data.

Central charges c_m = 1 - 6/((m+2)(m+3)), conformal weights h_{r,s},
fusion rules, the sigma-type weight sets B^(m), and the module census of
the parity extensions W(c_m) = L(c_m,0) + L(c_m, m(m+1)/4) for
m = 0, 3 mod 4.  Labels are normalized to 1 <= s <= r <= m+1 using the
symmetry (r, s) ~ (m+2-r, m+3-s).
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "central_charge", "highest_weight", "normalize_label", "all_labels",
    "fusion", "sigma_type_set", "WModuleClass", "w_module_classification",
    "u3a_module_table", "charge_to_m",
]


def central_charge(m):
    if m < 1:
        raise ValueError("unitary series needs m >= 1")
    return 1 - Fraction(6, (m + 2) * (m + 3))


def charge_to_m(c):
    """Inverse of central_charge on the unitary series, or None."""
    from .exact import CycNum
    if isinstance(c, CycNum):
        if not c.is_rational():
            return None
        c = c.rational_part()
    c = Fraction(c)
    if not 0 < c < 1:
        return None
    m = 1
    while True:
        cm = central_charge(m)
        if cm == c:
            return m
        if cm > c:
            return None
        m += 1


def normalize_label(m, r, s):
    if not (1 <= r <= m + 1 and 1 <= s <= m + 2):
        raise ValueError("label (%d, %d) out of range for m = %d" % (r, s, m))
    if s > r:
        r, s = m + 2 - r, m + 3 - s
    if not (1 <= s <= r <= m + 1):
        raise ValueError("label (%d, %d) cannot be normalized for m = %d" % (r, s, m))
    return (r, s)


def all_labels(m):
    return [(r, s) for r in range(1, m + 2) for s in range(1, r + 1)]


def highest_weight(m, r, s):
    """h_{r,s} = ((r(m+3) - s(m+2))^2 - 1) / (4(m+2)(m+3))."""
    r, s = normalize_label(m, r, s)
    num = (r * (m + 3) - s * (m + 2)) ** 2 - 1
    return Fraction(num, 4 * (m + 2) * (m + 3))


def fusion(m, a, b):
    """Fusion product of two irreducibles, as a Counter of normalized labels.

    The index ranges truncate at the walls, so each constituent appears
    with its true multiplicity (one, in the unitary series).
    """
    r1, s1 = normalize_label(m, *a)
    r2, s2 = normalize_label(m, *b)
    out = Counter()
    imax = min(r1, r2, m + 2 - r1, m + 2 - r2)
    jmax = min(s1, s2, m + 3 - s1, m + 3 - s2)
    for i in range(1, imax + 1):
        for j in range(1, jmax + 1):
            out[normalize_label(m, abs(r1 - r2) + 2 * i - 1,
                                abs(s1 - s2) + 2 * j - 1)] += 1
    return out


def sigma_type_set(m):
    """The weights B^(m) an adjoint action may have for a sigma-type vector."""
    if m % 2 == 0:
        return {highest_weight(m, 1, s) for s in range(1, m + 3)}
    return {highest_weight(m, r, 1) for r in range(1, m + 2)}


@dataclass(frozen=True)
class WModuleClass:
    """One irreducible of the extension W(c_m), described by its parts.

    label and partner are the L(c_m,0)-constituents (normalized); delta is
    their weight difference; kind records how the extension organizes them:
    a single untwisted module (pair), a twisted module, or two inequivalent
    modules on the same underlying space (split_pm).
    """
    m: int
    label: tuple
    partner: tuple
    delta: Fraction
    kind: str

    def weights(self):
        return (highest_weight(self.m, *self.label),
                highest_weight(self.m, *self.partner))


def w_module_classification(m):
    """Census of irreducible W(c_m)-modules for m = 0, 3 mod 4.

    Returns the untwisted modules: split labels contribute a '+' and '-'
    copy, paired labels one module; twisted classes are listed separately
    in the second return value.
    """
    if m % 4 not in (0, 3):
        raise ValueError("parity extension exists for m = 0, 3 mod 4 only")
    untwisted = []
    twisted = []
    seen = set()
    for (r, s) in all_labels(m):
        if (r, s) in seen:
            continue
        if m % 4 == 0:
            partner = normalize_label(m, m + 2 - r, s)
        else:
            partner = normalize_label(m, r, m + 3 - s)
        h = highest_weight(m, r, s)
        ht = highest_weight(m, *partner)
        delta = h - ht
        seen.add((r, s))
        seen.add(partner)
        if delta.denominator == 1:
            if partner == (r, s):
                untwisted.append(WModuleClass(m, (r, s), partner, delta, "split_pm"))
                untwisted.append(WModuleClass(m, (r, s), partner, delta, "split_pm"))
            else:
                untwisted.append(WModuleClass(m, (r, s), partner, delta, "untwisted_pair"))
        else:
            twisted.append(WModuleClass(m, (r, s), partner, delta, "twisted"))
    return untwisted, twisted


# the six irreducibles of the 3A-algebra, as pairs of (c=4/5, c=6/7) weights;
# multiplicity 2 on the [2/3, *] rows
_F = Fraction
U3A_MODULES = {
    _F(0): ([( _F(0), _F(0)), (_F(3), _F(0)), (_F(0), _F(5)), (_F(3), _F(5))],
            [(_F(2, 3), _F(4, 3))]),
    _F(1, 7): ([(_F(0), _F(1, 7)), (_F(0), _F(22, 7)),
                (_F(3), _F(1, 7)), (_F(3), _F(22, 7))],
               [(_F(2, 3), _F(10, 21))]),
    _F(5, 7): ([(_F(0), _F(5, 7)), (_F(0), _F(12, 7)),
                (_F(3), _F(5, 7)), (_F(3), _F(12, 7))],
               [(_F(2, 3), _F(1, 21))]),
    _F(2, 5): ([(_F(2, 5), _F(0)), (_F(2, 5), _F(5)),
                (_F(7, 5), _F(0)), (_F(7, 5), _F(5))],
               [(_F(1, 15), _F(4, 3))]),
    _F(19, 35): ([(_F(2, 5), _F(1, 7)), (_F(2, 5), _F(22, 7)),
                  (_F(7, 5), _F(1, 7)), (_F(7, 5), _F(22, 7))],
                 [(_F(1, 15), _F(10, 21))]),
    _F(4, 35): ([(_F(2, 5), _F(5, 7)), (_F(2, 5), _F(12, 7)),
                 (_F(7, 5), _F(5, 7)), (_F(7, 5), _F(12, 7))],
                [(_F(1, 15), _F(1, 21))]),
}


def u3a_module_table():
    """The six irreducible modules of the 3A-algebra.

    Maps the naming weight to (simple components, doubled components); the
    doubled entries appear with multiplicity two.  Consistency: the naming
    weight is the minimal total weight over all components, and every
    component weight belongs to the m=3 resp. m=4 unitary series.
    """
    out = {}
    for name, (single, double) in U3A_MODULES.items():
        comps = list(single) + [d for d in double for _ in range(2)]
        total_min = min(h1 + h2 for h1, h2 in comps)
        if total_min != name:
            raise AssertionError("module %s has minimal weight %s" % (name, total_min))
        out[name] = (list(single), list(double))
    return out
