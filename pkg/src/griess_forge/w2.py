"""The theta-even weight-two algebra of a sqrt(2)-scaled root lattice.

For a doubly even lattice M (all norms in 4Z, all pairings even) the
weight-two space is spanned by Heisenberg quadratics b_i(-1)b_j(-1),
single modes b_i(-2), and exponentials e^beta over the norm-4 vectors.
The theta-even part keeps the quadratics and the symmetric combinations
e^beta + e^{-beta}; there the degree-one product a.b and the normalized
bilinear form make a commutative algebra with invariant form (the Griess
product of the fixed-point subalgebra).

Elements store signed exponentials, because coset sums and character
twists of even vectors are not individually theta-even; products track
the antisymmetric b(-2) residue of e^beta . e^{-beta} exactly, so any
failure of a claimed subspace to close is visible rather than projected
away.  The product case table (with the trivial two-cocycle, admissible
because all pairings are even):

    (b b') . (c c') = <b,c> b'c' + <b,c'> b'c + <b',c> b c' + <b',c'> b c
    (b b') . e^beta = <b,beta><b',beta> e^beta      (both orders)
    e^beta . e^gamma = e^{beta+gamma}               if <beta,gamma> = -2
    e^beta . e^-beta = beta(-1)^2/2 + beta(-2)/2
    e^beta . e^gamma = 0                            if <beta,gamma> >= 0
    (b b') . c(-2)   = 2 <b,c> b'(-2) + 2 <b',c> b(-2)
    e^beta . c(-2)   = -<c,beta> e^beta
    b(-2) . c(-2)    = 0

and the form: <b b', c c'> = <b,c><b',c'> + <b,c'><b',c>, exponentials
pair by <e^beta, e^gamma> = delta_{beta+gamma,0}, mixed pairs vanish,
<b(-2), c(-2)> = 2 <b,c>.  The d2 cases follow from sliding the degree
shift through the translation operator; the conformal vector acting as 2
on b(-2) pins them down.
"""

from fractions import Fraction

from .lattices import short_vectors, Sublattice, quotient_structure
from .linalg import inverse as q_inverse

__all__ = ["W2Algebra", "W2Element", "conformal_vector", "tilde_omega",
           "coset_sum", "virasoro_check", "CosetCharacter"]

_F0 = Fraction(0)
_F1 = Fraction(1)
_HALF = Fraction(1, 2)


class W2Element:
    """Sparse weight-two vector: Heisenberg pairs, signed exponentials, b(-2) part."""

    __slots__ = ("heis", "exps", "d2")

    def __init__(self, heis=None, exps=None, d2=None):
        self.heis = {k: v for k, v in (heis or {}).items() if v}
        self.exps = {k: v for k, v in (exps or {}).items() if v}
        self.d2 = {k: v for k, v in (d2 or {}).items() if v}

    def __add__(self, other):
        h = dict(self.heis)
        e = dict(self.exps)
        d = dict(self.d2)
        for k, v in other.heis.items():
            h[k] = h.get(k, _F0) + v
        for k, v in other.exps.items():
            e[k] = e.get(k, _F0) + v
        for k, v in other.d2.items():
            d[k] = d.get(k, _F0) + v
        return W2Element(h, e, d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return W2Element({k: -v for k, v in self.heis.items()},
                         {k: -v for k, v in self.exps.items()},
                         {k: -v for k, v in self.d2.items()})

    def scale(self, c):
        if not c:
            return W2Element()
        return W2Element({k: c * v for k, v in self.heis.items()},
                         {k: c * v for k, v in self.exps.items()},
                         {k: c * v for k, v in self.d2.items()})

    def __eq__(self, other):
        if not isinstance(other, W2Element):
            return NotImplemented
        return (self.heis == other.heis and self.exps == other.exps
                and self.d2 == other.d2)

    def __hash__(self):
        raise TypeError("W2Element is not hashable")

    def is_zero(self):
        return not self.heis and not self.exps and not self.d2

    def theta(self):
        """The lift of the -1 isometry: e^beta -> e^-beta, b(-2) -> -b(-2)."""
        return W2Element(dict(self.heis),
                         {tuple(-t for t in k): v for k, v in self.exps.items()},
                         {k: -v for k, v in self.d2.items()})

    def is_theta_even(self):
        if self.d2:
            return False
        for k, v in self.exps.items():
            if self.exps.get(tuple(-t for t in k)) != v:
                return False
        return True

    def __repr__(self):
        bits = []
        for (i, j), v in sorted(self.heis.items()):
            bits.append("%r*h%d h%d" % (v, i, j))
        if self.exps:
            bits.append("+%d exp terms" % len(self.exps))
        if self.d2:
            bits.append("+d2 part")
        return "W2Element(%s)" % "; ".join(bits)


def _acc(d, k, v):
    if not v:
        return
    w = d.get(k)
    if w is None:
        d[k] = v
    else:
        w = w + v
        if w:
            d[k] = w
        else:
            del d[k]


class W2Algebra:
    """The weight-two machinery of one doubly even lattice."""

    def __init__(self, lattice, name=None):
        self.lattice = lattice
        self.rank = lattice.rank
        self.name = name or (lattice.name and "W2(%s)" % lattice.name)
        g = lattice.gram
        for i in range(self.rank):
            if g[i][i] % 4:
                raise ValueError("lattice is not doubly even")
            for j in range(self.rank):
                if g[i][j] % 2:
                    raise ValueError("lattice is not doubly even")
        if short_vectors(lattice, 2):
            raise ValueError("lattice has roots; expected a sqrt(2)-rescaling")
        self.vectors4 = short_vectors(lattice, 4)
        self.classes = [self.vectors4[i] for i in range(0, len(self.vectors4), 2)]
        self.class_index = {}
        for idx, rep in enumerate(self.classes):
            self.class_index[rep] = idx
            self.class_index[tuple(-t for t in rep)] = idx
        self.heis_pairs = [(i, j) for i in range(self.rank)
                           for j in range(i, self.rank)]
        self.heis_index = {p: k for k, p in enumerate(self.heis_pairs)}
        self.dim = len(self.heis_pairs) + len(self.classes)
        self._gv = {}
        for v in self.vectors4:
            self._gv[v] = tuple(sum(g[i][j] * v[j] for j in range(self.rank))
                                for i in range(self.rank))

    # -- bases -------------------------------------------------------------

    def basis_element(self, k):
        """k-th theta-even basis vector: Heisenberg pairs first, then classes."""
        nh = len(self.heis_pairs)
        if k < nh:
            return W2Element({self.heis_pairs[k]: _F1})
        rep = self.classes[k - nh]
        return W2Element(exps={rep: _F1, tuple(-t for t in rep): _F1})

    def class_coords(self, elem):
        """Coordinates over the theta-even basis; requires a theta-even element."""
        if not elem.is_theta_even():
            raise ValueError("element is not theta-even")
        out = [_F0] * self.dim
        for k, v in elem.heis.items():
            out[self.heis_index[k]] = v
        nh = len(self.heis_pairs)
        for rep, idx in ((r, self.class_index[r]) for r in self.classes):
            v = elem.exps.get(rep)
            if v:
                out[nh + idx] = v
        return out

    def from_class_coords(self, coords):
        heis = {}
        exps = {}
        nh = len(self.heis_pairs)
        for k, c in enumerate(coords):
            if not c:
                continue
            if k < nh:
                heis[self.heis_pairs[k]] = c
            else:
                rep = self.classes[k - nh]
                exps[rep] = c
                exps[tuple(-t for t in rep)] = c
        return W2Element(heis, exps)

    def signed_dim(self):
        return len(self.heis_pairs) + len(self.vectors4) + self.rank

    def signed_coords(self, elem):
        """Coordinates over the full signed spanning set (for span arithmetic)."""
        out = [_F0] * self.signed_dim()
        for k, v in elem.heis.items():
            out[self.heis_index[k]] = v
        nh = len(self.heis_pairs)
        pos = {v: i for i, v in enumerate(self.vectors4)}
        for k, v in elem.exps.items():
            out[nh + pos[k]] = v
        base = nh + len(self.vectors4)
        for i, v in elem.d2.items():
            out[base + i] = v
        return out

    # -- product and form ----------------------------------------------------

    def gvec(self, v):
        gv = self._gv.get(v)
        if gv is None:
            g = self.lattice.gram
            gv = tuple(sum(g[i][j] * v[j] for j in range(self.rank))
                       for i in range(self.rank))
            self._gv[v] = gv
        return gv

    def product(self, a, b):
        """The weight-two component of the degree-one product a . b."""
        g = self.lattice.gram
        out_h, out_e, out_d = {}, {}, {}
        ah, bh = a.heis, b.heis
        ae, be = a.exps, b.exps
        ad2, bd2 = a.d2, b.d2
        if ad2 or bd2:
            for dd, hh in ((ad2, bh), (bd2, ah)):
                for i, x in dd.items():
                    for (k, l), y in hh.items():
                        s = 2 * x * y
                        _acc(out_d, l, g[i][k] * s)
                        _acc(out_d, k, g[i][l] * s)
            for dd, ee in ((ad2, be), (bd2, ae)):
                for i, x in dd.items():
                    for gamma, y in ee.items():
                        _acc(out_e, gamma, -self.gvec(gamma)[i] * (x * y))
        if ah and bh:
            for (i, j), x in ah.items():
                for (k, l), y in bh.items():
                    s = x * y
                    _acc(out_h, (j, l) if j <= l else (l, j), g[i][k] * s)
                    _acc(out_h, (j, k) if j <= k else (k, j), g[i][l] * s)
                    _acc(out_h, (i, l) if i <= l else (l, i), g[j][k] * s)
                    _acc(out_h, (i, k) if i <= k else (k, i), g[j][l] * s)
        if ah and be:
            for (i, j), x in ah.items():
                for beta, y in be.items():
                    gb = self.gvec(beta)
                    _acc(out_e, beta, gb[i] * gb[j] * x * y)
        if ae and bh:
            for (k, l), y in bh.items():
                for beta, x in ae.items():
                    gb = self.gvec(beta)
                    _acc(out_e, beta, gb[k] * gb[l] * x * y)
        if ae and be:
            for beta, x in ae.items():
                gb = self.gvec(beta)
                nb = tuple(-t for t in beta)
                for gamma, y in be.items():
                    p = sum(gb[i] * gamma[i] for i in range(self.rank) if gamma[i])
                    if p == -2:
                        _acc(out_e, tuple(beta[i] + gamma[i] for i in range(self.rank)),
                             x * y)
                    elif p == -4:
                        if gamma != nb:
                            raise AssertionError("pairing -4 must mean gamma = -beta")
                        s = _HALF * x * y
                        for i in range(self.rank):
                            bi = beta[i]
                            if not bi:
                                continue
                            _acc(out_d, i, s * bi)
                            for j in range(i, self.rank):
                                bj = beta[j]
                                if bj:
                                    _acc(out_h, (i, j),
                                         s * bi * bj * (2 if i != j else 1))
        return W2Element(out_h, out_e, out_d)

    def form(self, a, b):
        """The normalized invariant bilinear form <a, b>."""
        g = self.lattice.gram
        tot = _F0
        if a.heis and b.heis:
            for (i, j), x in a.heis.items():
                for (k, l), y in b.heis.items():
                    tot = tot + (g[i][k] * g[j][l] + g[i][l] * g[j][k]) * (x * y)
        if a.exps and b.exps:
            for beta, x in a.exps.items():
                y = b.exps.get(tuple(-t for t in beta))
                if y:
                    tot = tot + x * y
        if a.d2 and b.d2:
            for i, x in a.d2.items():
                for j, y in b.d2.items():
                    tot = tot + 2 * g[i][j] * (x * y)
        return tot

    # -- sublattice root data ------------------------------------------------

    def scaled_roots(self, rows):
        """Norm-4 vectors of the sublattice spanned by the given basis rows,
        in ambient coordinates."""
        sub = Sublattice(self.lattice, rows)
        out = []
        for v in short_vectors(sub.as_lattice(), 4):
            amb = [0] * self.rank
            for c, row in zip(v, rows):
                if c:
                    for i, t in enumerate(row):
                        amb[i] += c * t
            out.append(tuple(amb))
        return out


def conformal_vector(alg):
    """The Heisenberg conformal vector; acts as 2 on the whole weight-two space."""
    ginv = q_inverse([[Fraction(x) for x in row] for row in alg.lattice.gram])
    heis = {}
    for i in range(alg.rank):
        for j in range(i, alg.rank):
            c = ginv[i][j] if i != j else _HALF * ginv[i][i]
            if c:
                heis[(i, j)] = c
    return W2Element(heis)


def sub_conformal_vector(alg, roots, coxeter):
    """Conformal vector of an orthogonal root-sublattice component, from the
    root-sum expression: (1/8h) * sum over scaled roots of beta(-1)^2."""
    c = Fraction(1, 8 * coxeter)
    heis = {}
    for beta in roots:
        for i in range(alg.rank):
            bi = beta[i]
            if not bi:
                continue
            for j in range(i, alg.rank):
                bj = beta[j]
                if bj:
                    _acc(heis, (i, j), c * bi * bj * (2 if i != j else 1))
    return W2Element(heis)


def tilde_omega(alg, roots, coxeter):
    """The distinguished Virasoro vector of a root sublattice:
    2/(h+2) times its conformal vector plus 1/(h+2) times the sum of the
    exponentials of its scaled roots."""
    w = sub_conformal_vector(alg, roots, coxeter).scale(Fraction(2, coxeter + 2))
    ec = Fraction(1, coxeter + 2)
    exps = {beta: ec for beta in roots}
    return w + W2Element(exps=exps)


def virasoro_check(alg, v):
    """(is_virasoro, central_charge): v . v = 2 v and c = 2 <v, v>.

    The zero vector is not a Virasoro vector.
    """
    sq = alg.product(v, v)
    ok = (not v.is_zero()) and sq == v.scale(Fraction(2))
    c = 2 * alg.form(v, v)
    return ok, c


def coset_sum(alg, classify, cls):
    """Sum of e^beta over the norm-4 vectors in one congruence class.

    An empty class yields the zero element with a warning rather than an
    error, so sweeps over all classes stay total.
    """
    exps = {}
    for beta in alg.vectors4:
        if classify(beta) == cls:
            exps[beta] = _F1
    if not exps:
        import warnings
        warnings.warn("coset %r contains no norm-4 vectors" % (cls,))
    return W2Element(exps=exps)


class CosetCharacter:
    """A root-of-unity character of lattice/sublattice acting on exponentials.

    chi(e^beta) = zeta^k(beta) with zeta of the quotient exponent; fixes the
    Heisenberg part.  This is an automorphism of the signed weight-two
    space (and of the full lattice algebra it shadows).
    """

    def __init__(self, alg, sub_rows, weights=None):
        self.alg = alg
        sub = Sublattice(alg.lattice, sub_rows)
        moduli, classify = quotient_structure(sub)
        self.moduli = moduli
        self.classify = classify
        if weights is None:
            weights = tuple(1 for _ in moduli)
        self.weights = tuple(weights)
        exponent = 1
        for m in moduli:
            exponent = exponent * m // _igcd(exponent, m)
        self.exponent = exponent

    def exponent_of(self, beta):
        cls = self.classify(beta)
        e = 0
        for c, w, m in zip(cls, self.weights, self.moduli):
            e += c * w * (self.exponent // m)
        return e % self.exponent

    def value(self, beta):
        from .exact import zeta
        return zeta(self.exponent, self.exponent_of(beta))

    def order(self):
        from math import gcd
        g = self.exponent
        for w, m in zip(self.weights, self.moduli):
            g = gcd(g, (w * (self.exponent // m)) % self.exponent)
        return self.exponent // g if g else 1

    def apply(self, elem):
        exps = {}
        for beta, v in elem.exps.items():
            val = self.value(beta)
            if val == 1:
                exps[beta] = v
            else:
                exps[beta] = val * v
        return W2Element(dict(elem.heis), exps, dict(elem.d2))

    def power(self, k):
        out = CosetCharacter.__new__(CosetCharacter)
        out.alg = self.alg
        out.moduli = self.moduli
        out.classify = self.classify
        out.weights = tuple(w * k for w in self.weights)
        out.exponent = self.exponent
        return out


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a
