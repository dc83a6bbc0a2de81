"""Exact multilinear algebra over the symplectic lattice.

Three graded pieces are supported: wedge2 (Lambda^2 H), wedge3
(Lambda^3 H) and tensor12 (H tensor Lambda^2 H), with rational
coefficients throughout (subspace membership is a Q-linear question and
the iterated-commutator values carry integer factors like 6).

Elements are sparse maps from canonically ordered index tuples to
nonzero coefficients; indices are 0-based coordinates of the ambient
space, which is Z^(2g) for surface homology or Z^g after a quotient by
a Lagrangian. Values are immutable and operations pure.

Text form: terms "coeff*i^j", "coeff*i^j^k" or "coeff*a@i^j" (tensor
slot before '@'), joined by ' + ', with 1-based indices and Fraction
coefficients; "0" is the zero element. Round-trips exactly.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import _intlinalg as la

GRADES = ("wedge2", "wedge3", "tensor12")


def _key_sort(grade, key):
    """Canonical key and sign for one term, or None if it vanishes."""
    if grade == "wedge2":
        i, j = key
        if i == j:
            return None
        return ((i, j), 1) if i < j else ((j, i), -1)
    if grade == "wedge3":
        i, j, k = key
        if len({i, j, k}) < 3:
            return None
        order = tuple(sorted((i, j, k)))
        perm = [order.index(x) for x in (i, j, k)]
        sign = 1 if perm in ([0, 1, 2], [1, 2, 0], [2, 0, 1]) else -1
        return (order, sign)
    if grade == "tensor12":
        a, i, j = key
        if i == j:
            return None
        return ((a, i, j), 1) if i < j else ((a, j, i), -1)
    raise ValueError("unknown grade %r" % (grade,))


class MultiVector:
    """A sparse exact element of Lambda^2, Lambda^3 or H tensor Lambda^2."""

    __slots__ = ("dim", "grade", "terms")

    def __init__(self, dim, grade, terms):
        if grade not in GRADES:
            raise ValueError("unknown grade %r" % (grade,))
        self.dim = int(dim)
        self.grade = grade
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if any(not 0 <= x < self.dim for x in key):
                raise ValueError("index out of range for dimension %d" % self.dim)
            norm = _key_sort(grade, tuple(key))
            if norm is None:
                continue
            k, s = norm
            acc[k] = acc.get(k, Fraction(0)) + s * coeff
        self.terms = tuple(sorted((k, c) for k, c in acc.items() if c != 0))

    @classmethod
    def zero(cls, dim, grade):
        return cls(dim, grade, {})

    def is_zero(self):
        return not self.terms

    def terms_dict(self):
        return dict(self.terms)

    def _like(self, mapping):
        return MultiVector(self.dim, self.grade, mapping)

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + c
        return self._like(acc)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return self._like({k: scalar * c for k, c in self.terms})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, MultiVector)
            and other.dim == self.dim
            and other.grade == self.grade
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.dim, self.grade, self.terms))

    def __repr__(self):
        return "MultiVector(%d, %r, %s)" % (self.dim, self.grade, self.to_text())

    def _check(self, other):
        if not isinstance(other, MultiVector):
            raise TypeError("expected a MultiVector")
        if other.dim != self.dim or other.grade != self.grade:
            raise ValueError("grade or ambient dimension mismatch")

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.terms:
            if self.grade == "tensor12":
                body = "%d@%d^%d" % (key[0] + 1, key[1] + 1, key[2] + 1)
            else:
                body = "^".join(str(i + 1) for i in key)
            parts.append("%s*%s" % (coeff, body))
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text, dim, grade=None):
        text = text.strip()
        if text == "0":
            if grade is None:
                raise ValueError("the zero element needs an explicit grade")
            return cls.zero(dim, grade)
        terms = {}
        for part in text.split("+"):
            part = part.strip()
            if not part:
                raise ValueError("empty term")
            coeff_text, _, body = part.partition("*")
            if not body:
                raise ValueError("term %r lacks '*'" % part)
            coeff = Fraction(coeff_text.strip())
            body = body.strip()
            if "@" in body:
                slot, _, wedge_part = body.partition("@")
                idx = (int(slot),) + tuple(int(x) for x in wedge_part.split("^"))
                if len(idx) != 3:
                    raise ValueError("tensor term %r must be a@i^j" % part)
                this_grade = "tensor12"
            else:
                idx = tuple(int(x) for x in body.split("^"))
                this_grade = {2: "wedge2", 3: "wedge3"}.get(len(idx))
                if this_grade is None:
                    raise ValueError("term %r has unsupported arity" % part)
            if grade is None:
                grade = this_grade
            elif grade != this_grade:
                raise ValueError("mixed grades in %r" % text)
            key = tuple(i - 1 for i in idx)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(dim, grade, terms)


def wedge(factors, dim=None):
    """Alternating product of 2 or 3 coordinate vectors."""
    factors = [tuple(v) for v in factors]
    if len(factors) not in (2, 3):
        raise ValueError("wedge takes 2 or 3 factors")
    if dim is None:
        dim = len(factors[0])
    if any(len(v) != dim for v in factors):
        raise ValueError("factor length mismatch")
    terms = {}
    if len(factors) == 2:
        u, v = factors
        for i, j in combinations(range(dim), 2):
            c = u[i] * v[j] - u[j] * v[i]
            if c:
                terms[(i, j)] = Fraction(c)
        return MultiVector(dim, "wedge2", terms)
    u, v, w = factors
    for i, j, k in combinations(range(dim), 3):
        c = (
            u[i] * (v[j] * w[k] - v[k] * w[j])
            - u[j] * (v[i] * w[k] - v[k] * w[i])
            + u[k] * (v[i] * w[j] - v[j] * w[i])
        )
        if c:
            terms[(i, j, k)] = Fraction(c)
    return MultiVector(dim, "wedge3", terms)


def tensor_wedge(a, bc, dim=None):
    """a tensor (b wedge c) for a coordinate vector a and a wedge2 element."""
    a = tuple(a)
    if dim is None:
        dim = len(a)
    if bc.grade != "wedge2" or bc.dim != dim or len(a) != dim:
        raise ValueError("expected a vector and a wedge2 element of matching dimension")
    terms = {}
    for s, x in enumerate(a):
        if x == 0:
            continue
        for (i, j), c in bc.terms:
            key = (s, i, j)
            terms[key] = terms.get(key, Fraction(0)) + x * c
    return MultiVector(dim, "tensor12", terms)


def embed_wedge3(w):
    """The canonical injection of Lambda^3 H into H tensor Lambda^2 H.

    On decomposables: x^y^z -> x@(y^z) + y@(z^x) + z@(x^y), extended
    linearly over the basis.
    """
    if w.grade != "wedge3":
        raise ValueError("embed_wedge3 expects a wedge3 element")
    terms = {}
    for (i, j, k), c in w.terms:
        for slot, pair, sign in ((i, (j, k), 1), (j, (k, i), 1), (k, (i, j), 1)):
            norm = _key_sort("tensor12", (slot,) + pair)
            if norm is None:
                continue
            key, s = norm
            terms[key] = terms.get(key, Fraction(0)) + sign * s * c
    return MultiVector(w.dim, "tensor12", terms)


def _matrix_rows(m):
    if hasattr(m, "entries"):
        return m.entries
    return tuple(tuple(row) for row in m)


def _column(rows, j):
    return tuple(row[j] for row in rows)


def act(m, x):
    """Functorial action of a matrix on each tensor or wedge slot."""
    rows = _matrix_rows(m)
    if len(rows) != x.dim or any(len(r) != x.dim for r in rows):
        raise ValueError("matrix dimension does not match the element")
    cols = [_column(rows, j) for j in range(x.dim)]
    out = MultiVector.zero(x.dim, x.grade)
    for key, c in x.terms:
        if x.grade == "wedge2":
            piece = wedge((cols[key[0]], cols[key[1]]), x.dim)
        elif x.grade == "wedge3":
            piece = wedge((cols[key[0]], cols[key[1]], cols[key[2]]), x.dim)
        else:
            piece = tensor_wedge(cols[key[0]], wedge((cols[key[1]], cols[key[2]]), x.dim), x.dim)
        out = out + c * piece
    return out


def quotient_matrix(l):
    """Rows sending H coordinates to coordinates in H/L.

    The quotient is identified with Z^g via the images of a canonical
    complement basis of the Lagrangian L.
    """
    lat = l.lat
    if not l.is_lagrangian():
        raise ValueError("quotient is only taken by a Lagrangian")
    comp = la.complete_to_unimodular(l.basis, lat.dim)
    full = l.basis + comp
    rows = []
    n = lat.dim
    for k in range(n):
        e_k = tuple(1 if t == k else 0 for t in range(n))
        coords = la.coords_in_basis(e_k, full, n)
        assert coords is not None and all(c.denominator == 1 for c in coords)
        rows.append(tuple(int(c) for c in coords[l.rank:]))
    # columns = images of the standard basis, so transpose into a g x 2g map
    return la.transpose(tuple(rows))


def quotient_mod_L(x, l):
    """Image of x under the map induced by H -> H/L.

    The result lives over Z^g in the induced basis; x is in the kernel of
    the quotient map exactly when the result is zero.
    """
    if x.dim != l.lat.dim:
        raise ValueError("element and Lagrangian have different ambient lattices")
    q = quotient_matrix(l)
    g = l.lat.genus
    cols = [_column(q, j) for j in range(x.dim)]
    out = MultiVector.zero(g, x.grade)
    for key, c in x.terms:
        if x.grade == "wedge2":
            piece = wedge((cols[key[0]], cols[key[1]]), g)
        elif x.grade == "wedge3":
            piece = wedge((cols[key[0]], cols[key[1]], cols[key[2]]), g)
        else:
            piece = tensor_wedge(cols[key[0]], wedge((cols[key[1]], cols[key[2]]), g), g)
        out = out + c * piece
    return out


def _basis_index(grade, dim):
    if grade == "wedge2":
        return {k: n for n, k in enumerate(combinations(range(dim), 2))}
    if grade == "wedge3":
        return {k: n for n, k in enumerate(combinations(range(dim), 3))}
    keys = [
        (a, i, j)
        for a in range(dim)
        for i, j in combinations(range(dim), 2)
    ]
    return {k: n for n, k in enumerate(keys)}


@lru_cache(maxsize=256)
def _echelon_of(generators):
    """Row echelon (over Q) of the generators, as reduction data."""
    if not generators:
        return None
    dim, grade = generators[0].dim, generators[0].grade
    index = _basis_index(grade, dim)
    n = len(index)
    rows = []
    for gvec in generators:
        row = [Fraction(0)] * n
        for k, c in gvec.terms:
            row[index[k]] = c
        rows.append(row)
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return (index, tuple(tuple(row) for row in rows[:r]), tuple(pivots))


def in_span(x, generators):
    """Whether x is a rational linear combination of the generators."""
    generators = tuple(generators)
    for gvec in generators:
        x._check(gvec)
    if x.is_zero():
        return True
    data = _echelon_of(generators)
    if data is None:
        return False
    index, rows, pivots = data
    vec = [Fraction(0)] * len(index)
    for k, c in x.terms:
        vec[index[k]] = c
    for row, c in zip(rows, pivots):
        if vec[c]:
            f = vec[c]
            vec = [x0 - f * y for x0, y in zip(vec, row)]
    return all(v == 0 for v in vec)


def kernel_wedge2_generators(l):
    """Generators of K = ker(Lambda^2 H -> Lambda^2 (H/L)), i.e. L ^ H.

    For L = span(e) this is the usual list {e_i^e_j, e_i^f_j}.
    """
    lat = l.lat
    if not l.is_lagrangian():
        raise ValueError("K is defined for a Lagrangian")
    gens = []
    n = lat.dim
    for v in l.basis:
        for k in range(n):
            b = tuple(1 if t == k else 0 for t in range(n))
            w = wedge((v, b), n)
            if not w.is_zero():
                gens.append(w)
    return tuple(gens)
