"""Difference-action identities for maps fixing a Lagrangian pointwise.

An LbarElement packages a Lagrangian L together with a symplectic matrix
that restricts to the identity on L and moves every class only by an
element of L, so (matrix - I)^2 = 0. These are exactly the homological
shadows needed for the iterated-commutator computations on Lambda^3 H
and H tensor Lambda^2 H, and for the lower-central-series containment
checks: the target subspaces at levels 2..5 are

    2: (L x Lambda^2 H) + (H x K)
    3: (L x K) + (H x Lambda^2 L)
    4: L x Lambda^2 L
    5: 0

with K = ker(Lambda^2 H -> Lambda^2 (H/L)) = L ^ H. Applying the
difference action promotes membership by one level.
"""

from functools import lru_cache
from itertools import combinations

from .exterior import (
    MultiVector,
    in_span,
    kernel_wedge2_generators,
    tensor_wedge,
    wedge,
)
from .symplectic import SpMatrix


class LbarElement:
    """A symplectic matrix equal to the identity on a Lagrangian L,
    with (matrix - I) H contained in L."""

    def __init__(self, lat, l, matrix):
        if not isinstance(matrix, SpMatrix) or matrix.lat != lat or l.lat != lat:
            raise ValueError("mismatched ambient lattice")
        if not l.is_lagrangian():
            raise ValueError("L must be a Lagrangian")
        for v in l.basis:
            if matrix.apply(v) != v:
                raise ValueError("matrix must fix L pointwise")
        n = lat.dim
        for k in range(n):
            e_k = tuple(1 if t == k else 0 for t in range(n))
            diff = tuple(a - b for a, b in zip(matrix.apply(e_k), e_k))
            if not l.contains(diff):
                raise ValueError("(matrix - I) H must land in L")
        self.lat = lat
        self.l = l
        self.matrix = matrix

    @classmethod
    def from_symmetric(cls, lat, c):
        """[[I, C], [0, I]] for symmetric C, fixing L = span(e)."""
        return cls(lat, lat.standard_lplus(), SpMatrix.upper_unitriangular(lat, c))

    def delta(self, v):
        """(matrix - I) applied to a coordinate vector."""
        return tuple(a - b for a, b in zip(self.matrix.apply(v), v))

    def __repr__(self):
        return "LbarElement(g=%d)" % self.lat.genus


def _columns(m, n):
    return [tuple(m.entries[i][j] for i in range(n)) for j in range(n)]


def lmo_delta(lam, x):
    """(lambda - 1) x on H tensor Lambda^2 H by the three-term expansion.

    For one term a@(a1^a2) the expansion is
        (lambda-1)a @ lambda(a1^a2) + a @ ((lambda-1)a1 ^ lambda a2)
        + a @ (a1 ^ (lambda-1)a2),
    extended linearly; this equals act(lambda, x) - x exactly.
    """
    if x.grade != "tensor12":
        raise ValueError("lmo_delta expects a tensor12 element")
    if x.dim != lam.lat.dim:
        raise ValueError("ambient dimension mismatch")
    n = x.dim
    cols = _columns(lam.matrix, n)

    def basis(k):
        return tuple(1 if t == k else 0 for t in range(n))

    out = MultiVector.zero(n, "tensor12")
    for (a, i, j), c in x.terms:
        da = tuple(p - q for p, q in zip(cols[a], basis(a)))
        di = tuple(p - q for p, q in zip(cols[i], basis(i)))
        dj = tuple(p - q for p, q in zip(cols[j], basis(j)))
        out = out + c * tensor_wedge(da, wedge((cols[i], cols[j]), n), n)
        out = out + c * tensor_wedge(basis(a), wedge((di, cols[j]), n), n)
        out = out + c * tensor_wedge(basis(a), wedge((basis(i), dj), n), n)
    return out


def lmo1_delta(lam, w):
    """(lambda - 1) w on Lambda^3 H by the three-term expansion.

    For one term a1^a2^a3:
        (lambda-1)a1 ^ lambda a2 ^ lambda a3 + a1 ^ (lambda-1)a2 ^ lambda a3
        + a1 ^ a2 ^ (lambda-1)a3,
    which equals act(lambda, w) - w exactly.
    """
    if w.grade != "wedge3":
        raise ValueError("lmo1_delta expects a wedge3 element")
    if w.dim != lam.lat.dim:
        raise ValueError("ambient dimension mismatch")
    n = w.dim
    cols = _columns(lam.matrix, n)

    def basis(k):
        return tuple(1 if t == k else 0 for t in range(n))

    out = MultiVector.zero(n, "wedge3")
    for (i, j, k), c in w.terms:
        di = tuple(p - q for p, q in zip(cols[i], basis(i)))
        dj = tuple(p - q for p, q in zip(cols[j], basis(j)))
        dk = tuple(p - q for p, q in zip(cols[k], basis(k)))
        out = out + c * wedge((di, cols[j], cols[k]), n)
        out = out + c * wedge((basis(i), dj, cols[k]), n)
        out = out + c * wedge((basis(i), basis(j), dk), n)
    return out


def triple_commutator_tau(lam, w):
    """The difference action applied three times to a wedge3 element.

    On a decomposable a1^a2^a3 the value is exactly
    6 (lambda-1)a1 ^ (lambda-1)a2 ^ (lambda-1)a3, a consequence of
    (lambda-1) vanishing on L.
    """
    return lmo1_delta(lam, lmo1_delta(lam, lmo1_delta(lam, w)))


@lru_cache(maxsize=64)
def _level_generators(lat, l, n):
    dim = lat.dim

    def basis(k):
        return tuple(1 if t == k else 0 for t in range(dim))

    std = [basis(k) for k in range(dim)]
    wedge2_all = [
        MultiVector(dim, "wedge2", {key: 1}) for key in combinations(range(dim), 2)
    ]
    wedge2_l = [
        wedge((u, v), dim)
        for i, u in enumerate(l.basis)
        for v in l.basis[i + 1:]
    ]
    wedge2_l = [w for w in wedge2_l if not w.is_zero()]
    k_gens = kernel_wedge2_generators(l)
    gens = []
    if n == 2:
        gens += [tensor_wedge(v, w, dim) for v in l.basis for w in wedge2_all]
        gens += [tensor_wedge(b, k, dim) for b in std for k in k_gens]
    elif n == 3:
        gens += [tensor_wedge(v, k, dim) for v in l.basis for k in k_gens]
        gens += [tensor_wedge(b, w, dim) for b in std for w in wedge2_l]
    elif n == 4:
        gens += [tensor_wedge(v, w, dim) for v in l.basis for w in wedge2_l]
    return tuple(g for g in gens if not g.is_zero())


def level_generators(n, l):
    """Generating set of the level-n target subspace of H tensor Lambda^2 H."""
    if n not in (2, 3, 4, 5):
        raise ValueError("level must be one of 2, 3, 4, 5")
    if not l.is_lagrangian():
        raise ValueError("L must be a Lagrangian")
    if n == 5:
        return ()
    return _level_generators(l.lat, l, n)


def filtration_containment(n, x, l):
    """Membership of x in the level-n target subspace (exact Q-linear test)."""
    if n not in (2, 3, 4, 5):
        raise ValueError("level must be one of 2, 3, 4, 5")
    if x.grade != "tensor12":
        raise ValueError("filtration_containment expects a tensor12 element")
    if x.dim != l.lat.dim:
        raise ValueError("ambient dimension mismatch")
    if n == 5:
        return x.is_zero()
    return in_span(x, level_generators(n, l))
