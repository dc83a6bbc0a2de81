"""Exact linear algebra over Z and Q on small dense matrices.

Matrices are tuples of row tuples. Everything is desk scale (dimension
<= ~16), so the algorithms favour clarity and exactness over speed:
Bareiss for determinants, gcd-based row echelon for lattice normal
forms, Fraction elimination for rational solves. No floating point.
"""

from fractions import Fraction


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def det(m):
    """Exact integer determinant (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _echelon(rows, width):
    """Integer row echelon by unimodular row operations.

    Returns (rows, pivot_columns); zero rows are dropped. The row span
    over Z is preserved exactly.
    """
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        nz = [i for i in range(r, len(work)) if work[i][c] != 0]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(work[i][c]))
            p = nz[0]
            for i in nz[1:]:
                q = work[i][c] // work[p][c]
                work[i] = [x - q * y for x, y in zip(work[i], work[p])]
            nz = [i for i in nz if work[i][c] != 0]
        p = nz[0]
        work[r], work[p] = work[p], work[r]
        if work[r][c] < 0:
            work[r] = [-x for x in work[r]]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def row_hnf(rows, width):
    """Canonical Hermite basis of the Z-span of the given rows.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot). Two generating sets span the same lattice iff their
    row_hnf outputs are equal.
    """
    work, pivots = _echelon(rows, width)
    # reduce left to right so later passes cannot disturb finished columns
    for i in range(len(work)):
        c = pivots[i]
        for j in range(i):
            q = work[j][c] // work[i][c]
            if q:
                work[j] = [x - q * y for x, y in zip(work[j], work[i])]
    return tuple(tuple(r) for r in work)


def rank(rows, width):
    return len(_echelon(rows, width)[0])


def int_kernel(rows, width):
    """Basis (canonical HNF) of {x in Z^width : M x = 0}."""
    m = len(rows)
    aug = []
    for j in range(width):
        aug.append([rows[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(width)])
    ech, _ = _echelon(aug, m + width)
    ker = [r[m:] for r in ech if all(x == 0 for x in r[:m])]
    return row_hnf(ker, width)


def saturate(rows, width):
    """Canonical basis of the saturation (Q-span intersected with Z^width)."""
    ann = int_kernel(rows, width)
    return int_kernel(ann, width)


def in_rowspan_z(v, hnf_rows):
    """Membership of an integer vector in the lattice given by HNF rows."""
    v = list(v)
    for row in hnf_rows:
        c = next(i for i, x in enumerate(row) if x != 0)
        if v[c] % row[c] != 0:
            return False
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def _invert_unimodular(t):
    """Exact inverse of a unimodular integer matrix."""
    n = len(t)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(t)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = []
    for row in a:
        vals = row[n:]
        if any(x.denominator != 1 for x in vals):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in vals))
    return tuple(out)


def complete_to_unimodular(basis, width):
    """Rows completing a saturated lattice basis to a basis of Z^width.

    The stacked matrix [basis; result] is unimodular, so Z^width is the
    direct sum of the input lattice and the span of the returned rows.
    """
    a = len(basis)
    if a == 0:
        return identity(width)
    # Echelonize basis^T with the transform recorded: T . basis^T = [E; 0].
    aug = [[basis[i][j] for i in range(a)] + [1 if k == j else 0 for k in range(width)]
           for j in range(width)]
    ech, pivots = _echelon(aug, a + width)
    # The identity block keeps all width rows independent, so none were dropped.
    assert len(ech) == width
    t_rows = [r[a:] for r in ech]
    e_block = [r[:a] for r in ech[:a]]
    if abs(det(tuple(tuple(r) for r in e_block))) != 1:
        raise ValueError("basis is not saturated")
    t = tuple(tuple(r) for r in t_rows)
    w = transpose(_invert_unimodular(t))
    return tuple(w[a:])


def coords_in_basis(v, basis, width):
    """Rational coordinates of v in the given basis rows, or None."""
    k = len(basis)
    if k == 0:
        return () if all(x == 0 for x in v) else None
    a = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(width)]
    piv = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, width) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(width):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    for i in range(r, width):
        if a[i][k] != 0:
            return None
    coords = [Fraction(0)] * k
    for i, c in enumerate(piv):
        coords[c] = a[i][k]
    return tuple(coords)
