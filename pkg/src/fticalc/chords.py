"""Multi-circle chord diagrams, the 4-term rewriting moves and tower
reduction.

A diagram is a set of circles, each carrying a cyclic sequence of chord
endpoints, plus a count of accumulated blink error markers. Chords are
type I (two endpoints) or type II (four endpoints, two on each of two
distinct circles). Two chords intersect when some circle carries two
endpoints of each in interleaved (1212) cyclic order; the boundary
degree is the size of a largest pairwise-nonintersecting chord set.

The 4-term move rewrites a diagram whose designated moving endpoint sits
next to an endpoint of a fixed chord into the three diagrams obtained by
placing that endpoint on the other side of the near fixed endpoint and
on both sides of the far one, with signs +1, +1, -1. The side pairing is
the unique one for which the relation is an identity already on
two-chord diagrams. Versions 2 and 3 (fixed chord of type II, two or
three circles involved) additionally emit a +/- pair of error terms,
each with one extra blink marker and the moving chord removed; the
second of the pair keeps an inert extra circle recording its leftover
closed component. At most two markers are added per application.

Tower reduction brings a single-circle diagram, modulo these moves, to a
sum in which every term has boundary degree >= m (or >= m markers):
level by level it takes an (m-1)-tower, partitions the circle into arcs
at the tower endpoints, picks by pigeonhole an arc pair joined by at
least m chords (the "special" ones) and sorts the specials until they
are pairwise disjoint. Diagram text format:

    circles <k>
    I c1:p1 c2:p2
    II c1:p1,p2 c2:p3,p4
    marks <n>

with 0-based circle and slot indices; slots on each circle must be
covered exactly once. One chord line per chord, in label order.

Diagrams are immutable and every operation is pure; DiagramSum merging
is plain coefficient addition, so reduction branches can be evaluated
independently and merged in any order with identical results.
"""

from fractions import Fraction
from itertools import permutations
from math import comb


class ChordDiagram:
    """Circles of chord endpoints plus a blink error marker count.

    Chord labels are normalized to 0..n-1 in order of first appearance
    along the circles, so structural equality is label-independent.
    """

    __slots__ = ("circles", "marks")

    def __init__(self, circles, marks=0):
        raw = [list(c) for c in circles]
        relabel = {}
        for seq in raw:
            for tok in seq:
                if tok not in relabel:
                    relabel[tok] = len(relabel)
        self.circles = tuple(
            tuple(relabel[tok] for tok in seq) for seq in raw
        )
        self.marks = int(marks)
        if self.marks < 0:
            raise ValueError("marks must be nonnegative")
        _validate_circles(self.circles)

    @property
    def chord_count(self):
        return len({tok for seq in self.circles for tok in seq})

    def chord_ids(self):
        return range(self.chord_count)

    def endpoints(self, cid):
        """All (circle, slot) positions of a chord."""
        out = []
        for c, seq in enumerate(self.circles):
            for p, tok in enumerate(seq):
                if tok == cid:
                    out.append((c, p))
        if not out:
            raise ValueError("unknown chord id %r" % (cid,))
        return tuple(out)

    def chord_type(self, cid):
        n = len(self.endpoints(cid))
        return "I" if n == 2 else "II"

    def __eq__(self, other):
        return (
            isinstance(other, ChordDiagram)
            and other.circles == self.circles
            and other.marks == self.marks
        )

    def __hash__(self):
        return hash((self.circles, self.marks))

    def __repr__(self):
        return "ChordDiagram(%r, marks=%d)" % (list(self.circles), self.marks)

    def to_text(self):
        lines = ["circles %d" % len(self.circles)]
        occ = _occurrences(self.circles)
        for cid in sorted(occ):
            per = {}
            for c, p in occ[cid]:
                per.setdefault(c, []).append(p)
            if len(occ[cid]) == 2:
                pts = sorted((c, p) for c, ps in per.items() for p in ps)
                lines.append("I %d:%d %d:%d" % (pts[0] + pts[1]))
            else:
                cs = sorted(per)
                lines.append(
                    "II %d:%s %d:%s"
                    % (
                        cs[0], ",".join(str(p) for p in sorted(per[cs[0]])),
                        cs[1], ",".join(str(p) for p in sorted(per[cs[1]])),
                    )
                )
        if self.marks:
            lines.append("marks %d" % self.marks)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        ncircles = None
        marks = 0
        assignments = []  # (chord_index, circle, slot)
        chord_index = 0
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "circles":
                ncircles = int(parts[1])
            elif parts[0] == "marks":
                marks = int(parts[1])
            elif parts[0] in ("I", "II"):
                pts = []
                for spec in parts[1:]:
                    c, _, ps = spec.partition(":")
                    for p in ps.split(","):
                        pts.append((int(c), int(p)))
                want = 2 if parts[0] == "I" else 4
                if len(pts) != want:
                    raise ValueError("chord line %r has %d endpoints, expected %d"
                                     % (line, len(pts), want))
                for c, p in pts:
                    assignments.append((chord_index, c, p))
                chord_index += 1
            else:
                raise ValueError("unrecognized diagram line %r" % line)
        if ncircles is None:
            raise ValueError("missing 'circles <k>' header")
        lengths = [0] * ncircles
        for _, c, p in assignments:
            if not 0 <= c < ncircles:
                raise ValueError("circle index out of range")
            lengths[c] = max(lengths[c], p + 1)
        circles = [[None] * lengths[c] for c in range(ncircles)]
        for cid, c, p in assignments:
            if circles[c][p] is not None:
                raise ValueError("slot %d:%d used twice" % (c, p))
            circles[c][p] = cid
        for c, seq in enumerate(circles):
            if any(tok is None for tok in seq):
                raise ValueError("circle %d has an unused slot" % c)
        return cls(circles, marks)


def _validate_circles(circles):
    occ = _occurrences(circles)
    for cid, pts in occ.items():
        if len(pts) == 2:
            continue
        if len(pts) == 4:
            touched = {c for c, _ in pts}
            if len(touched) != 2:
                raise ValueError(
                    "type II chord %r must meet exactly two distinct circles" % cid
                )
            per = {}
            for c, _ in pts:
                per[c] = per.get(c, 0) + 1
            if set(per.values()) != {2}:
                raise ValueError(
                    "type II chord %r needs two endpoints per circle" % cid
                )
            continue
        raise ValueError("chord %r has %d endpoints" % (cid, len(pts)))


def _occurrences(circles):
    occ = {}
    for c, seq in enumerate(circles):
        for p, tok in enumerate(seq):
            occ.setdefault(tok, []).append((c, p))
    return occ


def _positions_by_circle(circles, cid):
    per = {}
    for c, seq in enumerate(circles):
        for p, tok in enumerate(seq):
            if tok == cid:
                per.setdefault(c, []).append(p)
    return per


def _intersect_raw(circles, a, b):
    pa = _positions_by_circle(circles, a)
    pb = _positions_by_circle(circles, b)
    for c in set(pa) & set(pb):
        if len(pa[c]) == 2 and len(pb[c]) == 2:
            p1, p2 = sorted(pa[c])
            q1, q2 = sorted(pb[c])
            if (p1 < q1 < p2) != (p1 < q2 < p2):
                return True
    return False


def chords_intersect(d, c1, c2):
    """Whether two chords interleave (1212) on some shared circle."""
    if c1 == c2:
        raise ValueError("chords must be distinct")
    n = d.chord_count
    if not (0 <= c1 < n and 0 <= c2 < n):
        raise ValueError("unknown chord id")
    return _intersect_raw(d.circles, c1, c2)


def _adjacency_masks(circles):
    # one occurrence scan, then O(1) interleave checks per chord pair
    per = {}
    for c, seq in enumerate(circles):
        for p, tok in enumerate(seq):
            per.setdefault(tok, {}).setdefault(c, []).append(p)
    ids = sorted(per)
    n = len(ids)
    masks = [0] * n
    for i in range(n):
        pa = per[ids[i]]
        for j in range(i + 1, n):
            pb = per[ids[j]]
            hit = False
            for c in pa.keys() & pb.keys():
                if len(pa[c]) == 2 and len(pb[c]) == 2:
                    p1, p2 = pa[c]
                    q1, q2 = pb[c]
                    if (p1 < q1 < p2) != (p1 < q2 < p2):
                        hit = True
                        break
            if hit:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _mis(masks, stop_at=None):
    """Maximum independent set: (size, chosen bitmask). Exact, unless
    stop_at is given, in which case the search returns early once a set
    of that size is found (sufficient for threshold checks)."""
    n = len(masks)
    best_size = 0
    best_set = 0

    def rec(cand, size, chosen):
        nonlocal best_size, best_set
        if stop_at is not None and best_size >= stop_at:
            return
        if size + bin(cand).count("1") <= best_size:
            return
        if cand == 0:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        live = [i for i in range(n) if cand >> i & 1]
        v = max(live, key=lambda i: bin(masks[i] & cand).count("1"))
        rec(cand & ~(masks[v] | (1 << v)), size + 1, chosen | (1 << v))
        if masks[v] & cand:
            rec(cand & ~(1 << v), size, chosen)

    rec((1 << n) - 1, 0, 0)
    return best_size, best_set


def _bd_raw(circles, stop_at=None):
    return _mis(_adjacency_masks(circles), stop_at=stop_at)[0]


def boundary_degree(d):
    """Size of a maximum set of pairwise-nonintersecting chords."""
    return _bd_raw(d.circles)


def canonicalize(d):
    """Deterministic canonical form: lexicographically minimal labeling
    over circle permutations, rotations and reflections."""
    k = len(d.circles)
    variants = []
    for seq in d.circles:
        vs = set()
        n = len(seq)
        if n == 0:
            vs.add(())
        else:
            for flip in (False, True):
                base = tuple(reversed(seq)) if flip else tuple(seq)
                for r in range(n):
                    vs.add(base[r:] + base[:r])
        variants.append(sorted(vs))
    best = None
    for perm in permutations(range(k)):
        best = _best_for_perm(variants, perm, best)
    if best is None:
        best = ()
    return ChordDiagram(best, d.marks)


def _best_for_perm(variants, perm, best):
    # depth-first over per-circle variants with relabeling on the fly;
    # prunes nothing fancy, sizes are small
    def rec(idx, acc):
        nonlocal best
        if idx == len(perm):
            cand = _relabel(acc)
            if best is None or cand < best:
                best = cand
            return
        for v in variants[perm[idx]]:
            rec(idx + 1, acc + [v])

    rec(0, [])
    return best


def _relabel(circle_list):
    mapping = {}
    out = []
    for seq in circle_list:
        row = []
        for tok in seq:
            if tok not in mapping:
                mapping[tok] = len(mapping)
            row.append(mapping[tok])
        out.append(tuple(row))
    return tuple(out)


class DiagramSum:
    """Exact rational combination of canonicalized chord diagrams.

    Accepts a mapping or an iterable of (diagram, coefficient) pairs;
    repeated diagrams have their coefficients summed.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for d, coeff in items:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            key = canonicalize(d)
            acc[key] = acc.get(key, Fraction(0)) + coeff
        self.terms = {d: c for d, c in acc.items() if c}

    def __add__(self, other):
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc.get(d, Fraction(0)) + c
        out = DiagramSum()
        out.terms = {d: c for d, c in acc.items() if c}
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        out = DiagramSum()
        out.terms = {d: scalar * c for d, c in self.terms.items() if scalar * c}
        return out

    def __eq__(self, other):
        return isinstance(other, DiagramSum) and other.terms == self.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (t[0].circles, t[0].marks))

    def coefficient_sum(self):
        return sum(self.terms.values(), Fraction(0))

    def __repr__(self):
        return "DiagramSum(%d terms)" % len(self.terms)


def pigeonhole_ok(m, c):
    """Whether c*m^3 chords force an arc pair carrying m chords:
    c*m^3 - (m-1) > C(2(m-1), 2) * (m-1) + 1."""
    if m < 1 or c < 1:
        raise ValueError("m and c must be positive")
    return c * m ** 3 - (m - 1) > comb(2 * (m - 1), 2) * (m - 1) + 1


# -- 4-term move mechanics on raw circle lists ------------------------------

def _relocate(seq, src, dst, after):
    """Move the token at src next to the token currently at dst."""
    seq = list(seq)
    tok = seq.pop(src)
    if dst > src:
        dst -= 1
    seq.insert(dst + 1 if after else dst, tok)
    return tuple(seq)


def _hop_main_terms(circles, circ, m_pos, fa_pos, fb_pos):
    """The three main 4-term diagrams: (circles, sign) triples.

    The moving token flips to the other side of the near fixed endpoint
    (+1), lands on its new side of the far endpoint (+1), and on its old
    side of the far endpoint (-1).
    """
    seq = circles[circ]
    n = len(seq)
    if (fa_pos + 1) % n == m_pos:
        was_after = True
    elif (m_pos + 1) % n == fa_pos:
        was_after = False
    else:
        raise ValueError("moving endpoint is not adjacent to the fixed endpoint")
    out = []
    for new_seq, sign in (
        (_relocate(seq, m_pos, fa_pos, after=not was_after), 1),
        (_relocate(seq, m_pos, fb_pos, after=not was_after), 1),
        (_relocate(seq, m_pos, fb_pos, after=was_after), -1),
    ):
        new_circles = list(circles)
        new_circles[circ] = new_seq
        out.append((tuple(new_circles), sign))
    return out


def _remove_chord(circles, cid):
    return tuple(
        tuple(tok for tok in seq if tok != cid) for seq in circles
    )


def four_term(d, fixed, moving, version):
    """One 4-term rewriting move, returned as the right-hand side sum.

    d plays the role of the first term of the relation; the result is
    the equivalent combination of the other three placements (signs
    +1, +1, -1), plus for versions 2 and 3 the pair of blink-marked
    error terms with signs +1, -1.
    """
    if version not in (1, 2, 3):
        raise ValueError("version must be 1, 2 or 3")
    circ, slot = moving
    if not (0 <= circ < len(d.circles) and 0 <= slot < len(d.circles[circ])):
        raise ValueError("moving endpoint out of range")
    mover = d.circles[circ][slot]
    if not 0 <= fixed < d.chord_count:
        raise ValueError("unknown chord id %r" % (fixed,))
    if mover == fixed:
        raise ValueError("moving endpoint belongs to the fixed chord")
    fixed_per = _positions_by_circle(d.circles, fixed)
    mover_per = _positions_by_circle(d.circles, mover)
    fixed_circles = set(fixed_per)
    mover_circles = set(mover_per)
    fixed_type = d.chord_type(fixed)
    mover_type = d.chord_type(mover)
    if version == 1:
        ok = (fixed_type == "I" and fixed_circles == {circ}
              and mover_type == "I" and mover_circles == {circ})
    elif version == 2:
        ok = (fixed_type == "II" and circ in fixed_circles
              and mover_type == "I" and mover_circles == {circ})
    else:
        ok = (fixed_type == "II" and circ in fixed_circles
              and mover_type == "II" and circ in mover_circles
              and mover_circles != fixed_circles)
    if not ok:
        raise ValueError("configuration does not match version %d" % version)
    fpos = fixed_per[circ]
    if len(fpos) != 2:
        raise ValueError("fixed chord needs two endpoints on the moving circle")
    n = len(d.circles[circ])
    fa = None
    for cand in fpos:
        if (cand + 1) % n == slot or (slot + 1) % n == cand:
            fa = cand
            break
    if fa is None:
        raise ValueError("moving endpoint is not adjacent to the fixed chord")
    fb = fpos[0] if fa == fpos[1] else fpos[1]
    terms = {}
    for new_circles, sign in _hop_main_terms(d.circles, circ, slot, fa, fb):
        key = ChordDiagram(new_circles, d.marks)
        terms[key] = terms.get(key, Fraction(0)) + sign
    if version in (2, 3):
        stripped = _remove_chord(d.circles, mover)
        e1 = ChordDiagram(stripped, d.marks + 1)
        e2 = ChordDiagram(stripped + ((),), d.marks + 1)
        terms[e1] = terms.get(e1, Fraction(0)) + 1
        terms[e2] = terms.get(e2, Fraction(0)) - 1
    return DiagramSum(terms)


# -- single-circle tower reduction ------------------------------------------

def _arc_structure(seq, s_ids):
    """Arc decomposition of a circle at the tower endpoints.

    Arcs are numbered by the tower endpoint that opens them, in list
    order; the last arc wraps around. Tower tokens never move during a
    lift, so arc numbers stay meaningful across rewrites of a plan.
    Returns (arc_of_pos, arcs) with arcs[k] the interior positions in
    arc order.
    """
    n = len(seq)
    bpos = [i for i, tok in enumerate(seq) if tok in s_ids]
    arcs = {}
    arc_of = {}
    for bi, left in enumerate(bpos):
        right = bpos[(bi + 1) % len(bpos)]
        interior = []
        p = (left + 1) % n
        while p != right:
            interior.append(p)
            p = (p + 1) % n
        arcs[bi] = interior
        for p in interior:
            arc_of[p] = bi
    return arc_of, arcs


def _make_plan(circles, level):
    seq = circles[0]
    masks = _adjacency_masks(circles)
    size, chosen = _mis(masks)
    assert size == level - 1, "lift entered with wrong boundary degree"
    ids = sorted(_occurrences(circles))
    s_ids = frozenset(ids[i] for i in range(len(ids)) if chosen >> i & 1)
    arc_of, arcs = _arc_structure(seq, s_ids)
    classes = {}
    for cid in ids:
        if cid in s_ids:
            continue
        ps = [p for p, tok in enumerate(seq) if tok == cid]
        pair = tuple(sorted((arc_of[ps[0]], arc_of[ps[1]])))
        assert pair[0] != pair[1], "same-arc chord contradicts the degree bound"
        classes.setdefault(pair, []).append(cid)
    key = max(sorted(classes), key=lambda k: len(classes[k]))
    assert len(classes[key]) >= level, "pigeonhole bound violated"
    alpha_arc, beta_arc = key
    specials = classes[key]
    beta_order = [p for p in arcs[beta_arc] if seq[p] in specials]
    target = tuple(reversed([seq[p] for p in beta_order]))
    return (s_ids, alpha_arc, beta_arc, frozenset(specials), target)


def _next_move(circles, plan):
    """The next sorting move: (moving position, fixed chord id) on circle 0."""
    s_ids, alpha_arc, beta_arc, specials, target = plan
    seq = circles[0]
    arc_of, arcs = _arc_structure(seq, s_ids)
    alpha_positions = arcs[alpha_arc]
    order = [seq[p] for p in alpha_positions if seq[p] in specials]
    assert len(order) == len(target), "a special chord left its class"
    idx = next((i for i in range(len(order)) if order[i] != target[i]), None)
    if idx is None:
        return None
    want = target[idx]
    p = next(q for q in alpha_positions if seq[q] == want)
    prev = (p - 1) % len(seq)
    assert seq[prev] not in s_ids, "sorting walked out of the arc"
    if seq[prev] in specials:
        return (p, seq[prev])  # swap two specials: move `want` leftwards
    return (prev, want)  # bump the blocking nonspecial rightwards past `want`


def _lift(entries, level, out_terms):
    """Raise every entry to boundary degree >= level by sorting moves.

    entries: list of (circles, coeff); finished terms are accumulated
    into out_terms as (circles, coeff).
    """
    work = [(c, co, None) for c, co in entries]
    while work:
        circles, coeff, plan = work.pop()
        if _bd_raw(circles, stop_at=level) >= level:
            out_terms.append((circles, coeff))
            continue
        if plan is None:
            plan = _make_plan(circles, level)
        move = _next_move(circles, plan)
        assert move is not None, "sorted specials must yield the degree bound"
        m_pos, fixed = move
        fpos = _positions_by_circle(circles, fixed)[0]
        n = len(circles[0])
        fa = next(c for c in fpos if (c + 1) % n == m_pos or (m_pos + 1) % n == c)
        fb = fpos[0] if fa == fpos[1] else fpos[1]
        for new_circles, sign in _hop_main_terms(circles, 0, m_pos, fa, fb):
            work.append((new_circles, sign * coeff, plan))
    return out_terms


def tower_reduce(d, m, c=2):
    """Rewrite a single-circle diagram into an m-boundary combination.

    The result is equal to d modulo the implemented 4-term moves and
    every term has boundary degree >= m or >= m blink markers. The chord
    count must be at least c*m^3 with pigeonhole_ok(m, c), except when
    the diagram already satisfies the degree or marker bound.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if len(d.circles) != 1:
        raise ValueError("tower_reduce expects a single-circle diagram")
    if d.marks >= m or (d.chord_count and m == 1) or _bd_raw(d.circles, stop_at=m) >= m:
        return DiagramSum({d: 1})
    if not pigeonhole_ok(m, c):
        raise ValueError("constant c=%d fails the pigeonhole bound for m=%d" % (c, m))
    if d.chord_count < c * m ** 3:
        raise ValueError(
            "need at least c*m^3 = %d chords, have %d" % (c * m ** 3, d.chord_count)
        )
    current = [(d.circles, Fraction(1))]
    for level in range(2, m + 1):
        done = []
        _lift(current, level, done)
        current = done
    return DiagramSum((ChordDiagram(circ, d.marks), co) for circ, co in current)


# -- multi-circle reduction --------------------------------------------------

class ReductionLimits:
    """Constants of the multi-circle reduction thresholds.

    The proofs determine them only up to constants; these defaults keep
    h(m) = c * m^13 and the auxiliary g-functions at their minimal
    shapes. max_steps bounds the rewriting loop so the search is a
    semidecision at desk scale.
    """

    def __init__(self, c=2, c0=2, c1=2, c2=2, max_steps=200000):
        self.c = c
        self.c0 = c0
        self.c1 = c1
        self.c2 = c2
        self.max_steps = max_steps

    def h(self, m):
        return self.c * m ** 13

    def g0(self, m):
        return self.c0 * m ** 12

    def g1(self, m):
        return self.c1 * m ** 4

    def g2(self, m):
        return self.c2 * m ** 3


def _find_multi_move(circles):
    """A legal uncrossing move: (circle, moving pos, fixed id) or None."""
    ids = sorted(_occurrences(circles))
    for x in range(len(circles)):
        seq = circles[x]
        on_x = [cid for cid in ids if len(_positions_by_circle(circles, cid).get(x, ())) == 2]
        for ai in range(len(on_x)):
            for bi in range(ai + 1, len(on_x)):
                a, b = on_x[ai], on_x[bi]
                pa = sorted(_positions_by_circle(circles, a)[x])
                pb = sorted(_positions_by_circle(circles, b)[x])
                if (pa[0] < pb[0] < pa[1]) == (pa[0] < pb[1] < pa[1]):
                    continue
                # b has exactly one endpoint inside a's interval: walk it out
                q = pb[0] if pa[0] < pb[0] < pa[1] else pb[1]
                nxt = (q + 1) % len(seq)
                blocker = seq[nxt]
                if blocker == a:
                    return (x, q, a)
                blocker_on_x = _positions_by_circle(circles, blocker).get(x, ())
                if len(blocker_on_x) == 2:
                    return (x, q, blocker)
                # blocker cannot anchor a move; bump it across b instead
                return (x, nxt, b)
    return None


def _is_clean_v1(circles, circ, m_pos, fixed):
    mover = circles[circ][m_pos]
    fixed_per = _positions_by_circle(circles, fixed)
    mover_per = _positions_by_circle(circles, mover)
    return set(fixed_per) == {circ} and set(mover_per) == {circ} \
        and len(fixed_per[circ]) == 2 and len(mover_per[circ]) == 2


def multi_tower_reduce(d, m, c=2, limits=None):
    """Reduce a multi-circle diagram to terms with boundary degree >= m
    or >= m blink markers.

    Single-circle diagrams delegate to tower_reduce. Otherwise crossings
    are eliminated circle by circle; moves involving type II chords emit
    the marked error pair, and error branches retire once their marker
    count reaches m. The chord count precondition h(m) = c*m^13 applies
    to the rewriting path only; already-reduced diagrams return as a
    singleton regardless.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if limits is None:
        limits = ReductionLimits(c=c)
    if d.marks >= m or (d.chord_count and m == 1) or _bd_raw(d.circles, stop_at=m) >= m:
        return DiagramSum({d: 1})
    if len(d.circles) == 1:
        return tower_reduce(d, m, c=c)
    if d.chord_count < limits.h(m):
        raise ValueError(
            "need at least h(m) = %d chords, have %d" % (limits.h(m), d.chord_count)
        )
    work = [(d.circles, d.marks, Fraction(1))]
    out = {}
    steps = 0
    while work:
        circles, marks, coeff = work.pop()
        if marks >= m or _bd_raw(circles, stop_at=m) >= m:
            key = canonicalize(ChordDiagram(circles, marks))
            out[key] = out.get(key, Fraction(0)) + coeff
            continue
        steps += 1
        if steps > limits.max_steps:
            raise RuntimeError(
                "reduction exceeded the step budget; instance is beyond the "
                "implemented desk-scale strategy"
            )
        move = _find_multi_move(circles)
        if move is None:
            # all chords pairwise noncrossing yet fewer than m of them;
            # unreachable when the h(m) chord-count precondition holds
            raise RuntimeError(
                "stuck term with %d noncrossing chords and %d marks; "
                "instance violates the chord-count precondition"
                % (len(_occurrences(circles)), marks)
            )
        circ, m_pos, fixed = move
        fpos = _positions_by_circle(circles, fixed)[circ]
        n = len(circles[circ])
        fa = next(p for p in fpos if (p + 1) % n == m_pos or (m_pos + 1) % n == p)
        fb = fpos[0] if fa == fpos[1] else fpos[1]
        for new_circles, sign in _hop_main_terms(circles, circ, m_pos, fa, fb):
            work.append((new_circles, marks, sign * coeff))
        if not _is_clean_v1(circles, circ, m_pos, fixed):
            mover = circles[circ][m_pos]
            stripped = _remove_chord(circles, mover)
            work.append((stripped, marks + 1, coeff))
            work.append((stripped + ((),), marks + 1, -coeff))
    result = DiagramSum()
    result.terms = {k: v for k, v in out.items() if v}
    return result
