"""Exact integer linear algebra: Smith normal form with transforms,
integer linear solving, and bigraded homology of delooped complexes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .frobenius import RingElem


@dataclass
class SmithForm:
    """D = P M Q with P, Q unimodular; M = Pinv D Qinv."""

    D: list
    P: list
    Pinv: list
    Q: list
    Qinv: list
    rank: int

    def diagonal(self):
        n = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(n)]


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_form(M) -> SmithForm:
    """Smith normal form over Z with all four transform matrices tracked."""
    m = len(M)
    n = len(M[0]) if m else 0
    D = [list(row) for row in M]
    P, Pinv = _identity(m), _identity(m)
    Q, Qinv = _identity(n), _identity(n)

    def row_add(i, j, c):
        """row i += c * row j (on D and P); Pinv gets the inverse column op."""
        D[i] = [a + c * b for a, b in zip(D[i], D[j])]
        P[i] = [a + c * b for a, b in zip(P[i], P[j])]
        for r in range(m):
            Pinv[r][j] -= c * Pinv[r][i]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        P[i], P[j] = P[j], P[i]
        for r in range(m):
            Pinv[r][i], Pinv[r][j] = Pinv[r][j], Pinv[r][i]

    def row_neg(i):
        D[i] = [-a for a in D[i]]
        P[i] = [-a for a in P[i]]
        for r in range(m):
            Pinv[r][i] = -Pinv[r][i]

    def col_add(i, j, c):
        """col i += c * col j (on D and Q); Qinv gets the inverse row op."""
        for r in range(m):
            D[r][i] += c * D[r][j]
        for r in range(n):
            Q[r][i] += c * Q[r][j]
        Qinv[j] = [a - c * b for a, b in zip(Qinv[j], Qinv[i])]

    def col_swap(i, j):
        for r in range(m):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        for r in range(n):
            Q[r][i], Q[r][j] = Q[r][j], Q[r][i]
        Qinv[i], Qinv[j] = Qinv[j], Qinv[i]

    k = 0
    while k < min(m, n):
        # find the smallest-magnitude nonzero entry of the trailing block
        pivot = None
        best = None
        for i in range(k, m):
            for j in range(k, n):
                a = D[i][j]
                if a and (best is None or abs(a) < best):
                    best, pivot = abs(a), (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        i, j = pivot
        if i != k:
            row_swap(i, k)
        if j != k:
            col_swap(j, k)
        while True:
            # clear column k
            dirty = False
            for i in range(k + 1, m):
                if D[i][k]:
                    q = D[i][k] // D[k][k]
                    row_add(i, k, -q)
                    if D[i][k]:
                        row_swap(i, k)
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, n):
                if D[k][j]:
                    q = D[k][j] // D[k][k]
                    col_add(j, k, -q)
                    if D[k][j]:
                        col_swap(j, k)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the rest of the block by the pivot
            culprit = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if D[i][j] % D[k][k]:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_add(k, culprit, 1)
        if D[k][k] < 0:
            row_neg(k)
        k += 1
    return SmithForm(D, P, Pinv, Q, Qinv, k)


def smith(M):
    """(U, D, V) with M = U @ D @ V, U and V unimodular, D diagonal."""
    sf = smith_form(M)
    return sf.Pinv, sf.D, sf.Qinv


def _matvec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def rank_of(M) -> int:
    return smith_form(M).rank


def solve_integer(M, b, sf: SmithForm = None):
    """One integer solution x of M x = b, or None."""
    m = len(M)
    n = len(M[0]) if m else 0
    if sf is None:
        sf = smith_form(M)
    pb = _matvec(sf.P, b) if m else []
    y = [0] * n
    for k in range(min(m, n)):
        d = sf.D[k][k]
        if d:
            if pb[k] % d:
                return None
            y[k] = pb[k] // d
        elif pb[k]:
            return None
    for k in range(min(m, n), m):
        if pb[k]:
            return None
    return _matvec(sf.Q, y)


def kernel_basis(M, sf: SmithForm = None):
    """Columns spanning ker(M) over Z (a basis of the kernel lattice)."""
    m = len(M)
    n = len(M[0]) if m else 0
    if sf is None:
        sf = smith_form(M)
    return [[sf.Q[r][k] for r in range(n)] for k in range(sf.rank, n)]


@dataclass
class BigradedGroup:
    """(t, q) -> (free rank, torsion invariant factors > 1)."""

    groups: dict = field(default_factory=dict)

    def set(self, t, q, rank, torsion=()):
        torsion = tuple(x for x in torsion if x > 1)
        if rank or torsion:
            self.groups[(t, q)] = (rank, torsion)

    def get(self, t, q):
        return self.groups.get((t, q), (0, ()))

    def free_part(self) -> dict:
        return {k: v[0] for k, v in self.groups.items() if v[0]}

    def mirror(self) -> "BigradedGroup":
        out = BigradedGroup()
        for (t, q), (r, tor) in self.groups.items():
            out.groups[(-t, -q)] = (r, tor)
        return out

    def __eq__(self, other):
        return isinstance(other, BigradedGroup) and self.groups == other.groups

    def items(self):
        return sorted(self.groups.items())

    def __repr__(self):
        inner = ", ".join(f"({t},{q}): Z^{r}" + (f"+{tor}" if tor else "")
                          for (t, q), (r, tor) in self.items())
        return "BigradedGroup{" + inner + "}"


def _integer_matrices(c):
    """Group a fully delooped complex into integer matrices per q-strand.

    Returns {q: (tdegs, {t: list of object indices}, {t: matrix t -> t+1})}.
    """
    for o in c.objects:
        if o.tangle.pairs or o.tangle.loops:
            raise ValueError("homology needs a fully delooped closed complex")
    strands = {}
    for idx, o in enumerate(c.objects):
        strands.setdefault(o.qshift, {}).setdefault(o.tdeg, []).append(idx)
    mats = {}
    for q, by_t in strands.items():
        pos = {}
        for t, idxs in by_t.items():
            for a, i in enumerate(idxs):
                pos[i] = a
        mat_by_t = {}
        for t, idxs in by_t.items():
            tgt = by_t.get(t + 1, [])
            if not tgt:
                continue
            mat = [[0] * len(idxs) for _ in tgt]
            mat_by_t[t] = mat
        mats[q] = (by_t, pos, mat_by_t)
    for (ti, si), v in c.diff.items():
        so, to = c.objects[si], c.objects[ti]
        if so.qshift != to.qshift:
            if v:
                raise ValueError("differential does not preserve q")
            continue
        by_t, pos, mat_by_t = mats[so.qshift]
        coeff = v.terms.get((), RingElem.zero())
        mat_by_t[so.tdeg][pos[ti]][pos[si]] = coeff.as_int()
    return mats


def homology_of(c) -> BigradedGroup:
    """Bigraded integer homology of a fully delooped complex."""
    out = BigradedGroup()
    for q, (by_t, pos, mat_by_t) in _integer_matrices(c).items():
        for t, idxs in by_t.items():
            n_t = len(idxs)
            dout = mat_by_t.get(t)
            rank_out = rank_of(dout) if dout else 0
            din = mat_by_t.get(t - 1)
            if din is not None:
                sfin = smith_form(din)
                rank_in = sfin.rank
                torsion = [sfin.D[i][i] for i in range(sfin.rank)]
            else:
                rank_in, torsion = 0, []
            out.set(t, q, n_t - rank_out - rank_in, torsion)
    return out


@dataclass
class ClassCoordinates:
    bidegree: tuple
    free: tuple  # coordinates on the free generators of the homology group
    torsion: tuple  # residues modulo the torsion invariant factors
    is_generator: bool
    is_cycle: bool = True


def quotient_coordinates(dout, din, v) -> ClassCoordinates:
    """Coordinates of [v] in H = ker(dout)/im(din).

    dout: matrix out of the chain group (may be None), din: matrix in
    (may be None), v: integer vector in the chain group.
    """
    n = len(v)
    if dout is not None and any(_matvec(dout, v)):
        return ClassCoordinates(None, (), (), False, is_cycle=False)
    if dout is not None:
        Z = kernel_basis(dout)
    else:
        Z = [[1 if r == k else 0 for r in range(n)] for k in range(n)]
    zdim = len(Z)
    # solve Z a = v for the cycle coordinates a
    Zmat = [[Z[k][r] for k in range(zdim)] for r in range(n)]
    a = solve_integer(Zmat, v)
    if a is None:
        raise AssertionError("cycle does not lie in the kernel lattice")
    # express the image inside the kernel lattice
    if din is not None and din and len(din[0]):
        cols = len(din[0])
        Zsf = smith_form(Zmat)
        Mcols = []
        for cidx in range(cols):
            b = [din[r][cidx] for r in range(n)]
            col = solve_integer(Zmat, b, Zsf)
            if col is None:
                raise AssertionError("image does not lie in the kernel lattice")
            Mcols.append(col)
        M = [[Mcols[c][r] for c in range(cols)] for r in range(zdim)]
        sf = smith_form(M)
    else:
        sf = smith_form([[0] for _ in range(zdim)] if zdim else [])
    w = _matvec(sf.P, a) if zdim else []
    free, tors = [], []
    diag = sf.diagonal()
    for k in range(zdim):
        d = diag[k] if k < len(diag) else 0
        if d == 0:
            free.append(w[k])
        elif d > 1:
            tors.append(w[k] % d)
        # d == 1: identified coordinate, dropped
    g = 0
    for x in free:
        g = math.gcd(g, x)
    is_gen = (g == 1) and all(x == 0 for x in tors) if free else False
    return ClassCoordinates(None, tuple(free), tuple(tors), is_gen)


def class_coordinates(f, hc=None) -> ClassCoordinates:
    """Coordinates of a chain map's class in the hom-complex homology.

    f must be a cycle (delta f = 0); reports whether [f] is a generator
    (its free coordinate vector is unimodular and torsion parts vanish).
    """
    from .complexes import chainmap_vector, hom_complex

    if hc is None:
        hc = hom_complex(f.source, f.target)
    vfull = chainmap_vector(f, hc)
    ell = f.tshift
    q = f.qshift() if f else None
    if q is None:
        # the zero map: report at its nominal bidegree with zero coordinates
        return ClassCoordinates((ell, 0), (), (), False)

    def sel(t):
        return [p for p, o in enumerate(hc.complex.objects)
                if o.tdeg == t and o.qshift == q]

    here, above, below = sel(ell), sel(ell + 1), sel(ell - 1)
    hpos = {p: a for a, p in enumerate(here)}
    v = [0] * len(here)
    for p, c in vfull.items():
        if p not in hpos:
            if c:
                raise ValueError("map is not homogeneous of one bidegree")
        else:
            v[hpos[p]] = c

    def block(rows, cols):
        if not rows or not cols:
            return None
        rp = {p: a for a, p in enumerate(rows)}
        cp = {p: a for a, p in enumerate(cols)}
        mat = [[0] * len(cols) for _ in rows]
        for (qp, pp), entry in hc.complex.diff.items():
            if pp in cp and qp in rp:
                mat[rp[qp]][cp[pp]] = entry.terms.get((), RingElem.zero()).as_int()
        return mat

    coords = quotient_coordinates(block(above, here), block(here, below), v)
    coords.bidegree = (ell, q)
    return coords
