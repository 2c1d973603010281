"""Brute-force cube-of-resolutions homology for closed diagrams.

Independent oracle for the scanning pipeline: resolutions are computed
combinatorially (union-find over diagram edges), chain groups are labelled
circle states, and homology is read off with Smith normal form.  No
cobordism algebra, delooping, or Gaussian elimination is involved.
"""

from __future__ import annotations

from itertools import product

from .homology import BigradedGroup, smith_form, rank_of
from .movies import BookmarkWord, scan


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        self.add(x)
        self.add(y)
        self.parent[self.find(x)] = self.find(y)


def _smoothing(kind: str, bit: int) -> str:
    """'id' or 'e' (cup-cap): the 0-smoothing is fixed by the crossing kind."""
    if kind == "X":
        return "id" if bit == 0 else "e"
    return "e" if bit == 0 else "id"


def _circles(word: BookmarkWord, widths, crossings, bits):
    """Circles of one resolution as sorted edge-id tuples.

    An edge is (level, strand); level i edges live above token i.
    """
    uf = _UnionFind()
    for i, tok in enumerate(word.tokens):
        w = widths[i]
        above = [(i, j) for j in range(w)]
        for e in above:
            uf.add(e)
        if tok.kind == "CAP":
            for j in range(tok.l):
                uf.union((i, j), (i + 1, j))
            for j in range(tok.l, w):
                uf.union((i, j), (i + 1, j + 2))
            uf.union((i + 1, tok.l), (i + 1, tok.l + 1))
        elif tok.kind == "CUP":
            uf.union((i, tok.l), (i, tok.l + 1))
            for j in range(tok.l):
                uf.union((i, j), (i + 1, j))
            for j in range(tok.l + 2, w):
                uf.union((i, j), (i + 1, j - 2))
        else:
            for j in range(w):
                if j not in (tok.l, tok.l + 1):
                    uf.union((i, j), (i + 1, j))
            if _smoothing(tok.kind, bits[crossings.index(i)]) == "id":
                uf.union((i, tok.l), (i + 1, tok.l))
                uf.union((i, tok.l + 1), (i + 1, tok.l + 1))
            else:
                uf.union((i, tok.l), (i, tok.l + 1))
                uf.union((i + 1, tok.l), (i + 1, tok.l + 1))
    groups = {}
    for e in uf.parent:
        groups.setdefault(uf.find(e), []).append(e)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def cube_homology(word: BookmarkWord) -> BigradedGroup:
    """Bigraded integer homology of a closed diagram from the full cube."""
    s = scan(word)
    if word.top != 0 or s.final_width != 0:
        raise ValueError("cube oracle needs a closed diagram")
    crossings = sorted(s.signs)
    n = len(crossings)
    n_pos = sum(1 for i in crossings if s.signs[i] > 0)
    n_neg = n - n_pos

    states = {bits: _circles(word, s.widths, crossings, bits)
              for bits in product((0, 1), repeat=n)}

    # generators: (bits, labels) with labels in {0: '1', 1: 'X'} per circle
    gens = []
    index = {}
    for bits, circles in states.items():
        t = sum(bits) - n_neg
        qshift = sum(bits) + n_pos - 2 * n_neg
        for labels in product((0, 1), repeat=len(circles)):
            q = qshift + sum(1 if lab == 0 else -1 for lab in labels)
            index[(bits, labels)] = len(gens)
            gens.append((bits, labels, t, q))

    # differential entries: flip one bit 0 -> 1; sign = (-1)^{# of 1s before}
    entries = {}  # (target gen, source gen) -> coefficient

    def put(tg, sg, c):
        key = (tg, sg)
        entries[key] = entries.get(key, 0) + c

    for bits, circles in states.items():
        for pos in range(n):
            if bits[pos]:
                continue
            nbits = bits[:pos] + (1,) + bits[pos + 1:]
            ncircles = states[nbits]
            sign = -1 if sum(bits[:pos]) % 2 else 1
            changed_s = [k for k, c in enumerate(circles) if c not in ncircles]
            changed_t = [k for k, c in enumerate(ncircles) if c not in circles]
            keep = {c: k for k, c in enumerate(ncircles)}
            for labels in product((0, 1), repeat=len(circles)):
                sg = index[(bits, labels)]
                base = [None] * len(ncircles)
                for k, c in enumerate(circles):
                    if c in keep:
                        base[keep[c]] = labels[k]
                if len(changed_s) == 2 and len(changed_t) == 1:
                    # merge: multiplication in Z[X]/(X^2)
                    a, b = labels[changed_s[0]], labels[changed_s[1]]
                    if a and b:
                        continue
                    out = list(base)
                    out[changed_t[0]] = a or b
                    put(index[(nbits, tuple(out))], sg, sign)
                elif len(changed_s) == 1 and len(changed_t) == 2:
                    # split: comultiplication
                    a = labels[changed_s[0]]
                    ka, kb = changed_t
                    if a:
                        out = list(base)
                        out[ka] = out[kb] = 1
                        put(index[(nbits, tuple(out))], sg, sign)
                    else:
                        for one, other in ((ka, kb), (kb, ka)):
                            out = list(base)
                            out[one], out[other] = 0, 1
                            put(index[(nbits, tuple(out))], sg, sign)
                else:
                    raise AssertionError("bit flip must merge or split circles")

    # homology per (q, t) strand
    out = BigradedGroup()
    by_q = {}
    for g, (bits, labels, t, q) in enumerate(gens):
        by_q.setdefault(q, {}).setdefault(t, []).append(g)
    for q, by_t in by_q.items():
        mats = {}
        for t, idxs in by_t.items():
            tgt = by_t.get(t + 1)
            if not tgt:
                continue
            pos_s = {g: a for a, g in enumerate(idxs)}
            pos_t = {g: a for a, g in enumerate(tgt)}
            mat = [[0] * len(idxs) for _ in tgt]
            for (tg, sg), c in entries.items():
                if sg in pos_s and tg in pos_t and c:
                    mat[pos_t[tg]][pos_s[sg]] = c
            mats[t] = mat
        for t, idxs in by_t.items():
            dout = mats.get(t)
            rank_out = rank_of(dout) if dout else 0
            din = mats.get(t - 1)
            if din is not None:
                sf = smith_form(din)
                rank_in, torsion = sf.rank, [sf.D[i][i] for i in range(sf.rank)]
            else:
                rank_in, torsion = 0, []
            out.set(t, q, len(idxs) - rank_out - rank_in, torsion)
    return out
