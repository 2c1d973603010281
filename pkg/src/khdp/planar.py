"""Flat tangles in a square and dotted cobordisms between them.

A flat tangle is a crossingless properly embedded 1-manifold: some arcs
matching boundary points on the top/bottom edges plus a count of free loops.
Cobordisms between two flat tangles are stored in a normal form: every
component is genus 0, carries at most one dot, and covers exactly one "trace
circle" (a boundary circle of the would-be surface, computed from the two
tangles alone).  A cobordism is then a ring-linear combination of dot
patterns on those circles, which realizes the V^{k} basis of maps, with
k the number of circles of the glued-up closure.

Point conventions: top points are 0..top-1 left to right; bottom point j
(left to right) has index top + j.  Pieces of the boundary of a cobordism
are tagged ('s', arc), ('t', arc), ('sl', loop), ('tl', loop) for source and
target arcs and loops.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .frobenius import (AlgebraElem, FrobeniusSpec, RingElem, comultiply,
                        counit, power_x)


@dataclass(frozen=True, order=True)
class FlatTangle:
    top: int
    bot: int
    pairs: tuple  # sorted tuple of sorted point pairs
    loops: int = 0

    @staticmethod
    def make(top, bot, pairs, loops=0) -> "FlatTangle":
        canon = tuple(sorted(tuple(sorted(p)) for p in pairs))
        return FlatTangle(top, bot, canon, loops)

    # -- basic data ---------------------------------------------------------

    def npoints(self) -> int:
        return self.top + self.bot

    def arcs(self):
        return self.pairs

    def arc_of_point(self) -> dict:
        """point index -> arc index."""
        out = {}
        for i, (a, b) in enumerate(self.pairs):
            out[a] = i
            out[b] = i
        return out

    def boundary_position(self, p: int) -> int:
        """Cyclic position of point p reading top L-to-R then bottom R-to-L."""
        if p < self.top:
            return p
        return self.top + self.bot - 1 - (p - self.top)

    def check(self):
        """Validate the involution and planarity; raises on violation."""
        if (self.top + self.bot) % 2:
            raise ValueError("odd number of boundary points")
        seen = set()
        for a, b in self.pairs:
            if a == b or not (0 <= a < self.npoints()) or not (0 <= b < self.npoints()):
                raise ValueError(f"bad pair {(a, b)}")
            seen.update((a, b))
        if len(seen) != 2 * len(self.pairs) or seen != set(range(self.npoints())):
            raise ValueError("matching is not a partition of the boundary points")
        if self.loops < 0:
            raise ValueError("negative loop count")
        spans = sorted(
            tuple(sorted((self.boundary_position(a), self.boundary_position(b))))
            for a, b in self.pairs
        )
        for (a, b), (c, d) in itertools.combinations(spans, 2):
            if a < c < b < d:
                raise ValueError(f"arcs cross: {(a, b)} and {(c, d)}")
        return self


EMPTY = FlatTangle.make(0, 0, ())


def identity_tangle(n: int) -> FlatTangle:
    return FlatTangle.make(n, n, tuple((i, n + i) for i in range(n)))


def cap_tangle(l: int, r: int) -> FlatTangle:
    """n -> n+2 strands: a new minimum whose endpoints sit at bottom l, l+1."""
    n = l + r
    pairs = [(i, n + i) for i in range(l)]
    pairs.append((n + l, n + l + 1))
    pairs += [(i, n + i + 2) for i in range(l, n)]
    return FlatTangle.make(n, n + 2, pairs)


def cup_tangle(l: int, r: int) -> FlatTangle:
    """n+2 -> n strands: a maximum joining top points l, l+1."""
    n = l + r
    m = n + 2
    pairs = [(i, m + i) for i in range(l)]
    pairs.append((l, l + 1))
    pairs += [(i, m + i - 2) for i in range(l + 2, m)]
    return FlatTangle.make(m, n, pairs)


def cupcap_tangle(l: int, r: int) -> FlatTangle:
    """The two-strand 'e' resolution widened by l and r identity strands."""
    n = l + 2 + r
    pairs = [(i, n + i) for i in range(l)] + [(i, n + i) for i in range(l + 2, n)]
    pairs.append((l, l + 1))
    pairs.append((n + l, n + l + 1))
    return FlatTangle.make(n, n, pairs)


# ---------------------------------------------------------------------------
# tangle gluing with piece tracking


def stack_tracked(a: FlatTangle, b: FlatTangle):
    """Glue a over b (a's bottom to b's top).

    Returns (result, map_a, map_b) where map_a / map_b send old pieces
    ('arc', i) or ('loop', k) to pieces of the result.
    """
    if a.bot != b.top:
        raise ValueError(f"cannot stack: {a.bot} bottom strands onto {b.top} top strands")
    match_a = {}
    for p, q in a.pairs:
        match_a[p] = q
        match_a[q] = p
    match_b = {}
    for p, q in b.pairs:
        match_b[p] = q
        match_b[q] = p
    arc_a = a.arc_of_point()
    arc_b = b.arc_of_point()

    used_ends = set()
    visited_mid = set()
    raw_arcs = []  # (endpoint pair in result indexing, traversed old arcs)

    def result_index(side, point):
        if side == "a":  # a top point
            return point
        return a.top + (point - b.top)  # b bottom point

    def walk(side, point):
        """Follow the strand from a free end; returns (other end, old arcs)."""
        old = []
        while True:
            nxt = (match_a if side == "a" else match_b)[point]
            old.append((side, (arc_a if side == "a" else arc_b)[nxt]))
            if side == "a":
                if nxt < a.top:
                    return ("a", nxt), old
                visited_mid.add(nxt - a.top)
                side, point = "b", nxt - a.top
            else:
                if nxt >= b.top:
                    return ("b", nxt), old
                visited_mid.add(nxt)
                side, point = "a", a.top + nxt

    ends = [("a", i) for i in range(a.top)] + [("b", b.top + j) for j in range(b.bot)]
    for end in ends:
        if end in used_ends:
            continue
        used_ends.add(end)
        other, old = walk(*end)
        used_ends.add(other)
        raw_arcs.append(((result_index(*end), result_index(*other)), old))

    # closed strands through the middle boundary
    raw_loops = []
    for m in range(a.bot):
        if m in visited_mid:
            continue
        old = []
        side, point = "a", a.top + m
        start = ("a", a.top + m)
        while True:
            nxt = (match_a if side == "a" else match_b)[point]
            old.append((side, (arc_a if side == "a" else arc_b)[nxt]))
            if side == "a":
                visited_mid.add(nxt - a.top)
                side, point = "b", nxt - a.top
            else:
                visited_mid.add(nxt)
                side, point = "a", a.top + nxt
            if (side, point) == start:
                break
        raw_loops.append((m, old))

    pairs = sorted(tuple(sorted(e)) for e, _ in raw_arcs)
    arc_index = {pair: i for i, pair in enumerate(pairs)}

    map_a, map_b = {}, {}
    for e, old in raw_arcs:
        dest = ("arc", arc_index[tuple(sorted(e))])
        for side, i in old:
            (map_a if side == "a" else map_b)[("arc", i)] = dest
    raw_loops.sort(key=lambda x: x[0])
    nloops = 0
    for _, old in raw_loops:
        dest = ("loop", nloops)
        nloops += 1
        for side, i in old:
            (map_a if side == "a" else map_b)[("arc", i)] = dest
    for k in range(a.loops):
        map_a[("loop", k)] = ("loop", nloops)
        nloops += 1
    for k in range(b.loops):
        map_b[("loop", k)] = ("loop", nloops)
        nloops += 1

    result = FlatTangle(a.top, b.bot, tuple(pairs), nloops)
    return result, map_a, map_b


def stack(a: FlatTangle, b: FlatTangle) -> FlatTangle:
    return stack_tracked(a, b)[0]


def beside_tracked(a: FlatTangle, b: FlatTangle):
    """Disjoint union, a to the left of b, with piece tracking."""
    top, bot = a.top + b.top, a.bot + b.bot

    def shift_a(p):
        return p if p < a.top else p + b.top

    def shift_b(p):
        return a.top + p if p < b.top else a.top + a.bot + p

    raw = [(tuple(sorted((shift_a(p), shift_a(q)))), ("a", i)) for i, (p, q) in enumerate(a.pairs)]
    raw += [(tuple(sorted((shift_b(p), shift_b(q)))), ("b", i)) for i, (p, q) in enumerate(b.pairs)]
    pairs = sorted(pair for pair, _ in raw)
    arc_index = {pair: i for i, pair in enumerate(pairs)}
    map_a, map_b = {}, {}
    for pair, (side, i) in raw:
        (map_a if side == "a" else map_b)[("arc", i)] = ("arc", arc_index[pair])
    for k in range(a.loops):
        map_a[("loop", k)] = ("loop", k)
    for k in range(b.loops):
        map_b[("loop", k)] = ("loop", a.loops + k)
    return FlatTangle(top, bot, tuple(pairs), a.loops + b.loops), map_a, map_b


def beside(a: FlatTangle, b: FlatTangle) -> FlatTangle:
    return beside_tracked(a, b)[0]


def reflect_tracked(t: FlatTangle):
    """180-degree rotation: top and bottom swap, left and right reverse."""

    def flip(p):
        if p < t.top:  # old top i -> new bottom, reversed
            return t.bot + (t.top - 1 - p)
        return t.bot - 1 - (p - t.top)  # old bottom j -> new top, reversed

    raw = [(tuple(sorted((flip(p), flip(q)))), i) for i, (p, q) in enumerate(t.pairs)]
    pairs = sorted(pair for pair, _ in raw)
    arc_index = {pair: i for i, pair in enumerate(pairs)}
    mapping = {("arc", i): ("arc", arc_index[pair]) for pair, i in raw}
    for k in range(t.loops):
        mapping[("loop", k)] = ("loop", k)
    return FlatTangle(t.bot, t.top, tuple(pairs), t.loops), mapping


def reflect(t: FlatTangle) -> FlatTangle:
    return reflect_tracked(t)[0]


def trace(t: FlatTangle) -> FlatTangle:
    """Close an endomorphism tangle by identifying top point i with bottom i."""
    if t.top != t.bot:
        raise ValueError(f"trace needs equal boundaries, got {t.top} and {t.bot}")
    match = {}
    for p, q in t.pairs:
        match[p] = q
        match[q] = p
    seen = set()
    cycles = 0
    for start in range(t.top):
        if start in seen:
            continue
        cycles += 1
        p = start
        while True:
            seen.add(p)
            q = match[p]
            seen.add(q)
            p = q - t.top if q >= t.top else q + t.top  # glue bottom i to top i
            if p == start:
                break
    return FlatTangle(0, 0, (), cycles + t.loops)


# ---------------------------------------------------------------------------
# trace circles: the boundary circles of any cobordism between two tangles


@lru_cache(maxsize=None)
def trace_circles(source: FlatTangle, target: FlatTangle):
    """Boundary circles of a cobordism source -> target, canonically ordered.

    Each circle is a frozenset of pieces; source arc and target arc sharing a
    boundary point lie on one circle, loops are circles of their own.
    """
    if source.top != target.top or source.bot != target.bot:
        raise ValueError("tangles are not parallel (boundary mismatch)")
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    pieces = [("s", i) for i in range(len(source.pairs))]
    pieces += [("t", i) for i in range(len(target.pairs))]
    pieces += [("sl", k) for k in range(source.loops)]
    pieces += [("tl", k) for k in range(target.loops)]
    for p in pieces:
        parent[p] = p
    sa, ta = source.arc_of_point(), target.arc_of_point()
    for p in range(source.npoints()):
        union(("s", sa[p]), ("t", ta[p]))
    groups = {}
    for p in pieces:
        groups.setdefault(find(p), []).append(p)
    kind_order = {"s": 0, "t": 1, "sl": 2, "tl": 3}

    def key(circle):
        return min((kind_order[k], i) for k, i in circle)

    return tuple(frozenset(g) for g in sorted(groups.values(), key=key))


# ---------------------------------------------------------------------------
# cobordisms


@dataclass(frozen=True)
class CobGenerator:
    """A normalized generator: a dot pattern on the trace circles."""

    source: FlatTangle
    target: FlatTangle
    dots: tuple  # one 0/1 entry per trace circle, canonical order

    def degree(self, m: int = 0, n: int = 0) -> int:
        """chi - (S+S')/2 + m - n with each dot counting -2."""
        circles = len(trace_circles(self.source, self.target))
        return (circles - 2 * sum(self.dots)
                - (self.source.top + self.source.bot) // 2 + m - n)


class CobLinear:
    """Ring-linear combination of normalized generators source -> target."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: FlatTangle, target: FlatTangle, terms=None):
        self.source = source
        self.target = target
        self.terms = {}
        if terms:
            for dots, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    acc = self.terms.get(dots, RingElem.zero()) + c
                    if acc:
                        self.terms[dots] = acc
                    elif dots in self.terms:
                        del self.terms[dots]

    @staticmethod
    def zero(source, target) -> "CobLinear":
        return CobLinear(source, target)

    def generators(self):
        for dots, c in sorted(self.terms.items()):
            yield CobGenerator(self.source, self.target, dots), c

    def __add__(self, other: "CobLinear") -> "CobLinear":
        assert self.source == other.source and self.target == other.target
        out = dict(self.terms)
        for dots, c in other.terms.items():
            out[dots] = out.get(dots, RingElem.zero()) + c
        return CobLinear(self.source, self.target, out)

    def __sub__(self, other: "CobLinear") -> "CobLinear":
        return self + (-other)

    def __neg__(self) -> "CobLinear":
        return CobLinear(self.source, self.target,
                         {d: -c for d, c in self.terms.items()})

    def scale(self, r) -> "CobLinear":
        if isinstance(r, int):
            r = RingElem.const(r)
        return CobLinear(self.source, self.target,
                         {d: c * r for d, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, CobLinear) and self.source == other.source
                and self.target == other.target and self.terms == other.terms)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.terms.items())))

    def qdegree(self, m: int = 0, n: int = 0) -> int:
        """Common degree of all terms as a map q^n source -> q^m target."""
        degs = set()
        for gen, c in self.generators():
            degs.add(gen.degree(m, n) + c.qdegree())
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous cobordism: degrees {sorted(degs)}")
        return degs.pop()

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{dots}" for dots, c in sorted(self.terms.items()))


def _expand(z: AlgebraElem, k: int, spec: FrobeniusSpec):
    """Write the k-fold coproduct of z in the basis {1, X}^{tensor k}.

    Yields (bit tuple, RingElem coefficient); bit 1 means a dot (basis X).
    """
    if k == 1:
        out = []
        if z.c1:
            out.append(((0,), z.c1))
        if z.cx:
            out.append(((1,), z.cx))
        return out
    out = []
    for bit, (_, rest) in enumerate(comultiply(z, spec)):
        for bits, c in _expand(rest, k - 1, spec):
            out.append(((bit,) + bits, c))
    return out


def normalize(source: FlatTangle, target: FlatTangle, components, spec: FrobeniusSpec,
              coeff: RingElem = None) -> CobLinear:
    """Normal form of a raw cobordism.

    components: iterable of (pieces, genus, dots) with pieces a collection of
    trace-circle piece tags (may be empty for a closed component).  Genus is
    traded for dots through the handle operator, closed components evaluate
    to scalars through the counit, and components covering several circles
    are expanded through the coproduct.
    """
    coeff = RingElem.one() if coeff is None else coeff
    circles = trace_circles(source, target)
    circ_of = {}
    for idx, circle in enumerate(circles):
        for p in circle:
            circ_of[p] = idx

    expansions = []
    covered_sets = []
    for pieces, genus, dots in components:
        pieces = frozenset(pieces)
        z = power_x(dots, genus, spec)
        if not pieces:
            coeff = coeff * counit(z)
            if not coeff:
                return CobLinear.zero(source, target)
            continue
        covered = sorted({circ_of[p] for p in pieces})
        if frozenset().union(*(circles[i] for i in covered)) != pieces:
            raise ValueError("component boundary is not a union of whole circles")
        covered_sets.append(covered)
        expansions.append(_expand(z, len(covered), spec))

    flat = [i for cov in covered_sets for i in cov]
    if sorted(flat) != list(range(len(circles))):
        raise ValueError("components do not partition the trace circles")

    out = {}
    for choice in itertools.product(*expansions):
        c = coeff
        dots_vec = [0] * len(circles)
        for (bits, cc), covered in zip(choice, covered_sets):
            c = c * cc
            for b, i in zip(bits, covered):
                dots_vec[i] = b
        if c:
            key = tuple(dots_vec)
            acc = out.get(key, RingElem.zero()) + c
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return CobLinear(source, target, out)


def identity_coblinear(t: FlatTangle, spec: FrobeniusSpec) -> CobLinear:
    comps = [({("s", i), ("t", i)}, 0, 0) for i in range(len(t.pairs))]
    comps += [({("sl", k), ("tl", k)}, 0, 0) for k in range(t.loops)]
    return normalize(t, t, comps, spec)


def _merge_components(comp_lists, links, piece_relabel):
    """Shared gluing engine.

    comp_lists: list of (tag, circle pieces, dots) normalized components.
    links: list of (comp_key_a, comp_key_b, chi_drop) gluing identifications,
    where comp keys name components by any piece they contain.
    piece_relabel: maps an old piece to a result piece or None (glued away).

    Returns merged raw components (pieces, genus-to-be-determined data):
    list of (result pieces set, chi, dots).
    """
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    owner = {}
    for idx, (tag, pieces, _) in enumerate(comp_lists):
        parent[idx] = idx
        for p in pieces:
            owner[(tag, p)] = idx
    for key_a, key_b, _ in links:
        union(owner[key_a], owner[key_b])
    groups = {}
    for idx in range(len(comp_lists)):
        groups.setdefault(find(idx), []).append(idx)
    drops = {}
    for key_a, key_b, drop in links:
        root = find(owner[key_a])
        drops[root] = drops.get(root, 0) + drop
    merged = []
    for root, members in sorted(groups.items()):
        pieces = set()
        dots = 0
        for idx in members:
            tag, old_pieces, d = comp_lists[idx]
            dots += d
            for p in old_pieces:
                q = piece_relabel(tag, p)
                if q is not None:
                    pieces.add(q)
        chi = len(members) - drops.get(root, 0)
        merged.append((frozenset(pieces), chi, dots))
    return merged


def _genus_from_chi(pieces, chi, source, target):
    if not pieces:
        g2 = 2 - chi
    else:
        circ_of = {}
        for idx, circle in enumerate(trace_circles(source, target)):
            for p in circle:
                circ_of[p] = idx
        b = len({circ_of[p] for p in pieces})
        g2 = 2 - chi - b
    if g2 < 0 or g2 % 2:
        raise AssertionError(f"inconsistent Euler characteristic: chi={chi}")
    return g2 // 2


def _gen_components(circles, dots):
    """The components of a normalized generator: one per circle."""
    return [(circle, d) for circle, d in zip(circles, dots)]


def compose_vertical(f: CobLinear, g: CobLinear, spec: FrobeniusSpec) -> CobLinear:
    """g after f: glue along the middle tangle E = f.target = g.source."""
    if f.target != g.source:
        raise ValueError(
            f"cannot compose: middle tangles differ\n  f.target={f.target}\n  g.source={g.source}")
    D, E, F = f.source, f.target, g.target
    circ_f = trace_circles(D, E)
    circ_g = trace_circles(E, F)
    ea = E.arc_of_point()

    # gluing links: E arc i joins ('t', i) on the f side to ('s', i) on the
    # g side (chi drops 1); an E loop joins ('tl', k) to ('sl', k) (chi drops 0)
    links = [(("f", ("t", i)), ("g", ("s", i)), 1) for i in range(len(E.pairs))]
    links += [(("f", ("tl", k)), ("g", ("sl", k)), 0) for k in range(E.loops)]

    def relabel(tag, piece):
        kind, i = piece
        if tag == "f":
            return piece if kind in ("s", "sl") else None
        return piece if kind in ("t", "tl") else None

    out = CobLinear.zero(D, F)
    for df, cf in f.terms.items():
        comps_f = [("f", circle, d) for circle, d in zip(circ_f, df)]
        for dg, cg in g.terms.items():
            comps_g = [("g", circle, d) for circle, d in zip(circ_g, dg)]
            merged = _merge_components(comps_f + comps_g, links, relabel)
            comps = [(pieces, _genus_from_chi(pieces, chi, D, F), dots)
                     for pieces, chi, dots in merged]
            out = out + normalize(D, F, comps, spec, cf * cg)
    return out


def _side_relabel(map_s, map_t):
    """Convert a piece through source/target tracking maps."""

    def conv(piece):
        kind, i = piece
        if kind in ("s", "sl"):
            nk, ni = map_s[("arc" if kind == "s" else "loop", i)]
            return ("s" if nk == "arc" else "sl", ni)
        nk, ni = map_t[("arc" if kind == "t" else "loop", i)]
        return ("t" if nk == "arc" else "tl", ni)

    return conv


def stack_cob(f: CobLinear, g: CobLinear, spec: FrobeniusSpec) -> CobLinear:
    """Horizontal composition one level up: glue f over g along the seam."""
    S, ma_s, mb_s = stack_tracked(f.source, g.source)
    T, ma_t, mb_t = stack_tracked(f.target, g.target)
    mid = f.source.bot
    circ_f = trace_circles(f.source, f.target)
    circ_g = trace_circles(g.source, g.target)
    fa = f.source.arc_of_point()
    ga = g.source.arc_of_point()
    links = []
    for p in range(mid):
        links.append(((("f", ("s", fa[f.source.top + p]))),
                      (("g", ("s", ga[p]))), 1))
    conv_f = _side_relabel(ma_s, ma_t)
    conv_g = _side_relabel(mb_s, mb_t)

    def relabel(tag, piece):
        return (conv_f if tag == "f" else conv_g)(piece)

    out = CobLinear.zero(S, T)
    for df, cf in f.terms.items():
        comps_f = [("f", circle, d) for circle, d in zip(circ_f, df)]
        for dg, cg in g.terms.items():
            comps_g = [("g", circle, d) for circle, d in zip(circ_g, dg)]
            merged = _merge_components(comps_f + comps_g, links, relabel)
            comps = [(pieces, _genus_from_chi(pieces, chi, S, T), dots)
                     for pieces, chi, dots in merged]
            out = out + normalize(S, T, comps, spec, cf * cg)
    return out


def compose_horizontal(f: CobLinear, g: CobLinear, spec: FrobeniusSpec) -> CobLinear:
    """Disjoint union, f to the left of g."""
    S, ma_s, mb_s = beside_tracked(f.source, g.source)
    T, ma_t, mb_t = beside_tracked(f.target, g.target)
    conv_f = _side_relabel(ma_s, ma_t)
    conv_g = _side_relabel(mb_s, mb_t)
    circ_f = trace_circles(f.source, f.target)
    circ_g = trace_circles(g.source, g.target)
    out = CobLinear.zero(S, T)
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            comps = [({conv_f(p) for p in circle}, 0, d)
                     for circle, d in zip(circ_f, df)]
            comps += [({conv_g(p) for p in circle}, 0, d)
                      for circle, d in zip(circ_g, dg)]
            out = out + normalize(S, T, comps, spec, cf * cg)
    return out


def reflect_cob(f: CobLinear, spec: FrobeniusSpec) -> CobLinear:
    """Contravariant duality: 180-degree rotation of the cobordism."""
    new_source, map_t = reflect_tracked(f.target)
    new_target, map_s = reflect_tracked(f.source)

    def conv(piece):
        kind, i = piece
        if kind in ("s", "sl"):  # old source becomes new target
            nk, ni = map_s[("arc" if kind == "s" else "loop", i)]
            return ("t" if nk == "arc" else "tl", ni)
        nk, ni = map_t[("arc" if kind == "t" else "loop", i)]
        return ("s" if nk == "arc" else "sl", ni)

    circ = trace_circles(f.source, f.target)
    out = CobLinear.zero(new_source, new_target)
    for dots, c in f.terms.items():
        comps = [({conv(p) for p in circle}, 0, d) for circle, d in zip(circ, dots)]
        out = out + normalize(new_source, new_target, comps, spec, c)
    return out
