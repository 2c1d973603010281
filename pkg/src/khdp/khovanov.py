"""From diagrams to complexes and from movies to chain maps.

Crossings become two-term cone complexes; a bookmark word becomes the
tensor (vertical stacking) of its token complexes.  Movie events induce
chain maps: Morse events through the TQFT structure maps, Reidemeister
moves through tracked simplification (transporting the identity of the
reduced model), crossing changes (nodes) through the double-point maps
A (dotted-sheet difference, bidegree (-2,-6)) and B (identity of the
off-degree resolutions, bidegree (2,4)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (ChainMap, Complex, GradedObject, check_chain_map,
                        compose_maps, hom_complex, homotopic_up_to_sign,
                        identity_map, simplify, single_complex, tensor,
                        tensor_maps)
from .frobenius import PLAIN, FrobeniusSpec
from .homology import BigradedGroup, class_coordinates, homology_of
from .movies import (BookmarkWord, Movie, MovieError, apply_event, catalog,
                     scan, validate_movie)
from .planar import (CobLinear, FlatTangle, cap_tangle, cup_tangle,
                     cupcap_tangle, identity_tangle, normalize, reflect_cob)


# ---------------------------------------------------------------------------
# local cobordisms


def _strand_comps(n):
    return [({("s", i), ("t", i)}, 0, 0) for i in range(n)]


def dotted_identity(t: FlatTangle, point: int, spec: FrobeniusSpec) -> CobLinear:
    """Identity cobordism of a loop-free flat tangle with one dot on the
    sheet of the arc through the given boundary point."""
    arc = t.arc_of_point()[point]
    comps = [({("s", i), ("t", i)}, 0, 1 if i == arc else 0)
             for i in range(len(t.pairs))]
    return normalize(t, t, comps, spec)


def saddle_cob(l: int, r: int, spec: FrobeniusSpec) -> CobLinear:
    """The saddle from the identity resolution to the cup-cap resolution,
    widened by l strands on the left and r on the right."""
    n = l + 2 + r
    src, tgt = identity_tangle(n), cupcap_tangle(l, r)
    sa, ta = src.arc_of_point(), tgt.arc_of_point()
    comps = [({("s", sa[i]), ("t", ta[i])}, 0, 0)
             for i in range(n) if i < l or i >= l + 2]
    comps.append(({("s", sa[l]), ("s", sa[l + 1]),
                   ("t", ta[l]), ("t", ta[n + l])}, 0, 0))
    return normalize(src, tgt, comps, spec)


# ---------------------------------------------------------------------------
# diagrams to complexes


@dataclass(frozen=True)
class OrientedDiagram:
    word: BookmarkWord
    signs: tuple  # (token index, +-1) per crossing
    n_pos: int
    n_neg: int


def oriented(word: BookmarkWord) -> OrientedDiagram:
    s = scan(word)
    signs = tuple(sorted(s.signs.items()))
    return OrientedDiagram(word, signs,
                           sum(1 for _, v in signs if v > 0),
                           sum(1 for _, v in signs if v < 0))


def _flip(kind: str) -> str:
    return "XBAR" if kind == "X" else "X"


def crossing_complex(sign: int, l: int = 0, r: int = 0,
                     spec: FrobeniusSpec = PLAIN, kind: str = "X") -> Complex:
    """The cone complex of one crossing, widened by identity strands.

    The 0-smoothing is determined by the crossing kind (X: identity
    resolution, XBAR: cup-cap); the sign places the oriented resolution in
    homological degree zero — positive: [q1 r0 at t=0 -> q2 r1 at t=1],
    negative: [q-2 r0 at t=-1 -> q-1 r1 at t=0].
    """
    n = l + 2 + r
    ident, e = identity_tangle(n), cupcap_tangle(l, r)
    saddle = saddle_cob(l, r, spec)
    if kind == "X":
        r0, r1, d = ident, e, saddle
    else:
        # reflect_cob rotates 180 degrees, so swap the paddings to land the
        # co-saddle back at column l
        r0, r1, d = e, ident, reflect_cob(saddle_cob(r, l, spec), spec)
    if sign > 0:
        objects = [GradedObject(r0, 1, 0), GradedObject(r1, 2, 1)]
    else:
        objects = [GradedObject(r0, -2, -1), GradedObject(r1, -1, 0)]
    return Complex(objects, {(1, 0): d}, spec)


def token_complex(tok, sign, width, spec: FrobeniusSpec) -> Complex:
    if tok.kind == "CAP":
        return single_complex(cap_tangle(tok.l, width - tok.l), spec)
    if tok.kind == "CUP":
        return single_complex(cup_tangle(tok.l, width - tok.l - 2), spec)
    return crossing_complex(sign, tok.l, width - tok.l - 2, spec, tok.kind)


def full_complex(word: BookmarkWord, spec: FrobeniusSpec = PLAIN) -> Complex:
    """The unsimplified tensor of all token complexes, top to bottom."""
    s = scan(word)
    c = single_complex(identity_tangle(word.top), spec)
    for idx, tok in enumerate(word.tokens):
        c = tensor(c, token_complex(tok, s.signs.get(idx), s.widths[idx], spec))
    return c


def complex_of(word: BookmarkWord, spec: FrobeniusSpec = PLAIN) -> Complex:
    """Scanning pipeline: tensor one token at a time, simplifying per slice."""
    s = scan(word)
    c = single_complex(identity_tangle(word.top), spec)
    for idx, tok in enumerate(word.tokens):
        c = tensor(c, token_complex(tok, s.signs.get(idx), s.widths[idx], spec))
        c, _, _ = simplify(c, maps=False)
    return c


def homology(word: BookmarkWord, spec: FrobeniusSpec = PLAIN) -> BigradedGroup:
    return homology_of(complex_of(word, spec))


def braid_complex(n: int, gens, spec: FrobeniusSpec = PLAIN) -> Complex:
    """Tensor of widened crossing complexes; gens = [(column, sign), ...].

    Strands are oriented upward, so a positive generator is an X crossing
    and a negative generator an XBAR one.
    """
    c = single_complex(identity_tangle(n), spec)
    for col, sign in gens:
        kind = "X" if sign > 0 else "XBAR"
        c = tensor(c, crossing_complex(sign, col, n - col - 2, spec, kind))
    return c


# ---------------------------------------------------------------------------
# the double-point maps


def node_A(spec: FrobeniusSpec = PLAIN, l: int = 0, r: int = 0,
           kind: str = "X") -> ChainMap:
    """A: C+ -> C-, the dotted-sheet difference on the disoriented
    resolutions.  kind is the kind of the (positive) source crossing; the
    crossing change flips it.  The sheet whose first boundary point comes
    first gets the + sign.  Bidegree (-2, -6)."""
    src = crossing_complex(1, l, r, spec, kind)
    tgt = crossing_complex(-1, l, r, spec, _flip(kind))
    n = l + 2 + r
    if kind == "X":
        dis = cupcap_tangle(l, r)
        entry = dotted_identity(dis, l, spec) - dotted_identity(dis, n + l, spec)
    else:
        dis = identity_tangle(n)
        entry = dotted_identity(dis, l, spec) - dotted_identity(dis, l + 1, spec)
    return ChainMap(src, tgt, -2, {(0, 1): entry})


def node_B(spec: FrobeniusSpec = PLAIN, l: int = 0, r: int = 0,
           kind: str = "X") -> ChainMap:
    """B: C- -> C+, the identity between the disoriented resolutions.

    kind is the kind of the (negative) source crossing.  Bidegree (2, 4)."""
    src = crossing_complex(-1, l, r, spec, kind)
    tgt = crossing_complex(1, l, r, spec, _flip(kind))
    dis = identity_tangle(l + 2 + r) if kind == "X" else cupcap_tangle(l, r)
    comps = [({("s", i), ("t", i)}, 0, 0) for i in range(len(dis.pairs))]
    entry = normalize(dis, dis, comps, spec)
    return ChainMap(src, tgt, 2, {(1, 0): entry})


# ---------------------------------------------------------------------------
# elementary event maps

_SPANS = {"node": (1, 1), "dot": (0, 0), "birth": (0, 2), "death": (2, 0),
          "saddle": (0, 2), "r1": (0, 3), "r1inv": (3, 0), "r2": (0, 2),
          "r2inv": (2, 0), "r3": (3, 3), "exchange": (2, 2), "psi": (2, 2)}


def _segment_complex(word, scanres, lo, hi, spec):
    c = single_complex(identity_tangle(scanres.widths[lo]), spec)
    for idx in range(lo, hi):
        c = tensor(c, token_complex(word.tokens[idx], scanres.signs.get(idx),
                                    scanres.widths[idx], spec))
    return c


def _reduce_to_identity(local, width, spec):
    """Simplify a local complex and insist the result is the one-object
    identity complex in bidegree (0, 0)."""
    red, to_red, from_red = simplify(local)
    want = (GradedObject(identity_tangle(width), 0, 0),)
    if red.objects != want:
        raise MovieError(f"move does not reduce to the identity tangle: "
                         f"{red.objects}")
    return red, to_red, from_red


def find_chain_iso(cs: Complex, ct: Complex) -> ChainMap:
    """A degree-(0,0) chain isomorphism given by a signed permutation of
    objects matched on (tangle, q-shift, t-degree).  Raises MovieError if
    no such matching exists."""
    if len(cs.objects) != len(ct.objects):
        raise MovieError("reduced complexes have different sizes")

    def key(o):
        return (o.tangle, o.qshift, o.tdeg)

    by_key = {}
    for j, o in enumerate(ct.objects):
        by_key.setdefault(key(o), []).append(j)
    pi = []
    for o in cs.objects:
        cands = by_key.get(key(o))
        if not cands:
            raise MovieError(f"no matching object for {o}")
        pi.append(cands.pop(0))

    n = len(cs.objects)
    sign = [None] * n
    # propagate relative signs along nonzero differential entries
    adj = {}
    for (b, a), v in cs.diff.items():
        w = ct.diff.get((pi[b], pi[a]))
        if w == v:
            rel = 1
        elif w is not None and w == -v:
            rel = -1
        else:
            raise MovieError("differentials do not match up to sign")
        adj.setdefault(a, []).append((b, rel))
        adj.setdefault(b, []).append((a, rel))
    for (b, a) in ct.diff:
        inv = {pj: i for i, pj in enumerate(pi)}
        if (inv[b], inv[a]) not in cs.diff:
            raise MovieError("target differential has an unmatched entry")
    for start in range(n):
        if sign[start] is not None:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            a = stack.pop()
            for b, rel in adj.get(a, ()):
                want = sign[a] * rel
                if sign[b] is None:
                    sign[b] = want
                    stack.append(b)
                elif sign[b] != want:
                    raise MovieError("inconsistent signs, no signed-permutation iso")
    entries = {}
    from .planar import identity_coblinear
    for a, o in enumerate(cs.objects):
        ent = identity_coblinear(o.tangle, cs.spec)
        if sign[a] < 0:
            ent = -ent
        entries[(pi[a], a)] = ent
    f = ChainMap(cs, ct, 0, entries)
    check_chain_map(f)
    return f


def elementary_map(word: BookmarkWord, e, spec: FrobeniusSpec = PLAIN):
    """The local chain map of one event.

    Returns (local map, new word); the map runs between the segment
    complexes of the consumed and replacement token ranges.
    """
    if e.kind not in _SPANS:
        raise MovieError(f"unknown event kind {e.kind!r}")
    new_word = apply_event(word, e)
    ks, kt = _SPANS[e.kind]
    i = e.index
    s_src, s_tgt = scan(word), scan(new_word)
    local_src = _segment_complex(word, s_src, i, i + ks, spec)
    local_tgt = _segment_complex(new_word, s_tgt, i, i + kt, spec)
    w = s_src.widths[i]

    if e.kind == "node":
        sign = s_src.signs[i]
        tok = word.tokens[i]
        l, r = tok.l, w - tok.l - 2
        template = (node_A(spec, l, r, tok.kind) if sign > 0
                    else node_B(spec, l, r, tok.kind))
        f = ChainMap(local_src, local_tgt, template.tshift, template.entries)
    elif e.kind == "dot":
        l = e.arg("l")
        f = ChainMap(local_src, local_tgt, 0,
                     {(0, 0): dotted_identity(identity_tangle(w), l, spec)})
    elif e.kind == "birth":
        comps = _strand_comps(w) + [({("tl", 0)}, 0, 0)]
        entry = normalize(identity_tangle(w), local_tgt.objects[0].tangle,
                          comps, spec)
        f = ChainMap(local_src, local_tgt, 0, {(0, 0): entry})
    elif e.kind == "death":
        comps = _strand_comps(w) + [({("sl", 0)}, 0, 0)]
        entry = normalize(local_src.objects[0].tangle, identity_tangle(w),
                          comps, spec)
        f = ChainMap(local_src, local_tgt, 0, {(0, 0): entry})
    elif e.kind == "saddle":
        l = e.arg("l")
        entry = saddle_cob(l, w - l - 2, spec)
        f = ChainMap(local_src, local_tgt, 0, {(0, 0): entry})
    elif e.kind in ("r1", "r2"):
        _, _, from_red = _reduce_to_identity(local_tgt, w, spec)
        f = ChainMap(local_src, local_tgt, 0, from_red.entries)
    elif e.kind in ("r1inv", "r2inv"):
        _, to_red, _ = _reduce_to_identity(local_src, w, spec)
        f = ChainMap(local_src, local_tgt, 0, to_red.entries)
    elif e.kind == "r3":
        red_s, to_s, _ = simplify(local_src)
        red_t, _, from_t = simplify(local_tgt)
        iso = find_chain_iso(red_s, red_t)
        f = compose_maps(from_t, compose_maps(iso, to_s))
    else:  # exchange / psi
        cA = token_complex(word.tokens[i], s_src.signs.get(i),
                           s_src.widths[i], spec)
        cB = token_complex(word.tokens[i + 1], s_src.signs.get(i + 1),
                           s_src.widths[i + 1], spec)
        nA, nB = len(cA.objects), len(cB.objects)
        from .planar import identity_coblinear
        entries = {}
        for a in range(nA):
            for b in range(nB):
                so = local_src.objects[a * nB + b]
                to = local_tgt.objects[b * nA + a]
                if so.tangle != to.tangle or so.qshift != to.qshift \
                        or so.tdeg != to.tdeg:
                    raise MovieError("exchange factors do not commute")
                ent = identity_coblinear(so.tangle, spec)
                if (cA.objects[a].tdeg * cB.objects[b].tdeg) % 2:
                    ent = -ent
                entries[(b * nA + a, a * nB + b)] = ent
        f = ChainMap(local_src, local_tgt, 0, entries)

    check_chain_map(f)
    return f, new_word


def event_map(word: BookmarkWord, e, spec: FrobeniusSpec = PLAIN):
    """The event's chain map between the full complexes of the two words."""
    local, new_word = elementary_map(word, e, spec)
    ks, kt = _SPANS[e.kind]
    s_src = scan(word)
    prefix = _segment_complex(word, s_src, 0, e.index, spec)
    s_tgt = scan(new_word)
    suffix = _segment_complex(new_word, s_tgt, e.index + kt,
                              len(new_word.tokens), spec)
    f = tensor_maps(tensor_maps(identity_map(prefix), local),
                    identity_map(suffix))
    return f, new_word


def movie_map(m: Movie, spec: FrobeniusSpec = PLAIN) -> ChainMap:
    """The composite chain map of a movie, between the full complexes of
    its initial and final words."""
    validate_movie(m)
    word = m.initial
    f = identity_map(full_complex(word, spec))
    for e in m.events:
        g, word = event_map(word, e, spec)
        if g.source.objects != f.target.objects:
            raise AssertionError("event map endpoints out of step")
        f = compose_maps(g, f)
    final = full_complex(word, spec)
    if f.target.objects != final.objects:
        raise AssertionError("movie map target does not match the final word")
    return f


# ---------------------------------------------------------------------------
# movie-move verification


@dataclass
class VariantReport:
    variant: str
    verdict: str  # plus | minus | no
    literally_equal: bool
    node_kind: str
    star: tuple
    star_group: tuple  # (free rank, torsion) of hom homology at star
    left_class: object
    right_class: object

    @property
    def ok(self) -> bool:
        return self.verdict in ("plus", "minus")


def verify_variant(v, spec: FrobeniusSpec = PLAIN) -> VariantReport:
    fl = movie_map(v.left, spec)
    fr = movie_map(v.right, spec)
    red_s, _, from_s = simplify(fl.source)
    red_t, to_t, _ = simplify(fl.target)
    fl = compose_maps(to_t, compose_maps(fl, from_s))
    fr = compose_maps(to_t, compose_maps(fr, from_s))
    hc = hom_complex(red_s, red_t)
    verdict = homotopic_up_to_sign(fl, fr, hc)
    star_group = homology_of(hc.complex).get(*v.star)
    lc = class_coordinates(fl, hc)
    rc = class_coordinates(fr, hc)
    return VariantReport(v.name, verdict.verdict, verdict.literally_equal,
                         v.node_kind, v.star, star_group, lc, rc)


def verify_movie_move(move_id: str, variant: str = None,
                      spec: FrobeniusSpec = PLAIN):
    """Verify all (or one named) orientation variants of a movie move."""
    reports = []
    for v in catalog(move_id):
        if variant is not None and v.name != variant:
            continue
        reports.append(verify_variant(v, spec))
    if variant is not None and not reports:
        raise KeyError(f"no variant {variant!r} in {move_id}")
    return reports


def compare_movies(left: Movie, right: Movie, spec: FrobeniusSpec = PLAIN):
    """Homotopy comparison (up to sign) of two movies with equal endpoints."""
    fl = movie_map(left, spec)
    fr = movie_map(right, spec)
    if fl.source.objects != fr.source.objects \
            or fl.target.objects != fr.target.objects:
        raise MovieError("movies do not share initial and final words")
    red_s, _, from_s = simplify(fl.source)
    red_t, to_t, _ = simplify(fl.target)
    fl = compose_maps(to_t, compose_maps(fl, from_s))
    fr = compose_maps(to_t, compose_maps(fr, from_s))
    hc = hom_complex(red_s, red_t)
    verdict = homotopic_up_to_sign(fl, fr, hc)
    lc = class_coordinates(fl, hc)
    return verdict, lc, hc


def movie_class(m: Movie, spec: FrobeniusSpec = PLAIN):
    """Bidegree and homology-class coordinates of a movie's chain map,
    computed on the simplified models of its endpoint complexes."""
    f = movie_map(m, spec)
    red_s, _, from_s = simplify(f.source)
    red_t, to_t, _ = simplify(f.target)
    f = compose_maps(to_t, compose_maps(f, from_s))
    hc = hom_complex(red_s, red_t)
    return f, class_coordinates(f, hc), hc


# ---------------------------------------------------------------------------
# braid conjugation


def braid_conjugation_check(gens, n: int, f: ChainMap,
                            spec: FrobeniusSpec = PLAIN):
    """Check that f tensor 1_{T_beta} and 1_{T_beta} tensor f represent
    generators iff f does.  gens = [(column, sign), ...] on n strands."""
    t_beta = braid_complex(n, gens, spec)
    ident = identity_map(t_beta)
    results = {}
    for name, g in (("f", f),
                    ("r", tensor_maps(f, ident)),
                    ("l", tensor_maps(ident, f))):
        red_s, _, from_s = simplify(g.source)
        red_t, to_t, _ = simplify(g.target)
        gr = compose_maps(to_t, compose_maps(g, from_s))
        hc = hom_complex(red_s, red_t)
        results[name] = class_coordinates(gr, hc)
    return results
