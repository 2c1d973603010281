"""Bounded (t,q)-bigraded chain complexes over the cobordism category.

A Complex is a list of graded objects (flat tangle, q-shift, homological
degree) plus a sparse differential of CobLinear entries raising tdeg by 1.
ChainMaps carry a homological shift; their entries are CobLinear matrices.

The simplification pipeline — delooping circles and Gaussian elimination of
unit differential entries — tracks both halves of the homotopy equivalence,
so that maps can be transported between a complex and its reduced model.
"""

from __future__ import annotations

from dataclasses import dataclass

from .frobenius import FrobeniusSpec, RingElem
from .planar import (EMPTY, CobGenerator, CobLinear, FlatTangle,
                     compose_vertical, identity_coblinear, normalize, reflect,
                     reflect_cob, stack, stack_cob, trace_circles)


@dataclass(frozen=True)
class GradedObject:
    tangle: FlatTangle
    qshift: int
    tdeg: int


class Complex:
    """Objects plus a sparse differential keyed (target index, source index)."""

    __slots__ = ("objects", "diff", "spec")

    def __init__(self, objects, diff, spec: FrobeniusSpec):
        self.objects = tuple(objects)
        self.diff = {k: v for k, v in diff.items() if v}
        self.spec = spec

    def __repr__(self):
        return f"Complex({len(self.objects)} objects, {len(self.diff)} entries)"

    def entry(self, ti, si) -> CobLinear:
        e = self.diff.get((ti, si))
        if e is None:
            return CobLinear.zero(self.objects[si].tangle, self.objects[ti].tangle)
        return e

    def boundary_counts(self):
        if not self.objects:
            return (0, 0)
        t = self.objects[0].tangle
        return (t.top, t.bot)

    def tdeg_range(self):
        degs = [o.tdeg for o in self.objects]
        return (min(degs), max(degs)) if degs else (0, 0)


def single_complex(tangle: FlatTangle, spec: FrobeniusSpec, q: int = 0, t: int = 0) -> Complex:
    return Complex([GradedObject(tangle, q, t)], {}, spec)


def validate(c: Complex):
    """d.d = 0, q-degree-0 entries, tdeg raised by one.  Raises on violation."""
    for (ti, si), v in c.diff.items():
        src, tgt = c.objects[si], c.objects[ti]
        if tgt.tdeg != src.tdeg + 1:
            raise ValueError(f"entry ({ti},{si}) does not raise tdeg by 1")
        if v.source != src.tangle or v.target != tgt.tangle:
            raise ValueError(f"entry ({ti},{si}) has mismatched tangles")
        d = v.qdegree(tgt.qshift, src.qshift)
        if v and d != 0:
            raise ValueError(f"entry ({ti},{si}) has q-degree {d}, expected 0")
    by_src = {}
    for (ti, si), v in c.diff.items():
        by_src.setdefault(si, []).append((ti, v))
    square = {}
    for (ti, si), v in c.diff.items():
        for t2, w in by_src.get(ti, ()):
            key = (t2, si)
            comp = compose_vertical(v, w, c.spec)
            square[key] = square[key] + comp if key in square else comp
    for key, total in square.items():
        if total:
            raise ValueError(f"d^2 != 0 at {key}: {total}")
    return c


class ChainMap:
    """A degree-(tshift, *) map of complexes, entries keyed (ti, si)."""

    __slots__ = ("source", "target", "tshift", "entries")

    def __init__(self, source: Complex, target: Complex, tshift: int, entries):
        self.source = source
        self.target = target
        self.tshift = tshift
        self.entries = {k: v for k, v in entries.items() if v}

    def __repr__(self):
        return f"ChainMap(tshift={self.tshift}, {len(self.entries)} entries)"

    def __bool__(self):
        return bool(self.entries)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        assert self.tshift == other.tshift
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return ChainMap(self.source, self.target, self.tshift, out)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return self + (-other)

    def __neg__(self) -> "ChainMap":
        return ChainMap(self.source, self.target, self.tshift,
                        {k: -v for k, v in self.entries.items()})

    def scale(self, r) -> "ChainMap":
        return ChainMap(self.source, self.target, self.tshift,
                        {k: v.scale(r) for k, v in self.entries.items()})

    def entry(self, ti, si) -> CobLinear:
        e = self.entries.get((ti, si))
        if e is None:
            return CobLinear.zero(self.source.objects[si].tangle,
                                  self.target.objects[ti].tangle)
        return e

    def qshift(self) -> int:
        """The common q-degree of all entries (with object shifts)."""
        degs = set()
        for (ti, si), v in self.entries.items():
            degs.add(v.qdegree(self.target.objects[ti].qshift,
                               self.source.objects[si].qshift))
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous chain map: q-degrees {sorted(degs)}")
        return degs.pop()

    def bidegree(self):
        return (self.tshift, self.qshift())


def identity_map(c: Complex) -> ChainMap:
    return ChainMap(c, c, 0, {(i, i): identity_coblinear(o.tangle, c.spec)
                              for i, o in enumerate(c.objects)})


def compose_maps(g: ChainMap, f: ChainMap, spec: FrobeniusSpec = None) -> ChainMap:
    """g after f."""
    assert f.target is g.source or f.target.objects == g.source.objects, \
        "chain maps not composable"
    spec = spec or f.source.spec
    by_src = {}
    for (tg, sg), v in g.entries.items():
        by_src.setdefault(sg, []).append((tg, v))
    out = {}
    for (tf, sf), u in f.entries.items():
        for tg, v in by_src.get(tf, ()):
            key = (tg, sf)
            comp = compose_vertical(u, v, spec)
            out[key] = out[key] + comp if key in out else comp
    return ChainMap(f.source, g.target, f.tshift + g.tshift, out)


def check_chain_map(f: ChainMap):
    """Assert d_F f = (-1)^{tshift} f d_E (i.e. delta f = 0)."""
    spec = f.source.spec
    sign = -1 if f.tshift % 2 else 1
    acc = {}
    byF = {}
    for (ti, si), v in f.target.diff.items():
        byF.setdefault(si, []).append((ti, v))
    for (tf, sf), u in f.entries.items():
        for t2, w in byF.get(tf, ()):
            key = (t2, sf)
            comp = compose_vertical(u, w, spec)
            acc[key] = acc[key] + comp if key in acc else comp
    byf = {}
    for (tf, sf), u in f.entries.items():
        byf.setdefault(sf, []).append((tf, u))
    for (ti, si), v in f.source.diff.items():
        for t2, u in byf.get(ti, ()):
            key = (t2, si)
            comp = compose_vertical(v, u, spec).scale(-sign)
            acc[key] = acc[key] + comp if key in acc else comp
    for key, total in acc.items():
        if total:
            raise ValueError(f"not a chain map at {key}: {total}")
    return f


def tensor(cl: Complex, cr: Complex) -> Complex:
    """Planar composition of complexes, left over right.

    Objects are ordered left-major; the right differential picks up the sign
    (-1)^{tdeg of the left factor}.
    """
    assert cl.spec == cr.spec
    nr = len(cr.objects)
    objects = []
    for lo in cl.objects:
        for ro in cr.objects:
            objects.append(GradedObject(stack(lo.tangle, ro.tangle),
                                        lo.qshift + ro.qshift, lo.tdeg + ro.tdeg))
    diff = {}
    for (ti, si), v in cl.diff.items():
        for j, ro in enumerate(cr.objects):
            idr = identity_coblinear(ro.tangle, cr.spec)
            diff[(ti * nr + j, si * nr + j)] = stack_cob(v, idr, cl.spec)
    for (tj, sj), w in cr.diff.items():
        for i, lo in enumerate(cl.objects):
            idl = identity_coblinear(lo.tangle, cl.spec)
            entry = stack_cob(idl, w, cl.spec)
            if lo.tdeg % 2:
                entry = -entry
            key = (i * nr + tj, i * nr + sj)
            diff[key] = diff[key] + entry if key in diff else entry
    return Complex(objects, diff, cl.spec)


def tensor_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    """f tensor g on the tensor complexes (left-major object order).

    Only even homological shifts are supported (all uses here are shifts
    0 or +-2), which keeps the Koszul sign trivial.
    """
    if g.tshift % 2:
        raise NotImplementedError("odd-shift tensor factor needs Koszul signs")
    spec = f.source.spec
    src = tensor(f.source, g.source)
    tgt = tensor(f.target, g.target)
    nr_s, nr_t = len(g.source.objects), len(g.target.objects)
    entries = {}
    for (tf, sf), u in f.entries.items():
        for (tg, sg), v in g.entries.items():
            entries[(tf * nr_t + tg, sf * nr_s + sg)] = stack_cob(u, v, spec)
    return ChainMap(src, tgt, f.tshift + g.tshift, entries)


def deloop(c: Complex):
    """Replace one circle of the first looped object by q^{+1}, q^{-1} copies.

    Returns (new complex, forward, backward) with forward: c -> new and
    backward: new -> c mutually inverse degree-(0,0) chain maps.
    """
    k = next((i for i, o in enumerate(c.objects) if o.tangle.loops > 0), None)
    if k is None:
        ident = identity_map(c)
        return c, ident, ident
    spec = c.spec
    obj = c.objects[k]
    old = obj.tangle
    L = old.loops - 1
    new_tangle = FlatTangle(old.top, old.bot, old.pairs, L)

    def persistent(extra):
        comps = [({("s", i), ("t", i)}, 0, 0) for i in range(len(old.pairs))]
        comps += [({("sl", j), ("tl", j)}, 0, 0) for j in range(L)]
        return comps + extra

    alpha_dot = normalize(old, new_tangle, persistent([({("sl", L)}, 0, 1)]), spec)
    alpha_plain = normalize(old, new_tangle, persistent([({("sl", L)}, 0, 0)]), spec)
    beta_plain = normalize(new_tangle, old, persistent([({("tl", L)}, 0, 0)]), spec)
    beta_dot = normalize(new_tangle, old, persistent([({("tl", L)}, 0, 1)]), spec)
    beta_minus = beta_dot - beta_plain.scale(spec.h_elem)

    objects = list(c.objects[:k])
    objects.append(GradedObject(new_tangle, obj.qshift + 1, obj.tdeg))
    objects.append(GradedObject(new_tangle, obj.qshift - 1, obj.tdeg))
    objects.extend(c.objects[k + 1:])

    def idx(i):
        return i if i < k else i + 1

    diff = {}
    for (ti, si), v in c.diff.items():
        if si == k:
            diff[(idx(ti), k)] = compose_vertical(beta_plain, v, spec)
            diff[(idx(ti), k + 1)] = compose_vertical(beta_minus, v, spec)
        elif ti == k:
            diff[(k, idx(si))] = compose_vertical(v, alpha_dot, spec)
            diff[(k + 1, idx(si))] = compose_vertical(v, alpha_plain, spec)
        else:
            diff[(idx(ti), idx(si))] = v
    new = Complex(objects, diff, spec)

    fwd_entries = {(idx(i), i): identity_coblinear(o.tangle, spec)
                   for i, o in enumerate(c.objects) if i != k}
    fwd_entries[(k, k)] = alpha_dot
    fwd_entries[(k + 1, k)] = alpha_plain
    bwd_entries = {(i, idx(i)): identity_coblinear(o.tangle, spec)
                   for i, o in enumerate(c.objects) if i != k}
    bwd_entries[(k, k)] = beta_plain
    bwd_entries[(k, k + 1)] = beta_minus
    forward = ChainMap(c, new, 0, fwd_entries)
    backward = ChainMap(new, c, 0, bwd_entries)
    return new, forward, backward


def _unit_coefficient(v: CobLinear, src: GradedObject, tgt: GradedObject):
    """+-1 if the entry is that multiple of an identity cobordism, else None."""
    if src.tangle != tgt.tangle or src.qshift != tgt.qshift:
        return None
    if src.tangle.loops != 0:
        return None
    if len(v.terms) != 1:
        return None
    dots, c = next(iter(v.terms.items()))
    if any(dots):
        return None
    if not c.is_constant() or c.as_int() not in (1, -1):
        return None
    return c.as_int()


def eliminate(c: Complex):
    """Gaussian elimination of the first unit differential entry.

    Returns (new complex, retraction, inclusion) with
    retraction . inclusion = identity of the new complex.
    """
    found = None
    for key in sorted(c.diff):
        ti, si = key
        u = _unit_coefficient(c.diff[key], c.objects[si], c.objects[ti])
        if u is not None:
            found = (ti, si, u)
            break
    if found is None:
        ident = identity_map(c)
        return c, ident, ident
    ti, si, u = found
    spec = c.spec
    removed = {ti, si}
    keep = [i for i in range(len(c.objects)) if i not in removed]
    new_index = {old: new for new, old in enumerate(keep)}
    objects = [c.objects[i] for i in keep]

    into_i = {s0: v for (t0, s0), v in c.diff.items() if t0 == ti and s0 != si}
    outof_j = {t0: v for (t0, s0), v in c.diff.items() if s0 == si and t0 != ti}

    diff = {}
    for (t0, s0), v in c.diff.items():
        if t0 in removed or s0 in removed:
            continue
        diff[(new_index[t0], new_index[s0])] = v
    for s0, va in into_i.items():
        for t0, vb in outof_j.items():
            key = (new_index[t0], new_index[s0])
            corr = compose_vertical(va, vb, spec).scale(-u)
            diff[key] = diff[key] + corr if key in diff else corr
    new = Complex(objects, diff, spec)

    retr = {(new_index[i], i): identity_coblinear(c.objects[i].tangle, spec)
            for i in keep}
    for t0, vb in outof_j.items():
        retr[(new_index[t0], ti)] = vb.scale(-u)
    incl = {(i, new_index[i]): identity_coblinear(c.objects[i].tangle, spec)
            for i in keep}
    for s0, va in into_i.items():
        incl[(si, new_index[s0])] = va.scale(-u)
    retraction = ChainMap(c, new, 0, retr)
    inclusion = ChainMap(new, c, 0, incl)
    return new, retraction, inclusion


def simplify(c: Complex, maps: bool = True):
    """Deloop + eliminate to a fixpoint, tracking the homotopy equivalence.

    Returns (reduced, to_reduced, from_reduced); with maps=False the two
    equivalence maps are skipped (returned as None) for speed.
    """
    to_red = identity_map(c) if maps else None
    from_red = identity_map(c) if maps else None
    cur = c
    while True:
        if any(o.tangle.loops > 0 for o in cur.objects):
            cur, fwd, bwd = deloop(cur)
            if maps:
                to_red = compose_maps(fwd, to_red)
                from_red = compose_maps(from_red, bwd)
            continue
        nxt, retr, incl = eliminate(cur)
        if nxt is cur:
            break
        cur = nxt
        if maps:
            to_red = compose_maps(retr, to_red)
            from_red = compose_maps(from_red, incl)
    return cur, to_red, from_red


def dual(c: Complex) -> Complex:
    """Reverse t-degree, negate q-shifts, reflect objects and entries."""
    objects = [GradedObject(reflect(o.tangle), -o.qshift, -o.tdeg) for o in c.objects]
    diff = {}
    for (ti, si), v in c.diff.items():
        diff[(si, ti)] = reflect_cob(v, c.spec)
    return Complex(objects, diff, c.spec)


# ---------------------------------------------------------------------------
# Hom complexes


@dataclass
class HomComplex:
    """The complex of graded maps E -> F over the empty tangle.

    basis[p] = (i, j, dots): the normalized generator E_i -> F_j with the
    given dot pattern; complex.objects[p] records its (tdeg, qdeg).
    """

    complex: Complex
    basis: tuple
    index: dict
    E: Complex
    F: Complex


def hom_complex(E: Complex, F: Complex) -> HomComplex:
    assert E.spec == F.spec
    spec = E.spec
    basis = []
    for i, eo in enumerate(E.objects):
        for j, fo in enumerate(F.objects):
            circles = trace_circles(eo.tangle, fo.tangle)
            for bits in _all_bits(len(circles)):
                basis.append((i, j, bits))
    index = {b: p for p, b in enumerate(basis)}
    objects = []
    for (i, j, bits) in basis:
        eo, fo = E.objects[i], F.objects[j]
        gen = CobGenerator(eo.tangle, fo.tangle, bits)
        objects.append(GradedObject(EMPTY, gen.degree(fo.qshift, eo.qshift),
                                    fo.tdeg - eo.tdeg))
    F_by_src = {}
    for (t2, s2), v in F.diff.items():
        F_by_src.setdefault(s2, []).append((t2, v))
    E_by_tgt = {}
    for (t2, s2), v in E.diff.items():
        E_by_tgt.setdefault(t2, []).append((s2, v))

    diff = {}

    def add(qp, pp, c):
        key = (qp, pp)
        entry = CobLinear(EMPTY, EMPTY, {(): c})
        diff[key] = diff[key] + entry if key in diff else entry

    for p, (i, j, bits) in enumerate(basis):
        g = CobLinear(E.objects[i].tangle, F.objects[j].tangle,
                      {bits: RingElem.one()})
        ell = objects[p].tdeg
        sign = RingElem.const(-1 if ell % 2 == 0 else 1)  # (-1)^{ell+1}
        for j2, v in F_by_src.get(j, ()):
            h = compose_vertical(g, v, spec)
            for bits2, c in h.terms.items():
                add(index[(i, j2, bits2)], p, c)
        for i2, v in E_by_tgt.get(i, ()):
            h = compose_vertical(v, g, spec)
            for bits2, c in h.terms.items():
                add(index[(i2, j, bits2)], p, c * sign)

    return HomComplex(Complex(objects, diff, spec), tuple(basis), index, E, F)


def _all_bits(k: int):
    if k == 0:
        return [()]
    return [(b,) + rest for b in (0, 1) for rest in _all_bits(k - 1)]


def chainmap_vector(f: ChainMap, hc: HomComplex) -> dict:
    """Coordinates of f in the hom-complex basis (plain mode: integers)."""
    out = {}
    for (ti, si), v in f.entries.items():
        for dots, c in v.terms.items():
            out[hc.index[(si, ti, dots)]] = c.as_int()
    return out


def vector_chainmap(x: dict, hc: HomComplex, tshift: int) -> ChainMap:
    entries = {}
    for p, c in x.items():
        if not c:
            continue
        i, j, dots = hc.basis[p]
        key = (j, i)
        add = CobLinear(hc.E.objects[i].tangle, hc.F.objects[j].tangle,
                        {dots: RingElem.const(c)})
        entries[key] = entries[key] + add if key in entries else add
    return ChainMap(hc.E, hc.F, tshift, entries)


def nullhomotopy(f: ChainMap, hc: HomComplex = None):
    """Solve delta H = f over the integers; None when no solution exists.

    Plain mode only.  hc may be passed in to reuse a prebuilt hom complex.
    """
    from .homology import solve_integer

    spec = f.source.spec
    if spec.mode != "plain":
        raise ValueError("nullhomotopy is supported in plain (Z) mode only")
    if hc is None:
        hc = hom_complex(f.source, f.target)
    v = chainmap_vector(f, hc)
    ell = f.tshift
    rows = [p for p, o in enumerate(hc.complex.objects) if o.tdeg == ell]
    cols = [p for p, o in enumerate(hc.complex.objects) if o.tdeg == ell - 1]
    rpos = {p: a for a, p in enumerate(rows)}
    cpos = {p: a for a, p in enumerate(cols)}
    mat = [[0] * len(cols) for _ in rows]
    for (qp, pp), entry in hc.complex.diff.items():
        if pp in cpos and qp in rpos:
            mat[rpos[qp]][cpos[pp]] = entry.terms.get((), RingElem.zero()).as_int()
    b = [0] * len(rows)
    for p, c in v.items():
        if p not in rpos:
            if c:
                raise ValueError("map does not live in a single tdeg")
        else:
            b[rpos[p]] = c
    x = solve_integer(mat, b)
    if x is None:
        return None
    return vector_chainmap({cols[a]: xa for a, xa in enumerate(x)}, hc, ell - 1)


@dataclass
class HomotopyVerdict:
    verdict: str  # plus | minus | no
    homotopy: object  # ChainMap | None
    literally_equal: bool = False


def homotopic_up_to_sign(f: ChainMap, g: ChainMap, hc: HomComplex = None) -> HomotopyVerdict:
    if f.tshift != g.tshift:
        raise ValueError("bidegree mismatch")
    d = f - g
    if not d:
        return HomotopyVerdict("plus", None, literally_equal=True)
    if hc is None:
        hc = hom_complex(f.source, f.target)
    h = nullhomotopy(d, hc)
    if h is not None:
        return HomotopyVerdict("plus", h)
    h = nullhomotopy(f + g, hc)
    if h is not None:
        return HomotopyVerdict("minus", h)
    return HomotopyVerdict("no", None)
