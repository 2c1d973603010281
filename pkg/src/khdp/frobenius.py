"""The coefficient engine.

Two Frobenius algebras drive everything downstream:

* plain mode: V = Z[X]/(X^2) with counit eps(1) = 0, eps(X) = 1 and
  coproduct D(1) = 1@X + X@1, D(X) = X@X.
* equivariant mode: A = R[X]/(X^2 - hX - t) over R = Z[h,t], with the same
  counit, D(1) = 1@X + X@1 - h 1@1 and D(X) = X@X + t 1@1.

Gradings: |X|_q = -2, |h|_q = -2, |t|_q = -4.  Plain mode is the quotient
h = t = 0, and every formula below is written uniformly so that this holds
by construction.
"""

from __future__ import annotations

from dataclasses import dataclass


class RingElem:
    """Sparse integer polynomial in the two degree generators h and t.

    Keys are monomials (i, j) standing for h^i t^j; values are nonzero ints.
    Instances are treated as immutable.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for mono, c in items:
                if c:
                    c0 = data.get(mono, 0) + c
                    if c0:
                        data[mono] = c0
                    elif mono in data:
                        del data[mono]
        self.coeffs = data
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: int) -> "RingElem":
        return RingElem({(0, 0): c})

    @staticmethod
    def zero() -> "RingElem":
        return RingElem()

    @staticmethod
    def one() -> "RingElem":
        return RingElem.const(1)

    @staticmethod
    def h() -> "RingElem":
        return RingElem({(1, 0): 1})

    @staticmethod
    def t() -> "RingElem":
        return RingElem({(0, 1): 1})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RingElem") -> "RingElem":
        data = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            data[mono] = data.get(mono, 0) + c
        return RingElem(data.items())

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __neg__(self) -> "RingElem":
        return RingElem({m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElem({m: c * other for m, c in self.coeffs.items()})
        data = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                mono = (i1 + i2, j1 + j2)
                data[mono] = data.get(mono, 0) + c1 * c2
        return RingElem(data.items())

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RingElem.const(other)
        return isinstance(other, RingElem) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    # -- queries -----------------------------------------------------------

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.coeffs)

    def as_int(self) -> int:
        """The integer value of a constant element (raises otherwise)."""
        if not self.coeffs:
            return 0
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.coeffs[(0, 0)]

    def qdegrees(self) -> set:
        """q-degrees of the monomials present (|h| = -2, |t| = -4)."""
        return {-2 * i - 4 * j for (i, j) in self.coeffs}

    def qdegree(self) -> int:
        """The q-degree of a homogeneous element (0 for the zero element)."""
        degs = self.qdegrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous ring element: {self}")
        return degs.pop()

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeffs.items()):
            mono = "h^%d" % i if i > 1 else ("h" if i else "")
            mono += "t^%d" % j if j > 1 else ("t" if j else "")
            if mono:
                s = {1: "", -1: "-"}.get(c, str(c))
                parts.append(s + mono)
            else:
                parts.append(str(c))
        return "+".join(parts).replace("+-", "-")


@dataclass(frozen=True)
class AlgebraElem:
    """c1*1 + cx*X with RingElem coefficients."""

    c1: RingElem
    cx: RingElem

    @staticmethod
    def one() -> "AlgebraElem":
        return AlgebraElem(RingElem.one(), RingElem.zero())

    @staticmethod
    def x() -> "AlgebraElem":
        return AlgebraElem(RingElem.zero(), RingElem.one())

    @staticmethod
    def zero() -> "AlgebraElem":
        return AlgebraElem(RingElem.zero(), RingElem.zero())

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        return AlgebraElem(self.c1 + other.c1, self.cx + other.cx)

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        return AlgebraElem(self.c1 - other.c1, self.cx - other.cx)

    def __neg__(self) -> "AlgebraElem":
        return AlgebraElem(-self.c1, -self.cx)

    def scale(self, r: RingElem) -> "AlgebraElem":
        return AlgebraElem(self.c1 * r, self.cx * r)

    def __bool__(self) -> bool:
        return bool(self.c1) or bool(self.cx)

    def __repr__(self):
        return f"({self.c1})*1 + ({self.cx})*X"


class FrobeniusSpec:
    """Selects one of the two supported Frobenius algebras.

    The two distinguished instances are PLAIN and EQUIVARIANT below; plain
    mode is literally the equivariant one with the generators h, t set to 0,
    which the attributes h_elem / t_elem implement.
    """

    __slots__ = ("mode", "h_elem", "t_elem")

    def __init__(self, mode: str):
        if mode not in ("plain", "equivariant"):
            raise ValueError(f"unknown mode {mode!r}")
        object.__setattr__(self, "mode", mode)
        zero = RingElem.zero()
        object.__setattr__(self, "h_elem", RingElem.h() if mode == "equivariant" else zero)
        object.__setattr__(self, "t_elem", RingElem.t() if mode == "equivariant" else zero)

    def __setattr__(self, *a):
        raise AttributeError("FrobeniusSpec is immutable")

    def __repr__(self):
        return f"FrobeniusSpec({self.mode})"

    def __eq__(self, other):
        return isinstance(other, FrobeniusSpec) and self.mode == other.mode

    def __hash__(self):
        return hash(self.mode)


PLAIN = FrobeniusSpec("plain")
EQUIVARIANT = FrobeniusSpec("equivariant")


def multiply(a: AlgebraElem, b: AlgebraElem, spec: FrobeniusSpec) -> AlgebraElem:
    """Product in the algebra; X*X = hX + t (0 in plain mode)."""
    xx = a.cx * b.cx
    return AlgebraElem(
        a.c1 * b.c1 + xx * spec.t_elem,
        a.c1 * b.cx + a.cx * b.c1 + xx * spec.h_elem,
    )


def comultiply(a: AlgebraElem, spec: FrobeniusSpec):
    """The coproduct, returned grouped by the first tensor factor.

    The result is a two-element list [(1, z0), (X, z1)] of (basis element,
    AlgebraElem) pairs meaning D(a) = 1 @ z0 + X @ z1.  Explicitly
    D(1) = 1@X + X@1 - h 1@1 and D(X) = X@X + t 1@1.
    """
    # D(a) for a = c1*1 + cx*X, grouped by first factor:
    #   1 @ (c1*X + (t*cx - h*c1)*1)  +  X @ (c1*1 + cx*X)
    z0 = AlgebraElem(spec.t_elem * a.cx - spec.h_elem * a.c1, a.c1)
    z1 = AlgebraElem(a.c1, a.cx)
    return [(AlgebraElem.one(), z0), (AlgebraElem.x(), z1)]


def counit(a: AlgebraElem) -> RingElem:
    """eps(1) = 0, eps(X) = 1, extended linearly."""
    return a.cx


def unit(r: RingElem) -> AlgebraElem:
    """iota(r) = r * 1."""
    return AlgebraElem(r, RingElem.zero())


def handle_elem(spec: FrobeniusSpec) -> AlgebraElem:
    """m(D(1)) = 2X - h: the value of a handle attached to a sheet."""
    return AlgebraElem(-spec.h_elem, RingElem.const(2))


def handle(a: AlgebraElem, spec: FrobeniusSpec) -> AlgebraElem:
    """The genus-normalization operator m . D = multiplication by 2X - h."""
    return multiply(a, handle_elem(spec), spec)


def deloop_alpha(a: AlgebraElem, spec: FrobeniusSpec):
    """alpha(z) = (eps(Xz), eps(z)): A -> qR + q^{-1}R."""
    return (counit(multiply(AlgebraElem.x(), a, spec)), counit(a))


def deloop_beta(pair, spec: FrobeniusSpec) -> AlgebraElem:
    """beta(z1, z2) = z1*iota(1) + z2*(iota(X) - h*iota(1))."""
    z1, z2 = pair
    return AlgebraElem(z1 - spec.h_elem * z2, z2)


def power_x(dots: int, genus: int, spec: FrobeniusSpec) -> AlgebraElem:
    """(2X - h)^genus * X^dots — the algebra value of a dotted genus-g sheet."""
    out = AlgebraElem.one()
    for _ in range(dots):
        out = multiply(out, AlgebraElem.x(), spec)
    he = handle_elem(spec)
    for _ in range(genus):
        out = multiply(out, he, spec)
    return out
