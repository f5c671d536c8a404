"""Picard-lattice blow-up calculus on iterated blow-ups of the plane.

A :class:`MarkedSurface` records a history of N blow-ups of P^2 together
with a table of named curves.  Divisor classes are integer vectors over
the basis (H, e_1, ..., e_N), where e_i is the total-transform class of
the i-th exceptional curve, with the intersection form diag(1, -1, ..., -1).

Incidence is tracked purely at the lattice level: a blow-up center names
the curves it lies on, validity is the lattice condition that every pair
of named curves still has positive pairing (at least 2 for a node), and
tangency is modeled by consecutive centers listing the same curves.
Direct multiplicity > 1 on a smooth curve is not supported.

Surfaces are immutable; ``blow_up`` and the add-curve operations return
new surfaces, so exploration can branch freely without copying state.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class SurfaceError(ValueError):
    """Base for curve-table and blow-up validity errors."""


class CurveError(SurfaceError):
    """Invalid curve insertion (duplicate name, impossible genus/budget)."""


class CenterError(SurfaceError):
    """Invalid blow-up center; the message names the failing precondition."""


@dataclass(frozen=True)
class DivisorClass:
    """Integer class vector (H; e_1, ..., e_N) under diag(1, -1, ..., -1)."""

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs) -> "DivisorClass":
        return cls(tuple(int(x) for x in coeffs))

    def pair(self, other: "DivisorClass") -> int:
        if len(self.coeffs) != len(other.coeffs):
            raise SurfaceError("classes live on different surfaces "
                               "(lengths %d and %d)" % (len(self.coeffs), len(other.coeffs)))
        a, b = self.coeffs, other.coeffs
        return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))

    def __add__(self, other):
        return DivisorClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return DivisorClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivisorClass(tuple(-x for x in self.coeffs))

    def extended(self, by=1) -> "DivisorClass":
        return DivisorClass(self.coeffs + (0,) * by)

    def __str__(self):
        names = ["H"] + ["e%d" % i for i in range(1, len(self.coeffs))]
        parts = []
        for c, n in zip(self.coeffs, names):
            if not c:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(("- " if c < 0 else ("+ " if parts else "")) + mag + n)
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CurveRecord:
    """A named curve: its class and how many nodes it still carries."""

    name: str
    cls: DivisorClass
    node_budget: int


@dataclass(frozen=True)
class CenterSpec:
    """A blow-up center: the new exceptional label and what it lies on.

    ``on`` lists curves passing simply (multiplicity 1); ``node_of`` names
    at most one curve with a node at the center (multiplicity 2).
    """

    label: str
    on: tuple = ()
    node_of: str = None

    def __post_init__(self):
        object.__setattr__(self, "on", tuple(self.on))
        if self.node_of is not None and self.node_of in self.on:
            raise CenterError("curve %r cannot be both simple and nodal at a center"
                              % self.node_of)


@dataclass(frozen=True)
class MarkedSurface:
    """An iterated blow-up of P^2 with a table of named curves."""

    n_blowups: int
    labels: tuple                      # exceptional labels, creation order
    curves: tuple                      # CurveRecord, insertion order
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index",
                           {c.name: i for i, c in enumerate(self.curves)})

    # -- basic queries ---------------------------------------------------

    @property
    def rank(self) -> int:
        return 1 + self.n_blowups

    def canonical_class(self) -> DivisorClass:
        return DivisorClass((-3,) + (1,) * self.n_blowups)

    def hyperplane_class(self) -> DivisorClass:
        return DivisorClass((1,) + (0,) * self.n_blowups)

    def exceptional_class(self, label: str) -> DivisorClass:
        """Total-transform class e_i of the blow-up that created ``label``."""
        try:
            i = self.labels.index(label)
        except ValueError:
            raise SurfaceError("no blow-up labeled %r" % label) from None
        v = [0] * self.rank
        v[1 + i] = 1
        return DivisorClass(tuple(v))

    def has_curve(self, name: str) -> bool:
        return name in self._index

    def curve(self, name: str) -> CurveRecord:
        try:
            return self.curves[self._index[name]]
        except KeyError:
            raise SurfaceError("unknown curve %r" % name) from None

    def class_of(self, obj) -> DivisorClass:
        """Resolve a curve name or pass a class through, length-checked."""
        if isinstance(obj, DivisorClass):
            if len(obj.coeffs) != self.rank:
                raise SurfaceError("class has length %d, surface rank is %d"
                                   % (len(obj.coeffs), self.rank))
            return obj
        return self.curve(obj).cls

    def curve_names(self):
        return tuple(c.name for c in self.curves)

    # -- intersection theory ----------------------------------------------

    def pair(self, a, b) -> int:
        return self.class_of(a).pair(self.class_of(b))

    def self_int(self, a) -> int:
        c = self.class_of(a)
        return c.pair(c)

    def genus_a(self, a) -> int:
        """Arithmetic genus 1 + (C^2 + C.K)/2."""
        c = self.class_of(a)
        return 1 + (c.pair(c) + c.pair(self.canonical_class())) // 2

    def invariants(self):
        """(e, sigma, b2, K^2) of the underlying 4-manifold."""
        n = self.n_blowups
        return (3 + n, 1 - n, 1 + n, 9 - n)

    # -- construction ----------------------------------------------------

    def _with_curve(self, record: CurveRecord) -> "MarkedSurface":
        if record.name in self._index:
            raise CurveError("curve %r already exists" % record.name)
        return MarkedSurface(self.n_blowups, self.labels, self.curves + (record,))

    def add_plane_curve(self, name: str, degree: int) -> "MarkedSurface":
        """Record a plane curve of given degree; only valid before blow-ups.

        The node budget is the arithmetic genus (d-1)(d-2)/2 of the degree.
        """
        if self.n_blowups:
            raise CurveError("cannot add %r by degree after blow-ups; "
                             "give an explicit class" % name)
        if degree < 1:
            raise CurveError("degree must be >= 1")
        cls = DivisorClass((degree,) + (0,) * self.n_blowups)
        budget = (degree - 1) * (degree - 2) // 2
        return self._with_curve(CurveRecord(name, cls, budget))

    def add_class_curve(self, name: str, cls, node_budget: int = 0) -> "MarkedSurface":
        """Record a curve by explicit class; budget may not exceed its genus."""
        if not isinstance(cls, DivisorClass):
            cls = DivisorClass.from_coeffs(cls)
        if len(cls.coeffs) != self.rank:
            raise CurveError("class for %r has length %d, expected %d"
                             % (name, len(cls.coeffs), self.rank))
        g = self.genus_a(cls)
        if g < 0:
            raise CurveError("class for %r has negative arithmetic genus %d" % (name, g))
        if node_budget < 0 or node_budget > g:
            raise CurveError("node budget %d for %r exceeds arithmetic genus %d"
                             % (node_budget, name, g))
        return self._with_curve(CurveRecord(name, cls, node_budget))

    def blow_up(self, center: CenterSpec) -> "MarkedSurface":
        """Blow up a point lying simply on ``center.on`` and at the node of
        ``center.node_of``; returns the new surface.

        Validity (all at the lattice level):
          * each pair of simple curves still pairs >= 1,
          * a nodal curve has node budget >= 1 and pairs >= 2 with every
            simple curve at the center.
        """
        if center.label in self.labels:
            raise CenterError("exceptional label %r already used" % center.label)
        if center.label in self._index:
            raise CenterError("label %r collides with a curve name" % center.label)
        for name in center.on:
            self.curve(name)
        names = list(center.on)
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                if self.pair(a, b) < 1:
                    raise CenterError("curves %r and %r no longer meet "
                                      "(pairing %d)" % (a, b, self.pair(a, b)))
        if center.node_of is not None:
            nodal = self.curve(center.node_of)
            if nodal.node_budget < 1:
                raise CenterError("curve %r has no node left" % center.node_of)
            for a in names:
                if self.pair(center.node_of, a) < 2:
                    raise CenterError("curve %r does not reach the node of %r "
                                      "(pairing %d)" % (a, center.node_of,
                                                        self.pair(center.node_of, a)))

        new_curves = []
        for rec in self.curves:
            cls = rec.cls.extended()
            budget = rec.node_budget
            mult = 0
            if rec.name in center.on:
                mult = 1
            elif rec.name == center.node_of:
                mult = 2
                budget -= 1
            if mult:
                v = list(cls.coeffs)
                v[-1] = -mult
                cls = DivisorClass(tuple(v))
            new_curves.append(CurveRecord(rec.name, cls, budget))

        exc = [0] * (self.rank + 1)
        exc[-1] = 1
        new_curves.append(CurveRecord(center.label, DivisorClass(tuple(exc)), 0))
        return MarkedSurface(self.n_blowups + 1,
                             self.labels + (center.label,),
                             tuple(new_curves))


def projective_plane() -> MarkedSurface:
    """P^2 with an empty curve table: K = -3H, K^2 = 9, e = 3."""
    return MarkedSurface(0, (), ())
