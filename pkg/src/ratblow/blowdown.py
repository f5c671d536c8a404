"""Rational blow-down bookkeeping: chain validation, surgered invariants,
and first homology via meridian presentations.

Given a surface Z and disjoint Wahl chains in it, replacing tubular
neighborhoods of the chains by rational homology balls changes the
numerical invariants by

    e -> e - l,   sigma -> sigma + l,   b2 -> b2 - l

per chain of length l, and H_1 of the result is presented on one meridian
generator per chain curve.  The relations are one row per lattice basis
class beta in (H, e_1, ..., e_N), with entries pair(beta, C_j), plus one
row n * (first-curve meridian) for every chain whose neighborhood is
actually replaced by the ball B_{n,a} (H_1 of the ball is Z/n and the
first-curve meridian generates the boundary's Z/n^2).

Chains whose neighborhoods are removed without gluing a ball back in
("excised") contribute generators but no ball row; that is how the
intermediate manifold W = Z_0 + one ball is presented.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hj
from .hj import LensBoundary, MeridianData, WahlParams
from .surface import DivisorClass, MarkedSurface
from .zlinalg import AbelianGroup, CokernelElement, IntMatrix, class_of, cokernel


class ChainError(ValueError):
    """A chain failed validation; the message names curve and check."""


class BlowdownError(ValueError):
    """Inconsistent blow-down request (crossing chains, bad invariants)."""


@dataclass(frozen=True)
class ChainSpec:
    """An ordered list of curve names expected to form a linear chain."""

    name: str
    curves: tuple

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        if not self.curves:
            raise ChainError("chain %r is empty" % self.name)
        if len(set(self.curves)) != len(self.curves):
            raise ChainError("chain %r repeats a curve" % self.name)


@dataclass(frozen=True)
class DisjointVerdict:
    """Result of a pairwise disjointness check; falsy when chains cross."""

    disjoint: bool
    violation: tuple = None  # (chain_a, curve_a, chain_b, curve_b, pairing)

    def __bool__(self):
        return self.disjoint


@dataclass(frozen=True)
class FourManifoldInvariants:
    """Numerical invariants of a closed 4-manifold candidate."""

    e: int
    sigma: int
    b2: int
    b2_plus: int
    k2: int
    chi_h: int


@dataclass(frozen=True)
class BlowdownConfig:
    """A surface with chains to blow down and chains to merely excise."""

    surface: MarkedSurface
    blowdown_chains: tuple
    excised_chains: tuple = ()

    def all_chains(self):
        return tuple(self.blowdown_chains) + tuple(self.excised_chains)


@dataclass(frozen=True)
class H1Presentation:
    """Meridian presentation of H_1 of the blown-down / excised manifold.

    Generators are meridians of every chain curve, ordered chain by chain
    (blown-down chains first); ``generators`` lists (chain, curve) labels.
    """

    generators: tuple
    relations: IntMatrix
    chains: tuple          # per-chain (name, WahlParams, MeridianData)

    def generator_index(self, chain_name: str, curve_name: str) -> int:
        for i, (cn, curve) in enumerate(self.generators):
            if cn == chain_name and curve == curve_name:
                return i
        raise BlowdownError("no meridian generator for %r in chain %r"
                            % (curve_name, chain_name))

    def unit_vector(self, chain_name: str, curve_name: str):
        v = [0] * len(self.generators)
        v[self.generator_index(chain_name, curve_name)] = 1
        return v


def chain_string(surface: MarkedSurface, chain: ChainSpec) -> list:
    """[b_1, ..., b_l] with b_i = -C_i^2, unvalidated."""
    return [-surface.self_int(name) for name in chain.curves]


def validate_chain(surface: MarkedSurface, chain: ChainSpec) -> WahlParams:
    """Check a chain is a Wahl configuration and return its (n, a).

    Checks run in order: every curve rational (g_a = 0), every
    self-intersection <= -2, consecutive curves meet once and distant ones
    not at all, and the resulting string is a Wahl chain.
    """
    for name in chain.curves:
        surface.curve(name)
    for name in chain.curves:
        g = surface.genus_a(name)
        if g != 0:
            raise ChainError("chain %s: curve %r has arithmetic genus %d, not 0"
                             % (chain.name, name, g))
    bs = chain_string(surface, chain)
    for name, b in zip(chain.curves, bs):
        if b < 2:
            raise ChainError("chain %s: curve %r has self-intersection %d > -2"
                             % (chain.name, name, -b))
    k = len(chain.curves)
    for i in range(k):
        for j in range(i + 1, k):
            got = surface.pair(chain.curves[i], chain.curves[j])
            want = 1 if j == i + 1 else 0
            if got != want:
                raise ChainError("chain %s: curves %r and %r pair %d, expected %d"
                                 % (chain.name, chain.curves[i], chain.curves[j],
                                    got, want))
    w = hj.recognize_wahl(bs)
    if w is None:
        f = hj.hj_value(bs)
        raise ChainError("chain %s: string %r has value %s, not of Wahl type"
                         % (chain.name, bs, f))
    return w


def chains_disjoint(surface: MarkedSurface, chains) -> DisjointVerdict:
    """True when every cross-chain curve pairing vanishes."""
    chains = list(chains)
    for i, ca in enumerate(chains):
        for cb in chains[i + 1:]:
            shared = set(ca.curves) & set(cb.curves)
            if shared:
                name = sorted(shared)[0]
                return DisjointVerdict(False, (ca.name, name, cb.name, name, None))
            for a in ca.curves:
                for b in cb.curves:
                    p = surface.pair(a, b)
                    if p != 0:
                        return DisjointVerdict(False, (ca.name, a, cb.name, b, p))
    return DisjointVerdict(True)


def blowdown_invariants(surface: MarkedSurface, chains) -> FourManifoldInvariants:
    """Invariants after replacing every chain neighborhood by its ball."""
    chains = list(chains)
    for c in chains:
        validate_chain(surface, c)
    verdict = chains_disjoint(surface, chains)
    if not verdict:
        raise BlowdownError("chains cross: %r" % (verdict.violation,))
    e, sigma, b2, _ = surface.invariants()
    total = sum(len(c.curves) for c in chains)
    e -= total
    sigma += total
    b2 -= total
    if (b2 + sigma) % 2:
        raise BlowdownError("b2 + sigma odd; no almost-complex candidate")
    k2 = 2 * e + 3 * sigma
    if (e + sigma) % 4:
        raise BlowdownError("e + sigma = %d not divisible by 4; "
                            "holomorphic Euler characteristic not integral"
                            % (e + sigma))
    return FourManifoldInvariants(e=e, sigma=sigma, b2=b2,
                                  b2_plus=(b2 + sigma) // 2,
                                  k2=k2, chi_h=(e + sigma) // 4)


def h1_presentation(cfg: BlowdownConfig) -> H1Presentation:
    """Meridian presentation of H_1 for a blow-down/excision configuration."""
    surface = cfg.surface
    chains = cfg.all_chains()
    meta = []
    for c in chains:
        w = validate_chain(surface, c)
        meta.append((c.name, w, hj.meridian_coefficients(chain_string(surface, c))))
    verdict = chains_disjoint(surface, chains)
    if not verdict:
        raise BlowdownError("chains cross: %r" % (verdict.violation,))

    generators = tuple((c.name, curve) for c in chains for curve in c.curves)
    curve_classes = [surface.class_of(curve) for c in chains for curve in c.curves]

    rows = []
    for i in range(surface.rank):
        beta = [0] * surface.rank
        beta[i] = 1
        beta = DivisorClass(tuple(beta))
        rows.append([beta.pair(cc) for cc in curve_classes])
    offset = 0
    for c, (_, w, _) in zip(chains, meta):
        if c in cfg.blowdown_chains:
            row = [0] * len(generators)
            row[offset] = w.n
            rows.append(row)
        offset += len(c.curves)

    relations = IntMatrix.from_rows(rows) if rows else IntMatrix.zeros(0, len(generators))
    return H1Presentation(generators=generators, relations=relations,
                          chains=tuple(meta))


def h1(cfg: BlowdownConfig) -> AbelianGroup:
    """First homology of the blow-down (cokernel of the presentation)."""
    pres = h1_presentation(cfg)
    if not pres.generators:
        return AbelianGroup(0, ())
    return cokernel(pres.relations)


def meridian_image(cfg: BlowdownConfig, chain_name: str, curve_name: str) -> CokernelElement:
    """Image of one curve's meridian in H_1 of the configuration."""
    pres = h1_presentation(cfg)
    return class_of(pres.unit_vector(chain_name, curve_name), pres.relations)


def boundary_lens(surface: MarkedSurface, chain: ChainSpec) -> LensBoundary:
    """Both orientation forms of the lens space bounding the chain plumbing."""
    validate_chain(surface, chain)
    return hj.lens_boundary(chain_string(surface, chain))


def boundary_image(surface: MarkedSurface, divisor, chain: ChainSpec) -> int:
    """Residue mod p of a class in H_1 of the chain's boundary lens space.

    Measured against the first-curve meridian alpha: the image of the
    divisor is sum_j pair(D, C_j) c_j mod p with c_j the meridian
    coefficients and p the chain's continued-fraction numerator.
    """
    validate_chain(surface, chain)
    data = hj.meridian_coefficients(chain_string(surface, chain))
    d = surface.class_of(divisor)
    total = sum(d.pair(surface.class_of(name)) * c
                for name, c in zip(chain.curves, data.coefficients))
    return total % data.order
