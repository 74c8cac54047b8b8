"""Blocks-and-gaps combinatorics of a maximal-minor index and the canonical
trace, CTR verdict and non-Gorenstein locus of the Schubert cycle G(X; γ).

Notation follows the usual conventions for Schubert cycles: γ = [a_1..a_m]
splits into maximal runs of consecutive integers (blocks β_0..β_{t+1}) and
the runs between them (gaps χ_0..χ_t), with the sentinel a_{m+1} = n + 1.
Only the last block may touch n, and when it does it is β_{t+1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import DefectError, InputError
from .minor_poset import BiMinor, SchubertIndex


@dataclass(frozen=True)
class BlockData:
    gamma: SchubertIndex
    t: int
    boundaries: tuple[int, ...]  # k(0) .. k(t+1)
    blocks: tuple[tuple[int, ...], ...]  # β_0 .. β_{t+1}
    gaps: tuple[tuple[int, ...], ...]  # χ_0 .. χ_t

    def k(self, i: int) -> int:
        return self.boundaries[i]


@dataclass(frozen=True)
class KappaProfile:
    kappas: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.kappas) - 1

    @property
    def kappa_max(self) -> int:
        return max(self.kappas) if self.kappas else 0

    @property
    def kappa_min(self) -> int:
        return min(self.kappas) if self.kappas else 0

    @property
    def spread(self) -> int:
        return self.kappa_max - self.kappa_min

    def jumps(self) -> tuple[int, ...]:
        """Indices 1 <= i <= t with κ_i != κ_{i-1}."""
        return tuple(i for i in range(1, len(self.kappas)) if self.kappas[i] != self.kappas[i - 1])


@dataclass(frozen=True)
class Level:
    h: int
    S: tuple[int, ...]
    T: tuple[int, ...]
    U_plus: tuple[int, ...]
    U_minus: tuple[int, ...]

    @property
    def U(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.U_plus) | set(self.U_minus)))


@dataclass(frozen=True)
class BoundaryFamily:
    levels: tuple[Level, ...]

    @property
    def U(self) -> tuple[int, ...]:
        out: set[int] = set()
        for lv in self.levels:
            out.update(lv.U)
        return tuple(sorted(out))

    def level(self, h: int) -> Level:
        return self.levels[h - 1]


@dataclass(frozen=True)
class Unit:
    """The element 1 standing in for a prime marker whose defining minor is the
    top of the extended poset (the ideal is then generated by the whole interval)."""

    sign: int = 1

    def __str__(self):
        return "1"


@dataclass(frozen=True)
class PrimeMarker:
    index: int
    element: Union[SchubertIndex, BiMinor, Unit]

    @property
    def is_unit(self) -> bool:
        return isinstance(self.element, Unit)


@dataclass(frozen=True)
class TraceDescription:
    """Formal product over levels h of the intersection of the primes in factor h.
    No factors means the unit ideal."""

    factors: tuple[tuple[PrimeMarker, ...], ...]

    @property
    def is_unit_ideal(self) -> bool:
        return not self.factors

    def factor_indices(self) -> list[tuple[int, ...]]:
        return [tuple(p.index for p in f) for f in self.factors]


@dataclass(frozen=True)
class BaseRingAssumptions:
    """What is known about the coefficient ring B.

    ``base_is_ctr`` must be stated whenever B is only assumed reduced
    Cohen-Macaulay; a Gorenstein B is CTR automatically.  The two tokens
    are opaque labels for the defining ideal of the non-Gorenstein locus of B
    and for the canonical trace of B.
    """

    gorenstein_normal_domain: bool = True
    reduced_cm_with_canonical: bool = False
    base_is_ctr: Optional[bool] = None
    nongorenstein_token: str = "a"
    trace_token: str = "tr_B(omega_B)"

    def __post_init__(self):
        if not (self.gorenstein_normal_domain or self.reduced_cm_with_canonical):
            raise InputError("base ring must be a Gorenstein normal domain or reduced Cohen-Macaulay with canonical module")
        if self.gorenstein_normal_domain and self.base_is_ctr is False:
            raise InputError("a Gorenstein base ring is CTR; base_is_ctr=False contradicts it")
        if not self.gorenstein_normal_domain and self.base_is_ctr is None:
            raise InputError("base_is_ctr must be given when the base is only reduced Cohen-Macaulay")

    @property
    def is_gorenstein(self) -> bool:
        return self.gorenstein_normal_domain

    @property
    def ctr(self) -> bool:
        return self.gorenstein_normal_domain or bool(self.base_is_ctr)


GORENSTEIN_BASE = BaseRingAssumptions()


def block_decompose(gamma: SchubertIndex) -> BlockData:
    a, n = gamma.cols, gamma.n
    runs: list[list[int]] = [[a[0]]]
    for x in a[1:]:
        if x == runs[-1][-1] + 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    if runs[-1][-1] == n:
        blocks = [tuple(r) for r in runs]
    else:
        blocks = [tuple(r) for r in runs] + [()]
    t = len(blocks) - 2
    bounds = [0]
    for b in blocks[:-1]:
        bounds.append(bounds[-1] + len(b))
    gaps = []
    for i in range(t + 1):
        lo = gamma.a(bounds[i + 1]) + 1
        hi = gamma.a(bounds[i + 1] + 1) - 1
        if lo > hi:
            raise DefectError(f"empty gap χ_{i} for {gamma}")
        gaps.append(tuple(range(lo, hi + 1)))
    return BlockData(gamma, t, tuple(bounds), tuple(blocks), tuple(gaps))


def kappa_profile(bd: BlockData) -> KappaProfile:
    t = bd.t
    bsz = [len(b) for b in bd.blocks]
    gsz = [len(g) for g in bd.gaps]
    return KappaProfile(tuple(sum(bsz[: i + 1]) + sum(gsz[i:]) for i in range(t + 1)))


def zeta_sigma(bd: BlockData) -> tuple[list[SchubertIndex], list[SchubertIndex]]:
    """ζ_0..ζ_t and σ_1..σ_t.

    ζ_i raises the last entry of β_i by one.  σ_i removes the last entry of
    β_{i-1} and extends β_i upward by one.
    """
    gamma, t = bd.gamma, bd.t
    a = list(gamma.cols)
    zetas = []
    for i in range(t + 1):
        pos = bd.k(i + 1) - 1
        c = a.copy()
        c[pos] += 1
        zetas.append(SchubertIndex(tuple(c), gamma.ambient))
    sigmas = []
    for i in range(1, t + 1):
        drop = bd.k(i) - 1
        new = a[bd.k(i + 1) - 1] + 1
        c = a[:drop] + a[drop + 1 : bd.k(i + 1)] + [new] + a[bd.k(i + 1) :]
        sigmas.append(SchubertIndex(tuple(c), gamma.ambient))
    return zetas, sigmas


def boundary_family(kp: KappaProfile) -> BoundaryFamily:
    kappa, t = kp.kappa_max, kp.t
    levels = []
    for h in range(1, kp.spread + 1):
        S = tuple(i for i in range(t + 1) if kappa - kp.kappas[i] >= h)
        T = tuple(i for i in range(t + 1) if kappa - kp.kappas[i] < h)
        Sset = set(S)
        up = tuple(i for i in range(1, t + 1) if i in Sset and (i - 1) not in Sset)
        um = tuple(i for i in range(1, t + 1) if i not in Sset and (i - 1) in Sset)
        lv = Level(h, S, T, up, um)
        if not lv.U:
            raise DefectError(f"level {h} has no boundary indices for κ = {kp.kappas}")
        levels.append(lv)
    fam = BoundaryFamily(tuple(levels))
    if set(fam.U) != set(kp.jumps()):
        raise DefectError(f"boundary union {fam.U} differs from jump set {kp.jumps()}")
    return fam


def canonical_class(gamma: SchubertIndex) -> list[tuple[int, SchubertIndex]]:
    bd = block_decompose(gamma)
    kp = kappa_profile(bd)
    zetas, _ = zeta_sigma(bd)
    return list(zip(kp.kappas, zetas))


def trace_from_family(fam: BoundaryFamily, elements: dict) -> TraceDescription:
    return TraceDescription(
        tuple(tuple(PrimeMarker(i, elements[i]) for i in lv.U) for lv in fam.levels)
    )


def schubert_trace(gamma: SchubertIndex) -> TraceDescription:
    bd = block_decompose(gamma)
    fam = boundary_family(kappa_profile(bd))
    _, sigmas = zeta_sigma(bd)
    return trace_from_family(fam, {i: s for i, s in enumerate(sigmas, start=1)})


@dataclass(frozen=True)
class CtrVerdict:
    verdict: bool
    reason: str


def ctr_verdict(spread: int, base: BaseRingAssumptions, symbol: str = "kappa") -> CtrVerdict:
    spread_ok = spread <= 1
    if not spread_ok:
        return CtrVerdict(False, f"{symbol} - {symbol}' = {spread} >= 2: the trace is generated in degree >= {spread} yet its radical contains a lower-degree element")
    if not base.ctr:
        return CtrVerdict(False, "base ring is not CTR")
    if spread == 0:
        return CtrVerdict(True, f"{symbol} - {symbol}' = 0: Gorenstein over the base")
    return CtrVerdict(True, f"{symbol} - {symbol}' = 1: the trace is an intersection of distinct primes")


@dataclass(frozen=True)
class SchubertWitness:
    element: SchubertIndex
    degree: int
    product_min_degree: int


@dataclass
class SchubertReport:
    gamma: SchubertIndex
    base: BaseRingAssumptions
    blocks: BlockData
    kappa: KappaProfile
    zetas: list[SchubertIndex]
    sigmas: list[SchubertIndex]
    family: BoundaryFamily
    canonical_class: list[tuple[int, SchubertIndex]]
    trace: TraceDescription
    ctr: CtrVerdict
    ctr_trace: Optional[tuple[int, ...]] = None  # the set I when CTR
    locus_primes: list[SchubertIndex] = field(default_factory=list)
    locus_base_token: Optional[str] = None
    witness: Optional[SchubertWitness] = None
    base_change_token: Optional[str] = None


def schubert_report(gamma: SchubertIndex, base: BaseRingAssumptions = GORENSTEIN_BASE) -> SchubertReport:
    if not isinstance(base, BaseRingAssumptions):
        raise InputError("base must be a BaseRingAssumptions value")
    bd = block_decompose(gamma)
    kp = kappa_profile(bd)
    zetas, sigmas = zeta_sigma(bd)
    fam = boundary_family(kp)
    trace = trace_from_family(fam, {i: s for i, s in enumerate(sigmas, start=1)})
    verdict = ctr_verdict(kp.spread, base)
    rep = SchubertReport(
        gamma=gamma,
        base=base,
        blocks=bd,
        kappa=kp,
        zetas=zetas,
        sigmas=sigmas,
        family=fam,
        canonical_class=list(zip(kp.kappas, zetas)),
        trace=trace,
        ctr=verdict,
    )
    rep.locus_primes = [sigmas[i - 1] for i in fam.U]
    if not base.is_gorenstein:
        rep.locus_base_token = base.nongorenstein_token
    if verdict.verdict:
        rep.ctr_trace = kp.jumps()
        if not base.is_gorenstein:
            rep.base_change_token = base.trace_token
    if kp.spread >= 2:
        # every generator of the product has degree spread; γ has degree 1 and
        # lies below no σ_i, so it sits in the radical but not in the trace
        rep.witness = SchubertWitness(gamma, 1, kp.spread)
    return rep
