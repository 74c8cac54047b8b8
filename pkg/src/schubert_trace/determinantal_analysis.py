"""Canonical trace, CTR verdict and non-Gorenstein locus of R(X; δ).

Everything is read off the Schubert data of the lift δ~ and pushed back
through the dehomogenization map.  Minors carry ASL degree equal to their
size, so the non-CTR certificate needs the thresholds N_i rather than the
constant degree 1 available for maximal minors.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .dehomogenization import (
    DeterminantalProfile,
    LiftedIndex,
    TauEntry,
    determinantal_profile,
    n_thresholds,
)
from .errors import DefectError, InputError
from .minor_poset import BiMinor, count_bi_interval, enumerate_bi_interval, leq_bi
from .schubert_analysis import (
    GORENSTEIN_BASE,
    BaseRingAssumptions,
    BoundaryFamily,
    CtrVerdict,
    TraceDescription,
    Unit,
    boundary_family,
    ctr_verdict,
    trace_from_family,
)

DEFAULT_DEGREE_CAP = 50_000


def degree_cap() -> int:
    return int(os.environ.get("SCHUBERT_TRACE_DEGREE_CAP", DEFAULT_DEGREE_CAP))


def det_trace(delta: BiMinor) -> TraceDescription:
    prof = determinantal_profile(delta)
    fam = boundary_family(prof.lam)
    return trace_from_family(fam, {i: tau for i, tau in enumerate(prof.taus, start=1)})


def outside_all(xi: BiMinor, taus: list[TauEntry]) -> bool:
    """True when ξ is not above any of the given τ (Unit is above nothing)."""
    return all(isinstance(tau, Unit) or not leq_bi(tau, xi) for tau in taus)


def factor_generators(interval: list[BiMinor], taus: list[TauEntry]) -> list[BiMinor]:
    """Poset generators {ξ ∈ Δ(X; δ) : ξ ≱ τ_i for all i} of ∩_i I(x; τ_i)."""
    return [xi for xi in interval if outside_all(xi, taus)]


@dataclass(frozen=True)
class DeterminantalWitness:
    element: BiMinor
    degree: int
    product_min_degree: int
    factor_min_degrees: tuple[int, ...]
    exact: bool  # False when the minima are the threshold lower bounds


@dataclass
class DeterminantalReport:
    delta: BiMinor
    base: BaseRingAssumptions
    profile: DeterminantalProfile
    family: BoundaryFamily
    thresholds: tuple[int, ...]
    trace: TraceDescription
    ctr: CtrVerdict
    ctr_trace: Optional[tuple[int, ...]] = None
    locus_primes: list[TauEntry] = field(default_factory=list)
    locus_base_token: Optional[str] = None
    witness: Optional[DeterminantalWitness] = None
    closed_form: Optional[str] = None
    base_change_token: Optional[str] = None

    @property
    def lifted(self) -> LiftedIndex:
        return self.profile.lifted

    @property
    def t(self) -> int:
        return self.profile.t

    @property
    def spread(self) -> int:
        return self.profile.lam.spread


def closed_form(delta: BiMinor) -> Optional[str]:
    """``I_r(X)^{|n-m|}`` when δ = [1..r | 1..r] with r < min(m, n)."""
    m, n, r = delta.ambient.m, delta.ambient.n, delta.size
    leading = tuple(range(1, r + 1))
    if delta.rows == leading and delta.cols == leading and r < min(m, n):
        return f"I_{r}(X)^{abs(n - m)}"
    return None


def _witness(delta, fam, taus, thresholds, cap) -> DeterminantalWitness:
    s = max(thresholds[i - 1] for i in fam.U)
    w = delta.truncate(s)
    if count_bi_interval(delta.ambient, delta) <= cap:
        interval = enumerate_bi_interval(delta.ambient, delta)
        mins = []
        for lv in fam.levels:
            gens = factor_generators(interval, [taus[i - 1] for i in lv.U])
            if not gens:
                raise DefectError(f"factor h={lv.h} of the trace of {delta} has no generators")
            mins.append(min(g.size for g in gens))
        exact = True
    else:
        mins = [max(thresholds[i - 1] for i in lv.U) for lv in fam.levels]
        exact = False
    wit = DeterminantalWitness(w, s, sum(mins), tuple(mins), exact)
    if not outside_all(w, [taus[i - 1] for i in fam.U]):
        raise DefectError(f"witness {w} lies above some τ_i, i ∈ U")
    if not wit.degree < wit.product_min_degree:
        raise DefectError(f"witness degree {s} is not below product degree {wit.product_min_degree}")
    return wit


def det_report(
    delta: BiMinor,
    base: BaseRingAssumptions = GORENSTEIN_BASE,
    cap: Optional[int] = None,
) -> DeterminantalReport:
    if not isinstance(base, BaseRingAssumptions):
        raise InputError("base must be a BaseRingAssumptions value")
    cap = degree_cap() if cap is None else cap
    prof = determinantal_profile(delta)
    fam = boundary_family(prof.lam)
    taus = list(prof.taus)
    thresholds = n_thresholds(delta) if prof.t >= 1 else ()
    trace = trace_from_family(fam, {i: tau for i, tau in enumerate(taus, start=1)})
    verdict = ctr_verdict(prof.lam.spread, base, symbol="lambda")
    rep = DeterminantalReport(
        delta=delta,
        base=base,
        profile=prof,
        family=fam,
        thresholds=thresholds,
        trace=trace,
        ctr=verdict,
        closed_form=closed_form(delta),
    )
    rep.locus_primes = [taus[i - 1] for i in fam.U]
    if not base.is_gorenstein:
        rep.locus_base_token = base.nongorenstein_token
    if verdict.verdict:
        rep.ctr_trace = prof.lam.jumps()
        if not base.is_gorenstein:
            rep.base_change_token = base.trace_token
    if prof.lam.spread >= 2:
        rep.witness = _witness(delta, fam, taus, thresholds, cap)
    return rep
