"""Passage between minors of X (m x n) and maximal minors of the extended
matrix X~ = (X | m new columns), m x (n + m).

Substituting the anti-diagonal identity for the new columns sends the
maximal minor [b_1..b_m] of X~ to the minor [a_1..a_r | b_1..b_r] of X,
where r = max{j : b_j <= n} and the rows a are the complement in {1..m} of
{(m+n+1) - b_j : j > r}.  This identifies Γ(X~) minus its top element
[n+1..n+m] with Δ(X) as posets.  Per-minor signs are not tracked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DefectError, InputError
from .minor_poset import Ambient, BiMinor, SchubertIndex
from .schubert_analysis import (
    BlockData,
    KappaProfile,
    Unit,
    block_decompose,
    kappa_profile,
    zeta_sigma,
)


def extended_ambient(ambient: Ambient) -> Ambient:
    return Ambient(ambient.m, ambient.n + ambient.m)


def top_sign(m: int) -> int:
    return -1 if (m * (m - 1) // 2) % 2 else 1


@dataclass(frozen=True)
class LiftedIndex:
    index: SchubertIndex
    base: Ambient

    def __post_init__(self):
        if self.index.ambient != extended_ambient(self.base):
            raise InputError(f"lifted index {self.index} must live in {extended_ambient(self.base)}")

    @property
    def is_top(self) -> bool:
        n, m = self.base.n, self.base.m
        return self.index.cols == tuple(range(n + 1, n + m + 1))

    @property
    def cols(self) -> tuple[int, ...]:
        return self.index.cols

    def __str__(self):
        return str(self.index)


TauEntry = Union[BiMinor, Unit]


def lift(cols, base: Ambient) -> LiftedIndex:
    return LiftedIndex(SchubertIndex(tuple(cols), extended_ambient(base)), base)


def phi_forward(b: LiftedIndex) -> TauEntry:
    m, n = b.base.m, b.base.n
    if b.is_top:
        return Unit(top_sign(m))
    cols = b.cols
    r = max(j for j in range(1, m + 1) if cols[j - 1] <= n)
    removed = {(m + n + 1) - cols[j - 1] for j in range(r + 1, m + 1)}
    rows = tuple(x for x in range(1, m + 1) if x not in removed)
    if len(rows) != r:
        raise DefectError(f"row complement of {b} has {len(rows)} elements, expected {r}")
    return BiMinor(rows, cols[:r], b.base)


def phi_inverse(delta: BiMinor) -> LiftedIndex:
    m, n = delta.ambient.m, delta.ambient.n
    present = set(delta.rows)
    tail = [(m + n + 1) - c for c in range(m, 0, -1) if c not in present]
    return lift(delta.cols + tuple(tail), delta.ambient)


@dataclass(frozen=True)
class DeterminantalProfile:
    delta: BiMinor
    lifted: LiftedIndex
    blocks: BlockData
    lam: KappaProfile
    eta_tilde: tuple[SchubertIndex, ...]
    tau_tilde: tuple[SchubertIndex, ...]
    etas: tuple[TauEntry, ...]
    taus: tuple[TauEntry, ...]

    @property
    def t(self) -> int:
        return self.blocks.t


def _is_chain_case(delta: BiMinor) -> bool:
    # Δ(X; [m|n]) = {[m|n]} is the only interval whose ζ~ reaches the top
    m, n = delta.ambient.m, delta.ambient.n
    return delta.rows == (m,) and delta.cols == (n,)


def determinantal_profile(delta: BiMinor) -> DeterminantalProfile:
    lifted = phi_inverse(delta)
    bd = block_decompose(lifted.index)
    lam = kappa_profile(bd)
    zetas, sigmas = zeta_sigma(bd)
    etas = []
    for z in zetas:
        e = phi_forward(LiftedIndex(z, delta.ambient))
        if isinstance(e, Unit) and not _is_chain_case(delta):
            raise DefectError(f"η~ = {z} is the top element for δ = {delta}")
        etas.append(e)
    taus = tuple(phi_forward(LiftedIndex(s, delta.ambient)) for s in sigmas)
    return DeterminantalProfile(delta, lifted, bd, lam, tuple(zetas), tuple(sigmas), tuple(etas), taus)


def n_thresholds(delta: BiMinor) -> tuple[int, ...]:
    """Minimal sizes N_1..N_t of minors in Δ(X; δ) outside Δ(X; τ_i)."""
    m, n, r = delta.ambient.m, delta.ambient.n, delta.size
    lifted = phi_inverse(delta)
    bd = block_decompose(lifted.index)
    g = lifted.index
    out = []
    for i in range(1, bd.t + 1):
        a_next = g.a(bd.k(i) + 1)
        if a_next <= n + 1:
            N = bd.k(i)
        else:
            target = (m + n + 1) - (a_next - 1)
            try:
                N = delta.rows.index(target)
            except ValueError:
                raise DefectError(f"row {target} missing from {delta} while computing N_{i}") from None
        if not 1 <= N <= r:
            raise DefectError(f"N_{i} = {N} outside [1, {r}] for {delta}")
        out.append(N)
    return tuple(out)
