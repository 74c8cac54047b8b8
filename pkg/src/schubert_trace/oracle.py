"""Brute-force verification of the combinatorial identities behind the analyses.

Each ``check_*`` function enumerates the relevant poset interval, tests one
identity exhaustively and returns an :class:`OracleReport`.  A check whose
enumeration would exceed the element cap returns verdict ``"skipped"`` with
``skip_reason="cap"``; it never silently samples.  Determinants are exact:
int64 Bareiss when the Hadamard bound allows it, Python integers otherwise.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from . import _kernels as K
from .bareiss import det_bareiss
from .dehomogenization import (
    LiftedIndex,
    determinantal_profile,
    extended_ambient,
    n_thresholds,
    phi_forward,
    phi_inverse,
)
from .determinantal_analysis import det_report
from .errors import InputError
from .minor_poset import (
    Ambient,
    BiMinor,
    SchubertIndex,
    count_bi_interval,
    count_schubert_interval,
    enumerate_bi_interval,
    enumerate_schubert_interval,
    top_index,
)
from .schubert_analysis import (
    Unit,
    block_decompose,
    boundary_family,
    kappa_profile,
    schubert_report,
    zeta_sigma,
)

DEFAULT_CAP = 200_000
DEFAULT_PAIR_CAP = 4_000_000


def enumeration_cap() -> int:
    return int(os.environ.get("SCHUBERT_TRACE_CAP", DEFAULT_CAP))


@dataclass
class OracleReport:
    check: str
    parameters: dict
    verdict: str = "pass"
    counterexample: Optional[dict] = None
    cases: int = 0
    elapsed: float = 0.0
    skip_reason: Optional[str] = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    def fail(self, **payload) -> "OracleReport":
        self.verdict = "fail"
        self.counterexample = payload
        return self

    def skip(self, reason: str, **info) -> "OracleReport":
        self.verdict = "skipped"
        self.skip_reason = reason
        self.details.update(info)
        return self

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "check": self.check,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "cases": self.cases,
            "skip_reason": self.skip_reason,
            "details": self.details,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _timed(fn: Callable[..., OracleReport]) -> Callable[..., OracleReport]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def _arr(indices: Sequence[SchubertIndex], m: int) -> np.ndarray:
    if not indices:
        return np.zeros((0, m), dtype=np.int64)
    return np.array([x.cols for x in indices], dtype=np.int64)


def _bi_arr(minors: Sequence[BiMinor], width: int):
    """Sizes plus row/col arrays right-padded with a sentinel."""
    pad = 1 << 30
    sizes = np.array([x.size for x in minors], dtype=np.int64)
    R = np.full((len(minors), width), pad, dtype=np.int64)
    C = np.full((len(minors), width), pad, dtype=np.int64)
    for q, x in enumerate(minors):
        R[q, : x.size] = x.rows
        C[q, : x.size] = x.cols
    return sizes, R, C


def _fmt(x) -> str:
    return str(x)


def _not_above(E: np.ndarray, z: Sequence[int]) -> np.ndarray:
    """Mask of rows of E that are not >= z componentwise."""
    return ~(E >= np.asarray(z, dtype=np.int64)[None, :]).all(axis=1)


def _keys(E: np.ndarray, w: np.ndarray) -> np.ndarray:
    return E @ w


def downward_closure_violation(E: np.ndarray, mask: np.ndarray, gamma: Sequence[int], w: np.ndarray):
    """First (element, lower cover) pair breaking downward closure of E[mask]
    within the interval above ``gamma``, or None."""
    members = E[mask]
    if len(members) == 0:
        return None
    member_keys = set(_keys(members, w).tolist())
    g = np.asarray(gamma, dtype=np.int64)
    m = E.shape[1]
    for l in range(m):
        cand = members.copy()
        cand[:, l] -= 1
        ok = cand[:, l] >= g[l]
        if l > 0:
            ok &= cand[:, l] > cand[:, l - 1]
        for q in np.flatnonzero(ok):
            if int(cand[q] @ w) not in member_keys:
                return members[q].tolist(), cand[q].tolist()
    return None


# -- Schubert-side checks ----------------------------------------------------


def _schubert_data(gamma: SchubertIndex, sigmas=None):
    bd = block_decompose(gamma)
    kp = kappa_profile(bd)
    zetas, default_sigmas = zeta_sigma(bd)
    fam = boundary_family(kp)
    return bd, kp, zetas, list(sigmas) if sigmas is not None else default_sigmas, fam


def _level(fam, kp, h):
    if not 1 <= h <= kp.spread:
        raise InputError(f"level h={h} outside [1, {kp.spread}]")
    return fam.level(h)


def _interval_or_skip(rep: OracleReport, ambient: Ambient, gamma, cap):
    size = count_schubert_interval(ambient, gamma)
    if size > cap:
        rep.skip("cap", interval_size=size, cap=cap)
        return None
    return enumerate_schubert_interval(ambient, gamma)


@_timed
def check_trace_set_identity(
    gamma: SchubertIndex,
    h: int,
    cap: Optional[int] = None,
    sigmas: Optional[Sequence[SchubertIndex]] = None,
) -> OracleReport:
    """Compare ∩_{k ∈ U_h} Θ_k with {ξ ⊔ ν : ξ ∈ Ω_i ∀ i ∈ S_h, ν ∈ Ω_j ∀ j ∈ T_h}.

    Ω_i = {δ ≥ γ : δ ≱ ζ_i}, Θ_k = {δ ≥ γ : δ ≱ σ_k}.  ``sigmas`` replaces the
    σ list, which lets tests confirm the check rejects a wrong definition.
    """
    cap = enumeration_cap() if cap is None else cap
    rep = OracleReport("trace_set_identity", {"gamma": str(gamma), "ambient": str(gamma.ambient), "h": h})
    bd, kp, zetas, sig, fam = _schubert_data(gamma, sigmas)
    if kp.spread == 0:
        rep.details["levels"] = 0
        return rep
    lv = _level(fam, kp, h)
    elems = _interval_or_skip(rep, gamma.ambient, gamma, cap)
    if elems is None:
        return rep
    m, n = gamma.m, gamma.n
    E = _arr(elems, m)
    w = K.encode_weights(n, m)

    omegas = {i: _not_above(E, z.cols) for i, z in enumerate(zetas)}
    thetas = {k: _not_above(E, s.cols) for k, s in enumerate(sig, start=1)}
    for label, masks in (("Omega", omegas), ("Theta", thetas)):
        for i, mask in masks.items():
            bad = downward_closure_violation(E, mask, gamma.cols, w)
            if bad is not None:
                return rep.fail(reason=f"{label}_{i} is not a poset ideal", element=bad[0], lower_cover=bad[1])

    lhs = np.ones(len(E), dtype=bool)
    for k in lv.U:
        lhs &= thetas[k]
    left = np.ones(len(E), dtype=bool)
    for i in lv.S:
        left &= omegas[i]
    right = np.ones(len(E), dtype=bool)
    for j in lv.T:
        right &= omegas[j]
    A, B = E[left], E[right]
    rep.cases = len(A) * len(B)
    rhs_keys = set(np.unique(K.join_keys(A, B, w)).tolist()) if rep.cases else set()
    all_keys = _keys(E, w)
    lhs_keys = set(all_keys[lhs].tolist())
    rep.details.update(lhs_size=len(lhs_keys), rhs_size=len(rhs_keys), U_h=list(lv.U))
    if lhs_keys != rhs_keys:
        for q, key in enumerate(all_keys.tolist()):
            in_l, in_r = key in lhs_keys, key in rhs_keys
            if in_l != in_r:
                return rep.fail(
                    element=_fmt(elems[q]),
                    in_intersection=in_l,
                    in_joins=in_r,
                    sigmas=[_fmt(s) for s in sig],
                )
    return rep


@_timed
def check_multidegree_identity(
    gamma: SchubertIndex, cap: Optional[int] = None, pair_cap: int = DEFAULT_PAIR_CAP
) -> OracleReport:
    """deg ξ + deg ν = deg(ξ ⊔ ν) + deg(ξ ⊓ ν) and injectivity of deg on Γ(X; γ)."""
    cap = enumeration_cap() if cap is None else cap
    rep = OracleReport("multidegree_identity", {"gamma": str(gamma), "ambient": str(gamma.ambient)})
    elems = _interval_or_skip(rep, gamma.ambient, gamma, cap)
    if elems is None:
        return rep
    N = len(elems)
    if N * N > pair_cap:
        return rep.skip("cap", pairs=N * N, pair_cap=pair_cap)
    m, n = gamma.m, gamma.n
    E = _arr(elems, m)
    D = np.zeros((N, n + 1), dtype=np.int64)
    np.put_along_axis(D, E, 1, axis=1)
    D = D[:, 1:]
    if len({row.tobytes() for row in D}) != N:
        return rep.fail(reason="multidegree is not injective")
    for i in range(N):
        J = np.maximum(E[i][None, :], E)
        Mt = np.minimum(E[i][None, :], E)
        DJ = np.zeros((N, n + 1), dtype=np.int64)
        DM = np.zeros((N, n + 1), dtype=np.int64)
        np.put_along_axis(DJ, J, 1, axis=1)
        np.put_along_axis(DM, Mt, 1, axis=1)
        bad = np.flatnonzero(((D[i][None, :] + D) != (DJ[:, 1:] + DM[:, 1:])).any(axis=1))
        if len(bad):
            return rep.fail(xi=_fmt(elems[i]), nu=_fmt(elems[bad[0]]))
    rep.cases = N * N
    return rep


@dataclass(frozen=True)
class PatternMatrix:
    entries: np.ndarray
    pattern: SchubertIndex
    seed: object
    bound: int


def pattern_matrix(gamma: SchubertIndex, seed=0, bound: int = 100) -> PatternMatrix:
    """Integer matrix with row i zero left of column a_i and entries in
    [1, bound] elsewhere.  Every maximal minor not >= γ vanishes on it."""
    if bound < 1:
        raise InputError("bound must be at least 1")
    rng = np.random.default_rng(seed)
    m, n = gamma.m, gamma.n
    M = rng.integers(1, bound + 1, size=(m, n), dtype=np.int64)
    for i, a in enumerate(gamma.cols):
        M[i, : a - 1] = 0
    return PatternMatrix(M, gamma, seed, bound)


def _trial_seed(seed: int, trial: int):
    return [int(seed), int(trial)]


def all_maximal_minors(pm: PatternMatrix, combos: np.ndarray) -> np.ndarray:
    """Every maximal minor of ``pm`` for 0-based column tuples ``combos``.

    int64 array when the Hadamard bound fits, object array of Python ints otherwise.
    """
    m = pm.entries.shape[0]
    if K.int64_safe(m, pm.bound):
        return K.maximal_minors(pm.entries, combos)
    rows = pm.entries.tolist()
    return np.array(
        [det_bareiss([[rows[i][j] for j in c] for i in range(m)]) for c in combos.tolist()],
        dtype=object,
    )


def _combos(m: int, n: int) -> np.ndarray:
    return np.array(list(combinations(range(n), m)), dtype=np.int64).reshape(-1, m)


@_timed
def check_pattern_matrix(gamma: SchubertIndex, seed: int = 0, bound: int = 100, trials: int = 1) -> OracleReport:
    """minor(γ) is the diagonal product and minor(b) = 0 for every b ≱ γ."""
    rep = OracleReport(
        "pattern_matrix", {"gamma": str(gamma), "ambient": str(gamma.ambient), "seed": seed, "bound": bound, "trials": trials}
    )
    m, n = gamma.m, gamma.n
    combos = _combos(m, n)
    above = ((combos + 1) >= np.array(gamma.cols)[None, :]).all(axis=1)
    gpos = int(np.flatnonzero(((combos + 1) == np.array(gamma.cols)[None, :]).all(axis=1))[0])
    for trial in range(trials):
        pm = pattern_matrix(gamma, _trial_seed(seed, trial), bound)
        minors = all_maximal_minors(pm, combos)
        diag = 1
        for i, a in enumerate(gamma.cols):
            diag *= int(pm.entries[i, a - 1])
        if int(minors[gpos]) != diag or diag == 0:
            return rep.fail(trial=trial, reason="minor(gamma) differs from the diagonal product", matrix=pm.entries.tolist())
        bad = np.flatnonzero(~above & (minors != 0))
        if len(bad):
            cols = [int(c) + 1 for c in combos[bad[0]]]
            return rep.fail(trial=trial, minor=cols, value=int(minors[bad[0]]), matrix=pm.entries.tolist())
        rep.cases += len(combos)
    return rep


def straightening_sign(
    gamma: SchubertIndex, xi: SchubertIndex, nu: SchubertIndex, trials: int = 20, seed: int = 0, bound: int = 100
) -> tuple[Optional[int], list[dict]]:
    """Sign s with minor(ξ)·minor(ν) = s·minor(γ)·minor(ξ ⊔ ν) on pattern matrices.

    Returns (s, failures).  s is None when every sampled right-hand side vanished.
    """
    from .minor_poset import meet_join

    _, join = meet_join(xi, nu)
    sign = None
    failures = []
    for trial in range(trials):
        pm = pattern_matrix(gamma, _trial_seed(seed, trial), bound)
        rows = pm.entries.tolist()

        def mnr(x):
            return det_bareiss([[r[c - 1] for c in x.cols] for r in rows])

        lhs = mnr(xi) * mnr(nu)
        rhs = mnr(gamma) * mnr(join)
        if rhs == 0:
            if lhs != 0:
                failures.append({"trial": trial, "lhs": lhs, "rhs": rhs})
            continue
        if lhs not in (rhs, -rhs):
            failures.append({"trial": trial, "lhs": lhs, "rhs": rhs})
            continue
        s = 1 if lhs == rhs else -1
        if sign is None:
            sign = s
        elif s != sign:
            failures.append({"trial": trial, "reason": "sign changed", "sign": s})
    return sign, failures


@_timed
def check_straightening(
    gamma: SchubertIndex,
    h: int,
    trials: int = 20,
    seed: int = 0,
    bound: int = 100,
    cap: Optional[int] = None,
    pair_cap: int = DEFAULT_PAIR_CAP,
) -> OracleReport:
    """For ξ ∈ ∩_{S_h} Ω_i and ν ∈ ∩_{T_h} Ω_j: ξ ⊓ ν = γ and
    minor(ξ)·minor(ν) = ±minor(γ)·minor(ξ ⊔ ν) with a matrix-independent sign."""
    cap = enumeration_cap() if cap is None else cap
    rep = OracleReport(
        "straightening",
        {"gamma": str(gamma), "ambient": str(gamma.ambient), "h": h, "trials": trials, "seed": seed, "bound": bound},
    )
    bd, kp, zetas, _, fam = _schubert_data(gamma)
    if kp.spread == 0:
        rep.details["levels"] = 0
        return rep
    lv = _level(fam, kp, h)
    elems = _interval_or_skip(rep, gamma.ambient, gamma, cap)
    if elems is None:
        return rep
    m, n = gamma.m, gamma.n
    E = _arr(elems, m)
    left = np.ones(len(E), dtype=bool)
    for i in lv.S:
        left &= _not_above(E, zetas[i].cols)
    right = np.ones(len(E), dtype=bool)
    for j in lv.T:
        right &= _not_above(E, zetas[j].cols)
    A, B = E[left], E[right]
    ia = np.repeat(np.arange(len(A)), len(B))
    ib = np.tile(np.arange(len(B)), len(A))
    if len(ia) > pair_cap:
        # seed-deterministic subsample above the pair cap
        rng = np.random.default_rng([seed, 7919])
        pick = np.sort(rng.choice(len(ia), size=pair_cap, replace=False))
        ia, ib = ia[pick], ib[pick]
        rep.details["sampled_pairs"] = pair_cap
    rep.cases = len(ia)
    if not len(ia):
        return rep

    w = K.encode_weights(n, m)
    gkey = int(np.asarray(gamma.cols) @ w)
    meets = np.minimum(A[ia], B[ib]) @ w
    badm = np.flatnonzero(meets != gkey)
    if len(badm):
        q = badm[0]
        return rep.fail(reason="meet differs from gamma", xi=A[ia[q]].tolist(), nu=B[ib[q]].tolist())

    combos = _combos(m, n)
    pos = {int(k): q for q, k in enumerate(((combos + 1) @ w).tolist())}
    pa = np.array([pos[int(k)] for k in (A @ w).tolist()], dtype=np.int64)[ia]
    pb = np.array([pos[int(k)] for k in (B @ w).tolist()], dtype=np.int64)[ib]
    pj = np.array([pos[int(k)] for k in (np.maximum(A[ia], B[ib]) @ w).tolist()], dtype=np.int64)
    pg = pos[gkey]
    signs = np.zeros(len(ia), dtype=np.int64)
    for trial in range(trials):
        pm = pattern_matrix(gamma, _trial_seed(seed, trial), bound)
        mn = all_maximal_minors(pm, combos)
        lhs = mn[pa] * mn[pb]
        rhs = mn[pj] * mn[pg]
        s = np.where(lhs == rhs, 1, np.where(lhs == -rhs, -1, 0)).astype(np.int64)
        zero_rhs = rhs == 0
        # both sides zero says nothing about the sign
        undetermined = zero_rhs & (lhs == 0)
        bad = np.flatnonzero(~undetermined & ((s == 0) | ((signs != 0) & (s != signs))))
        if len(bad):
            q = bad[0]
            return rep.fail(
                trial=trial,
                xi=A[ia[q]].tolist(),
                nu=B[ib[q]].tolist(),
                lhs=int(lhs[q]),
                rhs=int(rhs[q]),
                previous_sign=int(signs[q]),
                matrix=pm.entries.tolist(),
            )
        signs = np.where(undetermined, signs, s)
    rep.details.update(
        plus=int((signs == 1).sum()), minus=int((signs == -1).sum()), undetermined=int((signs == 0).sum())
    )
    return rep


@_timed
def check_schubert_degree_witness(gamma: SchubertIndex, cap: Optional[int] = None) -> OracleReport:
    """γ lies in every ∩_{U_h} J(x; σ_i) yet has degree 1 < spread = product degree."""
    cap = enumeration_cap() if cap is None else cap
    rep = OracleReport("schubert_degree_witness", {"gamma": str(gamma), "ambient": str(gamma.ambient)})
    report = schubert_report(gamma)
    if report.kappa.spread < 2:
        return rep.skip("not_applicable", spread=report.kappa.spread)
    elems = _interval_or_skip(rep, gamma.ambient, gamma, cap)
    if elems is None:
        return rep
    E = _arr(elems, gamma.m)
    sig = report.sigmas
    mins = []
    for lv in report.family.levels:
        gens = np.ones(len(E), dtype=bool)
        for i in lv.U:
            gens &= _not_above(E, sig[i - 1].cols)
        if not gens.any():
            return rep.fail(reason=f"factor h={lv.h} has no generators")
        mins.append(1)  # maximal minors all have degree 1
    product_min = sum(mins)
    w = report.witness
    g = np.asarray(gamma.cols)
    in_radical = all(not (g >= np.asarray(sig[i - 1].cols)).all() for i in report.family.U)
    rep.cases = len(E) * len(report.family.levels)
    rep.details.update(witness=str(gamma), degree=1, product_min_degree=product_min)
    if w is None or w.element != gamma or w.product_min_degree != product_min:
        return rep.fail(reason="report witness disagrees with enumeration", report_witness=None if w is None else str(w.element))
    if not in_radical:
        return rep.fail(reason="witness lies above some sigma_i")
    if not 1 < product_min:
        return rep.fail(reason="witness degree not below product degree")
    return rep


# -- determinantal-side checks -------------------------------------------------


@_timed
def check_poset_isomorphism(m: int, n: int, delta: Optional[BiMinor] = None, cap: Optional[int] = None) -> OracleReport:
    """φ is an order isomorphism Γ(X~; δ~) ∖ {top} → Δ(X; δ) with inverse φ^{-1}."""
    cap = enumeration_cap() if cap is None else cap
    ambient = Ambient(m, n)
    if delta is not None and delta.ambient != ambient:
        raise InputError(f"ambient mismatch: {delta.ambient} vs {ambient}")
    rep = OracleReport("poset_isomorphism", {"ambient": str(ambient), "delta": None if delta is None else str(delta)})
    ext = extended_ambient(ambient)
    lower = phi_inverse(delta).index if delta is not None else None
    gsize = count_schubert_interval(ext, lower)
    dsize = count_bi_interval(ambient, delta)
    if max(gsize, dsize) > cap:
        return rep.skip("cap", interval_size=max(gsize, dsize), cap=cap)
    rep.details.update(gamma_size=gsize, delta_size=dsize)
    if gsize != dsize + 1:
        return rep.fail(reason="cardinality", gamma_size=gsize, delta_size=dsize)
    top = top_index(ext)
    G = [b for b in enumerate_schubert_interval(ext, lower) if b != top]
    D = enumerate_bi_interval(ambient, delta)
    images = []
    for b in G:
        img = phi_forward(LiftedIndex(b, ambient))
        if isinstance(img, Unit):
            return rep.fail(reason="non-top element mapped to the unit", element=str(b))
        back = phi_inverse(img)
        if back.index != b:
            return rep.fail(reason="round trip", element=str(b), image=str(img), back=str(back))
        images.append(img)
    if len(set(images)) != len(G):
        return rep.fail(reason="phi is not injective")
    if set(images) != set(D):
        extra = sorted(set(D) - set(images), key=lambda x: x.sort_key())
        return rep.fail(reason="phi is not onto", missing=str(extra[0]) if extra else None)
    for d in D:
        if phi_forward(phi_inverse(d)) != d:
            return rep.fail(reason="round trip", minor=str(d))
    GA = _arr(G, m)
    lg = K.leq_matrix(GA, GA)
    sz, R, C = _bi_arr(images, min(m, n))
    ld = K.bi_leq_matrix(sz, R, C, sz, R, C)
    diff = np.argwhere(lg != ld)
    rep.cases = len(G) * len(G)
    if len(diff):
        i, j = diff[0]
        return rep.fail(reason="order", b=str(G[i]), b_prime=str(G[j]), leq_gamma=bool(lg[i, j]), leq_delta=bool(ld[i, j]))
    return rep


def _bi_interval_or_skip(rep, delta, cap):
    size = count_bi_interval(delta.ambient, delta)
    if size > cap:
        rep.skip("cap", interval_size=size, cap=cap)
        return None
    return enumerate_bi_interval(delta.ambient, delta)


def _above_mask(D_arrays, tau) -> np.ndarray:
    """Mask of interval elements ξ with ξ ≥ τ (all False for the unit)."""
    sz, R, C = D_arrays
    if isinstance(tau, Unit):
        return np.zeros(len(sz), dtype=bool)
    ts, TR, TC = _bi_arr([tau], R.shape[1])
    return K.bi_leq_matrix(ts, TR, TC, sz, R, C)[0]


@_timed
def check_membership_equivalence(delta: BiMinor, cap: Optional[int] = None) -> OracleReport:
    """ξ ∉ Δ(X; τ_i)  iff  b_{k(i)} < a_{k(i)+1}, with b = lift(ξ) and a = δ~."""
    cap = enumeration_cap() if cap is None else cap
    rep = OracleReport("membership_equivalence", {"delta": str(delta), "ambient": str(delta.ambient)})
    prof = determinantal_profile(delta)
    if prof.t < 1:
        rep.details["t"] = prof.t
        return rep
    D = _bi_interval_or_skip(rep, delta, cap)
    if D is None:
        return rep
    m = delta.ambient.m
    arrays = _bi_arr(D, min(m, delta.ambient.n))
    L = _arr([phi_inverse(x).index for x in D], m)
    a = prof.lifted.index
    bd = prof.blocks
    for i in range(1, prof.t + 1):
        outside = ~_above_mask(arrays, prof.taus[i - 1])
        ineq = L[:, bd.k(i) - 1] < a.a(bd.k(i) + 1)
        bad = np.flatnonzero(outside != ineq)
        if len(bad):
            q = bad[0]
            return rep.fail(i=i, minor=str(D[q]), lift=str(L[q].tolist()), outside=bool(outside[q]), inequality=bool(ineq[q]))
    rep.cases = len(D) * prof.t
    return rep


@_timed
def check_thresholds(delta: BiMinor, cap: Optional[int] = None) -> OracleReport:
    """Elements of Δ(X; δ) ∖ Δ(X; τ_i) have size >= N_i, and every truncation of
    δ of size N_i..r lies in that set."""
    cap = enumeration_cap() if cap is None else cap
    rep = OracleReport("thresholds", {"delta": str(delta), "ambient": str(delta.ambient)})
    prof = determinantal_profile(delta)
    if prof.t < 1:
        rep.details["t"] = prof.t
        return rep
    N = n_thresholds(delta)
    rep.details["N"] = list(N)
    D = _bi_interval_or_skip(rep, delta, cap)
    if D is None:
        return rep
    arrays = _bi_arr(D, min(delta.ambient.m, delta.ambient.n))
    sizes = arrays[0]
    index = {x: q for q, x in enumerate(D)}
    for i in range(1, prof.t + 1):
        outside = ~_above_mask(arrays, prof.taus[i - 1])
        if not outside.any():
            return rep.fail(i=i, reason="empty complement")
        smin = int(sizes[outside].min())
        if smin < N[i - 1]:
            q = int(np.flatnonzero(outside & (sizes < N[i - 1]))[0])
            return rep.fail(i=i, reason="element below threshold", minor=str(D[q]), N=N[i - 1])
        for s in range(N[i - 1], delta.size + 1):
            tr = delta.truncate(s)
            q = index.get(tr)
            if q is None or not outside[q]:
                return rep.fail(i=i, reason="truncation not in complement", truncation=str(tr), N=N[i - 1])
        rep.cases += len(D)
    return rep


@_timed
def check_degree_witness(delta: BiMinor, cap: Optional[int] = None) -> OracleReport:
    """The report's witness lies outside every Δ(X; τ_i), i ∈ U, and has size
    below the sum over factors of the minimal generator size."""
    cap = enumeration_cap() if cap is None else cap
    rep = OracleReport("degree_witness", {"delta": str(delta), "ambient": str(delta.ambient)})
    prof = determinantal_profile(delta)
    if prof.lam.spread < 2:
        return rep.skip("not_applicable", spread=prof.lam.spread)
    D = _bi_interval_or_skip(rep, delta, cap)
    if D is None:
        return rep
    report = det_report(delta, cap=cap)
    fam = report.family
    arrays = _bi_arr(D, min(delta.ambient.m, delta.ambient.n))
    sizes = arrays[0]
    above = {i: _above_mask(arrays, prof.taus[i - 1]) for i in fam.U}
    mins = []
    for lv in fam.levels:
        gens = np.ones(len(D), dtype=bool)
        for i in lv.U:
            gens &= ~above[i]
        if not gens.any():
            return rep.fail(reason=f"factor h={lv.h} has no generators")
        mins.append(int(sizes[gens].min()))
    product_min = sum(mins)
    wit = report.witness
    rep.cases = len(D) * len(fam.levels)
    rep.details.update(
        witness=None if wit is None else str(wit.element),
        degree=None if wit is None else wit.degree,
        factor_min_degrees=mins,
        product_min_degree=product_min,
    )
    if wit is None:
        return rep.fail(reason="report carries no witness")
    q = D.index(wit.element) if wit.element in D else None
    if q is None:
        return rep.fail(reason="witness is not in the interval", witness=str(wit.element))
    if any(above[i][q] for i in fam.U):
        return rep.fail(reason="witness lies above some tau_i", witness=str(wit.element))
    if not wit.element.size < product_min:
        return rep.fail(reason="witness degree not below product degree", witness=str(wit.element), product_min=product_min)
    if wit.exact and wit.product_min_degree != product_min:
        return rep.fail(reason="report product degree disagrees with enumeration", report=wit.product_min_degree, enumerated=product_min)
    return rep


# -- sweeps --------------------------------------------------------------------


def schubert_cases(max_m: int, max_n: int) -> Iterator[SchubertIndex]:
    for n in range(1, max_n + 1):
        for m in range(1, min(max_m, n) + 1):
            yield from enumerate_schubert_interval(Ambient(m, n))


def bi_cases(max_m: int, max_n: int) -> Iterator[BiMinor]:
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            yield from enumerate_bi_interval(Ambient(m, n))


@dataclass
class SuiteSummary:
    name: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped_cap: int = 0
    skipped_other: int = 0
    first_failure: Optional[OracleReport] = None
    elapsed: float = 0.0

    def add(self, rep: OracleReport) -> None:
        self.total += 1
        self.elapsed += rep.elapsed
        if rep.passed:
            self.passed += 1
        elif rep.failed:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = rep
        elif rep.skip_reason == "cap":
            self.skipped_cap += 1
        else:
            self.skipped_other += 1

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "suite": self.name,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "skipped_cap": self.skipped_cap,
            "skipped_not_applicable": self.skipped_other,
            "first_failure": None if self.first_failure is None else self.first_failure.to_dict(timings),
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def run_suite(name: str, reports: Iterable[OracleReport]) -> SuiteSummary:
    s = SuiteSummary(name)
    for r in reports:
        s.add(r)
    return s


def _levels(gamma):
    return range(1, kappa_profile(block_decompose(gamma)).spread + 1)


def full_sweep(
    max_m: int,
    max_n: int,
    trials: int = 20,
    seed: int = 0,
    bound: int = 100,
    cap: Optional[int] = None,
    det_max_m: Optional[int] = None,
    det_max_n: Optional[int] = None,
) -> list[SuiteSummary]:
    """Every oracle suite over all Schubert indices with m <= max_m, n <= max_n and
    all minors with m <= det_max_m, n <= det_max_n (defaults: the same bounds)."""
    cap = enumeration_cap() if cap is None else cap
    dm = max_m if det_max_m is None else det_max_m
    dn = max_n if det_max_n is None else det_max_n
    gammas = list(schubert_cases(max_m, max_n))
    deltas = list(bi_cases(dm, dn))
    suites = [
        run_suite("multidegree_identity", (check_multidegree_identity(g, cap=cap) for g in gammas)),
        run_suite(
            "trace_set_identity",
            (check_trace_set_identity(g, h, cap=cap) for g in gammas for h in _levels(g)),
        ),
        run_suite("pattern_matrix", (check_pattern_matrix(g, seed=seed, bound=bound) for g in gammas)),
        run_suite(
            "straightening",
            (check_straightening(g, h, trials=trials, seed=seed, bound=bound, cap=cap) for g in gammas for h in _levels(g)),
        ),
        run_suite(
            "schubert_degree_witness",
            (check_schubert_degree_witness(g, cap=cap) for g in gammas if len(_levels(g)) >= 2),
        ),
        run_suite(
            "poset_isomorphism",
            [check_poset_isomorphism(m, n, cap=cap) for m in range(1, dm + 1) for n in range(1, dn + 1)]
            + [check_poset_isomorphism(d.ambient.m, d.ambient.n, d, cap=cap) for d in deltas],
        ),
        run_suite("membership_equivalence", (check_membership_equivalence(d, cap=cap) for d in deltas)),
        run_suite("thresholds", (check_thresholds(d, cap=cap) for d in deltas)),
        run_suite(
            "degree_witness",
            (check_degree_witness(d, cap=cap) for d in deltas if determinantal_profile(d).lam.spread >= 2),
        ),
    ]
    return suites
