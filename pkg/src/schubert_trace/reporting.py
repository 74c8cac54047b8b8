"""Serialization of analysis reports and oracle summaries.

JSON output is canonical: sorted keys, fixed indentation, ASCII only.
"""
from __future__ import annotations

import json
from typing import Optional, Union

from . import __version__
from .determinantal_analysis import DeterminantalReport
from .minor_poset import BiMinor, SchubertIndex
from .schubert_analysis import BaseRingAssumptions, SchubertReport, TraceDescription, Unit

Element = Union[SchubertIndex, BiMinor, Unit]

# Published worked-example values that disagree with direct evaluation of the
# defining formulas; both are surfaced in the report.
DISPUTED = {
    ("schubert", 4, 8, (1, 3, 4, 7)): [("sigma_2", "[1 4 7 8]")],
    ("determinantal", 4, 4, (1, 3, 4), (1, 3, 4)): [("tau_tilde_2", "[1 4 7 8]")],
    ("schubert", 4, 9, (1, 3, 4, 8)): [
        ("sigma_2", "[1 4 8 9]"),
        ("U_1", [1]),
        ("U_2", [1, 2]),
    ],
    ("determinantal", 4, 5, (1, 3, 4), (1, 3, 4)): [
        ("tau_tilde_2", "[1 4 8 9]"),
        ("tau_2", "[3 4 | 1 4]"),
        ("U_1", [1]),
        ("U_2", [1, 2]),
        ("trace", "I(x;[1 3 4|3 4 5]) · (I(x;[1 3 4|3 4 5]) ∩ I(x;[3 4|1 4]))"),
    ],
}


def element_json(x: Element) -> str:
    if isinstance(x, Unit):
        return "unit"
    return str(x)


def _compact(x: Element) -> str:
    if isinstance(x, Unit):
        return "1"
    if isinstance(x, BiMinor):
        return x.compact()
    return str(x)


def render_trace(trace: TraceDescription, ideal: str = "I") -> str:
    """Render as e.g. ``I(x;[1 3|4 5]) · I(x;[3|1])``; ``(1)`` for the unit ideal."""
    if trace.is_unit_ideal:
        return "(1)"
    parts = []
    for factor in trace.factors:
        body = " ∩ ".join(f"{ideal}(x;{_compact(p.element)})" for p in factor)
        if len(factor) > 1 and len(trace.factors) > 1:
            body = f"({body})"
        parts.append(body)
    return " · ".join(parts)


def render_intersection(elements, ideal: str, token: Optional[str] = None) -> str:
    parts = [f"{ideal}(x;{_compact(e)})" for e in elements]
    if token is not None:
        parts.append(f"{token}·R")
    return " ∩ ".join(parts) if parts else "(1)"


def base_json(base: BaseRingAssumptions) -> dict:
    return {
        "gorenstein_normal_domain": base.gorenstein_normal_domain,
        "reduced_cm_with_canonical": base.reduced_cm_with_canonical,
        "base_is_ctr": base.ctr,
    }


def _blocks_json(bd) -> dict:
    return {
        "t": bd.t,
        "boundaries": list(bd.boundaries),
        "blocks": [list(b) for b in bd.blocks],
        "gaps": [list(g) for g in bd.gaps],
    }


def _boundary_json(fam) -> list:
    return [
        {"h": lv.h, "S": list(lv.S), "T": list(lv.T), "U_plus": list(lv.U_plus), "U_minus": list(lv.U_minus), "U": list(lv.U)}
        for lv in fam.levels
    ]


def _trace_json(trace: TraceDescription, ideal: str) -> dict:
    return {
        "factors": [
            {"h": h, "primes": [{"i": p.index, "element": element_json(p.element)} for p in f]}
            for h, f in enumerate(trace.factors, start=1)
        ],
        "expression": render_trace(trace, ideal),
        "unit_ideal": trace.is_unit_ideal,
    }


def _ctr_json(rep, ideal: str, elements: dict) -> dict:
    out = {"verdict": rep.ctr.verdict, "reason": rep.ctr.reason, "trace_indices": None, "trace": None}
    if rep.ctr_trace is not None:
        out["trace_indices"] = list(rep.ctr_trace)
        out["trace"] = render_intersection([elements[i] for i in rep.ctr_trace], ideal, rep.base_change_token)
    return out


def _locus_json(rep, ideal: str) -> dict:
    return {
        "primes": [element_json(p) for p in rep.locus_primes],
        "base_token": rep.locus_base_token,
        "expression": render_intersection(rep.locus_primes, ideal, rep.locus_base_token),
    }


def _lookup(d: dict, quantity: str):
    if quantity == "trace":
        return d["trace"]["expression"]
    name, _, idx = quantity.rpartition("_")
    i = int(idx)
    if name == "U":
        levels = d["boundary_sets"]
        return levels[i - 1]["U"] if i <= len(levels) else None
    if name == "sigma":
        return d["sigma"][i - 1]
    if name == "tau_tilde":
        return d["tau_tilde"][i - 1]
    if name == "tau":
        return d["tau"][i - 1]
    raise KeyError(quantity)


def _disputed(key, d: dict) -> list:
    out = []
    for quantity, published in DISPUTED.get(key, []):
        out.append({"quantity": quantity, "published": published, "computed": _lookup(d, quantity)})
    return out


def schubert_json(rep: SchubertReport) -> dict:
    g = rep.gamma
    sig = {i: s for i, s in enumerate(rep.sigmas, start=1)}
    d = {
        "kind": "schubert",
        "version": __version__,
        "input": {"m": g.m, "n": g.n, "gamma": list(g.cols), "base": base_json(rep.base)},
        "blocks": _blocks_json(rep.blocks),
        "kappa": {"values": list(rep.kappa.kappas), "max": rep.kappa.kappa_max, "min": rep.kappa.kappa_min, "spread": rep.kappa.spread},
        "zeta": [str(z) for z in rep.zetas],
        "sigma": [str(s) for s in rep.sigmas],
        "boundary_sets": _boundary_json(rep.family),
        "canonical_class": [{"coefficient": k, "prime": str(z)} for k, z in rep.canonical_class],
        "trace": _trace_json(rep.trace, "J"),
        "ctr": _ctr_json(rep, "J", sig),
        "gorenstein_locus": _locus_json(rep, "J"),
        "witness": None
        if rep.witness is None
        else {
            "element": str(rep.witness.element),
            "degree": rep.witness.degree,
            "product_min_degree": rep.witness.product_min_degree,
            "exact": True,
        },
        "closed_form": None,
    }
    d["disputed_fixtures"] = _disputed(("schubert", g.m, g.n, g.cols), d)
    return d


def determinantal_json(rep: DeterminantalReport) -> dict:
    dl = rep.delta
    prof = rep.profile
    taus = {i: t for i, t in enumerate(prof.taus, start=1)}
    d = {
        "kind": "determinantal",
        "version": __version__,
        "input": {"m": dl.ambient.m, "n": dl.ambient.n, "rows": list(dl.rows), "cols": list(dl.cols), "base": base_json(rep.base)},
        "delta_tilde": str(prof.lifted),
        "blocks": _blocks_json(prof.blocks),
        "lambda": {"values": list(prof.lam.kappas), "max": prof.lam.kappa_max, "min": prof.lam.kappa_min, "spread": prof.lam.spread},
        "eta": [element_json(e) for e in prof.etas],
        "eta_tilde": [str(e) for e in prof.eta_tilde],
        "tau": [element_json(t) for t in prof.taus],
        "tau_tilde": [str(t) for t in prof.tau_tilde],
        "thresholds": list(rep.thresholds),
        "boundary_sets": _boundary_json(rep.family),
        "canonical_class": [{"coefficient": k, "prime": element_json(e)} for k, e in zip(prof.lam.kappas, prof.etas)],
        "trace": _trace_json(rep.trace, "I"),
        "ctr": _ctr_json(rep, "I", taus),
        "gorenstein_locus": _locus_json(rep, "I"),
        "witness": None
        if rep.witness is None
        else {
            "element": str(rep.witness.element),
            "degree": rep.witness.degree,
            "product_min_degree": rep.witness.product_min_degree,
            "factor_min_degrees": list(rep.witness.factor_min_degrees),
            "exact": rep.witness.exact,
        },
        "closed_form": rep.closed_form,
    }
    d["disputed_fixtures"] = _disputed(("determinantal", dl.ambient.m, dl.ambient.n, dl.rows, dl.cols), d)
    return d


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def report_text(d: dict) -> str:
    """Human-readable rendering of a report dictionary."""
    inp = d["input"]
    kind = d["kind"]
    lines = []
    if kind == "schubert":
        lines.append(f"Schubert cycle G(X; {_br(inp['gamma'])}), X is {inp['m']}x{inp['n']}")
        prof_key, elem_key, elem_name = "kappa", "sigma", "sigma"
    else:
        lines.append(
            f"determinantal ring R(X; [{' '.join(map(str, inp['rows']))} | {' '.join(map(str, inp['cols']))}]), "
            f"X is {inp['m']}x{inp['n']}"
        )
        lines.append(f"lift: {d['delta_tilde']}")
        prof_key, elem_key, elem_name = "lambda", "tau", "tau"
    b = d["blocks"]
    lines.append(f"t = {b['t']}")
    lines.append("blocks: " + ", ".join(f"b{i}={_set(x)}" for i, x in enumerate(b["blocks"])))
    lines.append("gaps:   " + ", ".join(f"c{i}={_set(x)}" for i, x in enumerate(b["gaps"])))
    p = d[prof_key]
    lines.append(f"{prof_key}: {p['values']}  spread {p['spread']}")
    if kind == "determinantal":
        lines.append("tau~: " + ", ".join(d["tau_tilde"]))
        lines.append("thresholds N: " + str(d["thresholds"]))
    lines.append(f"{elem_name}: " + ", ".join(d[elem_key]))
    for lv in d["boundary_sets"]:
        lines.append(f"level {lv['h']}: S={_set(lv['S'])} T={_set(lv['T'])} U={_set(lv['U'])}")
    lines.append("canonical class: " + " + ".join(f"{c['coefficient']}*cl({c['prime']})" for c in d["canonical_class"]))
    lines.append("canonical trace: " + d["trace"]["expression"])
    ctr = d["ctr"]
    lines.append(f"CTR: {'yes' if ctr['verdict'] else 'no'} ({ctr['reason']})")
    if ctr["trace"] is not None:
        lines.append("  trace as intersection: " + ctr["trace"])
    lines.append("non-Gorenstein locus: " + d["gorenstein_locus"]["expression"])
    if d["witness"] is not None:
        w = d["witness"]
        lines.append(
            f"non-radical witness: {w['element']} of degree {w['degree']} < {w['product_min_degree']}"
            + ("" if w["exact"] else " (lower bound)")
        )
    if d["closed_form"]:
        lines.append(f"closed form: {d['closed_form']}")
    for fx in d["disputed_fixtures"]:
        lines.append(f"disputed {fx['quantity']}: published {fx['published']}, computed {fx['computed']}")
    return "\n".join(lines) + "\n"


def _br(xs) -> str:
    return "[" + " ".join(map(str, xs)) + "]"


def _set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def verify_json(params: dict, suites) -> dict:
    return {
        "kind": "verify",
        "version": __version__,
        "input": params,
        "suites": [s.to_dict(params.get("timings", False)) for s in suites],
        "verdict": "pass" if all(s.ok for s in suites) else "fail",
    }


def verify_text(d: dict) -> str:
    lines = [f"verification sweep {d['input']}"]
    for s in d["suites"]:
        status = "pass" if s["failed"] == 0 else "FAIL"
        lines.append(
            f"{s['suite']:<24} {status}  {s['passed']}/{s['total']} passed"
            + (f", {s['skipped_cap']} skipped (cap)" if s["skipped_cap"] else "")
            + (f", {s['skipped_not_applicable']} not applicable" if s["skipped_not_applicable"] else "")
        )
        if s["first_failure"] is not None:
            lines.append(f"  first failure: {json.dumps(s['first_failure'], sort_keys=True)}")
    lines.append(f"overall: {d['verdict']}")
    return "\n".join(lines) + "\n"
