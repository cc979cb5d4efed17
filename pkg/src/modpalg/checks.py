"""Registry of named verification checks shared by the CLI and the service.

Every check takes a flat parameter dict (already validated for types) and
returns a list of VerdictReports.  verify-all fans out over the default
desk-scale parameter grid.
"""

from __future__ import annotations

from typing import Any, Callable

from . import invariants, spectral, symfun, topology
from .algebra import is_odd_prime
from .reports import VerdictReport

Params = dict[str, Any]


def _p(params: Params, default: int = 3) -> int:
    return params.get("p") or default


def run_mui(params: Params) -> list[VerdictReport]:
    return [invariants.verify_mui_presentation(_p(params), params.get("max_degree") or 40)]


def run_vistoli(params: Params) -> list[VerdictReport]:
    return [invariants.verify_vistoli_integral(_p(params), params.get("max_degree") or 24)]


def run_prop_s(params: Params) -> list[VerdictReport]:
    return [topology.verify_prop_s(_p(params))]


def run_main(params: Params) -> list[VerdictReport]:
    return [topology.verify_main(_p(params), params.get("blocks") or 1)]


def run_yagita(params: Params) -> list[VerdictReport]:
    return [topology.verify_yagita(_p(params), params.get("max_degree") or 3,
                                   params.get("blocks") or 1)]


def run_lambda(params: Params) -> list[VerdictReport]:
    return [topology.verify_lambda_formula(_p(params), params.get("max_degree") or 3)]


def run_theta(params: Params) -> list[VerdictReport]:
    return [topology.verify_theta(_p(params))]


def run_delta(params: Params) -> list[VerdictReport]:
    p = _p(params)
    n = params.get("n") or 3 * p
    return [topology.check_delta_lemma(p, n, params.get("max_degree"))]


def run_ln(params: Params) -> list[VerdictReport]:
    p = _p(params)
    return [symfun.check_Ln_lemma(p, params.get("n") or 3 * p)]


def run_nabla_onto(params: Params) -> list[VerdictReport]:
    p = _p(params)
    return [symfun.check_nabla_onto_2p(p, params.get("n") or p)]


def run_e4(params: Params) -> list[VerdictReport]:
    p = _p(params)
    return [spectral.verify_e4_identities(p, params.get("n") or p,
                                          params.get("max_degree") or 10)]


def run_all(params: Params) -> list[VerdictReport]:
    """The default desk-scale grid: p = 3, n in {3, 9, 18, 27}, blocks <= 2."""
    p = _p(params)
    blocks = params.get("blocks") or 2
    dmax = params.get("max_degree") or 40
    reports = [
        topology.verify_main(p, blocks),
        topology.verify_prop_s(p),
        invariants.verify_mui_presentation(p, dmax),
        invariants.verify_vistoli_integral(p, min(dmax, 24)),
        topology.verify_theta(p),
        topology.verify_yagita(p, 3),
        topology.verify_lambda_formula(p, 3),
        symfun.check_nabla_onto_2p(p, p),
        symfun.check_nabla_onto_2p(p, 3 * p),
    ]
    for n in (3 * p, 6 * p, 9 * p):
        reports.append(topology.check_delta_lemma(p, n))
    for n in (3 * p, 6 * p):
        reports.append(symfun.check_Ln_lemma(p, n))
    for n in (p, 3 * p):
        reports.append(spectral.verify_e4_identities(p, n, 10))
    return reports


CHECKS: dict[str, Callable[[Params], list[VerdictReport]]] = {
    "verify-mui": run_mui,
    "verify-vistoli": run_vistoli,
    "verify-prop-s": run_prop_s,
    "verify-main": run_main,
    "verify-yagita": run_yagita,
    "verify-lambda": run_lambda,
    "verify-theta": run_theta,
    "verify-delta": run_delta,
    "verify-ln": run_ln,
    "verify-nabla-onto": run_nabla_onto,
    "verify-e4": run_e4,
    "verify-all": run_all,
}


def validate_params(params: Params) -> str | None:
    """Flag-level validation; returns an error message or None."""
    p = params.get("p")
    if p is not None and not is_odd_prime(p):
        return f"--p must be an odd prime, got {p}"
    for key in ("n", "blocks", "max_degree"):
        v = params.get(key)
        if v is not None and v < 1:
            return f"--{key.replace('_', '-')} must be positive, got {v}"
    return None


def run_check(name: str, params: Params) -> list[VerdictReport]:
    if name not in CHECKS:
        raise KeyError(name)
    reports = CHECKS[name](params)
    if "seed" in params and params["seed"] is not None:
        for r in reports:
            r.params.setdefault("seed", params["seed"])
    return sorted(reports, key=lambda r: (r.check, sorted((str(k), str(v)) for k, v in r.params.items())))
