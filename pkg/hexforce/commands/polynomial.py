"""polynomial: forcing or anti-forcing polynomial by one of four methods"""
import logging
from typing import Optional

from hexforce.antiforcing import anti_forcing_polynomial
from hexforce.commands import load_input
from hexforce.config import Settings
from hexforce.errors import MethodMismatchError
from hexforce.forcing import forcing_polynomial
from hexforce.models import Graph, HexSystem
from hexforce.poly.intpoly import IntPoly
from hexforce.poly.sequences import (
    antiforcing_poly_closed,
    antiforcing_poly_recurrence,
    forcing_poly_closed,
    forcing_poly_recurrence,
)
from hexforce.schemas import Method, PolynomialReport, RunConfig

logger = logging.getLogger(__name__)

HEADER = ("exponent", "coefficient")

ORACLES = {"forcing": Method.HEXAGON_ORACLE, "antiforcing": Method.COMPATIBLE_ORACLE}


def compute_polynomial(
    config: RunConfig,
    settings: Settings,
    system: Optional[HexSystem],
    g: Graph,
) -> IntPoly:
    """Dispatch on --kind and --method"""
    if config.method in ("recurrence", "closed"):
        if system is None or system.family != "pyrene_chain":
            raise MethodMismatchError(f"Method {config.method} requires a pyrene chain input")
        if config.kind == "forcing":
            build = forcing_poly_recurrence if config.method == "recurrence" else forcing_poly_closed
        else:
            build = antiforcing_poly_recurrence if config.method == "recurrence" else antiforcing_poly_closed
        return build(system.n)

    method = ORACLES[config.kind] if config.method == "oracle" else Method.DEFINITION
    if method != Method.DEFINITION and (system is None or not system.is_chain_family):
        raise MethodMismatchError("Oracle methods require a pyrene chain or auxiliary system input")
    target = system if system is not None else g
    logger.info("%s polynomial of %s by %s", config.kind, g.name, method.value)
    if config.kind == "forcing":
        return forcing_polynomial(target, method, settings)
    return anti_forcing_polynomial(target, method, settings)


def run(config: RunConfig, settings: Settings) -> PolynomialReport:
    system, g = load_input(config)
    poly = compute_polynomial(config, settings, system, g)
    return PolynomialReport(
        kind=config.kind,
        method=config.method,
        polynomial=list(poly.coeffs),
        min=poly.valuation(),
        max=poly.degree(),
        phi=poly.eval_at(1),
        derivative_at_one=poly.derivative().eval_at(1),
    )


def csv_rows(report: PolynomialReport) -> tuple[tuple[str, ...], list[list]]:
    return HEADER, [[k, c] for k, c in enumerate(report.polynomial)]
