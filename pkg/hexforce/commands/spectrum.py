"""spectrum: histogram and support of a forcing or anti-forcing polynomial"""
from hexforce.commands import load_input
from hexforce.commands.polynomial import compute_polynomial
from hexforce.config import Settings
from hexforce.forcing import spectrum_of
from hexforce.schemas import RunConfig, SpectrumTable

HEADER = ("exponent", "count")


def run(config: RunConfig, settings: Settings) -> SpectrumTable:
    system, g = load_input(config)
    report = spectrum_of(compute_polynomial(config, settings, system, g))
    return SpectrumTable(
        kind=config.kind,
        method=config.method,
        histogram=report.histogram,
        min=report.min,
        max=report.max,
        support=report.support,
        contiguous=report.contiguous,
    )


def csv_rows(report: SpectrumTable) -> tuple[tuple[str, ...], list[list]]:
    return HEADER, [[k, report.histogram[k]] for k in sorted(report.histogram)]
