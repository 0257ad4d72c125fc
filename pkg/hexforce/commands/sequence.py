"""sequence: phi, idf or af_sum for n = 0..max_n through every route"""
from hexforce.config import Settings
from hexforce.errors import CapExceededError
from hexforce.poly.sequences import sequence_table
from hexforce.schemas import RunConfig, SequenceTable

HEADER = ("n", "route", "value")

DEFAULT_MAX_N = 10


def run(config: RunConfig, settings: Settings) -> SequenceTable:
    max_n = config.max_n or DEFAULT_MAX_N
    if max_n > settings.arithmetic_max_n:
        raise CapExceededError(f"--max-n {max_n} exceeds arithmetic_max_n={settings.arithmetic_max_n}")
    return sequence_table(config.sequence, max_n)


def csv_rows(report: SequenceTable) -> tuple[tuple[str, ...], list[list]]:
    return HEADER, [[row.n, row.route, row.value] for row in report.rows]
