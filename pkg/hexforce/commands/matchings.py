"""matchings: every perfect matching as a sorted list of edge indices"""
from hexforce.commands import load_input
from hexforce.config import Settings
from hexforce.matching import enumerate_perfect_matchings
from hexforce.schemas import MatchingsReport, RunConfig

HEADER = ("index", "edges")


def run(config: RunConfig, settings: Settings) -> MatchingsReport:
    _, g = load_input(config)
    matchings = enumerate_perfect_matchings(g)
    return MatchingsReport(count=len(matchings), matchings=[list(m.edges) for m in matchings])


def csv_rows(report: MatchingsReport) -> tuple[tuple[str, ...], list[list]]:
    return HEADER, [
        [k, " ".join(str(e) for e in edges)] for k, edges in enumerate(report.matchings)
    ]
