"""Pydantic documents and report schemas"""
from enum import Enum
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PositiveInt


# Arbitrary-precision integers travel as decimal strings in JSON
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]


# --- System documents ------------------------------------------------------

class FamilyDocument(BaseModel):
    """{"family": "pyrene_chain" | "auxiliary", "n": <int>}"""
    model_config = ConfigDict(extra="forbid")
    family: Literal["pyrene_chain", "auxiliary"]
    n: PositiveInt


class NamedDocument(BaseModel):
    """{"named": "pyrene" | "phenanthrene" | "diphenyl"}"""
    model_config = ConfigDict(extra="forbid")
    named: Literal["pyrene", "phenanthrene", "diphenyl"]


class CellsDocument(BaseModel):
    """{"cells": [[q, r], ...]}"""
    model_config = ConfigDict(extra="forbid")
    cells: list[tuple[int, int]] = Field(min_length=1)


SystemDocument = Union[FamilyDocument, NamedDocument, CellsDocument]


# --- Matching level reports -------------------------------------------------

class Method(str, Enum):
    DEFINITION = "definition-search"
    HEXAGON_ORACLE = "hexagon-oracle"
    COMPATIBLE_ORACLE = "compatible-oracle"


class AltSetReport(BaseModel):
    """Maximum family of alternating cycles with its witnesses"""
    size: int
    witnesses: list[list[int]]


class ForcingResult(BaseModel):
    """Forcing number of one perfect matching.

    ``witness_set`` is a minimum forcing set for definition-search; the oracle
    reports its alternating hexagons in ``witness_cycles`` instead.
    """
    value: int
    witness_set: list[int]
    method: Method
    witness_cycles: list[list[int]] = []


class AntiForcingResult(BaseModel):
    """Anti-forcing number of one perfect matching"""
    value: int
    witness_set: list[int]
    method: Method
    witness_cycles: list[list[int]] = []


class SpectrumReport(BaseModel):
    histogram: dict[int, BigInt]
    min: int
    max: int

    @property
    def support(self) -> list[int]:
        return sorted(k for k, v in self.histogram.items() if v)

    @property
    def contiguous(self) -> bool:
        return self.support == list(range(self.min, self.max + 1))


# --- CLI reports --------------------------------------------------------------

class GraphStats(BaseModel):
    cells: list[list[int]]
    vertices: int
    edges: int
    faces: int
    bipartition: list[int]


class MatchingsReport(BaseModel):
    count: BigInt
    matchings: list[list[int]]


class PolynomialReport(BaseModel):
    kind: Literal["forcing", "antiforcing"]
    method: str
    polynomial: list[BigInt]
    min: int
    max: int
    phi: BigInt
    derivative_at_one: BigInt


class SpectrumTable(BaseModel):
    kind: Literal["forcing", "antiforcing"]
    method: str
    histogram: dict[int, BigInt]
    min: int
    max: int
    support: list[int]
    contiguous: bool


class SequenceRow(BaseModel):
    n: int
    route: str
    value: BigInt


class RatioRow(BaseModel):
    n: int
    ratio: str  # exact "p/q"


class SequenceTable(BaseModel):
    name: Literal["phi", "idf", "af_sum"]
    rows: list[SequenceRow]
    ratios: list[RatioRow] = Field(default_factory=list)


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    id: str
    status: CheckStatus
    detail: str = ""


class ValidationReport(BaseModel):
    passed: bool
    checks: list[CheckResult]
    failures: list[str]


# --- Run configuration ----------------------------------------------------------

class RunConfig(BaseModel):
    """One CLI invocation, validated before any work starts"""
    command: Literal["generate", "matchings", "polynomial", "spectrum", "sequence", "validate"]
    system: Optional[str] = None
    family: Optional[Literal["pyrene_chain", "auxiliary"]] = None
    n: Optional[PositiveInt] = None
    kind: Literal["forcing", "antiforcing"] = "forcing"
    method: Literal["brute", "oracle", "recurrence", "closed"] = "brute"
    sequence: Literal["phi", "idf", "af_sum"] = "phi"
    format: Literal["json", "csv"] = "json"
    out: Optional[str] = None
    max_n: Optional[PositiveInt] = None
    forcing_seed: Optional[list[int]] = None
