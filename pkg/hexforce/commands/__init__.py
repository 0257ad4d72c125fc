"""CLI subcommands"""
from pathlib import Path
from typing import Optional

from hexforce.errors import InvalidParameterError
from hexforce.hexsystem import build_auxiliary_system, build_pyrene_chain, load_graph, to_graph
from hexforce.models import Graph, HexSystem
from hexforce.schemas import RunConfig


def read_system_argument(value: str) -> bytes:
    """``--system`` takes inline JSON or a path to a JSON file"""
    if value.lstrip().startswith("{"):
        return value.encode("utf-8")
    path = Path(value)
    if not path.is_file():
        raise InvalidParameterError(f"System file not found: {value}")
    return path.read_bytes()


def load_input(config: RunConfig) -> tuple[Optional[HexSystem], Graph]:
    """System and graph named by --system or by --family/--n"""
    if config.system is not None and config.family is not None:
        raise InvalidParameterError("Use either --system or --family, not both")
    if config.system is not None:
        return load_graph(read_system_argument(config.system))
    if config.family is not None:
        if config.n is None:
            raise InvalidParameterError("--family needs --n")
        if config.family == "pyrene_chain":
            system = build_pyrene_chain(config.n)
        else:
            system = build_auxiliary_system(config.n)
        return system, to_graph(system)
    raise InvalidParameterError("No input system: pass --system or --family with --n")
