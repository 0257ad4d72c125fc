"""Deterministic JSON / CSV emission"""
import csv
import io
import json
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from pydantic import BaseModel


def to_json(report: BaseModel) -> str:
    """
    Serialize a report with a stable layout.

    Field order follows the model; big integers are already decimal strings
    through the BigInt serializer.

    Args:
        report: Any pydantic report model

    Returns:
        Indented JSON text ending in a newline
    """
    return json.dumps(report.model_dump(mode="json"), indent=2) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """CSV with minimal quoting; integers are written in full decimal form"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(value) for value in row])
    return buffer.getvalue()


def write_output(text: str, out: Optional[str] = None) -> None:
    """Write to ``out`` when given, otherwise to stdout"""
    if out:
        path = Path(out)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
