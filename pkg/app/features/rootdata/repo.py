"""
Structure Table Repository

Deterministic JSON serialization of bracket tables for golden-file
comparison. Coefficients are stored as rendered strings.
"""

import json
from pathlib import Path

from app.core.exceptions import UsageException
from app.core.logging import get_logger
from app.features.exactalg.schema import Field
from app.features.rootdata.schema import LABELS, StructureTable

logger = get_logger(__name__)


def _field_from_text(text: str) -> Field:
    if text == "generic":
        return Field.generic()
    p, d = text.split("/")
    return Field.rational(int(p), int(d))


def table_to_dict(table: StructureTable) -> dict:
    """
    Canonical mapping form of a table.

    Pairs appear in basis order; zero brackets are omitted.
    """
    field = table.field
    brackets = []
    for x in LABELS:
        for y in LABELS:
            combo = table.bracket(x, y)
            if not combo:
                continue
            brackets.append(
                {
                    "x": x,
                    "y": y,
                    "value": {label: field.render(combo[label]) for label in LABELS if label in combo},
                }
            )
    return {"field": field.describe(), "basis": list(LABELS), "brackets": brackets}


def dump_table(table: StructureTable) -> str:
    return json.dumps(table_to_dict(table), indent=2, ensure_ascii=False)


def load_table(text: str) -> StructureTable:
    """
    Rebuild a table from its JSON dump.

    Raises:
        UsageException: If the dump is malformed
    """
    try:
        data = json.loads(text)
        field = _field_from_text(data["field"])
        brackets = {(x, y): {} for x in LABELS for y in LABELS}
        for entry in data["brackets"]:
            brackets[(entry["x"], entry["y"])] = {
                label: field.parse(value) for label, value in entry["value"].items()
            }
    except (KeyError, ValueError, TypeError) as e:
        raise UsageException(f"Malformed structure table dump: {e}")
    return StructureTable(field=field, brackets=brackets)


def save_table(table: StructureTable, path: Path) -> None:
    path.write_text(dump_table(table), encoding="utf-8")
    logger.info(f"📥 Structure table written to {path}")


def read_table(path: Path) -> StructureTable:
    return load_table(path.read_text(encoding="utf-8"))
