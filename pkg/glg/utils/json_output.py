# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Output rendering - schema-tagged JSON and plain-text tables."""

import json
from typing import Any, Dict, List, Mapping, Sequence

from glg.constants import JSON_SAFE_INTEGER, SCHEMA_VERSION


def json_safe(value: Any) -> Any:
    """Recursively replace integers beyond the JSON-safe range by decimal strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > JSON_SAFE_INTEGER else value
    if isinstance(value, Mapping):
        return {key: json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    return value


def render_json(payload: Mapping[str, Any]) -> str:
    """Payload as indented JSON with a leading "schema" key."""
    document: Dict[str, Any] = {"schema": SCHEMA_VERSION}
    document.update(json_safe(payload))
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        if all(isinstance(item, (int, str)) and not isinstance(item, bool) for item in value):
            return " ".join(str(item) for item in value)
        return json.dumps(json_safe(value), ensure_ascii=False)
    if isinstance(value, Mapping):
        return json.dumps(json_safe(value), ensure_ascii=False)
    return str(value)


def _columns(rows: Sequence[Mapping[str, Any]]) -> List[str]:
    headers: List[str] = []
    for row in rows:
        headers.extend(key for key in row if key not in headers)
    cells = [[_cell(row.get(header)) for header in headers] for row in rows]
    widths = [
        max(len(header), *(len(line[i]) for line in cells))
        for i, header in enumerate(headers)
    ]

    def join(values: Sequence[str]) -> str:
        return "  ".join(v.ljust(w) for v, w in zip(values, widths)).rstrip()

    return [join(headers), join(["-" * w for w in widths])] + [join(line) for line in cells]


def render_table(payload: Mapping[str, Any]) -> str:
    """
    Payload as aligned plain text.

    Scalars print as "key: value", lists of records as a column table and
    other mappings one entry per line.
    """
    lines: List[str] = []
    for key, value in payload.items():
        if (
            isinstance(value, list)
            and value
            and all(isinstance(item, Mapping) for item in value)
        ):
            lines.append(f"{key}:")
            lines.extend(f"  {line}" for line in _columns(value))
        elif isinstance(value, Mapping) and value:
            lines.append(f"{key}:")
            lines.extend(f"  {name}: {_cell(item)}" for name, item in value.items())
        else:
            lines.append(f"{key}: {_cell(value)}")
    return "\n".join(lines) + "\n"
