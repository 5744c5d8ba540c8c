"""Deterministic report rendering: stable JSON and aligned text.

JSON reports are versioned ({"schema": "kummerlab/1"}), keys sorted, and
never contain floating-point values; repeated runs are byte-identical.
"""

import json

SCHEMA = "kummerlab/1"


def render_json(command: str, result) -> str:
    doc = {"schema": SCHEMA, "command": command, "result": result}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _text_lines(value, indent: int):
    pad = "  " * indent
    if isinstance(value, dict):
        for key in sorted(value):
            sub = value[key]
            if isinstance(sub, (dict, list)) and not _is_flat_list(sub):
                yield f"{pad}{key}:"
                yield from _text_lines(sub, indent + 1)
            else:
                yield f"{pad}{key}: {_flat(sub)}"
    elif isinstance(value, list):
        for i, sub in enumerate(value):
            if isinstance(sub, (dict, list)) and not _is_flat_list(sub):
                yield f"{pad}[{i}]"
                yield from _text_lines(sub, indent + 1)
            else:
                yield f"{pad}- {_flat(sub)}"
    else:
        yield f"{pad}{_flat(value)}"


def _is_flat_list(value) -> bool:
    return isinstance(value, list) and all(
        not isinstance(v, (dict, list)) for v in value
    )


def _flat(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    if value is None:
        return "none"
    return str(value)


def render_text(result) -> str:
    return "\n".join(_text_lines(result, 0)) + "\n"
