"""Facet-list file formats.

Text format: `#`-prefixed comment lines; every other non-blank line is one
facet as whitespace-separated integer labels.  JSON alternative: an object
with a "facets" key holding a list of lists of integers.  Both round-trip
through `build`.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .complexes import Complex, build


class FacetParseError(ValueError):
    """Malformed facet file; the message carries a line number where possible."""


def parse_facet_text(text: str) -> list[list[int]]:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            facets.append([int(tok) for tok in line.split()])
        except ValueError:
            raise FacetParseError(f"line {lineno}: expected integer labels, got {line!r}") from None
    if not facets:
        raise FacetParseError("no facet lines found")
    return facets


def parse_facet_json(text: str) -> list[list[int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FacetParseError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict) or "facets" not in data:
        raise FacetParseError('JSON input must be an object with a "facets" key')
    facets = data["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) for v in f) for f in facets
    ):
        raise FacetParseError('"facets" must be a list of lists of integers')
    return facets


def load_complex(path: str | Path) -> Complex:
    """Read a facet file (text or JSON, sniffed by content) into a complex."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        facets = parse_facet_json(text)
    else:
        facets = parse_facet_text(text)
    try:
        return build(facets)
    except ValueError as exc:
        raise FacetParseError(str(exc)) from None


def facet_lines(complex_: Complex) -> list[str]:
    return [" ".join(map(str, f)) for f in complex_.facets]


def facet_body_checksum(complex_: Complex) -> str:
    """sha256 over the canonical facet-line body; used by persisted data files."""
    body = "\n".join(facet_lines(complex_)) + "\n"
    return hashlib.sha256(body.encode()).hexdigest()


def dump_facet_text(complex_: Complex, header_comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in (header_comments or [])]
    lines.extend(facet_lines(complex_))
    return "\n".join(lines) + "\n"


def dump_facet_json(complex_: Complex) -> str:
    return json.dumps({"facets": [list(f) for f in complex_.facets]}, indent=None) + "\n"


def save_complex(
    complex_: Complex, path: str | Path, header_comments: list[str] | None = None
) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(dump_facet_json(complex_))
    else:
        path.write_text(dump_facet_text(complex_, header_comments))
