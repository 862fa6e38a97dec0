"""Bundled polynomial corpus and file loading.

Corpus files are plain text: '#' lines are notes, a single ``vars:``
header names the two variables, and the remaining lines hold one
polynomial in the module grammar.  The directory of bundled entries can
be overridden with the SLOPESMITH_CORPUS environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .laurent import LaurentPoly2, PolyParseError, parse_poly

_ALLOWED_VARS = (("m", "b"), ("m", "l"))


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    path: Path
    var_names: tuple[str, str]
    notes: tuple[str, ...]
    poly: LaurentPoly2


def corpus_dir() -> Path:
    override = os.environ.get("SLOPESMITH_CORPUS")
    if override:
        return Path(override)
    return Path(resources.files("slopesmith") / "corpus")


def list_corpus() -> list[str]:
    base = corpus_dir()
    if not base.is_dir():
        return []
    return sorted(p.stem.replace("_", "-") for p in base.glob("*.poly"))


def load_poly_file(path) -> CorpusEntry:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as err:
        raise CorpusError(f"cannot read {path}: {err}") from err
    notes: list[str] = []
    var_names: tuple[str, str] | None = None
    body: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            notes.append(stripped.lstrip("#").strip())
            continue
        if stripped.startswith("vars:"):
            if var_names is not None:
                raise CorpusError(f"{path}: duplicate vars header")
            fields = stripped[len("vars:"):].split()
            if len(fields) != 2:
                raise CorpusError(f"{path}: vars header needs two names")
            var_names = (fields[0], fields[1])
            continue
        body.append(stripped)
    if var_names is None:
        raise CorpusError(f"{path}: missing vars header")
    if var_names not in _ALLOWED_VARS:
        raise CorpusError(f"{path}: variable labels must be m,b or m,l")
    if not body:
        raise CorpusError(f"{path}: no polynomial text")
    try:
        poly = parse_poly(" ".join(body), var_names)
    except PolyParseError as err:
        raise CorpusError(f"{path}: {err}") from err
    if poly.is_zero():
        raise CorpusError(f"{path}: polynomial is zero")
    name = path.stem.replace("_", "-")
    return CorpusEntry(name, path, var_names, tuple(notes), poly)


def load_corpus_entry(name: str) -> CorpusEntry:
    base = corpus_dir()
    for candidate in (name, name.replace("-", "_")):
        path = base / f"{candidate}.poly"
        if path.is_file():
            return load_poly_file(path)
    known = ", ".join(list_corpus()) or "none"
    raise CorpusError(f"no corpus entry {name!r} (available: {known})")


def resolve_poly_source(source: str) -> CorpusEntry:
    """Accept either a corpus entry name or a path to a .poly file."""
    path = Path(source)
    if path.is_file():
        return load_poly_file(path)
    return load_corpus_entry(source)
