"""Text format for log algebra presentations.

A file has up to three blocks::

    # the cusp with its two coordinate log generators
    [ring]
    variables = x, y
    characteristic = 0
    order = grevlex
    structure = submonoid
    ideal = x^2 - y^3

    [log]
    alpha x = x
    alpha y = y
    relation = 2 x = 3 y

    [base]
    file = plane.pres
    map x = x
    monoid x = x

``ideal`` and ``relation`` may be repeated; ``ideal`` also accepts a
comma-separated list.  In ``[base]``, ``map v = expr`` gives the image of
the base variable v and ``monoid m = vector`` the image of the base log
generator m.  Comments start with ``#``.  Unknown keys are rejected with
the offending line and column.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LogJetsError, ParseError
from .logmonoid import LogAlgebraPresentation, MonoidPresentation, PreLogStructure
from .groebner import Ideal, groebner_basis
from .polycore import Polynomial, PolyRing, parse_polynomial

ORDERS = ("lex", "grevlex")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_VTERM = re.compile(r"\s*(?:(\d+)\s*\*?\s*)?([A-Za-z_][A-Za-z0-9_]*)\s*$")


@dataclass
class PresentationFile:
    variables: list[str]
    characteristic: int = 0
    order: str = "grevlex"
    structure: str = "strict"
    ideal: list[Polynomial] = field(default_factory=list)
    log: list[tuple[str, Polynomial]] = field(default_factory=list)
    relations: list[tuple[tuple, tuple]] = field(default_factory=list)
    base_file: str | None = None
    base: "PresentationFile | None" = None
    ring_map: list[tuple[str, Polynomial]] = field(default_factory=list)
    monoid_map: list[tuple[str, tuple]] = field(default_factory=list)
    path: str | None = None

    @property
    def ring(self) -> PolyRing:
        return PolyRing(self.variables, self.order, self.characteristic)

    @property
    def monoid(self) -> MonoidPresentation:
        return MonoidPresentation([n for n, _ in self.log], self.relations)

    def build(self) -> LogAlgebraPresentation:
        R = self.ring
        G = groebner_basis(Ideal(R, self.ideal))
        M = self.monoid
        pre = PreLogStructure(M, G, [a for _, a in self.log])
        base = self.base.build() if self.base is not None else None
        mmap = None
        if base is not None:
            given = dict(self.monoid_map)
            mmap = [given.get(g, M.zero()) for g in base.log.monoid.generators]
        return LogAlgebraPresentation(G, pre, base=base, ring_map=dict(self.ring_map),
                                      monoid_map=mmap, structure=self.structure,
                                      name=self.path)

    def format(self) -> str:
        M = self.monoid
        out = ["[ring]", f"variables = {', '.join(self.variables)}",
               f"characteristic = {self.characteristic}", f"order = {self.order}",
               f"structure = {self.structure}"]
        if self.ideal:
            out.append("ideal = " + ", ".join(str(g) for g in self.ideal))
        if self.log:
            out += ["", "[log]"]
            out += [f"alpha {n} = {a}" for n, a in self.log]
            out += [f"relation = {M.format(l)} = {M.format(r)}" for l, r in self.relations]
        if self.base_file is not None:
            out += ["", "[base]", f"file = {self.base_file}"]
            out += [f"map {v} = {img}" for v, img in self.ring_map]
            out += [f"monoid {n} = {M.format(v)}" for n, v in self.monoid_map]
        return "\n".join(out) + "\n"

    __str__ = format


def _split_list(value: str, col: int):
    """Split on commas, yielding (piece, column of piece)."""
    pos = 0
    for piece in value.split(","):
        lead = len(piece) - len(piece.lstrip())
        yield piece.strip(), col + pos + lead
        pos += len(piece) + 1


def _parse_vector(text: str, M: MonoidPresentation, line: int, col: int) -> tuple:
    text = text.strip()
    v = [0] * M.n
    if text == "0":
        return tuple(v)
    pos = 0
    for piece in text.split("+"):
        m = _VTERM.match(piece)
        if not m or not piece.strip():
            raise ParseError(f"bad monoid term {piece.strip()!r}", line, col + pos)
        k, name = m.group(1), m.group(2)
        if name not in M.generators:
            raise ParseError(f"unknown log generator {name!r}", line, col + pos)
        v[M.generators.index(name)] += int(k) if k else 1
        pos += len(piece) + 1
    return tuple(v)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield no, raw, body


def parse_presentation(text: str, *, path: str | None = None,
                       _seen: frozenset = frozenset()) -> PresentationFile:
    """Parse the text of a presentation file.  Base files are resolved relative to ``path``."""
    section = None
    entries: dict[str, list] = {"ring": [], "log": [], "base": []}
    for no, raw, body in _lines(text):
        stripped = body.strip()
        if stripped.startswith("["):
            name = stripped[1:-1].strip() if stripped.endswith("]") else None
            if name not in entries:
                raise ParseError(f"unknown block {stripped!r}", no, raw.index("[") + 1)
            section = name
            continue
        if section is None:
            raise ParseError("entry outside of a block", no, len(raw) - len(raw.lstrip()) + 1)
        if "=" not in body:
            raise ParseError("expected 'key = value'", no, len(raw) - len(raw.lstrip()) + 1)
        key, value = body.split("=", 1)
        kcol = len(key) - len(key.lstrip()) + 1
        vcol = len(key) + 2 + len(value) - len(value.lstrip())
        entries[section].append((no, key.strip(), kcol, value.strip(), vcol))

    pf = _ring_block(entries["ring"], path)
    R = pf.ring
    _log_block(entries["log"], pf, R)
    _base_block(entries["base"], pf, R, path, _seen)
    return pf


def _ring_block(items, path) -> PresentationFile:
    seen: dict[str, tuple] = {}
    ideal_items = []
    for no, key, kcol, value, vcol in items:
        if key == "ideal":
            ideal_items.append((no, value, vcol))
            continue
        if key not in ("variables", "characteristic", "order", "structure"):
            raise ParseError(f"unknown key {key!r} in [ring]", no, kcol)
        if key in seen:
            raise ParseError(f"duplicate key {key!r}", no, kcol)
        seen[key] = (no, value, vcol)
    if "variables" not in seen:
        raise ParseError("[ring] needs a 'variables' entry", 1, 1)
    no, value, vcol = seen["variables"]
    names = []
    for name, col in _split_list(value, vcol) if value else ():
        if not _NAME.match(name):
            raise ParseError(f"bad variable name {name!r}", no, col)
        if name in names:
            raise ParseError(f"duplicate variable {name!r}", no, col)
        names.append(name)
    char = 0
    if "characteristic" in seen:
        no, value, vcol = seen["characteristic"]
        if not value.isdigit():
            raise ParseError("characteristic must be 0 or a prime", no, vcol)
        char = int(value)
    order = "grevlex"
    if "order" in seen:
        no, order, vcol = seen["order"]
        if order not in ORDERS:
            raise ParseError(f"order must be one of {', '.join(ORDERS)}", no, vcol)
    structure = "strict"
    if "structure" in seen:
        no, structure, vcol = seen["structure"]
        if structure not in LogAlgebraPresentation.STRUCTURES:
            raise ParseError("structure must be 'strict' or 'submonoid'", no, vcol)
    try:
        R = PolyRing(names, order, char)
    except (ValueError, LogJetsError) as exc:
        no, _, vcol = seen.get("characteristic", seen["variables"])
        raise ParseError(str(exc), no, vcol) from None
    ideal = []
    for no, value, vcol in ideal_items:
        for piece, col in _split_list(value, vcol):
            ideal.append(parse_polynomial(piece, R, line=no, column_offset=col - 1))
    return PresentationFile(names, char, order, structure, ideal, path=path)


def _log_block(items, pf: PresentationFile, R: PolyRing):
    rel_items = []
    for no, key, kcol, value, vcol in items:
        if key == "relation":
            rel_items.append((no, value, vcol))
            continue
        parts = key.split()
        if len(parts) != 2 or parts[0] != "alpha":
            raise ParseError(f"unknown key {key!r} in [log]", no, kcol)
        name = parts[1]
        if not _NAME.match(name):
            raise ParseError(f"bad log generator name {name!r}", no, kcol + key.index(name))
        if any(n == name for n, _ in pf.log):
            raise ParseError(f"duplicate log generator {name!r}", no, kcol)
        pf.log.append((name, parse_polynomial(value, R, line=no, column_offset=vcol - 1)))
    M = pf.monoid
    for no, value, vcol in rel_items:
        if value.count("=") != 1:
            raise ParseError("a relation reads 'lhs = rhs'", no, vcol)
        lhs, rhs = value.split("=")
        a = _parse_vector(lhs, M, no, vcol)
        b = _parse_vector(rhs, M, no, vcol + len(lhs) + 1)
        pf.relations.append((a, b))


def _base_block(items, pf: PresentationFile, R: PolyRing, path, seen_paths):
    if not items:
        return
    file_item = [it for it in items if it[1] == "file"]
    if len(file_item) != 1:
        no = items[0][0]
        raise ParseError("[base] needs exactly one 'file' entry", no, 1)
    no, _, _, value, vcol = file_item[0]
    pf.base_file = value
    here = os.path.dirname(path) if path else "."
    target = os.path.normpath(os.path.join(here, value))
    if target in seen_paths:
        raise ParseError(f"base file cycle through {value!r}", no, vcol)
    try:
        text = Path(target).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read base file {value!r}: {exc.strerror}", no, vcol) from None
    pf.base = parse_presentation(text, path=target, _seen=seen_paths | {target})
    base_vars = pf.base.variables
    base_gens = [n for n, _ in pf.base.log]
    M = pf.monoid
    for no, key, kcol, value, vcol in items:
        if key == "file":
            continue
        parts = key.split()
        if len(parts) == 2 and parts[0] == "map":
            if parts[1] not in base_vars:
                raise ParseError(f"{parts[1]!r} is not a base variable", no, kcol)
            pf.ring_map.append(
                (parts[1], parse_polynomial(value, R, line=no, column_offset=vcol - 1)))
        elif len(parts) == 2 and parts[0] == "monoid":
            if parts[1] not in base_gens:
                raise ParseError(f"{parts[1]!r} is not a base log generator", no, kcol)
            pf.monoid_map.append((parts[1], _parse_vector(value, M, no, vcol)))
        else:
            raise ParseError(f"unknown key {key!r} in [base]", no, kcol)


def load_presentation(path) -> PresentationFile:
    path = os.path.normpath(str(path))
    return parse_presentation(Path(path).read_text(), path=path, _seen=frozenset({path}))


def shipped_presentations() -> dict[str, Path]:
    """The example presentation files bundled with the package, by stem."""
    folder = Path(__file__).parent / "presentations"
    return {p.stem: p for p in sorted(folder.glob("*.pres"))}
