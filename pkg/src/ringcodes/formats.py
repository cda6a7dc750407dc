"""Plain-text problem files describing a system or a coset-presented code.

The format is line oriented and hand editable.  '#' starts a comment that
runs to the end of the line.  The first non-blank line is a ring literal
(Z6, Z2xZ3, ...), the second is the mode, 'pcs' or 'code'.

pcs mode: each following line is one row of H, a '|', and one row of S:

    Z6
    pcs
    1 1 3 5 | 0 1 5
    0 4 2 2 | 0 2 4

code mode: a block of generators of D, a blank line, then a block of coset
representatives:

    Z6
    code
    2 1 1 0
    0 1 0 1
    3 0 3 0

    0 0 0 0
    5 2 0 0
    4 1 0 0

Elements are bare integers when the ring has one factor and parenthesized
tuples like (1,2) otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .pcs import CodePresentation, ParityCheckSystem, code_to_pcs, validate_pcs
from .rings import RingElem, RingSpec, RingVec, parse_ring
from .submodules import Submodule


class ParseError(Exception):
    """A problem file or vector literal that does not parse; 1-based location."""

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class ProblemFile:
    """Parsed contents of one problem file."""

    spec: RingSpec
    mode: str  # 'pcs' or 'code'
    h_rows: tuple[RingVec, ...] = ()
    s_rows: tuple[RingVec, ...] = ()
    generators: tuple[RingVec, ...] = ()
    representatives: tuple[RingVec, ...] = ()


_TOKEN_RE = re.compile(r"\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\)|-?\d+|\||\S")


def _tokenize(line: str, lineno: int) -> list[tuple[str, int]]:
    """Tokens with 1-based column positions; junk becomes a one-char token."""
    return [(m.group(0), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def _parse_element(spec: RingSpec, token: str, lineno: int, col: int) -> RingElem:
    k = spec.nfactors
    if token.startswith("("):
        if k == 1:
            raise ParseError(
                f"ring {spec} has one factor, write elements as bare integers",
                lineno, col,
            )
        inner = token[1:-1]
        parts = [p.strip() for p in inner.split(",")]
        if len(parts) != k:
            raise ParseError(
                f"element {token} has {len(parts)} residues, ring {spec} needs {k}",
                lineno, col,
            )
        return spec.elem(int(p) for p in parts)
    if re.fullmatch(r"-?\d+", token):
        if k != 1:
            raise ParseError(
                f"ring {spec} has {k} factors, write elements as (a,{',...' if k > 2 else 'b'})",
                lineno, col,
            )
        return spec.elem(int(token))
    raise ParseError(f"unexpected token {token!r}", lineno, col)


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_problem(text: str) -> ProblemFile:
    """Parse problem-file text; raises ParseError with a 1-based location."""
    lines = [(_strip_comment(raw), i + 1) for i, raw in enumerate(text.splitlines())]
    content = [(line, no) for line, no in lines if line.strip()]
    if not content:
        raise ParseError("empty file: expected a ring literal")
    ring_text, ring_line = content[0]
    try:
        spec = parse_ring(ring_text.strip())
    except ValueError as exc:
        raise ParseError(str(exc), ring_line, 1) from None
    if len(content) < 2:
        raise ParseError("missing mode line, expected 'pcs' or 'code'", ring_line)
    mode_text, mode_line = content[1]
    mode = mode_text.strip().lower()
    if mode not in ("pcs", "code"):
        raise ParseError(f"mode must be 'pcs' or 'code', got {mode_text.strip()!r}", mode_line, 1)

    # data region: original line order, blocks split on blank lines
    data_start = mode_line
    blocks: list[list[tuple[str, int]]] = [[]]
    for line, no in lines:
        if no <= data_start:
            continue
        if line.strip():
            blocks[-1].append((line, no))
        elif blocks[-1]:
            blocks.append([])
    if blocks and not blocks[-1]:
        blocks.pop()

    if mode == "pcs":
        if len(blocks) != 1:
            raise ParseError("pcs mode expects one contiguous block of rows", mode_line)
        h_rows, s_rows = [], []
        n = s = None
        for line, no in blocks[0]:
            toks = _tokenize(line, no)
            if not any(t == "|" for t, _ in toks):
                raise ParseError("pcs row needs a '|' between H and S entries", no, 1)
            split = next(i for i, (t, _) in enumerate(toks) if t == "|")
            left, right = toks[:split], toks[split + 1 :]
            if any(t == "|" for t, _ in right):
                _, c = next((t, c) for t, c in right if t == "|")
                raise ParseError("only one '|' per row", no, c)
            if not left or not right:
                raise ParseError("both sides of '|' need at least one entry", no, 1)
            hv = RingVec.of(spec, [_parse_element(spec, t, no, c) for t, c in left])
            sv = RingVec.of(spec, [_parse_element(spec, t, no, c) for t, c in right])
            if n is None:
                n, s = len(hv), len(sv)
            elif len(hv) != n or len(sv) != s:
                raise ParseError(
                    f"row has {len(hv)}|{len(sv)} entries, expected {n}|{s}", no, 1
                )
            h_rows.append(hv)
            s_rows.append(sv)
        if not h_rows:
            raise ParseError("pcs mode needs at least one row", mode_line)
        return ProblemFile(spec, "pcs", h_rows=tuple(h_rows), s_rows=tuple(s_rows))

    # code mode
    if len(blocks) != 2:
        raise ParseError(
            f"code mode expects two blocks separated by a blank line, got {len(blocks)}",
            mode_line,
        )
    parsed_blocks = []
    for block in blocks:
        rows = []
        width = None
        for line, no in block:
            toks = _tokenize(line, no)
            if any(t == "|" for t, _ in toks):
                _, c = next((t, c) for t, c in toks if t == "|")
                raise ParseError("'|' does not belong in code mode", no, c)
            v = RingVec.of(spec, [_parse_element(spec, t, no, c) for t, c in toks])
            if width is None:
                width = len(v)
            elif len(v) != width:
                raise ParseError(f"row has {len(v)} entries, expected {width}", no, 1)
            rows.append(v)
        parsed_blocks.append(rows)
    gens, reps = parsed_blocks
    if len(gens[0]) != len(reps[0]):
        raise ParseError("generator and representative blocks disagree on length")
    return ProblemFile(
        spec, "code", generators=tuple(gens), representatives=tuple(reps)
    )


def format_vector(v: RingVec) -> str:
    return " ".join(str(e) for e in v)


def serialize_pcs(pcs: ParityCheckSystem) -> str:
    lines = [str(pcs.spec), "pcs"]
    for h, srow in zip(pcs.h_rows, pcs.s_rows):
        lines.append(f"{format_vector(h)} | {format_vector(srow)}")
    return "\n".join(lines) + "\n"


def serialize_code(pres: CodePresentation) -> str:
    lines = [str(pres.spec), "code"]
    gens = pres.kernel.canonical_generators()
    if not gens:
        from .rings import zero_vec

        gens = (zero_vec(pres.spec, pres.n),)
    for g in gens:
        lines.append(format_vector(g))
    lines.append("")
    for d in pres.representatives:
        lines.append(format_vector(d))
    return "\n".join(lines) + "\n"


def as_system(pf: ProblemFile) -> ParityCheckSystem:
    """Validated system for either mode (code mode converts first)."""
    if pf.mode == "pcs":
        return validate_pcs(pf.h_rows, pf.s_rows)
    return code_to_pcs(as_presentation(pf))


def as_presentation(pf: ProblemFile) -> CodePresentation:
    if pf.mode != "code":
        raise ValueError("not a code-mode file")
    n = len(pf.generators[0])
    kernel = Submodule.from_generators(pf.spec, n, pf.generators)
    return CodePresentation(kernel, pf.representatives)


def parse_vector_literal(spec: RingSpec, text: str) -> RingVec:
    """A vector from the command line: elements split by commas or spaces."""
    elems = []
    pos = 0
    for m in re.finditer(r"\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\)|-?\d+|,|\s+|\S", text):
        tok = m.group(0)
        if tok == "," or tok.isspace():
            continue
        elems.append(_parse_element(spec, tok, 1, m.start() + 1))
    if not elems:
        raise ParseError("empty vector", 1, 1)
    return RingVec.of(spec, elems)
