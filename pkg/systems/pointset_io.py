"""Point-set text files: a `q n` header line, then one word per line.

Blank lines and lines starting with `#` are skipped; LF and CRLF both work.
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from config.constants import COMMENT_PREFIX, GENERATOR_COMMENT
from core.errors import HammingError, ParseError
from entities.point_set import PointSet, SpaceParams
from systems.finite_field import GeneratorMatrix

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith(COMMENT_PREFIX):
            out.append((number, line))
    return out


def _parse_ints(line: str, number: int) -> List[int]:
    tokens = line.split()
    # ASCII digits only: int() would also take "+1", "1_0" and non-Latin digits
    if not all(token.isascii() and token.isdigit() for token in tokens):
        raise ParseError(f"expected decimal integers, got {line!r}", number)
    return [int(token) for token in tokens]


def parse_point_set(text: str) -> PointSet:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("no points")

    number, header = lines[0]
    values = _parse_ints(header, number)
    if len(values) != 2:
        raise ParseError(f"header must be 'q n', got {header!r}", number)
    q, n = values
    try:
        params = SpaceParams(q, n)
    except HammingError as exc:
        raise ParseError(str(exc), number) from None

    words = []
    seen: Dict[Tuple[int, ...], int] = {}
    for number, line in lines[1:]:
        symbols = _parse_ints(line, number)
        if len(symbols) != n:
            raise ParseError(f"expected {n} symbols, got {len(symbols)}", number)
        for s in symbols:
            if not 0 <= s < q:
                raise ParseError(f"symbol {s} outside alphabet [0, {q - 1}]", number)
        word = tuple(symbols)
        if word in seen:
            raise ParseError(f"duplicate word (first seen on line {seen[word]})", number)
        seen[word] = number
        words.append(word)
    if not words:
        raise ParseError("no points")
    return PointSet(params, words)


def read_point_set(path: PathLike) -> PointSet:
    """Parse a file; OSError propagates for unreadable paths"""
    try:
        text = Path(path).read_text(encoding="utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 text ({exc.reason})") from None
    points = parse_point_set(text)
    logger.debug("read %d points (q=%d, n=%d) from %s", points.m, points.q, points.n, path)
    return points


def format_point_set(points: PointSet, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"{COMMENT_PREFIX} {c}" for c in comment.splitlines())
    lines.append(f"{points.q} {points.n}")
    lines.extend(" ".join(str(s) for s in word) for word in points.words)
    return "\n".join(lines) + "\n"


def format_generator_matrix(generators: GeneratorMatrix) -> str:
    body = format_point_set(PointSet(generators.params, generators.rows))
    return f"{GENERATOR_COMMENT}\n{body}"


def write_point_set(points: PointSet, path: PathLike, comment: Optional[str] = None) -> Path:
    target = Path(path)
    target.write_text(format_point_set(points, comment), encoding="utf-8")
    logger.info("wrote %d points to %s", points.m, target)
    return target
