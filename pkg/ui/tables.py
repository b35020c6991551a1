"""
Plain-text rendering of reports for the table output mode
"""
from typing import Any, Dict, List, Sequence

from entities.reports import BoundsReport, DensityVerdict, EmbeddingResult, SurveyReport


def format_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces, with a dashed rule under the header"""
    cells = [[str(h) for h in headers]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def format_pairs(pairs: Sequence[Sequence[Any]]) -> str:
    """Aligned `key: value` block"""
    width = max(len(str(k)) for k, _ in pairs)
    return "\n".join(f"{str(k).ljust(width)} : {v}" for k, v in pairs)


def format_words(words: Sequence[Sequence[int]]) -> str:
    return "\n".join("  " + " ".join(str(s) for s in w) for w in words)


def render_rank(payload: Dict[str, Any]) -> str:
    head = format_pairs([
        ("points (m)", payload["m"]),
        ("alphabet (q)", payload["q"]),
        ("length (n)", payload["n"]),
        ("rank R(A)", payload["rank"]),
        ("distance sum D_A", payload["distance_sum"] if payload["distance_sum"] is not None else "n/a"),
        ("free columns", " ".join(str(c) for c in payload["face"]["free_columns"]) or "-"),
    ])
    rows = [(c["column"], " ".join(str(y) for y in c["histogram"]), c["contribution"]) for c in payload["columns"]]
    return head + "\n\n" + format_table(["column", "histogram", "contribution"], rows)


def render_bounds(report: BoundsReport) -> str:
    return format_pairs([
        ("points (m)", report.m),
        ("alphabet (q)", report.q),
        ("distance sum D_A", report.distance_sum),
        ("rank R(A)", report.rank),
        ("case", report.lower_case.value),
        ("lower bound", f"{report.lower} (ceiling {report.lower_ceiling})"),
        ("upper bound", f"{report.upper} (floor {report.upper_floor})"),
        ("lower tight", report.lower_tight),
        ("upper tight", report.upper_tight),
        ("density certified", report.density_certified),
    ])


def render_isometry(payload: Dict[str, Any]) -> str:
    if not payload["isometric"]:
        return "not isometric"
    rows = list(enumerate(payload["witness"]))
    return "isometric\n\n" + format_table(["row A", "row B"], rows)


def render_embedding(result: EmbeddingResult) -> str:
    text = format_pairs([
        ("status", result.status.value),
        ("min dimension", result.min_dimension),
        ("nodes explored", result.nodes_explored),
    ])
    if result.realization is not None:
        text += "\n\nrealization:\n" + format_words(result.realization.words)
    return text


def render_verdict(verdict: DensityVerdict) -> str:
    mark = {"dense": "✅", "not_dense": "❌", "unknown": "❔"}[verdict.verdict.value]
    text = f"{mark} {verdict.verdict.value}\n" + format_pairs([
        ("certified by", verdict.certified_by.value),
        ("rank", verdict.rank),
        ("min dimension", verdict.min_dimension if verdict.min_dimension is not None else "n/a"),
        ("nodes explored", verdict.nodes_explored),
    ])
    if verdict.witness is not None:
        text += "\n\nwitness:\n" + format_words(verdict.witness.words)
    return text


def render_uniformity(payload: Dict[str, Any]) -> str:
    head = format_pairs([
        ("uniform columns", payload["uniform"]),
        ("q divides m", payload["divisible"]),
    ])
    rows: List[Sequence[Any]] = [
        (c["column"], " ".join(str(y) for y in c["histogram"]), c["constant"], c["uniform"])
        for c in payload["columns"]
    ]
    return head + "\n\n" + format_table(["column", "histogram", "constant", "uniform"], rows)


def render_survey(report: SurveyReport) -> str:
    text = format_pairs([
        ("space", f"E_{report.q}^{report.n}, subsets of size {report.m}"),
        ("subsets", report.total),
        ("dense", report.dense),
        ("not dense", report.not_dense),
        ("unknown", report.unknown),
        ("uniform", report.uniform),
        ("uniform and dense", report.uniform_and_dense),
        ("dense, not uniform", report.dense_not_uniform),
        ("isometry classes", report.classes),
        ("verdicts reused", report.reused),
    ])
    for i, example in enumerate(report.examples, start=1):
        text += f"\n\nexample {i} (dense, not uniform):\n" + format_words(example.words)
    return text
