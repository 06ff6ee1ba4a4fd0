"""
Output formats for the command line: text, json and csv.

Every renderer returns a string ending in a newline and depends only on its input, so
repeated runs print identical bytes.
"""

import csv
import io
import json
from enum import Enum
from typing import Iterable

from .bijection import TraceStep
from .partition import Partition, format_partition
from .protocol import ReportBundle, encode_message


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


CSV_COLUMNS = ["parts", "size", "length", "alt_size"]


def render_partitions(items: Iterable[Partition], fmt: OutputFormat | str = OutputFormat.TEXT) -> str:
    fmt = OutputFormat(fmt)
    items = list(items)
    if fmt is OutputFormat.JSON:
        return encode_message([lam.to_json() for lam in items]) + "\n"
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for lam in items:
            writer.writerow([format_partition(lam), lam.size, lam.length, lam.alt_size])
        return buffer.getvalue()
    return "".join(f"{lam}\n" for lam in items)


def _vector(values: Iterable[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def render_trace(steps: list[TraceStep]) -> str:
    """Fixed-width table with columns part, i, A, I, mu."""
    header = ("part", "i", "A", "I", "mu")
    rows = [
        (str(s.part), str(s.row), str(s.increment), _vector(s.counter), str(s.mu))
        for s in steps
    ]
    widths = [max(len(row[c]) for row in [header, *rows]) for c in range(len(header))]

    def line(row) -> str:
        cells = [
            row[c].rjust(widths[c]) if c < 2 else row[c].ljust(widths[c])
            for c in range(len(row))
        ]
        return "  ".join(cells).rstrip()

    return "".join(line(row) + "\n" for row in [header, *rows])


def render_map(N: int, source: Partition, image: Partition, inverse: bool,
               steps: list[TraceStep] | None = None,
               fmt: OutputFormat | str = OutputFormat.TEXT) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        data = {
            "N": N,
            "direction": "inverse" if inverse else "forward",
            "input": source.to_json(),
            "output": image.to_json(),
        }
        if steps is not None:
            data["trace"] = [s.to_json() for s in steps]
        return encode_message(data) + "\n"
    if fmt is OutputFormat.CSV:
        raise ValueError("map output supports text and json only")

    out = []
    if steps is not None:
        out.append(render_trace(steps))
        if steps:
            out.append(f"I={_vector(steps[-1].counter)}\n")
            out.append(f"d={_vector(steps[-1].actions)}\n")
    label = "lambda" if inverse else "mu"
    out.append(f"{label}={image}\n")
    return "".join(out)


def render_bundle(bundle: ReportBundle, fmt: OutputFormat | str = OutputFormat.TEXT) -> str:
    """One JSON document, or one text line per parameter point plus a summary."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return encode_message(bundle) + "\n"
    if fmt is OutputFormat.CSV:
        raise ValueError("verify output supports text and json only")

    out = []
    for report in bundle.reports:
        params = " ".join(f"{k}={v}" for k, v in report.params.items())
        status = "pass" if report.passed else "FAIL"
        line = f"{report.identity} {params}: {status}"
        if report.window:
            line += f"  window q<={report.window['qmax']} t<={report.window['tmax']}"
        out.append(line + "\n")
        if report.counterexample is not None:
            out.append(f"  counterexample: {json.dumps(report.counterexample, ensure_ascii=False)}\n")
        for note in report.notes:
            out.append(f"  note: {note}\n")
    passed = sum(r.passed for r in bundle.reports)
    out.append(f"{bundle.identity}: {passed}/{len(bundle.reports)} passed\n")
    return "".join(out)


def render_tables(tables: list[dict], fmt: OutputFormat | str = OutputFormat.TEXT) -> str:
    """Size-indexed count tables; rows hold rl/rop and, when truncated sets were counted, l/op."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return encode_message(tables) + "\n"

    columns = ["size", "rl", "rop"]
    if any("l" in row for table in tables for row in table["rows"]):
        columns += ["l", "op"]

    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["N", *columns])
        for table in tables:
            for row in table["rows"]:
                writer.writerow([table["N"], *(row.get(c, "") for c in columns)])
        return buffer.getvalue()

    out = []
    for table in tables:
        out.append(f"N={table['N']}\n")
        cells = [[str(row.get(c, "")) for c in columns] for row in table["rows"]]
        totals = ["total", *(str(table["totals"].get(c, "")) for c in columns[1:])]
        widths = [max(len(r[c]) for r in [columns, *cells, totals]) for c in range(len(columns))]
        for row in [columns, *cells, totals]:
            out.append("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() + "\n")
    return "".join(out)
