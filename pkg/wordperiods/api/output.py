"""
Writers for OutputRecord: JSON (one object), CSV (distribution rows),
plain text, and a static SVG bar chart of a distribution.
"""
from __future__ import annotations

import csv
from pathlib import Path
from typing import TextIO

from wordperiods.core.exceptions import ValidationError
from wordperiods.schemas.records import DistributionResult, OutputRecord

CSV_COLUMNS = ["count", "probability_num", "probability_den", "probability_dec"]


def write_json(record: OutputRecord, out: TextIO) -> None:
    out.write(record.model_dump_json(indent=2))
    out.write("\n")


def write_csv(record: OutputRecord, out: TextIO, *, by_period: bool = False) -> None:
    result = record.result
    if not isinstance(result, DistributionResult):
        raise ValidationError(f"CSV output is only available for dist, not {record.query.command}")
    key = "period" if by_period else "r"
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([key, *CSV_COLUMNS])
    rows = sorted(result.rows, key=lambda row: row.period) if by_period else result.rows
    for row in rows:
        writer.writerow([
            row.period if by_period else row.r,
            row.count,
            row.probability.numerator,
            row.probability.denominator,
            row.probability_dec,
        ])


def write_text(record: OutputRecord, out: TextIO) -> None:
    query = record.query.model_dump(exclude_none=True)
    out.write(" ".join(f"{k}={v}" for k, v in query.items()) + "\n")
    out.write(f"method={record.method}\n")
    result = record.result.model_dump(exclude={"kind", "rows"}, exclude_none=True)
    for name, value in result.items():
        if isinstance(value, dict):
            value = value.get("value") or f"{value['numerator']}/{value['denominator']}"
        out.write(f"{name}: {value}\n")
    if isinstance(record.result, DistributionResult):
        for row in record.result.rows:
            out.write(f"{row.r:>4} {row.period:>4} {row.count:>24} {row.probability_dec}\n")


def write_record(record: OutputRecord, fmt: str, out: TextIO, *, by_period: bool = False) -> None:
    if fmt == "json":
        write_json(record, out)
    elif fmt == "csv":
        write_csv(record, out, by_period=by_period)
    else:
        write_text(record, out)


def write_svg(result: DistributionResult, path: Path, *, title: str, by_period: bool = False) -> None:
    """Bar chart of counts by maximum border (or least period)"""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x = [row.period if by_period else row.r for row in result.rows]
    y = [int(row.count) for row in result.rows]

    fig = plt.figure()
    ax = fig.add_subplot(1, 1, 1)
    ax.grid(True, axis="y")
    ax.set_xlabel("least period" if by_period else "maximum border length")
    ax.set_ylabel("count")
    ax.bar(x, y)
    ax.set_title(title)
    fig.savefig(path, format="svg")
    plt.close(fig)
