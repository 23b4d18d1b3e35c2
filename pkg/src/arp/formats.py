"""Reading and writing instances and result reports (JSON, CSV, text).

Instance files carry fuel volumes and burn rates as decimal strings and
round-trip exactly: values are parsed into rationals without touching
floats, and written back in a canonical form (no trailing zeros), so
generate -> write -> read -> write is byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from decimal import Decimal, localcontext
from typing import Any, Optional

from .complexity import BigCount, ComplexityReport
from .core import Airplane, Instance, Scalar, as_scalar
from .solvers import Solution


class FormatError(ValueError):
    """Raised for malformed instance or report files."""


def scalar_text(x: Scalar) -> str:
    """Canonical exact rendering: decimal when finite, else 'p/q'.

    A rational has a finite decimal expansion exactly when its reduced
    denominator is 2^a * 5^b; everything the generators produce does.
    """
    den = x.denominator
    if den == 1:
        return str(x.numerator)
    d = den
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return "%d/%d" % (x.numerator, x.denominator)
    k = max(twos, fives)
    scaled = x.numerator * 10**k // den
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(k + 1, "0")
    whole, frac = digits[:-k], digits[-k:]
    frac = frac.rstrip("0")
    return sign + whole + ("." + frac if frac else "")


def significand_12(x: Scalar) -> str:
    """Correctly rounded 12-significant-digit decimal rendering."""
    with localcontext() as ctx:
        ctx.prec = 12
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d)


def instance_to_dict(instance: Instance) -> dict:
    return {
        "airplanes": [
            {"id": a.id, "v": scalar_text(a.v), "c": scalar_text(a.c)}
            for a in instance.airplanes
        ]
    }


def instance_from_dict(data: Any) -> Instance:
    if not isinstance(data, dict) or "airplanes" not in data:
        raise FormatError("instance file must be an object with an 'airplanes' list")
    rows = data["airplanes"]
    if not isinstance(rows, list) or not rows:
        raise FormatError("'airplanes' must be a non-empty list")
    planes = []
    for k, row in enumerate(rows):
        if not isinstance(row, dict):
            raise FormatError("airplane entry %d is not an object" % k)
        missing = {"id", "v", "c"} - set(row)
        if missing:
            raise FormatError(
                "airplane entry %d lacks field(s): %s" % (k, ", ".join(sorted(missing)))
            )
        ident = row["id"]
        if not isinstance(ident, int) or isinstance(ident, bool):
            raise FormatError("airplane entry %d: id must be an integer" % k)
        try:
            planes.append(Airplane(id=ident, v=as_scalar(row["v"]), c=as_scalar(row["c"])))
        except (TypeError, ValueError) as exc:
            raise FormatError("airplane entry %d: %s" % (k, exc)) from exc
    try:
        return Instance(airplanes=tuple(planes))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def instance_to_csv(instance: Instance) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "v", "c"])
    for a in instance.airplanes:
        writer.writerow([a.id, scalar_text(a.v), scalar_text(a.c)])
    return buf.getvalue()


def instance_from_csv(text: str) -> Instance:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows or [cell.strip() for cell in rows[0]] != ["id", "v", "c"]:
        raise FormatError("CSV instance file must start with header 'id,v,c'")
    planes = []
    for k, row in enumerate(rows[1:], start=1):
        if len(row) != 3:
            raise FormatError("CSV row %d must have 3 fields" % k)
        try:
            planes.append(
                Airplane(id=int(row[0]), v=as_scalar(row[1]), c=as_scalar(row[2]))
            )
        except (TypeError, ValueError) as exc:
            raise FormatError("CSV row %d: %s" % (k, exc)) from exc
    try:
        return Instance(airplanes=tuple(planes))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def atomic_write_text(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so readers never see halves."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_instance(instance: Instance, path: str, fmt: str = "json") -> None:
    if fmt == "json":
        text = json.dumps(instance_to_dict(instance), indent=2) + "\n"
    elif fmt == "csv":
        text = instance_to_csv(instance)
    else:
        raise FormatError("unknown instance format %r" % (fmt,))
    atomic_write_text(path, text)


def read_instance(path: str, fmt: Optional[str] = None) -> Instance:
    try:
        with open(path, "r") as handle:
            text = handle.read()
    except OSError as exc:
        raise FormatError("cannot read %s: %s" % (path, exc)) from exc
    if fmt is None:
        if path.endswith(".csv"):
            fmt = "csv"
        elif path.endswith(".json"):
            fmt = "json"
        else:
            fmt = "csv" if text.lstrip()[:2] == "id" else "json"
    if fmt == "csv":
        return instance_from_csv(text)
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError("%s is not valid JSON: %s" % (path, exc)) from exc
        return instance_from_dict(data)
    raise FormatError("unknown instance format %r" % (fmt,))


_EXACT_DISPLAY_CAP = 10**30


def big_count_to_dict(b: BigCount) -> dict:
    out = {"scientific": b.scientific}
    if abs(b.value) <= _EXACT_DISPLAY_CAP:
        out["exact"] = b.exact_text()
    return out


def solution_to_dict(solution: Solution, elapsed_ms: Optional[float] = None) -> dict:
    out: dict[str, Any] = {"method": solution.method}
    if solution.schedule is not None:
        out["order"] = list(solution.schedule.order)
        out["total"] = str(solution.schedule.total)
        out["total_decimal"] = significand_12(solution.schedule.total)
    if solution.q_count is not None:
        out["q_count"] = solution.q_count
    out["visited_nodes"] = solution.visited_nodes
    if solution.feasible_orders is not None:
        out["feasible_orders"] = sorted(list(o) for o in solution.feasible_orders)
    if elapsed_ms is not None:
        out["elapsed_ms"] = round(elapsed_ms, 3)
    return out


def complexity_to_dict(report: ComplexityReport, elapsed_ms: Optional[float] = None) -> dict:
    out: dict[str, Any] = {"n": report.n}
    if report.m is not None:
        out["m"] = report.m
    if report.m_prime is not None:
        out["m_prime"] = report.m_prime
    out["q_star"] = big_count_to_dict(report.q_star)
    out["q_m_exact"] = big_count_to_dict(report.q_m_exact)
    out["q_m_bound"] = big_count_to_dict(report.q_m_bound)
    out["regime"] = report.regime.value
    if elapsed_ms is not None:
        out["elapsed_ms"] = round(elapsed_ms, 3)
    return out


def render_solution_text(solution: Solution, elapsed_ms: Optional[float] = None) -> str:
    lines = ["method: %s" % solution.method]
    if solution.schedule is not None:
        lines.append("drop order: %s" % (" ".join(str(i) for i in solution.schedule.order)))
        lines.append(
            "total distance: %s (%s)"
            % (solution.schedule.total, significand_12(solution.schedule.total))
        )
    if solution.q_count is not None:
        lines.append("stable orders: %d" % solution.q_count)
    lines.append("visited nodes: %d" % solution.visited_nodes)
    if elapsed_ms is not None:
        lines.append("elapsed: %.1f ms" % elapsed_ms)
    return "\n".join(lines) + "\n"


def render_complexity_text(report: ComplexityReport, elapsed_ms: Optional[float] = None) -> str:
    lines = ["n: %d" % report.n]
    if report.m is not None:
        lines.append("m (exact loop): %d" % report.m)
    if report.m_prime is not None:
        lines.append("m' (sweep heuristic): %d" % report.m_prime)
    for label, big in (
        ("worst-case count 2^(n-2)", report.q_star),
        ("binomial-sum bound", report.q_m_exact),
        ("closed-form cap", report.q_m_bound),
    ):
        extra = ""
        value = big.value
        if abs(value) <= _EXACT_DISPLAY_CAP:
            extra = " = %s" % big.exact_text()
        lines.append("%s: %s%s" % (label, big.scientific, extra))
    lines.append("regime: %s" % report.regime.value)
    if elapsed_ms is not None:
        lines.append("elapsed: %.1f ms" % elapsed_ms)
    return "\n".join(lines) + "\n"


def render_table_text(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))
    def fmt(cells: list[str]) -> str:
        return "  ".join(cell.rjust(widths[k]) for k, cell in enumerate(cells))
    out = [fmt(headers), fmt(["-" * w for w in widths])]
    out.extend(fmt(row) for row in rows)
    return "\n".join(out) + "\n"
