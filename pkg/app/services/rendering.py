"""
Text, JSON and DOT renderings of polygons, posets and reports
"""

import json
from pathlib import Path
from typing import Iterable, List

from jinja2 import Environment, FileSystemLoader

from app.models.polygon import HNPolygon
from app.models.poset import StratumPoset
from app.models.report import VerificationReport
from app.schemas.polygon import PolygonPayload, PosetPayload
from app.schemas.report import ReportPayload

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"

templates = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    autoescape=False,
)


def poset_to_dot(poset: StratumPoset) -> str:
    """DOT digraph: one node per polygon, an edge i -> j when i covers j"""
    return templates.get_template("poset.dot.j2").render(
        elements=[str(polygon) for polygon in poset.elements],
        covers=poset.covers,
    )


def poset_to_json(poset: StratumPoset) -> str:
    return PosetPayload.from_poset(poset).model_dump_json(exclude_none=True)


def polygon_to_json(polygon: HNPolygon) -> str:
    return PolygonPayload.from_polygon(polygon).model_dump_json()


def polygons_to_json(polygons: Iterable[HNPolygon]) -> str:
    payloads: List[dict] = [PolygonPayload.from_polygon(p).model_dump() for p in polygons]
    return json.dumps(payloads, separators=(",", ":"))


def report_to_json(report: VerificationReport, timing: bool = True) -> str:
    return ReportPayload.from_report(report, timing).model_dump_json(exclude_none=True)


def reports_to_json(reports: Iterable[VerificationReport], timing: bool = True) -> str:
    payloads = [ReportPayload.from_report(r, timing).model_dump(exclude_none=True) for r in reports]
    return json.dumps(payloads, separators=(",", ":"))


def report_to_text(report: VerificationReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in report.parameters.items())
    lines = [
        f"{report.claim} [{params}]: {'PASSED' if report.passed else 'FAILED'}",
        f"  enumerated: {report.stats.get('enumerated', 0)}",
    ]
    for witness in report.witnesses:
        lines.append(f"  witness: {witness}")
    for key, value in (report.details or {}).items():
        lines.append(f"  {key}: {value}")
    for sub in report.subreports:
        lines.extend("  " + line for line in report_to_text(sub).splitlines())
    return "\n".join(lines)
