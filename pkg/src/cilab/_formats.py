"""
Report rendering: human-readable text or a fixed-key JSON schema.

JSON key order is part of the format. Keys listed first are the stable
core; supplementary keys only ever get appended.
"""

import json
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Union

from ._canonical import CiClass
from ._ci import CiReport
from ._search import CiStructure
from ._table import TotalMap
from ._theorem import TheoremReport


class ReportFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


Report = Union[CiReport, TheoremReport]


def _image(m: Optional[TotalMap]) -> Optional[List[int]]:
    return None if m is None else list(m.image)


def structure_to_dict(s: CiStructure) -> Dict[str, Any]:
    return {"table": [list(r) for r in s.table.rows()], "jr": list(s.jr.image)}


def ci_report_to_dict(r: CiReport) -> Dict[str, Any]:
    return {
        "order": r.order,
        "classification": r.classification.value,
        "is_quasigroup": r.is_quasigroup,
        "is_loop": r.is_loop,
        "jr": _image(r.jr),
        "jl": _image(r.jl),
        "jr_is_bijective": r.jr_is_bijective,
        "jl_equals_jr_inverse": r.jl_equals_jr_inverse,
        "loop_identity": r.loop_identity,
        "x_times_jx_is_identity": r.x_times_jx_is_identity,
        "j_is_automorphism": r.j_is_automorphism,
        "is_left_quasigroup": r.is_left_quasigroup,
        "is_right_quasigroup": r.is_right_quasigroup,
        "is_right_ci": r.is_right_ci,
        "is_ci_groupoid": r.is_ci_groupoid,
        "middle_ci_holds": r.middle_ci_holds,
    }


def theorem_report_to_dict(r: TheoremReport, include_timing: bool = True) -> Dict[str, Any]:
    return {
        "order": r.order,
        "mode": r.mode.value,
        "pair_count": r.pair_count,
        "table_count": r.table_count,
        "class_count": r.class_count,
        "all_are_quasigroups": r.all_are_quasigroups,
        "all_jr_bijective": r.all_jr_bijective,
        "all_right_ci_with_jr_inverse": r.all_right_ci_with_jr_inverse,
        "all_j_unique": r.all_j_unique,
        "failures": [structure_to_dict(s) for s in r.failures],
        "elapsed_ms": round(r.elapsed * 1000, 1) if include_timing else None,
        "loop_count": r.loop_count,
        "all_loops_artzy": r.all_loops_artzy,
    }


def report_to_dict(r: Report, include_timing: bool = True) -> Dict[str, Any]:
    if isinstance(r, CiReport):
        return ci_report_to_dict(r)
    return theorem_report_to_dict(r, include_timing)


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------

def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _map_text(m: Optional[TotalMap]) -> str:
    return "none" if m is None else " ".join(str(v) for v in m.image)


def _ci_text(r: CiReport) -> List[str]:
    jr_line = f"J_r: {_map_text(r.jr)}"
    if r.jr is not None:
        jr_line += f" (bijective: {_yes(r.jr_is_bijective)})"
    jl_line = f"J_l: {_map_text(r.jl)}"
    if r.jl is not None and r.jr is not None:
        jl_line += f" (J_l = J_r^-1: {_yes(r.jl_equals_jr_inverse)})"
    lines = [
        f"order: {r.order}",
        f"classification: {r.classification.value}",
        f"quasigroup: {_yes(r.is_quasigroup)} "
        f"(left {_yes(r.is_left_quasigroup)}, right {_yes(r.is_right_quasigroup)})",
        jr_line,
        jl_line,
        f"loop identity: {'none' if r.loop_identity is None else r.loop_identity}",
    ]
    if r.loop_identity is not None and r.jr is not None:
        lines += [
            f"x*J(x) = 1: {_yes(r.x_times_jx_is_identity)}",
            f"J automorphism: {_yes(r.j_is_automorphism)}",
            f"x*(y*J(x)) = y: {_yes(r.middle_ci_holds)}",
        ]
    return lines


def _theorem_text(r: TheoremReport, include_timing: bool) -> List[str]:
    lines = [
        f"order {r.order} ({r.mode.value}): {'VERIFIED' if r.verified else 'FAILED'}",
        f"  pairs: {r.pair_count}  tables: {r.table_count}  "
        f"classes: {'-' if r.class_count is None else r.class_count}  loops: {r.loop_count}",
        f"  quasigroups: {_yes(r.all_are_quasigroups)}"
        f"  J_r bijective: {_yes(r.all_jr_bijective)}"
        f"  right CI with J_r^-1: {_yes(r.all_right_ci_with_jr_inverse)}"
        f"  J unique: {_yes(r.all_j_unique)}",
        f"  loops: x*J(x) = 1 and J automorphism: {_yes(r.all_loops_artzy)}",
        f"  failures: {len(r.failures)}",
    ]
    for s in r.failures:
        lines.append(f"    table {[list(row) for row in s.table.rows()]} jr {list(s.jr.image)}")
    if include_timing:
        lines.append(f"  elapsed: {r.elapsed * 1000:.1f} ms")
    return lines


def render_report(
    r: Report,
    fmt: Union[ReportFormat, str] = ReportFormat.TEXT,
    include_timing: bool = True,
    extra: Optional[Dict[str, Any]] = None,
) -> str:
    """
    Render a CiReport or TheoremReport.

    extra is appended after the fixed keys (JSON) or as trailing
    "key: value" lines (text).
    """
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        payload = report_to_dict(r, include_timing)
        if extra:
            payload.update(extra)
        return json.dumps(payload, indent=2)

    if isinstance(r, CiReport):
        lines = _ci_text(r)
    else:
        lines = _theorem_text(r, include_timing)
    for key, value in (extra or {}).items():
        lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines)


def render_reports(
    reports: Sequence[Report],
    fmt: Union[ReportFormat, str] = ReportFormat.TEXT,
    include_timing: bool = True,
) -> str:
    """Several reports: a JSON array, or text blocks separated by blank lines."""
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        return json.dumps([report_to_dict(r, include_timing) for r in reports], indent=2)
    return "\n\n".join(render_report(r, fmt, include_timing) for r in reports)


def render_classes(
    classes: Sequence[CiClass],
    fmt: Union[ReportFormat, str] = ReportFormat.TEXT,
) -> str:
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        return json.dumps(
            [{"size": c.size, **structure_to_dict(c.representative)} for c in classes],
            indent=2,
        )
    lines = []
    for i, c in enumerate(classes):
        rep = c.representative
        lines.append(f"class {i} (size {c.size}) jr {' '.join(map(str, rep.jr.image))}")
        lines.extend("  " + " ".join(map(str, row)) for row in rep.table.rows())
    return "\n".join(lines)
