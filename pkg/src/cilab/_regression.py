"""
Regression expectations for enumeration counts.

One line per (order, mode):

    order 3 mode oracle pairs 6 classes 3

Counts beyond order 3 are whatever the cross-validated engine produced
when they were recorded; provenance goes in '#' comment lines.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from ._errors import ParseError
from ._search import SearchMode
from ._theorem import TheoremReport


@dataclass(frozen=True)
class Expectation:
    order: int
    mode: SearchMode
    pairs: int
    classes: Optional[int]

    def to_line(self) -> str:
        classes = "-" if self.classes is None else str(self.classes)
        return f"order {self.order} mode {self.mode.value} pairs {self.pairs} classes {classes}"


_Key = Tuple[int, SearchMode]


def parse_expectations(text: str) -> Dict[_Key, Expectation]:
    expectations: Dict[_Key, Expectation] = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 8 or tokens[0::2] != ["order", "mode", "pairs", "classes"]:
            raise ParseError(f"expected 'order N mode M pairs P classes C', got {line!r}", no)
        try:
            exp = Expectation(
                order=int(tokens[1]),
                mode=SearchMode(tokens[3]),
                pairs=int(tokens[5]),
                classes=None if tokens[7] == "-" else int(tokens[7]),
            )
        except ValueError as e:
            raise ParseError(str(e), no) from None
        expectations[(exp.order, exp.mode)] = exp
    return expectations


def load_expectations(path: str) -> Dict[_Key, Expectation]:
    """Expectations from disk; a missing file means none recorded yet."""
    if not os.path.exists(path):
        return {}
    return parse_expectations(Path(path).read_text(encoding="utf-8"))


def _comments(path: str) -> list:
    if not os.path.exists(path):
        return []
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [line for line in lines if line.strip().startswith("#")]


def expectation_from_report(report: TheoremReport) -> Expectation:
    return Expectation(report.order, report.mode, report.pair_count, report.class_count)


def record_expectation(path: str, report: TheoremReport) -> Expectation:
    """
    Add or replace the line for the report's (order, mode), keeping
    comment lines and sorting entries by order then mode.
    """
    expectations = load_expectations(path)
    exp = expectation_from_report(report)
    expectations[(exp.order, exp.mode)] = exp

    lines = _comments(path)
    for key in sorted(expectations, key=lambda k: (k[0], k[1].value)):
        lines.append(expectations[key].to_line())
    target = Path(path)
    if target.parent != Path("."):
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return exp


def compare_to_expectations(
    expectations: Dict[_Key, Expectation],
    report: TheoremReport,
) -> Optional[Dict[str, Any]]:
    """
    Compare a report against the recorded line for its (order, mode).

    Returns:
        None when nothing is recorded, else a dict with "matches",
        "expected" and "observed" lines.
    """
    expected = expectations.get((report.order, report.mode))
    if expected is None:
        return None
    observed = expectation_from_report(report)
    matches = observed.pairs == expected.pairs and (
        expected.classes is None or observed.classes == expected.classes
    )
    return {
        "order": report.order,
        "mode": report.mode.value,
        "matches": matches,
        "expected": expected.to_line(),
        "observed": observed.to_line(),
    }
