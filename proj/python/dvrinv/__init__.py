"""Exact invariant-theory checks for finite matrix groups over a discrete valuation ring.

Job documents and reports are plain dicts with the same layout as the JSON
files read and written by the ``dvrinv`` command-line tool.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from . import _core
from ._core import DvrinvError, HypothesisViolation, InputError

__version__ = _core.__version__

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_REFUTED = 2
EXIT_INCONCLUSIVE = 3

__all__ = [
    "DvrinvError",
    "HypothesisViolation",
    "InputError",
    "Verification",
    "analyze",
    "example",
    "example_names",
    "known_checks",
    "normalize_job",
    "render_text",
    "run",
    "verify_report",
]


def _dump(doc: Mapping[str, Any] | str) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def known_checks() -> list[str]:
    return list(_core.known_checks())


def example_names() -> list[str]:
    return list(_core.example_names())


def example(name: str) -> dict[str, Any]:
    """The bundled job document ``name`` (s2, s3, b2, c4-ratfunc)."""
    return json.loads(_core.example(name))


def normalize_job(job: Mapping[str, Any] | str) -> dict[str, Any]:
    """Validates ``job`` and returns it with defaults filled in; raises InputError."""
    return json.loads(_core.normalize_job(_dump(job)))


def run(job: Mapping[str, Any] | str) -> tuple[dict[str, Any], int]:
    """Runs a job; returns the report and the command-line exit code for it."""
    report, code = _core.analyze(_dump(job))
    return json.loads(report), code


def analyze(job: Mapping[str, Any] | str) -> dict[str, Any]:
    """Runs a job and returns its report."""
    return run(job)[0]


def render_text(report: Mapping[str, Any] | str) -> str:
    return _core.render_text(_dump(report))


@dataclass
class Verification:
    consistent: bool
    checked: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.consistent


def verify_report(report: Mapping[str, Any] | str) -> Verification:
    """Rechecks the identities recorded in a report without recomputing invariants."""
    consistent, checked, failures = _core.verify_report(_dump(report))
    return Verification(consistent, list(checked), list(failures))
