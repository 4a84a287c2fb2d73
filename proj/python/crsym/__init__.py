"""Exact symmetry computations for rigid CR hypersurfaces and contact gradings of su(p,q)."""

import json

from ._core import (
    DomainError,
    __version__,
    all_tangent,
    bounds,
    catalog,
    graded_dims,
    hasse_words,
    levi_signature,
    satake_diagram,
    solve_dimension,
)
from ._core import run as _run


class CommandError(RuntimeError):
    def __init__(self, code, report):
        self.code = code
        self.report = report
        msg = report.get("result", {}).get("error", "") if report else ""
        super().__init__(f"exit {code}: {msg}")


def run(*args, check=True):
    """Run a crsym command and return its report as a dict.

    Arguments are the command-line words, e.g. run("bounds", "--n", "2", "--k", "0").
    """
    code, text, help_text = _run([str(a) for a in args])
    report = json.loads(text) if text else {"help": help_text}
    if check and code != 0:
        raise CommandError(code, report)
    return report


__all__ = [
    "CommandError",
    "DomainError",
    "__version__",
    "all_tangent",
    "bounds",
    "catalog",
    "graded_dims",
    "hasse_words",
    "levi_signature",
    "run",
    "satake_diagram",
    "solve_dimension",
]
