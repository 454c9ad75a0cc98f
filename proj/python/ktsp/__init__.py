"""Exact k-TSP and Steiner distance invariants of graphs."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import run_cli as _run_cli


def report(*args):
    """Runs a ktsp command and returns (exit code, parsed JSON report)."""
    code, out, err = _run_cli([str(a) for a in args])
    if code != 0 and not out:
        raise RuntimeError(err.strip())
    return code, _json.loads(out)
