"""Analytic R-groups of affine Hecke algebras and the Arthur formula.

Every entry point builds a job config and hands it to the C++ core; reports
come back as plain dictionaries with exact values encoded as strings.
"""

import json

from ._ahrg import ConfigError, UnsupportedRequest, run_with_grams
from ._ahrg import run as _run

__all__ = [
    "ConfigError",
    "UnsupportedRequest",
    "run",
    "run_with_grams",
    "describe",
    "mirrors",
    "rgroup",
    "arthur_gram",
    "hecke_end",
    "q1_check",
    "selftest",
]


def run(config, mode=None, jobs=1, seed=1):
    """Run a config given as a dict or JSON text; returns the report dict."""
    if not isinstance(config, str):
        config = json.dumps(config)
    return json.loads(_run(config, mode, jobs, seed))


def _config(command, type, lattice="sc", P=(), delta=None, torsion=None, exponent=None,
            mode="numeric", v=2, options=None):
    cfg = {
        "root_datum": {"type": type, "lattice": lattice},
        "parameters": {"mode": mode, "v": v},
        "datum": {"P": list(P)},
        "command": command,
        "options": options or {},
    }
    if delta is not None:
        cfg["datum"]["delta"] = delta
    if torsion is not None or exponent is not None:
        t = {}
        if torsion is not None:
            t["torsion"] = [str(x) for x in torsion]
        if exponent is not None:
            t["exponent"] = [str(x) for x in exponent]
        cfg["datum"]["t"] = t
    return cfg


def describe(type, lattice="sc"):
    return run(_config("describe", type, lattice))


def mirrors(type, lattice="sc", **kw):
    return run(_config("mirrors", type, lattice, **kw))


def rgroup(type, lattice="sc", nontempered=False, **kw):
    return run(_config("rgroup-nontempered" if nontempered else "rgroup", type, lattice, **kw))


def arthur_gram(type, lattice="sc", **kw):
    return run(_config("arthur-gram", type, lattice, **kw))


def hecke_end(type, lattice="sc", **kw):
    return run(_config("hecke-end", type, lattice, **kw))


def q1_check(type, lattice="sc", max_order=6):
    return run(_config("q1-check", type, lattice, options={"max_order": max_order}))


def selftest(quick=True, seed=1):
    return run(_config("selftest", "A1", options={"quick": quick}), seed=seed)
