"""Spanning trees with few leaves and branch vertices in claw-free graphs."""

import json as _json

try:
    from . import _clawtree as _core
except ImportError:  # in-tree build: the extension sits next to the package, not inside it
    import _clawtree as _core

globals().update({name: getattr(_core, name) for name in dir(_core) if not name.startswith("_")})

__all__ = [
    "Graph",
    "SolveError",
    "ParseError",
    "GraphError",
    "CertificateFormatError",
    "OracleLimit",
    "claw_witness",
    "sigma_k",
    "sigma_bruteforce",
    "is_connected",
    "line_graph",
    "net_graph",
    "four_net_graph",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "spider",
    "random_connected",
    "generate",
    "check_hypothesis",
    "solve",
    "solve_branch_mode",
    "verify_certificate",
    "oracle_report",
]


def check_hypothesis(graph, m, n):
    return _json.loads(_core._check_hypothesis(graph, m, n))


def solve(graph, m, n, force=False, exchange_fallback=False):
    """Returns the result document: status, tree or certificate, stats."""
    return _json.loads(_core._solve(graph, m, n, force, exchange_fallback))


def solve_branch_mode(graph, k, force=False, exchange_fallback=False):
    return _json.loads(_core._solve_branch_mode(graph, k, force, exchange_fallback))


def verify_certificate(graph, certificate, m, n):
    """Returns "ok" or the name of the first failed check."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _core._verify_certificate(graph, certificate, m, n)


def oracle_report(graph):
    return _json.loads(_core._oracle_report(graph))
