"""Exact computations around Picard groups of moduli of G-bundles.

Thin wrapper over the C++ extension `_picmod`: root-system data, Dynkin
indices of symbolic representation expressions, the finite-descent calculus
and the Picard classifier tables, plus the brute-force verification suites.
"""

import json as _json

try:
    from ._picmod import *  # noqa: F401,F403  (installed package layout)
    from . import _picmod as _ext
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _picmod import *  # noqa: F401,F403
    import _picmod as _ext

__version__ = "0.1.0"


def classify(group, param=0, s=0, degree="", genus=2):
    """Full Picard report as a dict (parsed from the canonical JSON)."""
    return _json.loads(_ext.classify_json(group, param, s, degree, genus))


def verify_descent_dichotomy():
    return _json.loads(_ext.verify_descent_dichotomy_json())


def verify_gcd_generator(group, param=0, s=0):
    return _json.loads(_ext.verify_gcd_generator_json(group, param, s))


def rho_p_sum(r, s):
    return _json.loads(_ext.rho_p_sum_json(r, s))


def f4_branching():
    return _json.loads(_ext.f4_branching_json())


def g2_parity_exhaustive(genus=2):
    return _json.loads(_ext.g2_parity_exhaustive_json(genus))
