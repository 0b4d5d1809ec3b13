"""alpha-spectral radius of graphs and the maximal radius for a given matching number."""

import json

from ._core import *  # noqa: F401,F403
from ._core import _classify_regime_json, _exhaustive_max_json, _family_search_json

__version__ = "0.1.0"


def classify_regime(n, beta, alpha=0):
    """Regime, threshold n*, predicted bound and extremal graphs as a dict."""
    return json.loads(_classify_regime_json(n, beta, alpha))


def exhaustive_max(n, beta, alpha=0, tol=1e-9, jobs=1):
    """Verification report over every graph of order n (n <= 8) as a dict."""
    return json.loads(_exhaustive_max_json(n, beta, alpha, tol, jobs))


def family_search(n, beta, alpha=0, tol=1e-9):
    """Best K_s v (K_n1 u ... u K_nq) for (n, beta, alpha) as a dict."""
    return json.loads(_family_search_json(n, beta, alpha, tol))
