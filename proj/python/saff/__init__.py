"""Two-step extensions of SAff_n representations: Schur combinatorics,
filtrations of matrix models, and rationality decisions.

Composite results are returned as plain dicts/lists decoded from the same JSON
the ``saff`` command line tool writes.
"""

import json

from . import _saff
from ._saff import ResourceLimitError, ValidationError

DEFAULT_SEED = 20240611
DEFAULT_TRIALS = 3

__all__ = [
    "ResourceLimitError",
    "ValidationError",
    "normalize",
    "weyl_dim",
    "dual",
    "tensor",
    "pieri",
    "classify",
    "model",
    "dual_model",
    "filtrate",
    "check2step",
    "enumerate_candidates",
    "stable_level",
    "selftest",
]


def _as_text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def normalize(n, weight):
    return _saff.normalize(n, list(weight))


def weyl_dim(n, weight):
    return int(_saff.weyl_dim(n, list(weight)))


def dual(n, weight):
    return _saff.dual(n, list(weight))


def tensor(n, a, b):
    """Decomposes (⊕ a) ⊗ (⊕ b); a and b are lists of weights."""
    return json.loads(_saff.tensor(n, [list(w) for w in a], [list(w) for w in b]))


def pieri(n, weight, k):
    return json.loads(_saff.pieri(n, list(weight), k))


def classify(rep, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """rep: {"n": .., "summands": [{"lambda": [...], "mult": m}, ...]}."""
    return json.loads(_saff.classify(_as_text(rep), seed, trials))


def model(which, n, l=0, weight=(), max_dim=20000, sparse=False):
    """which: "sym-dual", "sl-only", "dual-standard-quadric" or "cubic-quadric"."""
    return json.loads(_saff.model(which, n, l, list(weight), max_dim, sparse))


def dual_model(rep):
    return json.loads(_saff.dual_model(_as_text(rep)))


def filtrate(rep, kind="socle"):
    return json.loads(_saff.filtrate(_as_text(rep), kind))


def check2step(ext, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """ext: {"n": .., "Q": multiset, "S": multiset, "W": multiset?, ...}."""
    return json.loads(_saff.check2step(_as_text(ext), seed, trials))


def enumerate_candidates(n, max_dim_s=None, max_trivials=None, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """Returns (entries, summary text)."""
    lines, summary = _saff.enumerate(n, max_dim_s, max_trivials, seed, trials)
    return [json.loads(line) for line in lines], summary


def stable_level(n):
    sl, saff = _saff.stable_level(n)
    return {"SL": sl, "SAff": saff}


def selftest(only=(), seed=DEFAULT_SEED):
    """[(criterion, passed, detail), ...]"""
    return _saff.selftest(list(only), seed)
