"""Polynomial continued fractions.

Fractions are plain dicts in the CLI's CF JSON schema::

    {"b0": "2", "prefix": [["1", "3"]],
     "tail": {"a": {"num": ["0", "1"], "den": ["1"]}, "b": "n", "start_index": 2}}

Tail functions may also be given as expressions in n. Rationals are strings
("p/q"), so values are exact in both directions.
"""

import json

from . import _polycf
from ._polycf import Error, preset_defaults, preset_ids, reference_constant

__all__ = [
    "Error",
    "bauer_muir",
    "bernoulli",
    "convergents",
    "euler",
    "evaluate",
    "evaluate_at",
    "even_part",
    "extension",
    "family",
    "growth",
    "odd_part",
    "preset_defaults",
    "preset_ids",
    "product",
    "reference_constant",
    "tietze",
    "verify",
]


def _cf(cf):
    return cf if isinstance(cf, str) else json.dumps(cf)


def _strs(values):
    return [str(v) for v in values]


def evaluate(cf, tol="1e-10", max_terms=64, precision_bits=128):
    return json.loads(_polycf.evaluate(_cf(cf), str(tol), max_terms, precision_bits))


def evaluate_at(cf, terms, precision_bits=128):
    return json.loads(_polycf.evaluate_at(_cf(cf), terms, precision_bits))


def convergents(cf, n):
    return json.loads(_polycf.convergents(_cf(cf), n))


def even_part(cf, n):
    return json.loads(_polycf.even_part(_cf(cf), n))


def odd_part(cf, n):
    return json.loads(_polycf.odd_part(_cf(cf), n))


def bauer_muir(cf, w, n):
    return json.loads(_polycf.bauer_muir(_cf(cf), _strs(w), n))


def extension(cf, w, n):
    return json.loads(_polycf.extension(_cf(cf), _strs(w), n))


def euler(terms, perturbation=()):
    return json.loads(_polycf.euler(_strs(terms), _strs(perturbation)))


def product(factors, perturbation=()):
    return json.loads(_polycf.product(_strs(factors), _strs(perturbation)))


def bernoulli(values):
    return json.loads(_polycf.bernoulli(_strs(values)))


def family(preset, allow_unverified=False, **params):
    return json.loads(_polycf.family(preset, {k: str(v) for k, v in params.items()}, allow_unverified))


def tietze(cf, scan_limit=64):
    return json.loads(_polycf.tietze(_cf(cf), scan_limit))


def growth(cf, n, epsilon="1", precision_bits=128):
    return json.loads(_polycf.growth(_cf(cf), n, str(epsilon), precision_bits))


def verify(preset, terms=64, tol="1e-10", precision_bits=128, **params):
    return json.loads(
        _polycf.verify(preset, {k: str(v) for k, v in params.items()}, terms, str(tol), precision_bits)
    )
