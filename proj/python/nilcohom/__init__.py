"""Exact Chevalley-Eilenberg and Dolbeault cohomology of nilpotent Lie
algebras with invariant complex structure.

All computations run in exact arithmetic over Q(i); scalar values cross the
boundary as strings under the wire grammar (e.g. "-1/2+3i").
"""

import json as _json

from ._core import (
    InputError,
    catalog_names,
    scalar_roundtrip,
)
from . import _core

__all__ = [
    "InputError",
    "betti",
    "catalog_names",
    "catalog_input",
    "check",
    "cohomology",
    "ddbar",
    "hodge",
    "massey",
    "pairing",
    "scalar_roundtrip",
    "verdicts",
]

__version__ = "0.1.0"


def _as_text(document):
    """Accepts a dict or JSON text and returns JSON text."""
    if isinstance(document, str):
        return document
    return _json.dumps(document)


def catalog_input(name):
    """Input document of a built-in example, as a dict."""
    return _json.loads(_core.catalog_input_json(name))


def betti(document):
    """de Rham Betti numbers as a list."""
    return _core.betti(_as_text(document))


def hodge(document):
    """Hodge numbers h^{p,q} as an (m+1) x (m+1) list of lists."""
    return _core.hodge(_as_text(document))


def check(document):
    """Validate and classify. Returns the report as a dict."""
    return _json.loads(_core.check_json(_as_text(document)))


def cohomology(document, derham=True, dolbeault=True):
    """Cohomology tables (Betti and Hodge numbers with representatives)."""
    return _json.loads(_core.cohomology_json(_as_text(document), derham, dolbeault))


def verdicts(document):
    """Formality verdicts for the de Rham, Dolbeault and (0,*) algebras."""
    return _json.loads(_core.verdicts_json(_as_text(document)))


def massey(document, complex="derham", max_degree=4):
    """Non-vanishing triple Massey products up to a total degree bound."""
    return _json.loads(_core.massey_json(_as_text(document), complex, max_degree))


def pairing(document):
    """Poincare pairing matrices and ranks per bidegree."""
    return _json.loads(_core.pairing_json(_as_text(document)))


def ddbar(document):
    """Finite-dimensional del-delbar lemma check per bidegree."""
    return _json.loads(_core.ddbar_json(_as_text(document)))
