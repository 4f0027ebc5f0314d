"""Separable integer partition classes and q-series identity checks."""

import json

from . import _core
from ._core import (
    decompose,
    enumerate_basis,
    gaussian_binomial,
    identity_ids,
    ncopies_counts,
    ncopies_gf,
    oracle_concordance,
    presets,
    recompose,
    series,
    verify,
    verify_all,
    verify_sip,
)


def run(command, **options):
    """Run a CLI command in-process and return (exit_code, report dict or None)."""
    code, text = _core.run_json(command, options)
    return code, (json.loads(text) if text else None)


__all__ = [
    "decompose",
    "enumerate_basis",
    "gaussian_binomial",
    "identity_ids",
    "ncopies_counts",
    "ncopies_gf",
    "oracle_concordance",
    "presets",
    "recompose",
    "run",
    "series",
    "verify",
    "verify_all",
    "verify_sip",
]
