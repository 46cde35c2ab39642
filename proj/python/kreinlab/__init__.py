# Copyright kreinlab contributors. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Dissipative operators in finite-dimensional Krein spaces."""

import json

from ._core import (
    Instance,
    KreinError,
    ParseError,
    classify,
    epsilon_family,
    gamma_gram,
    load_instance,
    parse_instance,
    random_dissipative,
    riesz_f,
    sl_study,
)
from . import _core


def analyze(instance, seed=0):
    """Full report as a dict."""
    return json.loads(_core.analyze_json(instance, seed))


def criterion(instance, seed=0):
    """Conditions a, b, c as a dict."""
    return json.loads(_core.criterion_json(instance, seed))


__all__ = [
    "Instance",
    "KreinError",
    "ParseError",
    "analyze",
    "classify",
    "criterion",
    "epsilon_family",
    "gamma_gram",
    "load_instance",
    "parse_instance",
    "random_dissipative",
    "riesz_f",
    "sl_study",
]
