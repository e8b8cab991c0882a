"""Volume-dependent field theory evaluation.

Thin wrapper over the C++ core: theories, bordisms and meshes travel as JSON
(dicts on the Python side), operators come back as dicts with [re, im]
complex entries.
"""
from __future__ import annotations

import json as _json

from ._areal import (
    CertificationError,
    classify_decay,
    partition as _partition,
    semigroup_residual as _semigroup_residual,
    adjoint_residual as _adjoint_residual,
    sqrt_det as _sqrt_det,
    unitarity_defect as _unitarity_defect,
)
from . import _areal as _core

__all__ = [
    "CertificationError",
    "validate_theory",
    "ym_generate",
    "eval_bordism",
    "partition",
    "lorentz_eval",
    "limits",
    "metric_volume",
    "allowability",
    "sqrt_det",
    "classify_decay",
    "semigroup_residual",
    "adjoint_residual",
    "unitarity_defect",
]


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def validate_theory(theory):
    return _json.loads(_core.validate_theory(_dump(theory)))


def ym_generate(group, cmax, norm="1/1"):
    return _json.loads(_core.ym_generate(group, str(cmax), norm))


def eval_bordism(theory, bordism, eps=1e-8):
    return _json.loads(_core.eval_bordism(_dump(theory), _dump(bordism), eps))


def partition(theory, genus, volume, eps=1e-8):
    return _partition(_dump(theory), genus, complex(volume), eps)


def lorentz_eval(theory, bordism, lambda_max):
    return _json.loads(_core.lorentz_eval(_dump(theory), _dump(bordism), lambda_max))


def limits(theory, bordism, mode):
    return _json.loads(_core.limits(_dump(theory), _dump(bordism), mode))


def metric_volume(mesh):
    return _json.loads(_core.metric_volume(_dump(mesh)))


def allowability(g):
    return _json.loads(_core.allowability(g))


def sqrt_det(g):
    return _sqrt_det(g)


def semigroup_residual(theory, s, s2):
    return _semigroup_residual(_dump(theory), complex(s), complex(s2))


def adjoint_residual(theory, bordism):
    return _adjoint_residual(_dump(theory), _dump(bordism))


def unitarity_defect(theory, zeta, lambda_max):
    return _unitarity_defect(_dump(theory), zeta, lambda_max)
