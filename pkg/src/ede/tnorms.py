"""Triangular norms over [0, 1].

A t-norm is a commutative, associative, monotone binary operation with
unit 1. It models how two evidential strengths interact when their
supports (or adversities) are aggregated: the product norm treats the
pieces of evidence as independent, minimum as fully correlated, and
Lukasiewicz as maximally compensating. The Hamacher family interpolates
with a correlation parameter ``lam``; ``Hamacher(1)`` coincides with the
product norm exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Product:
    """eta * zeta = eta x zeta (independent evidence)."""


@dataclass(frozen=True)
class Minimum:
    """eta * zeta = min(eta, zeta) (fully correlated evidence)."""


@dataclass(frozen=True)
class Lukasiewicz:
    """eta * zeta = max(0, eta + zeta - 1) (the pointwise-smallest of the three)."""


@dataclass(frozen=True)
class Hamacher:
    """eta * zeta = eta x zeta / (lam + (1 - lam)(eta + zeta - eta x zeta)).

    ``lam`` acts as a correlation indicator in [0, 1]. The 0/0 case at
    ``lam = 0, eta = zeta = 0`` is defined as 0, the limit along every
    approach direction.
    """

    lam: float

    def __post_init__(self):
        if not (isinstance(self.lam, (int, float)) and not isinstance(self.lam, bool)):
            raise ValueError(f"Hamacher lambda must be a number, got {self.lam!r}")
        if not math.isfinite(self.lam) or not 0.0 <= self.lam <= 1.0:
            raise ValueError(f"Hamacher lambda must be in [0, 1], got {self.lam}")


TNorm = Union[Product, Minimum, Lukasiewicz, Hamacher]

PRODUCT = Product()
MINIMUM = Minimum()
LUKASIEWICZ = Lukasiewicz()

_NAMES = {"product": PRODUCT, "min": MINIMUM, "minimum": MINIMUM,
          "lukasiewicz": LUKASIEWICZ}


def tnorm_eval(t: TNorm, eta: float, zeta: float) -> float:
    """Evaluate the t-norm at (eta, zeta), both in [0, 1]."""
    for name, x in (("eta", eta), ("zeta", zeta)):
        if not math.isfinite(x) or not 0.0 <= x <= 1.0:
            raise ValueError(f"{name} must be in [0, 1], got {x}")
    if isinstance(t, Product):
        return eta * zeta
    if isinstance(t, Minimum):
        return min(eta, zeta)
    if isinstance(t, Lukasiewicz):
        return max(0.0, eta + zeta - 1.0)
    if isinstance(t, Hamacher):
        num = eta * zeta
        den = t.lam + (1.0 - t.lam) * (eta + zeta - num)
        if den == 0.0:
            return 0.0
        return num / den
    raise TypeError(f"not a t-norm: {t!r}")


def tnorm_from_name(name: str, lam: float | None = None) -> TNorm:
    """Build a t-norm from its CLI/wire name (``hamacher`` needs ``lam``)."""
    key = name.strip().lower()
    if key == "hamacher":
        if lam is None:
            raise ValueError("hamacher t-norm requires a lambda in [0, 1]")
        return Hamacher(lam)
    if key in _NAMES:
        if lam is not None:
            raise ValueError(f"lambda only applies to the hamacher t-norm, not {key!r}")
        return _NAMES[key]
    raise ValueError(f"unknown t-norm: {name!r}")


def tnorm_name(t: TNorm) -> str:
    """Wire name of a t-norm (inverse of ``tnorm_from_name``)."""
    if isinstance(t, Product):
        return "product"
    if isinstance(t, Minimum):
        return "minimum"
    if isinstance(t, Lukasiewicz):
        return "lukasiewicz"
    if isinstance(t, Hamacher):
        return "hamacher"
    raise TypeError(f"not a t-norm: {t!r}")
