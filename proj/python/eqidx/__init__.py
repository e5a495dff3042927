"""Burnside ring valued indices and Euler characteristics."""

from ._core import (
    BurnsideElement,
    BurnsideRing,
    DomainError,
    InvertiblePolynomial,
    chi_G_simplicial,
    poincare_hopf,
)

__all__ = [
    "BurnsideElement",
    "BurnsideRing",
    "DomainError",
    "InvertiblePolynomial",
    "chi_G_simplicial",
    "poincare_hopf",
]
