"""Integration contours encircling the positive real axis.

A contour is a smooth path z = phi(u), u real, that starts at +oo below
the axis, crosses the real line once on the negative side, and returns
to +oo above the axis. The shipped family

    phi(u) = ((u + i delta) / (i pi)) * Log((1 + i(u + i delta)) / (1 - i(u + i delta)))

approaches Im z = +-delta as u -> +-oo and satisfies the reflection
symmetry phi(-u) = conj(phi(u)) required by the half-sum engine.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .transform import DeTransform

__all__ = ["ContourNode", "Contour", "default_contour"]

_CHECK_GRID = [-6.0 + 12.0 * k / 60 for k in range(61)]


class ContourNode(NamedTuple):
    """Sample point z = phi(psi(v)) with weight w = phi'(psi(v)) psi'(v)."""

    z: complex
    w: complex


@dataclass(frozen=True)
class Contour:
    """Path handles plus the metadata the engines rely on.

    ``symmetric`` asserts phi(-u) = conj(phi(u)); it is checked on a
    sample grid at construction. ``delta`` records the asymptotic
    height above the axis for diagnostics and validation.
    """

    delta: float
    phi_fn: Callable[[float], complex] = field(repr=False)
    phi_prime_fn: Callable[[float], complex] = field(repr=False)
    symmetric: bool = True

    def __post_init__(self):
        if not (0.0 < self.delta < 1.0):
            raise ValueError(f"delta must be in (0, 1), got {self.delta!r}")
        for u in _CHECK_GRID:
            z = self.phi_fn(u)
            if z.imag == 0.0 and z.real >= 0.0:
                raise ValueError(f"contour touches [0, +oo) at u={u!r}")
            if self.symmetric:
                zc = self.phi_fn(-u)
                if abs(zc - z.conjugate()) > 1e-13 * (1.0 + abs(z)):
                    raise ValueError(f"contour not reflection-symmetric at u={u!r}")

    def phi(self, u: float) -> complex:
        return self.phi_fn(u)

    def phi_prime(self, u: float) -> complex:
        return self.phi_prime_fn(u)

    def node(self, transform: DeTransform, v: float) -> ContourNode:
        """Contour sample for trapezoidal abscissa v.

        Propagates OverflowError from the transform guard; the engines
        treat that as the end of a truncation side.
        """
        u = transform.psi(v)
        z = self.phi_fn(u)
        w = self.phi_prime_fn(u) * transform.psi_prime(v)
        return ContourNode(z, w)


def default_contour(delta: float = 0.5) -> Contour:
    """Build the shipped log-based loop at height ``delta``.

    The derivative is analytic, no numerical differentiation:

        phi'(u) = (1/(i pi)) * (Log((1+iw)/(1-iw)) + 2iw/(1+w^2)),  w = u + i delta.
    """
    if not (0.0 < delta < 1.0):
        raise ValueError(f"delta must be in (0, 1), got {delta!r}")
    i_pi = complex(0.0, math.pi)
    dj = complex(0.0, delta)

    def phi(u: float) -> complex:
        w = u + dj
        return (w / i_pi) * cmath.log((1.0 + 1j * w) / (1.0 - 1j * w))

    def phi_prime(u: float) -> complex:
        w = u + dj
        return (cmath.log((1.0 + 1j * w) / (1.0 - 1j * w)) + 2j * w / (1.0 + w * w)) / i_pi

    return Contour(delta=delta, phi_fn=phi, phi_prime_fn=phi_prime, symmetric=True)
