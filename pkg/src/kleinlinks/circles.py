"""Boundary circles of complex lines on the unit 3-sphere.

A complex line that meets the open ball cuts the sphere in a round circle
theta |-> P0 + w * e^{i theta} * D, where P0 is the closest point of the
extension to the origin, D a unit vector along the line, and
w = sqrt(1 - |P0|^2).  Orthogonality <P0, D> = 0 makes |point|^2 = 1 an
algebraic identity, so the float parametrization sits on S^3 to roundoff.

The foot and direction are kept exact; floats appear only in `eval`/`vel`.
Any object with the same `eval`/`vel`/`theta_max` surface can feed the
diagram-projection stage (the circle here, torus curves, rotated wrappers).
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .complexline import ComplexLine
from .rational import GaussianRational

__all__ = ["CircleParam", "circle_at_infinity"]

TWO_PI = 2.0 * math.pi


class CircleParam:
    """theta |-> foot + w * e^{i theta} * direction, theta in [0, 2*pi).

    Increasing theta traces the canonical complex orientation: the direction
    vector is determined up to a unit-modulus scalar, and conjugating by
    that scalar only shifts the start angle.
    """

    __slots__ = ("line", "foot", "dirvec", "norm", "wsq", "_foot_c", "_dir_c", "_w")

    is_round_circle = True

    def __init__(self, line: ComplexLine):
        self.line = line
        a, b, g = line.alpha, line.beta, line.gamma
        n = a.abs2() + b.abs2()
        self.norm = n  # exact |alpha|^2 + |beta|^2 of the canonical coefficients
        self.foot = ((a.conj() * g) / n, (b.conj() * g) / n)
        self.dirvec = (-b, a)  # exact spanning vector, squared norm = n
        self.wsq = (n - g.abs2()) / n
        if self.wsq <= 0:
            raise ValueError("line does not meet the open ball")
        self._foot_c = np.array([complex(self.foot[0]), complex(self.foot[1])])
        scale = 1.0 / math.sqrt(float(n))
        self._dir_c = np.array([complex(self.dirvec[0]), complex(self.dirvec[1])]) * scale
        self._w = math.sqrt(float(self.wsq))

    @property
    def radius(self) -> float:
        return self._w

    @property
    def radius_sq(self) -> Fraction:
        return self.wsq

    @property
    def theta_max(self) -> float:
        return TWO_PI

    def eval(self, thetas) -> np.ndarray:
        """Points on the circle, shape (2, n) complex."""
        thetas = np.asarray(thetas, dtype=float)
        phase = self._w * np.exp(1j * thetas)
        return self._foot_c[:, None] + phase[None, :] * self._dir_c[:, None]

    def vel(self, thetas) -> np.ndarray:
        """d/dtheta of eval, shape (2, n) complex."""
        thetas = np.asarray(thetas, dtype=float)
        phase = 1j * self._w * np.exp(1j * thetas)
        return phase[None, :] * self._dir_c[:, None]

    def eval_scalar(self, theta: float):
        """Single point as a plain (z, w) pair; cheap inner-loop path."""
        phase = self._w * complex(math.cos(theta), math.sin(theta))
        return (
            complex(self._foot_c[0]) + phase * complex(self._dir_c[0]),
            complex(self._foot_c[1]) + phase * complex(self._dir_c[1]),
        )

    def vel_scalar(self, theta: float):
        phase = 1j * self._w * complex(math.cos(theta), math.sin(theta))
        return phase * complex(self._dir_c[0]), phase * complex(self._dir_c[1])

    def min_dist2_to(self, p) -> float:
        """min over theta of |eval(theta) - p|^2, in closed form.

        |q + w e^{i theta} D|^2 = |q|^2 + w^2 + 2 w Re(e^{i theta} <D,q>),
        minimized at |q|^2 + w^2 - 2 w |<D,q>|.
        """
        q = self._foot_c - np.asarray(p, dtype=complex)
        inner = np.vdot(self._dir_c, q)  # <q, D> up to conjugation; |.| is all we need
        qq = float(np.real(np.vdot(q, q)))
        return qq + self._w * self._w - 2.0 * self._w * abs(inner)

    def __repr__(self):
        return f"CircleParam(foot=({self.foot[0]}, {self.foot[1]}), w^2={self.wsq})"


def circle_at_infinity(l: ComplexLine) -> CircleParam:
    """The circle in which the extension of l meets the unit 3-sphere."""
    return CircleParam(l)
