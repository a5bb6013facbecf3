"""Casimir-Polder energy and force between two impurities below the band.

The separation-dependent part of the ground-state energy of the symmetric
two-impurity problem is

.. math::

    E_{cp}(R) = \\frac{\\lambda^2}{\\delta}\\,
                \\frac{q^R}{\\sqrt{1 - a^2}},
    \\qquad a = \\frac{2J}{\\delta},
    \\qquad q = \\frac{\\sqrt{1 - a^2} - 1}{a},

negative for ``delta < 0``: the even combination of the impurity levels is
pushed down, so the interaction is attractive.  On a lattice the force is
the discrete difference

.. math:: f(R) = -\\big(E_{cp}(R + 1) - E_{cp}(R)\\big) < 0,

pointing towards smaller separations.  Since ``q`` in ``[0, 1)``, both decay
exponentially with rate ``Gamma = ln(1/q)`` per site.

Near the band edge (``a -> -1``) the lattice scale drops out and a
continuum description applies, with

.. math::

    E_{cp}(R) \\approx -\\frac{\\lambda^2}{2 J b}\\, e^{-b R},
    \\qquad b = \\sqrt{\\frac{\\omega - 2J - \\epsilon_0}{J}},

valid while the edge distance ``(omega - 2J - eps0) / (4J)`` stays small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BandEdgeError, InvalidRegime
from .lattice import SymmetricSystem
from .perturbation import geometric_ratio

__all__ = [
    "ForceRecord",
    "ForceCurve",
    "DecayProfile",
    "cp_energy",
    "ecp_force",
    "force_curve",
    "decay_profile",
    "continuum_decay_constant",
    "cp_energy_continuum",
]


class ForceRecord(NamedTuple):
    R: int
    energy: float
    force: float


@dataclass(frozen=True)
class ForceCurve:
    """Energy and force tabulated over a range of separations."""

    system: SymmetricSystem
    records: tuple[ForceRecord, ...]

    def separations(self) -> list[int]:
        return [rec.R for rec in self.records]

    def forces(self) -> list[float]:
        return [rec.force for rec in self.records]


@dataclass(frozen=True)
class DecayProfile:
    """Exponential decay law ``f(R) = amplitude * exp(-gamma * R)``.

    Attributes
    ----------
    gamma : float
        Decay rate per lattice site, ``ln(1/q)``; infinite at ``a = 0``.
    rc : float
        Characteristic range ``1 / gamma``; zero at ``a = 0``.
    amplitude : float
        Prefactor ``-(lam**2 / delta) (q - 1) / sqrt(1 - a**2)``, the
        magnitude scale of the force at ``R = 0``.
    """

    gamma: float
    rc: float
    amplitude: float


def _check_separation(R: int) -> None:
    if not isinstance(R, int):
        raise TypeError(f"separation must be an integer, got {R!r}")
    if R < 1:
        raise ValueError(f"separation must be >= 1, got R={R}")


def cp_energy(sys: SymmetricSystem, R: int) -> float:
    """Separation-dependent ground-state energy at separation ``R``.

    Parameters
    ----------
    sys : SymmetricSystem
        Only the couplings and detuning enter; ``sys.R`` is ignored.
    R : int
        Separation to evaluate at, ``R >= 1``.

    Returns
    -------
    float
        ``(lam**2 / delta) * q**R / sqrt(1 - a**2)``; exactly ``0.0`` for a
        flat band (``J = 0``).
    """
    _check_separation(R)
    a = sys.a
    if abs(a) >= 1.0:
        raise BandEdgeError(f"band parameter |a| >= 1 (a={a}); no bound doublet")
    return (sys.lam ** 2 / sys.delta) * geometric_ratio(a) ** R / math.sqrt(1.0 - a * a)


def ecp_force(sys: SymmetricSystem, R: int) -> float:
    """Discrete force ``-(E_cp(R + 1) - E_cp(R))``, negative (attractive)."""
    return -(cp_energy(sys, R + 1) - cp_energy(sys, R))


def force_curve(sys: SymmetricSystem, rmin: int, rmax: int) -> ForceCurve:
    """Tabulate energy and force for ``R = rmin .. rmax``.

    The force at ``rmax`` uses the energy at ``rmax + 1``, so the range must
    satisfy ``1 <= rmin <= rmax <= chain.N - 1``.
    """
    _check_separation(rmin)
    if rmax < rmin:
        raise ValueError(f"need rmin <= rmax, got rmin={rmin}, rmax={rmax}")
    if rmax > sys.chain.N - 1:
        raise ValueError(
            f"rmax={rmax} leaves no room for the difference at R + 1 "
            f"on a chain with N={sys.chain.N}"
        )
    records = tuple(
        ForceRecord(R=r, energy=cp_energy(sys, r), force=ecp_force(sys, r))
        for r in range(rmin, rmax + 1)
    )
    return ForceCurve(system=sys, records=records)


def decay_profile(sys: SymmetricSystem) -> DecayProfile:
    """Decay rate, range, and amplitude of the force law.

    For ``a = 0`` the interaction vanishes identically; this limit is
    reported as ``gamma = inf`` and ``rc = 0`` with the amplitude kept
    finite, so ``amplitude * exp(-gamma * R)`` is still ``0.0`` for every
    ``R >= 1``.
    """
    a = sys.a
    q = geometric_ratio(a)
    if q == 0.0:
        gamma, rc = math.inf, 0.0
    else:
        gamma = -math.log(q)
        rc = 1.0 / gamma
    amplitude = -(sys.lam ** 2 / sys.delta) * (q - 1.0) / math.sqrt(1.0 - a * a)
    return DecayProfile(gamma=gamma, rc=rc, amplitude=amplitude)


def continuum_decay_constant(sys: SymmetricSystem) -> float:
    """Decay constant ``b = sqrt((omega - 2J - eps0) / J)`` of the continuum law.

    Raises
    ------
    InvalidRegime
        For a flat band (``J = 0``); there is no continuum limit to speak of.
    """
    if sys.chain.J == 0.0:
        raise InvalidRegime("continuum approximation needs J > 0")
    edge = sys.chain.band_bottom - sys.eps0
    # edge > 0 is guaranteed by SymmetricSystem, but guard the sqrt anyway.
    if edge <= 0.0:
        raise BandEdgeError(f"impurity level is not below the band edge (distance {edge})")
    return math.sqrt(edge / sys.chain.J)


def cp_energy_continuum(sys: SymmetricSystem, R: int) -> float:
    """Continuum (near-edge) approximation ``-(lam**2 / (2 J b)) exp(-b R)``.

    A useful stand-in for :func:`cp_energy` only close to the band edge,
    roughly ``(omega - 2J - eps0) / (4J) < 0.06``; further below the band
    the lattice decay rate and the continuum ``b`` part ways at the several
    percent level.
    """
    _check_separation(R)
    b = continuum_decay_constant(sys)
    return -(sys.lam ** 2 / (2.0 * sys.chain.J * b)) * math.exp(-b * R)
