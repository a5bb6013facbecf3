"""Chain geometry, dispersion, and parameter validation.

The conduction band is a tight-binding ring of ``2N + 1`` sites with site
energy ``omega`` and nearest-neighbour hopping ``J``, so the single-particle
dispersion is ``omega - 2 J cos(k)`` on the modes ``k_n = 2 pi n / (2N + 1)``.
Energies are measured in units of the impurity level and the lattice constant
is 1, so impurity separations are positive integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import BandEdgeError, RegimeViolation

#: Coupling-to-gap ratio above which second-order results start to drift
#: at the percent level; ``validate_regime`` records a warning.
WEAK_COUPLING_WARN = 0.1

#: Ratio above which the perturbative treatment is not trustworthy at all;
#: ``validate_regime`` reports failure.
WEAK_COUPLING_FAIL = 0.5


@dataclass(frozen=True)
class ChainParams:
    """Periodic tight-binding chain with ``2 N + 1`` sites.

    Parameters
    ----------
    omega : float
        On-site energy of every chain site.
    J : float
        Nearest-neighbour hopping amplitude, ``J >= 0``.
    N : int
        Half-length; sites carry indices ``-N .. N``.
    """

    omega: float
    J: float
    N: int

    def __post_init__(self) -> None:
        if not isinstance(self.N, int):
            raise TypeError(f"N must be an integer, got {self.N!r}")
        if self.N < 1:
            raise ValueError(f"chain needs N >= 1, got N={self.N}")
        if self.J < 0:
            raise ValueError(f"hopping must be non-negative, got J={self.J}")

    @property
    def num_sites(self) -> int:
        return 2 * self.N + 1

    @property
    def band_bottom(self) -> float:
        return self.omega - 2.0 * self.J

    @property
    def band_top(self) -> float:
        return self.omega + 2.0 * self.J


@dataclass(frozen=True)
class ImpurityConfig:
    """Two impurity levels side-coupled to chain sites ``0`` and ``R``.

    Parameters
    ----------
    eps1, eps2 : float
        Impurity level energies.
    lambda0, lambda_r : float
        Tunnelling amplitudes between each impurity and its chain site.
    R : int
        Separation between the attachment sites, ``R >= 1``.
    """

    eps1: float
    eps2: float
    lambda0: float
    lambda_r: float
    R: int

    def __post_init__(self) -> None:
        if not isinstance(self.R, int):
            raise TypeError(f"separation must be an integer, got {self.R!r}")
        if self.R < 1:
            raise ValueError(f"separation must be >= 1, got R={self.R}")


@dataclass(frozen=True)
class SymmetricSystem:
    """Identical impurities (``eps0``, ``lam``) a distance ``R`` apart.

    The closed-form results below the band are controlled by two derived
    quantities, computed on construction:

    * ``delta = eps0 - omega``, the detuning from the band centre, and
    * ``a = 2 J / delta``, the band parameter.

    Both impurity levels must sit strictly below the band, which for this
    configuration means ``delta < 0`` and ``a`` in ``(-1, 0]``; anything
    else raises :class:`~chaincp.errors.BandEdgeError`.

    Parameters
    ----------
    chain : ChainParams
    eps0 : float
        Common impurity level.
    lam : float
        Common tunnelling amplitude.
    R : int
        Separation, ``1 <= R <= chain.N``.
    """

    chain: ChainParams
    eps0: float
    lam: float
    R: int
    delta: float = field(init=False)
    a: float = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.R, int):
            raise TypeError(f"separation must be an integer, got {self.R!r}")
        if not 1 <= self.R <= self.chain.N:
            raise ValueError(
                f"separation must satisfy 1 <= R <= N={self.chain.N}, got R={self.R}"
            )
        delta = self.eps0 - self.chain.omega
        if self.eps0 >= self.chain.band_bottom:
            raise BandEdgeError(
                f"impurity level eps0={self.eps0} is not below the band bottom "
                f"{self.chain.band_bottom}; closed forms require delta < 0 and |a| < 1"
            )
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "a", 2.0 * self.chain.J / delta)

    @classmethod
    def from_detuning(
        cls,
        delta: float,
        J: float,
        lam: float,
        R: int,
        N: int,
        eps0: float = 1.0,
    ) -> "SymmetricSystem":
        """Build a system from the detuning instead of the band centre."""
        chain = ChainParams(omega=eps0 - delta, J=J, N=N)
        return cls(chain=chain, eps0=eps0, lam=lam, R=R)

    @property
    def impurities(self) -> ImpurityConfig:
        """The equivalent two-impurity configuration."""
        return ImpurityConfig(
            eps1=self.eps0, eps2=self.eps0,
            lambda0=self.lam, lambda_r=self.lam, R=self.R,
        )

    def at_separation(self, R: int) -> "SymmetricSystem":
        """The same system with the impurities placed ``R`` sites apart."""
        return self if R == self.R else replace(self, R=R)


def dispersion(chain: ChainParams, k) -> np.ndarray | float:
    """Band energy ``omega - 2 J cos(k)`` for a mode or an array of modes."""
    return chain.omega - 2.0 * chain.J * np.cos(k)


def brillouin_modes(chain: ChainParams) -> np.ndarray:
    """Allowed momenta ``2 pi n / (2N + 1)`` for ``n = -N .. N``, in order."""
    n = np.arange(-chain.N, chain.N + 1)
    return 2.0 * np.pi * n / chain.num_sites


@dataclass(frozen=True)
class RegimeReport:
    """Outcome of :func:`validate_regime`.

    Attributes
    ----------
    below_band : bool
        Both impurity levels sit strictly below the band bottom.
    separation_ok : bool
        The attachment sites both fit on the chain.
    coupling_ratio : float
        ``max(|lambda0|, |lambda_r|)`` over the smaller impurity-band gap;
        infinite when a level is not below the band.
    weak_coupling : bool
        The ratio stays at or below the hard threshold.
    warnings : tuple of str
        Soft findings (ratio above the warning threshold, for instance).
    """

    below_band: bool
    separation_ok: bool
    coupling_ratio: float
    weak_coupling: bool
    warnings: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.below_band and self.separation_ok and self.weak_coupling


def validate_regime(chain: ChainParams, imps: ImpurityConfig) -> RegimeReport:
    """Check that the second-order treatment applies to this configuration.

    The expansion parameter is the coupling over the distance from the
    nearest impurity level to the band bottom.  Errors enter at second
    order in that ratio, so 0.1 keeps them near the percent level; beyond
    0.5 the expansion has no business converging.
    """
    gap = chain.band_bottom - max(imps.eps1, imps.eps2)
    below_band = gap > 0.0
    coupling = max(abs(imps.lambda0), abs(imps.lambda_r))
    ratio = coupling / gap if below_band else math.inf
    weak = ratio <= WEAK_COUPLING_FAIL
    separation_ok = imps.R <= chain.N

    warnings: list[str] = []
    if not below_band:
        warnings.append(
            f"impurity level max(eps1, eps2)={max(imps.eps1, imps.eps2)} is not "
            f"below the band bottom {chain.band_bottom}"
        )
    elif WEAK_COUPLING_WARN < ratio <= WEAK_COUPLING_FAIL:
        warnings.append(
            f"coupling ratio {ratio:.3g} exceeds {WEAK_COUPLING_WARN}; "
            "second-order results may drift beyond the percent level"
        )
    if not separation_ok:
        warnings.append(f"separation R={imps.R} exceeds the chain half-length N={chain.N}")

    return RegimeReport(
        below_band=below_band,
        separation_ok=separation_ok,
        coupling_ratio=ratio,
        weak_coupling=weak,
        warnings=tuple(warnings),
    )


def require_valid_regime(chain: ChainParams, imps: ImpurityConfig) -> RegimeReport:
    """Run :func:`validate_regime` and raise on hard failure."""
    report = validate_regime(chain, imps)
    if not report.ok:
        raise RegimeViolation(
            "configuration outside the validity regime: "
            + "; ".join(report.warnings or ("coupling too strong",))
            + f" (coupling ratio {report.coupling_ratio:.3g})"
        )
    return report
