"""Frequency-dependent friction models for a protein-solvent environment.

Each model exposes the friction spectrum Re gamma(omega) = J(omega)/(M*omega)
(mass-free, in cm^-1), its Laplace-transformed memory kernel gamma_hat(z),
and the integral (2/pi) * int Re gamma(omega) d omega that fixes the
environment-induced curvature K_e. Mass enters only multiplicatively where
K_e itself is needed, so the models store the mass-free spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy import integrate
from scipy.special import sici

from . import units
from .errors import DivergentIntegralError, DomainError

__all__ = [
    "FrictionModel",
    "OhmicFriction",
    "DrudeFriction",
    "PeakedFriction",
    "DebyeDielectricFriction",
    "LinearProteinFriction",
    "ChromophoreEstimate",
    "effective_curvature",
    "kernel_upper_bound",
    "chromophore_estimate",
    "friction_model_from_json",
]

# omega[rad/ps] = _OMEGA_TAU * omega[cm^-1];  multiplied by tau in ps it
# gives the dimensionless omega*tau of a Debye relaxation term.
_OMEGA_TAU = units.CM1_TO_RAD_PER_S * 1e-12

_QUAD_OPTS = dict(epsabs=0.0, epsrel=1e-11, limit=400)
# the infinite tails carry ~1e-4 of the integral; absolute floor avoids
# chasing roundoff there
_TAIL_QUAD_OPTS = dict(epsabs=1e-13, epsrel=1e-9, limit=200)


def _tail_integral(f, lower: float) -> float:
    # int_lower^inf f(w) dw via w = lower/t, finite domain and smooth for
    # the ~1/w^2 and faster tails these spectra have
    def g(t):
        w = lower / t
        return f(w) * lower / (t * t)

    val, _ = integrate.quad(g, 1e-12, 1.0, **_TAIL_QUAD_OPTS)
    return val


def _require_positive_z(z) -> np.ndarray | float:
    if np.any(np.asarray(z) <= 0.0):
        raise DomainError(f"Laplace variable z must be > 0, got {z}")
    return z


class FrictionModel:
    """Base class; subclasses are frozen dataclasses, safe to share."""

    #: True when laplace_kernel accepts numpy arrays natively.
    vectorized_kernel = False

    kind = "base"

    def friction_spectrum(self, omega):
        """Re gamma(omega) in cm^-1 for omega >= 0 (cm^-1)."""
        raise NotImplementedError

    def laplace_kernel(self, z):
        """gamma_hat(z) in cm^-1 for z > 0 (cm^-1).

        Default: numerical transform
        gamma_hat(z) = (2 z / pi) * int_0^inf Re gamma(w) / (w^2 + z^2) dw.
        """
        _require_positive_z(z)
        z = float(z)
        pts = [w for w in self._feature_frequencies() if w > 0.0]
        upper = 50.0 * max([z] + pts + [1.0])

        def f(w):
            return self.friction_spectrum(w) / (w * w + z * z)

        head, _ = integrate.quad(f, 0.0, upper, points=sorted(set(pts + [z])), **_QUAD_OPTS)
        tail = _tail_integral(f, upper)
        return 2.0 * z / math.pi * (head + tail)

    def spectrum_integral(self) -> float:
        """int_0^inf Re gamma(omega) d omega in cm^-2, or raise if divergent."""
        raise NotImplementedError

    def kernel_tail_scale(self) -> float:
        """Large-z asymptote scale: gamma_hat(z) -> kernel_tail_scale()/z."""
        return 2.0 / math.pi * self.spectrum_integral()

    def _feature_frequencies(self) -> Sequence[float]:
        return ()

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class OhmicFriction(FrictionModel):
    """Memoryless friction: gamma_hat(z) = gamma, J(omega) = M*gamma*omega."""

    gamma: float
    vectorized_kernel = True
    kind = "ohmic"

    def __post_init__(self):
        if self.gamma < 0:
            raise DomainError("gamma must be >= 0")

    def friction_spectrum(self, omega):
        if np.ndim(omega):
            return np.full(np.shape(omega), self.gamma, dtype=float)
        return self.gamma

    def laplace_kernel(self, z):
        _require_positive_z(z)
        if np.ndim(z):
            return np.full(np.shape(z), self.gamma, dtype=float)
        return self.gamma

    def spectrum_integral(self):
        if self.gamma == 0.0:
            return 0.0
        raise DivergentIntegralError(
            "Ohmic friction has no finite spectrum integral; K_e diverges"
        )

    def to_json(self):
        return {"kind": self.kind, "gamma": self.gamma}


@dataclass(frozen=True)
class DrudeFriction(FrictionModel):
    """Drude-regularised friction with bath response frequency omega_d.

    gamma_hat(z) = gamma / (1 + z/omega_d)
    Re gamma(w)  = gamma / (1 + w^2/omega_d^2)
    """

    gamma: float
    omega_d: float
    vectorized_kernel = True
    kind = "drude"

    def __post_init__(self):
        if self.gamma < 0 or self.omega_d <= 0:
            raise DomainError("need gamma >= 0 and omega_d > 0")

    def friction_spectrum(self, omega):
        w = np.asarray(omega, dtype=float)
        out = self.gamma / (1.0 + (w / self.omega_d) ** 2)
        return out if np.ndim(omega) else float(out)

    def laplace_kernel(self, z):
        _require_positive_z(z)
        zz = np.asarray(z, dtype=float)
        out = self.gamma / (1.0 + zz / self.omega_d)
        return out if np.ndim(z) else float(out)

    def spectrum_integral(self):
        # int gamma/(1+w^2/wd^2) dw = gamma*wd*pi/2, so K_e = M*gamma*wd
        return self.gamma * self.omega_d * math.pi / 2.0

    def _feature_frequencies(self):
        return (self.omega_d,)

    def to_json(self):
        return {"kind": self.kind, "gamma": self.gamma, "omega_d": self.omega_d}


@dataclass(frozen=True)
class PeakedFriction(FrictionModel):
    """A friction spectrum peaked at omega_r with width Gamma.

    Re gamma(w) = gamma_r (w*Gamma)^2 / ((w^2 - omega_r^2)^2 + (w*Gamma)^2)
    gamma_hat(z) = gamma_r * z * Gamma / (z^2 + omega_r^2 + z*Gamma)

    The spectrum equals gamma_r exactly at the peak frequency.
    """

    gamma_r: float
    width: float
    omega_r: float
    vectorized_kernel = True
    kind = "peaked"

    def __post_init__(self):
        if min(self.gamma_r, self.width, self.omega_r) < 0:
            raise DomainError("peaked-friction parameters must be >= 0")

    def friction_spectrum(self, omega):
        w = np.asarray(omega, dtype=float)
        num = self.gamma_r * (w * self.width) ** 2
        den = (w * w - self.omega_r**2) ** 2 + (w * self.width) ** 2
        out = np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), 0.0)
        return out if np.ndim(omega) else float(out)

    def laplace_kernel(self, z):
        _require_positive_z(z)
        zz = np.asarray(z, dtype=float)
        out = self.gamma_r * zz * self.width / (zz * zz + self.omega_r**2 + zz * self.width)
        return out if np.ndim(z) else float(out)

    def spectrum_integral(self):
        # int_0^inf w^2 dw / ((w^2-a^2)^2 + b^2 w^2) = pi/(2 b), any a;
        # hence the integral is pi*gamma_r*Gamma/2 and K_e = M*gamma_r*Gamma.
        return math.pi * self.gamma_r * self.width / 2.0

    def _feature_frequencies(self):
        return (self.omega_r, self.omega_r + self.width)

    def to_json(self):
        return {
            "kind": self.kind,
            "gamma_r": self.gamma_r,
            "width": self.width,
            "omega_r": self.omega_r,
        }


# Water dielectric relaxation at 298 K: three Debye terms plus one damped
# resonance. delta_eps, tau (ps) and the resonance frequency (cm^-1).
WATER_DELTA_EPS = (71.5, 2.8, 1.6, 0.92)
WATER_TAU_PS = (8.3, 1.0, 0.1, 0.025)
WATER_OMEGA4_CM1 = 175.0


@dataclass(frozen=True)
class DebyeDielectricFriction(FrictionModel):
    """Dielectric-continuum friction on a charge in a spherical cavity.

    The solvent is described by a complex dielectric function built from
    three Debye relaxation terms plus one damped resonant term; the
    friction spectrum follows from the reaction field of a cavity of
    radius ``cavity_radius`` (angstrom) carved in it:

    Re gamma(w) = e^2 / (2 pi eps0 a^3 M w) * Im[(eps(w) - eps_c)/(2 eps(w) + eps_c)]

    ``eps_c`` is the static dielectric constant of the cavity interior
    (the local protein environment). ``eps_inf`` defaults to 1.54 so the
    static limit is ~78.4, the value for liquid water; the tabulated
    relaxation coefficients do not pin it down.
    """

    cavity_radius: float
    eps_c: float = 2.0
    mass: float = 1.0
    eps_inf: float = 1.54
    delta_eps: tuple = WATER_DELTA_EPS
    tau_ps: tuple = WATER_TAU_PS
    omega_4: float = WATER_OMEGA4_CM1
    kind = "debye_dielectric"

    def __post_init__(self):
        if self.cavity_radius <= 0:
            raise DomainError("cavity radius must be > 0")
        if self.mass <= 0:
            raise DomainError("particle mass must be > 0")
        if len(self.delta_eps) != 4 or len(self.tau_ps) != 4:
            raise DomainError("expected 4 relaxation strengths and 4 times")

    def epsilon(self, omega: float) -> complex:
        """Complex dielectric function at omega (cm^-1, angular sense).

        The sign convention makes Im eps >= 0 for omega >= 0, as required
        for a dissipative medium.
        """
        w = float(omega)
        eps = complex(self.eps_inf)
        for de, tau in zip(self.delta_eps[:3], self.tau_ps[:3]):
            eps += de / (1.0 - 1j * _OMEGA_TAU * w * tau)
        x4 = _OMEGA_TAU * w * self.tau_ps[3]
        r2 = (w / self.omega_4) ** 2 if self.omega_4 > 0 else 0.0
        eps += self.delta_eps[3] / (1.0 - 1j * x4 - r2)
        return eps

    def _prefactor(self) -> float:
        # e^2/(2 pi eps0 a^3 M), expressed so division by omega[cm^-1]
        # yields Re gamma in cm^-1.
        a_m = self.cavity_radius * 1e-10
        m_kg = self.mass * units.PROTON_MASS_KG
        pref_si = units.ELEMENTARY_CHARGE_C**2 / (
            2.0 * math.pi * units.VACUUM_PERMITTIVITY_F_M * a_m**3 * m_kg
        )
        return pref_si / units.CM1_TO_RAD_PER_S**2

    def _reaction_field_loss(self, omega: float) -> float:
        eps = self.epsilon(omega)
        return ((eps - self.eps_c) / (2.0 * eps + self.eps_c)).imag

    def friction_spectrum(self, omega):
        if np.ndim(omega):
            return np.array([self.friction_spectrum(w) for w in np.asarray(omega, dtype=float)])
        w = float(omega)
        if w < 0:
            raise DomainError("omega must be >= 0")
        if w == 0.0:
            # Im eps ~ omega as omega -> 0, so the limit is finite.
            slope = _OMEGA_TAU * (
                sum(de * tau for de, tau in zip(self.delta_eps[:3], self.tau_ps[:3]))
                + self.delta_eps[3] * self.tau_ps[3]
            )
            eps0 = self.epsilon(0.0).real
            loss_over_w = 3.0 * self.eps_c * slope / (2.0 * eps0 + self.eps_c) ** 2
            return self._prefactor() * loss_over_w
        return self._prefactor() * self._reaction_field_loss(w) / w

    def spectrum_integral(self):
        pts = list(self._feature_frequencies())
        upper = 50.0 * max(pts)
        head, _ = integrate.quad(self.friction_spectrum, 0.0, upper, points=pts, **_QUAD_OPTS)
        tail = _tail_integral(self.friction_spectrum, upper)
        return head + tail

    def _feature_frequencies(self):
        relax = [1.0 / (_OMEGA_TAU * tau) for tau in self.tau_ps]
        return tuple(sorted(relax + [self.omega_4]))

    def to_json(self):
        return {
            "kind": self.kind,
            "cavity_radius": self.cavity_radius,
            "eps_c": self.eps_c,
            "mass": self.mass,
            "eps_inf": self.eps_inf,
            "delta_eps": list(self.delta_eps),
            "tau_ps": list(self.tau_ps),
            "omega_4": self.omega_4,
        }


@dataclass(frozen=True)
class LinearProteinFriction(FrictionModel):
    """Ohmic-plus-linear fit to protein-mode damping, with a cutoff.

    Re gamma(w) = (delta_gamma + slope*w) * exp(-w/cutoff). The linear fit
    holds over roughly 100-400 cm^-1; the exponential cutoff (default at
    the fit's upper validity, 400 cm^-1) makes K_e and the Laplace kernel
    exist. With ``cutoff=None`` both are divergent and raise.
    """

    delta_gamma: float = 20.0
    slope: float = 0.38
    cutoff: Optional[float] = 400.0
    kind = "linear_protein"

    def __post_init__(self):
        if self.delta_gamma < 0 or self.slope < 0:
            raise DomainError("need delta_gamma >= 0 and slope >= 0")
        if self.cutoff is not None and self.cutoff <= 0:
            raise DomainError("cutoff must be > 0 or None")

    @property
    def vectorized_kernel(self):
        return self.cutoff is not None

    def friction_spectrum(self, omega):
        w = np.asarray(omega, dtype=float)
        out = self.delta_gamma + self.slope * w
        if self.cutoff is not None:
            out = out * np.exp(-w / self.cutoff)
        return out if np.ndim(omega) else float(out)

    def laplace_kernel(self, z):
        _require_positive_z(z)
        if self.cutoff is None:
            raise DivergentIntegralError(
                "linear protein friction without a cutoff has no Laplace transform"
            )
        # With f(x) = Ci(x) sin x + (pi/2 - Si(x)) cos x and
        #      g(x) = -Ci(x) cos x + (pi/2 - Si(x)) sin x:
        # int e^{-pw}/(w^2+z^2) dw  = f(p z)/z
        # int w e^{-pw}/(w^2+z^2) dw = g(p z)
        # so gamma_hat(z) = (2/pi) [delta_gamma f(pz) + slope * z * g(pz)].
        zz = np.asarray(z, dtype=float)
        x = zz / self.cutoff
        si, ci = sici(x)
        f = ci * np.sin(x) + (math.pi / 2.0 - si) * np.cos(x)
        g = -ci * np.cos(x) + (math.pi / 2.0 - si) * np.sin(x)
        out = 2.0 / math.pi * (self.delta_gamma * f + self.slope * zz * g)
        return out if np.ndim(z) else float(out)

    def spectrum_integral(self):
        if self.cutoff is None:
            raise DivergentIntegralError(
                "linear protein friction without a cutoff has divergent K_e"
            )
        wc = self.cutoff
        return self.delta_gamma * wc + self.slope * wc * wc

    def _feature_frequencies(self):
        return (self.cutoff,) if self.cutoff is not None else ()

    def to_json(self):
        return {
            "kind": self.kind,
            "delta_gamma": self.delta_gamma,
            "slope": self.slope,
            "cutoff": self.cutoff,
        }


_KINDS = {
    cls.kind: cls
    for cls in (
        OhmicFriction,
        DrudeFriction,
        PeakedFriction,
        DebyeDielectricFriction,
        LinearProteinFriction,
    )
}


def friction_model_from_json(obj: dict) -> FrictionModel:
    """Rebuild a friction model from its JSON object form."""
    try:
        kind = obj["kind"]
    except (TypeError, KeyError):
        raise DomainError("friction model JSON needs a 'kind' key") from None
    try:
        cls = _KINDS[kind]
    except KeyError:
        raise DomainError(f"unknown friction model kind {kind!r}") from None
    kwargs = {k: v for k, v in obj.items() if k != "kind"}
    for key in ("delta_eps", "tau_ps"):
        if key in kwargs:
            kwargs[key] = tuple(kwargs[key])
    return cls(**kwargs)


def effective_curvature(model: FrictionModel, mass: float = 1.0) -> float:
    """Environment-induced curvature K_e = (2/pi) M int Re gamma(w) dw.

    Returned in mass-number * cm^-2 units (so Drude gives M*gamma*omega_d).
    Raises ``DivergentIntegralError`` where the integral does not exist.
    """
    if mass <= 0:
        raise DomainError("mass must be > 0")
    return 2.0 / math.pi * mass * model.spectrum_integral()


def kernel_upper_bound(model: FrictionModel, z: float) -> float:
    """Rigorous bound on the memory kernel: gamma_hat(z) <= K_e/(M z).

    Follows from 1/(w^2+z^2) <= 1/z^2 inside the transform integral, i.e.
    gamma_hat(z) <= (2/(pi z)) int Re gamma(w) dw, which is K_e/(M z).
    The particle mass cancels. Propagates the divergent-integral error.
    """
    _require_positive_z(z)
    return 2.0 / math.pi * model.spectrum_integral() / z


@dataclass(frozen=True)
class ChromophoreEstimate:
    """Order-of-magnitude friction bound mapped from chromophore data.

    Built from a measured reorganisation energy E_R (cm^-1) and the dipole
    change delta_mu (debye) of a chromophore at the transfer site. The
    coupling scale is (hbar*e/delta_mu)^2/M expressed in cm^-1; K_e is in
    mass-number * cm^-2; bound_scale is the z* (cm^-1) such that
    gamma_hat(z)/z <= (z*/z)^2.
    """

    reorganisation_energy: float
    delta_mu: float
    mass: float
    coupling_scale: float
    K_e: float
    bound_scale: float


def chromophore_estimate(
    reorganisation_energy: float, delta_mu: float, mass: float = 1.0
) -> ChromophoreEstimate:
    """Map chromophore spectral-density data onto a friction bound.

    K_e = (2/pi) (e/delta_mu)^2 E_R and the kernel bound becomes
    gamma_hat(z)/z <= (z*/z)^2 with z*^2 = K_e/M. K_e is linear in E_R and
    in 1/delta_mu^2.
    """
    if delta_mu <= 0:
        raise DomainError("dipole change must be > 0")
    if reorganisation_energy < 0:
        raise DomainError("reorganisation energy must be >= 0")
    if mass <= 0:
        raise DomainError("mass must be > 0")
    dmu_si = delta_mu * units.DEBYE_C_M
    coupling_j = (units.HBAR_J_S * units.ELEMENTARY_CHARGE_C / dmu_si) ** 2 / (
        mass * units.PROTON_MASS_KG
    )
    coupling_cm1 = coupling_j / units.CM1_TO_J
    z_star_sq = 2.0 / math.pi * coupling_cm1 * reorganisation_energy
    return ChromophoreEstimate(
        reorganisation_energy=reorganisation_energy,
        delta_mu=delta_mu,
        mass=mass,
        coupling_scale=coupling_cm1,
        K_e=mass * z_star_sq,
        bound_scale=math.sqrt(z_star_sq),
    )


def debye_dielectric(model: DebyeDielectricFriction, omega: float) -> complex:
    """Complex solvent dielectric function at omega (cm^-1)."""
    if omega < 0:
        raise DomainError("omega must be >= 0")
    return model.epsilon(omega)


def cavity_friction(model: DebyeDielectricFriction, omega: float) -> float:
    """Dielectric cavity friction spectrum Re gamma(omega) in cm^-1."""
    if omega <= 0:
        raise DomainError("omega must be > 0")
    return model.friction_spectrum(omega)
