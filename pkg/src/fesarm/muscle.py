"""Hill-type muscle-tendon unit with FES-scale activation dynamics.

The tendon is rigid: fiber length is musculotendon length minus tendon
slack length, floored at 1% of the optimal fiber length.  Force is the
usual product form

    F = f_max * (a * f_L(l) * f_V(v) + f_P(l))

with a Gaussian active force-length curve, an exponential passive curve
that engages above optimal length, and a hyperbolic force-velocity curve
whose eccentric branch saturates at a plateau.  Activation follows a
first-order lag between excitation and activation with a slow (100 ms)
rise time constant, matching the sluggish response of surface-stimulated
muscle; the lag is integrated exactly per substep.

All curve constants live in :class:`CurveConstants` and can be overridden
through the model config file.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from numba import njit

from .errors import InvalidInputError

# Fiber length floor, as a fraction of optimal fiber length.  Prevents
# division/sign pathologies when the MTU shortens below slack length.
FIBER_LENGTH_FLOOR = 0.01


@dataclass(frozen=True)
class CurveConstants:
    """Shape constants of the normalized force curves.

    Attributes:
        fl_width: width of the Gaussian active force-length bell.
        fp_shape: exponential shape factor of the passive curve.
        fp_strain: fiber strain at which passive force reaches f_max.
        fv_curvature: curvature of the concentric force-velocity branch.
        fv_ecc_plateau: force plateau of the eccentric branch.
    """

    fl_width: float = 0.45
    fp_shape: float = 4.0
    fp_strain: float = 0.6
    fv_curvature: float = 0.25
    fv_ecc_plateau: float = 1.4


DEFAULT_CURVES = CurveConstants()


@dataclass(frozen=True)
class MuscleParams:
    """Per-muscle constants.

    Attributes:
        name: muscle label.
        f_max: maximum isometric force (N).
        l_opt: optimal fiber length (m).
        l_slack: tendon slack length (m).
        v_max: maximum shortening velocity (optimal fiber lengths per second).
        tau_act: activation time constant (s); 0.1 s mimics the long
            excitation-to-force delay of surface stimulation.
        tau_deact: deactivation time constant (s).
    """

    name: str
    f_max: float
    l_opt: float
    l_slack: float
    v_max: float = 10.0
    tau_act: float = 0.1
    tau_deact: float = 0.06

    def __post_init__(self):
        if not (self.f_max > 0 and self.l_opt > 0 and self.v_max > 0):
            raise InvalidInputError(f"{self.name}: f_max, l_opt, v_max must be positive")
        if self.l_slack < 0:
            raise InvalidInputError(f"{self.name}: l_slack must be non-negative")
        if not (self.tau_act > 0 and self.tau_deact > 0):
            raise InvalidInputError(f"{self.name}: time constants must be positive")


@dataclass(frozen=True)
class MuscleState:
    """Dynamic muscle state: activation in [0, 1]."""

    activation: float = 0.0


@njit(cache=True)
def activation_update(a, u, dt, tau_act, tau_deact):
    """Exact one-step solution of the activation ODE adot = (u - a)/tau."""
    tau = tau_act if u >= a else tau_deact
    a_new = u + (a - u) * math.exp(-dt / tau)
    return min(max(a_new, 0.0), 1.0)


def activation_step(state: MuscleState, u: float, dt: float,
                    params: MuscleParams) -> MuscleState:
    """Advance activation by dt under constant excitation u.

    The first-order lag uses tau_act while excitation exceeds activation
    and tau_deact otherwise, and is integrated exactly (zero-order hold).
    """
    if not (math.isfinite(u) and math.isfinite(dt)):
        raise InvalidInputError("excitation and dt must be finite")
    if not 0.0 <= u <= 1.0:
        raise InvalidInputError(f"excitation {u} outside [0, 1]")
    if dt <= 0.0:
        raise InvalidInputError(f"dt must be positive, got {dt}")
    a = activation_update(state.activation, u, dt, params.tau_act, params.tau_deact)
    return MuscleState(activation=a)


@njit(cache=True)
def active_fl(l_norm, width):
    return math.exp(-((l_norm - 1.0) ** 2) / width)


@njit(cache=True)
def passive_fl(l_norm, shape, strain):
    if l_norm <= 1.0:
        return 0.0
    return math.expm1(shape * (l_norm - 1.0) / strain) / math.expm1(shape)


@njit(cache=True)
def force_velocity_curve(v_norm, curvature, plateau):
    if v_norm < 0.0:
        if v_norm <= -1.0:
            return 0.0
        return (1.0 + v_norm) / (1.0 - v_norm / curvature)
    # Eccentric branch: saturating rise to the plateau, with the slope at
    # v = 0 matched to the concentric branch so the curve is C1.
    k = (plateau - 1.0) * curvature / (1.0 + curvature)
    return plateau - (plateau - 1.0) * k / (k + v_norm)


@njit(cache=True)
def mtu_force_raw(a, l_mtu, v_mtu, f_max, l_opt, l_slack, v_max,
                  fl_width, fp_shape, fp_strain, fv_curvature, fv_plateau,
                  passive_on):
    """Rigid-tendon force from MTU length/velocity and activation."""
    l_fiber = l_mtu - l_slack
    floor = FIBER_LENGTH_FLOOR * l_opt
    if l_fiber < floor:
        l_fiber = floor
    l_norm = l_fiber / l_opt
    v_norm = v_mtu / (l_opt * v_max)
    f = a * active_fl(l_norm, fl_width) * force_velocity_curve(v_norm, fv_curvature, fv_plateau)
    if passive_on:
        f += passive_fl(l_norm, fp_shape, fp_strain)
    if f < 0.0:
        f = 0.0
    return f_max * f


def active_force_length(l_norm: float, curves: CurveConstants = DEFAULT_CURVES) -> float:
    """Normalized active force-length curve (Gaussian bell, peak at l_norm=1)."""
    if not (math.isfinite(l_norm) and l_norm > 0):
        raise InvalidInputError(f"l_norm must be positive and finite, got {l_norm}")
    return float(active_fl(l_norm, curves.fl_width))


def passive_force_length(l_norm: float, curves: CurveConstants = DEFAULT_CURVES) -> float:
    """Normalized passive force: zero up to optimal length, exponential above."""
    if not (math.isfinite(l_norm) and l_norm > 0):
        raise InvalidInputError(f"l_norm must be positive and finite, got {l_norm}")
    return float(passive_fl(l_norm, curves.fp_shape, curves.fp_strain))


def force_velocity(v_norm: float, curves: CurveConstants = DEFAULT_CURVES) -> float:
    """Normalized force-velocity curve; shortening is negative v_norm."""
    if not math.isfinite(v_norm):
        raise InvalidInputError(f"v_norm must be finite, got {v_norm}")
    return float(force_velocity_curve(v_norm, curves.fv_curvature, curves.fv_ecc_plateau))


def mtu_force(params: MuscleParams, state: MuscleState, l_mtu: float, v_mtu: float,
              curves: CurveConstants = DEFAULT_CURVES, passive_on: bool = True) -> float:
    """Musculotendon force (N, always >= 0) for given MTU length and velocity.

    v_mtu is the MTU lengthening rate in m/s (shortening negative); with a
    rigid tendon the fiber velocity equals it.
    """
    if not (math.isfinite(l_mtu) and math.isfinite(v_mtu)):
        raise InvalidInputError("l_mtu and v_mtu must be finite")
    if l_mtu <= 0:
        raise InvalidInputError(f"l_mtu must be positive, got {l_mtu}")
    return float(mtu_force_raw(
        state.activation, l_mtu, v_mtu,
        params.f_max, params.l_opt, params.l_slack, params.v_max,
        curves.fl_width, curves.fp_shape, curves.fp_strain,
        curves.fv_curvature, curves.fv_ecc_plateau, passive_on))
