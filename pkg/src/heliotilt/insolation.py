"""Clear-sky beam insolation on a tilted, south-facing plane.

Direct-normal irradiance follows the air-mass attenuation law
S * 0.7 ** (AM ** 0.678) with AM = 1 / cos(zenith); the zenith is
capped at 89 deg so the air mass stays finite at the horizon. The
plane-of-array component multiplies by the incidence cosine floored at
zero. Beam only: no diffuse or ground-reflected terms, which keeps the
comparison between tilt policies purely geometric.

Daily energy integrates the plane-of-array power over the hour angle
from sunrise to sunset with the trapezoid rule; results are Wh per m^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .geometry import (
    Location,
    _check_day,
    _elevation_azimuth,
    declination_exact,
    sun_position,
    sunrise_hour_angle,
)
from .schedule import TiltMode, TiltPolicy, monthly_schedule, seasonal_schedule

TRANSMITTANCE = 0.7
AIR_MASS_EXPONENT = 0.678
ZENITH_CAP_DEG = 89.0

# brute-force sweep resolution for optimize_fixed_tilt
COARSE_STEP_DEG = 0.5
FINE_STEP_DEG = 0.05

FULL_YEAR = (1, 365)


@dataclass(frozen=True)
class IrradianceModel:
    """Clear-sky constants plus the integration step in minutes."""

    solar_constant_w_m2: float = 1353.0
    time_step_minutes: float = 1.0

    def __post_init__(self) -> None:
        if self.solar_constant_w_m2 <= 0.0:
            raise ValueError("solar constant must be positive")
        if self.time_step_minutes <= 0.0:
            raise ValueError("time step must be positive minutes")

    def direct_normal(self, elevation_deg):
        """Direct-normal irradiance in W/m^2 for a sun elevation.

        Scalar in, scalar out; ndarray in, ndarray out. Zero at and
        below the horizon.
        """
        elev = np.asarray(elevation_deg, dtype=float)
        zenith = np.minimum(90.0 - elev, ZENITH_CAP_DEG)
        air_mass = 1.0 / np.cos(np.radians(zenith))
        dni = self.solar_constant_w_m2 * TRANSMITTANCE ** (air_mass ** AIR_MASS_EXPONENT)
        out = np.where(elev > 0.0, dni, 0.0)
        if np.ndim(elevation_deg) == 0:
            return float(out)
        return out


@dataclass(frozen=True)
class InsolationResult:
    """Energy total in Wh/m^2 plus the day range and policy it covers."""

    energy_wh_m2: float
    day_range: tuple[int, int]
    policy: str


class OptimalTilt(NamedTuple):
    tilt_deg: float
    energy_wh_m2: float


@dataclass(frozen=True)
class PolicyGain:
    """One policy's annual energy and its percent gain over the baseline."""

    policy: str
    energy_wh_m2: float
    gain_percent: float


@dataclass(frozen=True)
class GainReport:
    """Annual comparison of adjustment policies against fixed-at-latitude."""

    latitude_deg: float
    mode: TiltMode
    baseline: PolicyGain
    policies: tuple[PolicyGain, ...]


def incidence_cosine(
    loc: Location,
    day: int,
    hour_angle_deg: float,
    tilt_deg: float,
    panel_azimuth_deg: float = 0.0,
) -> float:
    """Cosine of the angle between the sun and the panel normal.

    cos(theta) = cos(elev) cos(az - panel_az) sin(tilt) + sin(elev) cos(tilt),
    with the panel azimuth south-referenced like the solar azimuth. A raw
    geometric value in [-1, 1]: negative means the sun is behind the panel
    plane, and a sub-horizon sun still evaluates, so energy callers must
    floor at zero and mask night themselves. At solar noon with a south
    panel this reduces to sin(noon_elevation + tilt).
    """
    if not -90.0 <= tilt_deg <= 90.0:
        raise ValueError(f"tilt must be in [-90, 90] degrees, got {tilt_deg}")
    angles = sun_position(loc, day, hour_angle_deg)
    elev = math.radians(angles.elevation_deg)
    az = math.radians(angles.azimuth_deg - panel_azimuth_deg)
    tilt = math.radians(tilt_deg)
    return math.cos(elev) * math.cos(az) * math.sin(tilt) + math.sin(elev) * math.cos(tilt)


class _DayProfile(NamedTuple):
    """Precomputed per-day arrays over the daylight hour-angle grid."""

    hours: np.ndarray       # solar time offsets from noon, h
    horiz: np.ndarray       # cos(elev) * cos(az), the sin(tilt) coefficient
    vert: np.ndarray        # sin(elev), the cos(tilt) coefficient
    dni_w_m2: np.ndarray


def _day_profile(latitude_deg: float, day: int, model: IrradianceModel) -> _DayProfile:
    loc = Location(latitude_deg)
    omega_s = sunrise_hour_angle(loc, day)
    if omega_s <= 0.0:
        empty = np.zeros(0)
        return _DayProfile(empty, empty, empty, empty)
    step_deg = model.time_step_minutes / 4.0  # 15 deg of hour angle per hour
    n = max(1, math.ceil(2.0 * omega_s / step_deg))
    omega = np.linspace(-omega_s, omega_s, n + 1)
    elev, az = _elevation_azimuth(latitude_deg, declination_exact(day), omega)
    elev_rad = np.radians(elev)
    az_rad = np.radians(az)
    return _DayProfile(
        hours=omega / 15.0,
        horiz=np.cos(elev_rad) * np.cos(az_rad),
        vert=np.sin(elev_rad),
        dni_w_m2=model.direct_normal(elev),
    )


def _profile_energies(profile: _DayProfile, tilts_deg: np.ndarray) -> np.ndarray:
    """Wh/m^2 for each tilt in tilts_deg, given one day's profile."""
    if profile.hours.size < 2:
        return np.zeros(len(tilts_deg))
    tilt = np.radians(np.asarray(tilts_deg, dtype=float))
    cos_theta = np.outer(np.sin(tilt), profile.horiz) + np.outer(np.cos(tilt), profile.vert)
    poa = profile.dni_w_m2 * np.clip(cos_theta, 0.0, None)
    return np.trapezoid(poa, profile.hours, axis=1)


def _check_tilt(tilt_deg: float) -> float:
    if not 0.0 <= tilt_deg <= 90.0:
        raise ValueError(f"panel tilt must be in [0, 90] degrees, got {tilt_deg}")
    return float(tilt_deg)


def daily_insolation(
    loc: Location,
    day: int,
    tilt_deg: float,
    model: IrradianceModel | None = None,
) -> InsolationResult:
    """One day's plane-of-array energy at a fixed tilt, in Wh/m^2.

    Zero on polar-night days. Symmetric about solar noon because the
    geometry is, so the morning half carries exactly half the total.
    """
    d = _check_day(day)
    tilt = _check_tilt(tilt_deg)
    model = model or IrradianceModel()
    profile = _day_profile(loc.latitude_deg, d, model)
    energy = _profile_energies(profile, np.array([tilt]))[0]
    return InsolationResult(float(energy), (d, d), f"fixed({tilt:.2f})")


def annual_insolation(
    loc: Location,
    policy: TiltPolicy,
    model: IrradianceModel | None = None,
) -> InsolationResult:
    """Energy over the full 365-day year under a tilt policy."""
    model = model or IrradianceModel()
    total = 0.0
    for day in range(1, 366):
        profile = _day_profile(loc.latitude_deg, day, model)
        tilt = _check_tilt(policy.tilt_for_day(day))
        total += float(_profile_energies(profile, np.array([tilt]))[0])
    return InsolationResult(total, FULL_YEAR, policy.label)


def _check_period(period: tuple[int, int]) -> tuple[int, int]:
    try:
        start, end = period
    except (TypeError, ValueError):
        raise ValueError(f"period must be a (start_day, end_day) pair, got {period!r}") from None
    start = _check_day(start)
    end = _check_day(end)
    if start > end:
        raise ValueError(f"period must be non-empty, got {period!r}")
    return start, end


def optimize_fixed_tilt(
    loc: Location,
    period: tuple[int, int] = FULL_YEAR,
    model: IrradianceModel | None = None,
) -> OptimalTilt:
    """Best single fixed tilt over a day range, by brute force.

    Sweeps [0, 90] deg at 0.5 deg, then refines at 0.05 deg in a 0.5 deg
    window around the coarse winner. Ties break toward the lower tilt.
    The panel is assumed south-facing, whatever the latitude.
    """
    start, end = _check_period(period)
    model = model or IrradianceModel()
    profiles = [
        _day_profile(loc.latitude_deg, day, model) for day in range(start, end + 1)
    ]

    def sweep(tilts: np.ndarray) -> np.ndarray:
        total = np.zeros(len(tilts))
        for profile in profiles:
            total += _profile_energies(profile, tilts)
        return total

    coarse = np.linspace(0.0, 90.0, int(round(90.0 / COARSE_STEP_DEG)) + 1)
    best = float(coarse[int(np.argmax(sweep(coarse)))])
    lo = max(0.0, best - COARSE_STEP_DEG)
    hi = min(90.0, best + COARSE_STEP_DEG)
    steps = int(round((hi - lo) / FINE_STEP_DEG))
    fine = lo + FINE_STEP_DEG * np.arange(steps + 1)
    energies = sweep(fine)
    i = int(np.argmax(energies))
    return OptimalTilt(float(fine[i]), float(energies[i]))


def gain_report(
    loc: Location,
    model: IrradianceModel | None = None,
    mode: TiltMode = TiltMode.PAPER,
) -> GainReport:
    """Annual energy of seasonal, monthly, and daily adjustment against
    a panel fixed at latitude tilt.

    Gains are percent of the fixed baseline. Finer adjustment never
    loses energy here, so the gains come ordered daily >= monthly >=
    seasonal >= 0 (the baseline is not the exact annual optimum, so
    small extra gains over it are expected as well).
    """
    mode = TiltMode(mode)
    model = model or IrradianceModel()
    policies = (
        TiltPolicy.seasonal(seasonal_schedule(loc, mode)),
        TiltPolicy.monthly(monthly_schedule(loc, mode)),
        TiltPolicy.daily(loc),
    )
    baseline_policy = TiltPolicy.fixed(loc.latitude_deg)
    base = annual_insolation(loc, baseline_policy, model)
    entries = []
    for policy in policies:
        result = annual_insolation(loc, policy, model)
        gain = 100.0 * (result.energy_wh_m2 - base.energy_wh_m2) / base.energy_wh_m2
        entries.append(PolicyGain(policy.label, result.energy_wh_m2, gain))
    return GainReport(
        latitude_deg=loc.latitude_deg,
        mode=mode,
        baseline=PolicyGain(base.policy, base.energy_wh_m2, 0.0),
        policies=tuple(entries),
    )
