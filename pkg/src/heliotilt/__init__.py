"""Solar position angles and PV panel tilt schedules from closed-form geometry.

The geometry layer gives declination, noon elevation, and intra-day sun
position on a 365-day solar-time year. On top of it sit the tilt rules
(daily, monthly, seasonal, fixed), a clear-sky beam insolation
integrator, a brute-force fixed-tilt optimizer, and gain reports
comparing adjustment policies. A CLI (`heliotilt`) exposes the same
operations as json, csv, and svg.
"""
from .geometry import (
    DAYS_PER_YEAR,
    EARTH_TILT_DEG,
    EQUINOX_DAY,
    STRICT_LATITUDE_LIMIT_DEG,
    Location,
    SolarAngles,
    compass_azimuth,
    declination_exact,
    declination_simplified,
    noon_elevation,
    noon_elevation_folded,
    noon_zenith,
    sun_position,
    sunrise_hour_angle,
)
from .schedule import (
    EXACT_OFFSETS_DEG,
    MONTH_NAMES,
    PAPER_OFFSETS_DEG,
    SEASON_NAMES,
    MonthlySchedule,
    SeasonalSchedule,
    TiltMode,
    TiltPolicy,
    TiltValue,
    UnsupportedHemisphereError,
    daily_tilt,
    daily_tilt_details,
    month_of_day,
    monthly_schedule,
    offsets_for,
    season_of_day,
    seasonal_schedule,
    tilt_extremes,
)
from .insolation import (
    GainReport,
    InsolationResult,
    IrradianceModel,
    OptimalTilt,
    PolicyGain,
    annual_insolation,
    daily_insolation,
    gain_report,
    incidence_cosine,
    optimize_fixed_tilt,
)
from .charts import (
    ChartSeries,
    DEFAULT_CHART_DAYS,
    ScheduleTable,
    schedule_table,
    sun_day_rows,
    sunpath_chart,
    tilt_curve,
)

__version__ = "0.1.0"

__all__ = [
    "DAYS_PER_YEAR",
    "EARTH_TILT_DEG",
    "EQUINOX_DAY",
    "STRICT_LATITUDE_LIMIT_DEG",
    "Location",
    "SolarAngles",
    "compass_azimuth",
    "declination_exact",
    "declination_simplified",
    "noon_elevation",
    "noon_elevation_folded",
    "noon_zenith",
    "sun_position",
    "sunrise_hour_angle",
    "EXACT_OFFSETS_DEG",
    "MONTH_NAMES",
    "PAPER_OFFSETS_DEG",
    "SEASON_NAMES",
    "MonthlySchedule",
    "SeasonalSchedule",
    "TiltMode",
    "TiltPolicy",
    "TiltValue",
    "UnsupportedHemisphereError",
    "daily_tilt",
    "daily_tilt_details",
    "month_of_day",
    "monthly_schedule",
    "offsets_for",
    "season_of_day",
    "seasonal_schedule",
    "tilt_extremes",
    "GainReport",
    "InsolationResult",
    "IrradianceModel",
    "OptimalTilt",
    "PolicyGain",
    "annual_insolation",
    "daily_insolation",
    "gain_report",
    "incidence_cosine",
    "optimize_fixed_tilt",
    "ChartSeries",
    "DEFAULT_CHART_DAYS",
    "ScheduleTable",
    "schedule_table",
    "sun_day_rows",
    "sunpath_chart",
    "tilt_curve",
    "__version__",
]
