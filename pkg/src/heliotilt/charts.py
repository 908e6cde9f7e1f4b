"""Chart series, schedule tables, and the CSV/JSON/SVG renderers.

Everything here is deterministic: the same inputs produce the same
bytes, angles are always printed with exactly two decimals, CSV uses LF
line endings with a header row, and the SVG is hand-rolled with no
external assets so files can be diffed byte for byte.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    Location,
    _check_day,
    _elevation_azimuth,
    compass_azimuth,
    declination_exact,
)
from .schedule import (
    MONTH_NAMES,
    SEASON_NAMES,
    TiltMode,
    daily_tilt_details,
    monthly_schedule,
    seasonal_schedule,
    tilt_extremes,
)

# 21st of each month in the 365-day year
DEFAULT_CHART_DAYS = (21, 52, 80, 111, 141, 172, 202, 233, 264, 294, 325, 355)

_OFFSET_NOTES = {
    TiltMode.PAPER: (
        "as-published offsets: July is latitude -24.45 deg rather than the "
        "symmetric -23.45, so the minimum tilt sits 1 deg below exact mode"
    ),
    TiltMode.EXACT: (
        "symmetric offsets: tilts interpolate linearly between latitude "
        "+23.45 and latitude -23.45 deg"
    ),
}


def fmt_angle(value: float) -> str:
    """An angle with exactly two decimals; negative zero normalized away."""
    return f"{round(value, 2) + 0.0:.2f}"


def fmt_x(value: float) -> str:
    """A chart abscissa (hours or days): compact, stable under re-parsing."""
    return f"{round(value, 4) + 0.0:g}"


@dataclass(frozen=True)
class ChartSeries:
    """One named polyline: paired x/y samples with strictly increasing x."""

    name: str
    x: tuple[float, ...]
    y: tuple[float, ...]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.x) != len(self.y):
            raise ValueError(
                f"series {self.name!r}: x and y lengths differ "
                f"({len(self.x)} vs {len(self.y)})"
            )
        if any(b <= a for a, b in zip(self.x, self.x[1:])):
            raise ValueError(f"series {self.name!r}: x must be strictly increasing")


def sunpath_chart(
    loc: Location,
    days: tuple[int, ...] | None = None,
    step_minutes: float = 1.0,
    include_azimuth: bool = False,
) -> list[ChartSeries]:
    """Sun elevation through the day for each requested day of the year.

    Defaults to the 21st of every month. Each series samples solar time
    symmetrically around noon at the given step and keeps only
    above-horizon points, so the first and last samples sit at (or just
    after) sunrise and sunset and the peak lands exactly at hour 12.
    With include_azimuth, a companion compass-azimuth series follows
    each elevation series. Polar-night days come back empty.
    """
    if days is None:
        days = DEFAULT_CHART_DAYS
    days = tuple(_check_day(d) for d in days)
    if not days:
        raise ValueError("at least one day is required for a sun-path chart")
    if step_minutes <= 0.0:
        raise ValueError(f"step must be positive minutes, got {step_minutes}")
    out: list[ChartSeries] = []
    half = int(math.floor(12.0 * 60.0 / step_minutes))
    offsets = np.arange(-half, half + 1) * (step_minutes / 60.0)
    hours = 12.0 + offsets
    omega = offsets * 15.0
    for day in days:
        elev, az = _elevation_azimuth(loc.latitude_deg, declination_exact(day), omega)
        up = elev >= 0.0
        xs = tuple(float(h) for h in hours[up])
        base = {"day": day, "latitude_deg": loc.latitude_deg, "units": "degrees"}
        out.append(
            ChartSeries(
                name=f"day_{day:03d}",
                x=xs,
                y=tuple(float(e) for e in elev[up]),
                metadata={**base, "kind": "elevation"},
            )
        )
        if include_azimuth:
            out.append(
                ChartSeries(
                    name=f"day_{day:03d}_az",
                    x=xs,
                    y=tuple(compass_azimuth(float(a)) for a in az[up]),
                    metadata={**base, "kind": "compass_azimuth"},
                )
            )
    return out


def tilt_curve(loc: Location, *, simplified: bool = False) -> ChartSeries:
    """Daily-rule tilt across the whole year as one series (x = day of year)."""
    values = []
    clamped_days = 0
    for day in range(1, 366):
        detail = daily_tilt_details(loc, day, simplified=simplified)
        values.append(detail.tilt_deg)
        clamped_days += detail.clamped
    return ChartSeries(
        name="daily_tilt",
        x=tuple(float(d) for d in range(1, 366)),
        y=tuple(values),
        metadata={
            "latitude_deg": loc.latitude_deg,
            "units": "degrees",
            "kind": "daily_tilt",
            "min_deg": min(values),
            "max_deg": max(values),
            "clamped_days": clamped_days,
        },
    )


def sun_day_rows(
    loc: Location, day: int, step_minutes: float = 1.0
) -> list[tuple[float, float, float, float]]:
    """Above-horizon (solar_hour, elevation, azimuth, compass_azimuth) rows.

    Azimuth is the signed south-referenced angle; the compass column is
    the 0-360 bearing from north.
    """
    series = sunpath_chart(loc, (day,), step_minutes, include_azimuth=True)
    elev_series, az_series = series
    # compass = (signed + 180) mod 360 and compass is in [0, 360), so the
    # inverse is a plain shift
    return [
        (h, e, ca - 180.0, ca)
        for h, e, ca in zip(elev_series.x, elev_series.y, az_series.y)
    ]


@dataclass(frozen=True)
class ScheduleTable:
    """Labeled tilt rows (months or seasons) plus summary metadata."""

    granularity: str
    mode: TiltMode
    latitude_deg: float
    rows: tuple[tuple[str, float], ...]
    metadata: dict = field(default_factory=dict)


def schedule_table(
    loc: Location, granularity: str = "monthly", mode: TiltMode = TiltMode.PAPER
) -> ScheduleTable:
    """Monthly or seasonal tilt table for a site.

    Metadata carries the schedule's tilt extremes and a note on the
    offset basis, including the 1 deg paper-vs-exact minimum difference.
    """
    mode = TiltMode(mode)
    if granularity == "monthly":
        schedule = monthly_schedule(loc, mode)
        rows = tuple(zip(MONTH_NAMES, schedule.betas_deg))
    elif granularity == "seasonal":
        seasonal = seasonal_schedule(loc, mode)
        rows = tuple(zip(SEASON_NAMES, seasonal.betas_deg))
    else:
        raise ValueError(
            f"granularity must be 'monthly' or 'seasonal', got {granularity!r}"
        )
    lo, hi = tilt_extremes(loc, mode)
    return ScheduleTable(
        granularity=granularity,
        mode=mode,
        latitude_deg=loc.latitude_deg,
        rows=rows,
        metadata={
            "latitude_deg": loc.latitude_deg,
            "mode": mode.value,
            "tilt_min_deg": lo,
            "tilt_max_deg": hi,
            "offset_note": _OFFSET_NOTES[mode],
        },
    )


def schedule_csv(table: ScheduleTable) -> str:
    """CSV rendering of a schedule table.

    Paper-mode seasonal values print as whole degrees, matching the way
    that table is conventionally quoted; everything else gets two
    decimals.
    """
    label = "month" if table.granularity == "monthly" else "season"
    lines = [f"{label},tilt_deg"]
    whole = table.granularity == "seasonal" and table.mode is TiltMode.PAPER
    for name, value in table.rows:
        shown = str(int(math.floor(value + 0.5))) if whole else fmt_angle(value)
        lines.append(f"{name},{shown}")
    return "\n".join(lines) + "\n"


def chart_csv(series_list: list[ChartSeries]) -> str:
    """Long-format CSV for one or more chart series: series,x,y."""
    lines = ["series,x,y"]
    for series in series_list:
        for x, y in zip(series.x, series.y):
            lines.append(f"{series.name},{fmt_x(x)},{fmt_angle(y)}")
    return "\n".join(lines) + "\n"


def sun_csv(rows: list[tuple[float, float, float, float]]) -> str:
    """CSV for one day's sun positions."""
    lines = ["solar_hour,elevation_deg,azimuth_deg,compass_azimuth_deg"]
    for hour, elev, az, compass in rows:
        lines.append(
            f"{fmt_x(hour)},{fmt_angle(elev)},{fmt_angle(az)},{fmt_angle(compass)}"
        )
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    """Stable two-space-indented JSON with a trailing newline."""
    return json.dumps(payload, indent=2) + "\n"


_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)

_SVG_W, _SVG_H = 800, 500
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 60, 20, 40, 50


def _tick_values(lo: float, hi: float, count: int = 5) -> list[float]:
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def render_svg(
    series_list: list[ChartSeries],
    title: str,
    x_label: str,
    y_label: str,
) -> str:
    """Minimal self-contained SVG line chart (fixed 800x500 canvas)."""
    pts = [(x, y) for s in series_list for x, y in zip(s.x, s.y)]
    if pts:
        x_lo = min(p[0] for p in pts)
        x_hi = max(p[0] for p in pts)
        y_lo = min(p[1] for p in pts)
        y_hi = max(p[1] for p in pts)
    else:
        x_lo, x_hi, y_lo, y_hi = 0.0, 1.0, 0.0, 1.0
    if x_hi <= x_lo:
        x_hi = x_lo + 1.0
    if y_hi <= y_lo:
        y_hi = y_lo + 1.0
    plot_w = _SVG_W - _MARGIN_L - _MARGIN_R
    plot_h = _SVG_H - _MARGIN_T - _MARGIN_B

    def px(x: float) -> float:
        return _MARGIN_L + plot_w * (x - x_lo) / (x_hi - x_lo)

    def py(y: float) -> float:
        return _MARGIN_T + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<text x="{_SVG_W / 2:.2f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
    ]
    axis = (
        f'<line x1="{_MARGIN_L}" y1="{_MARGIN_T}" x2="{_MARGIN_L}" '
        f'y2="{_SVG_H - _MARGIN_B}" stroke="black"/>'
        f'<line x1="{_MARGIN_L}" y1="{_SVG_H - _MARGIN_B}" '
        f'x2="{_SVG_W - _MARGIN_R}" y2="{_SVG_H - _MARGIN_B}" stroke="black"/>'
    )
    out.append(axis)
    for tick in _tick_values(x_lo, x_hi):
        x = px(tick)
        out.append(
            f'<line x1="{x:.2f}" y1="{_SVG_H - _MARGIN_B}" x2="{x:.2f}" '
            f'y2="{_SVG_H - _MARGIN_B + 5}" stroke="black"/>'
            f'<text x="{x:.2f}" y="{_SVG_H - _MARGIN_B + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{round(tick, 3):g}</text>'
        )
    for tick in _tick_values(y_lo, y_hi):
        y = py(tick)
        out.append(
            f'<line x1="{_MARGIN_L - 5}" y1="{y:.2f}" x2="{_MARGIN_L}" '
            f'y2="{y:.2f}" stroke="black"/>'
            f'<text x="{_MARGIN_L - 8}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{round(tick, 3):g}</text>'
        )
    out.append(
        f'<text x="{_MARGIN_L + plot_w / 2:.2f}" y="{_SVG_H - 12}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="13">{x_label}</text>'
    )
    out.append(
        f'<text x="16" y="{_MARGIN_T + plot_h / 2:.2f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 16 {_MARGIN_T + plot_h / 2:.2f})">{y_label}</text>'
    )
    for i, series in enumerate(series_list):
        if len(series.x) < 2:
            continue
        color = _PALETTE[i % len(_PALETTE)]
        coords = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(series.x, series.y))
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
            f'points="{coords}"><title>{series.name}</title></polyline>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
