#!/usr/bin/env python3
# Copyright 2026 The Chartgen Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the ten-chart test corpus. Output is deterministic."""

import calendar
import json
import math
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent / "corpus"


def year_start(year, month=1, day=1):
    return calendar.timegm((year, month, day, 0, 0, 0))


def series(name, xs, ys):
    return {"name": name, "points": [{"x": x, "y": round(y, 1)} for x, y in zip(xs, ys)]}


def chart(title, series_list, x_axis, y_axis, annotations=()):
    doc = {"title": title, "series": series_list, "xAxis": x_axis, "yAxis": y_axis}
    if annotations:
        doc["annotations"] = list(annotations)
    return doc


def labeled_peaks():
    # Peaks and valleys joined by straight segments; each peak is hugged by
    # shoulder points a fraction of a unit away.
    knots = [(0, 30), (6, 90), (10, 20), (15, 100), (19.5, 25), (24, 80), (30, 35)]
    xs, ys = [], []
    for x, y in knots:
        is_peak = 0 < x < 30 and y >= 80
        if is_peak:
            for dx, dy in ((-0.2, -0.4), (-0.1, -0.2)):
                xs.append(x + dx)
                ys.append(y + dy)
        xs.append(x)
        ys.append(y)
        if is_peak:
            for dx, dy in ((0.1, -0.2), (0.2, -0.4)):
                xs.append(x + dx)
                ys.append(y + dy)
    return chart("Visitors per day", [series("visitors", xs, ys)],
                 {"title": "Day", "type": "linear"},
                 {"title": "Visitors (k)", "type": "linear"})


def yearly_ticks(rng):
    xs = [year_start(y) for y in range(2000, 2021)]
    y, ys = 50.0, []
    for _ in xs:
        ys.append(y)
        y += rng.uniform(-6, 8)
    return chart("Annual revenue", [series("revenue", xs, ys)],
                 {"title": "Year", "type": "time", "tickCount": 21},
                 {"title": "Revenue", "type": "linear"})


def sparse_ten():
    xs = list(range(10))
    ys = [3, 5, 4, 8, 6, 9, 7, 12, 10, 11]
    notes = [{"x": 3, "y": 8, "text": "launch"},
             {"x": 7, "y": 12, "text": "record", "importance": 0.8}]
    return chart("Ten points", [series("s", xs, ys)],
                 {"title": "Week", "type": "linear"},
                 {"title": "Units", "type": "linear"}, notes)


def sine_wave():
    xs = [i * 0.25 for i in range(80)]
    ys = [50 + 40 * math.sin(x) for x in xs]
    return chart("Oscillation", [series("signal", xs, ys)],
                 {"title": "t (s)", "type": "linear"},
                 {"title": "Amplitude", "type": "linear"})


def random_walk(rng):
    start = year_start(2015)
    xs = [start + 86400 * 7 * i for i in range(200)]
    y, ys = 100.0, []
    for _ in xs:
        ys.append(y)
        y += rng.gauss(0, 3)
    return chart("Weekly index", [series("index", xs, ys)],
                 {"title": "Date", "type": "time"},
                 {"title": "Index", "type": "linear"})


def multi_series(rng):
    xs = list(range(40))
    out = []
    for k, base in enumerate((20, 45, 70)):
        ys = [base + 10 * math.sin(x / 5 + k) + rng.uniform(-2, 2) for x in xs]
        out.append(series(f"region {k + 1}", xs, ys))
    return chart("Regional load", out, {"title": "Hour", "type": "linear"},
                 {"title": "Load (MW)", "type": "linear"})


def stock_daily(rng):
    start = year_start(2021)
    xs = [start + 86400 * i for i in range(365)]
    y, ys = 250.0, []
    for _ in xs:
        ys.append(y)
        y *= math.exp(rng.gauss(0.0003, 0.012))
    notes = [{"x": xs[90], "y": round(ys[90], 1), "text": "earnings"},
             {"x": xs[300], "y": round(ys[300], 1), "text": "split"}]
    return chart("Share price 2021", [series("close", xs, ys)],
                 {"title": "Date", "type": "time"},
                 {"title": "USD", "type": "linear"}, notes)


def step_plateaus():
    xs = list(range(48))
    ys = [10 * (1 + (x // 8) % 3) + (x // 16) * 5 for x in xs]
    return chart("Tariff steps", [series("tariff", xs, ys)],
                 {"title": "Month", "type": "linear"},
                 {"title": "Rate", "type": "linear"})


def annotated(rng):
    xs = list(range(30))
    ys = [40 + 15 * math.cos(x / 4) + rng.uniform(-3, 3) for x in xs]
    notes = []
    for i, x in enumerate(range(2, 30, 4)):
        notes.append({"x": x, "y": round(ys[x], 1), "text": f"event {i + 1}"})
    return chart("Incidents", [series("incidents", xs, ys)],
                 {"title": "Day", "type": "linear"},
                 {"title": "Count", "type": "linear"}, notes)


def flat_line():
    xs = list(range(12))
    return chart("Constant baseline", [series("flat", xs, [42.0] * 12)],
                 {"title": "Sample", "type": "linear"},
                 {"title": "Level", "type": "linear"})


def main():
    rng = random.Random(20260101)
    charts = {
        "labeled_peaks": labeled_peaks(),
        "yearly_ticks": yearly_ticks(rng),
        "sparse_ten": sparse_ten(),
        "sine_wave": sine_wave(),
        "random_walk": random_walk(rng),
        "multi_series": multi_series(rng),
        "stock_daily": stock_daily(rng),
        "step_plateaus": step_plateaus(),
        "annotated": annotated(rng),
        "flat_line": flat_line(),
    }
    OUT.mkdir(exist_ok=True)
    for name, doc in charts.items():
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
