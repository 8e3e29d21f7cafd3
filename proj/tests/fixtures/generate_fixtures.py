#!/usr/bin/env python3
# Copyright 2026 The Smelt Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the fixture corpus (one positive and one negative CSV per smell
plus the dataset-mirroring fixtures) and expectations.json.

The CSVs are checked in; rerunning this script must reproduce them exactly.
"""

import csv
import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))


def write(name, header, rows):
    path = os.path.join(HERE, name)
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(["" if v is None else v for v in row])


def base(rng, n):
    """Clean base table: two independent floats and a balanced category."""
    cats = (["alpha", "beta", "gamma"] * n)[:n]
    rng.shuffle(cats)
    return (["feature_a", "feature_b", "category"],
            [[f"{rng.uniform(0, 100):.2f}", f"{rng.uniform(0, 100):.2f}", c]
             for c in cats])


def extend(header, rows, name, values):
    return header + [name], [r + [v] for r, v in zip(rows, values)]


def shuffled(rng, values):
    values = list(values)
    rng.shuffle(values)
    return values


def main():
    rng = random.Random(20220517)
    expectations = {}

    def fixture(name, smell, polarity, columns, expected_keys, header, rows):
        write(name, header, rows)
        expectations[name] = {
            "smell": smell,
            "polarity": polarity,
            "columns": columns,
            "expected_keys": sorted(expected_keys),
        }

    # red-corr
    h, rows = base(rng, 60)
    a = [float(r[0]) for r in rows]
    fixture("red-corr.positive.csv", "red-corr", "positive",
            ["feature_a", "feature_c"], ["red-corr"],
            *extend(h, rows, "feature_c", [f"{2 * x + 1:.2f}" for x in a]))
    h, rows = base(rng, 60)
    fixture("red-corr.negative.csv", "red-corr", "negative", [], [],
            *extend(h, rows, "feature_c",
                    [f"{rng.uniform(0, 100):.2f}" for _ in rows]))

    # red-uid
    h, rows = base(rng, 60)
    fixture("red-uid.positive.csv", "red-uid", "positive", ["id"],
            ["red-uid"], *extend(h, rows, "id", range(1, 61)))
    h, rows = base(rng, 60)
    host = [rng.randint(1, 25) for _ in rows]
    fixture("red-uid.negative.csv", "red-uid", "negative", [], [],
            *extend(h, rows, "host_id", host))

    # red-dup: iris-like measurements with three repeated rows.
    species = shuffled(rng, ["setosa", "versicolor", "virginica"] * 49)
    iris = [[f"{rng.uniform(4.3, 7.9):.1f}", f"{rng.uniform(2.0, 4.4):.1f}",
             f"{rng.uniform(1.0, 6.9):.1f}", f"{rng.uniform(0.1, 2.5):.1f}", s]
            for s in species]
    iris_h = ["sepal_length_cm", "sepal_width_cm", "petal_length_cm",
              "petal_width_cm", "species"]
    dup_rows = list(iris)
    for src in (10, 57, 101):
        dup_rows.append(list(iris[src]))
    fixture("red-dup.positive.csv", "red-dup", "positive", [], ["red-dup"],
            iris_h, dup_rows)
    fixture("red-dup.negative.csv", "red-dup", "negative", [], [], iris_h,
            iris)

    # cat-hierarchy (a sensitive categorical is also misc-sensitive).
    h, rows = base(rng, 60)
    races = shuffled(rng, ["White", "Black", "Asian-Pac-Islander",
                           "Amer-Indian-Eskimo", "Other"] * 12)
    fixture("cat-hierarchy.positive.csv", "cat-hierarchy", "positive",
            ["race"], ["cat-hierarchy", "misc-sensitive"],
            *extend(h, rows, "race", races))
    h, rows = base(rng, 60)
    edu = shuffled(rng, ["Preschool", "HS-grad", "Some-college", "Bachelors",
                         "Masters"] * 12)
    fixture("cat-hierarchy.negative.csv", "cat-hierarchy", "negative", [], [],
            *extend(h, rows, "education", edu))

    # cat-bin: 42 neighbourhoods over 200 rows, long tail.
    hoods = ["Harlem", "Williamsburg", "Bedford-Stuyvesant", "Bushwick",
             "Upper West Side", "Hell's Kitchen", "East Village",
             "Upper East Side", "Crown Heights", "Midtown", "East Harlem",
             "Greenpoint", "Chelsea", "Lower East Side", "Astoria",
             "Washington Heights", "West Village", "Financial District",
             "Flatbush", "Clinton Hill", "Long Island City", "Prospect Heights",
             "Park Slope", "East Flatbush", "Fort Greene", "Murray Hill",
             "Kips Bay", "Flushing", "Ridgewood", "Greenwich Village",
             "Sunset Park", "Gowanus", "Chinatown", "SoHo", "Inwood",
             "Gramercy", "Sunnyside", "Jamaica", "Tribeca", "NoHo",
             "Red Hook", "Woodside"]
    weights = [1.0 / (k + 1) for k in range(len(hoods))]
    picks = list(hoods)  # every value at least once
    picks += rng.choices(hoods[:20], weights=weights[:20], k=200 - len(hoods))
    h, rows = base(rng, 200)
    fixture("cat-bin.positive.csv", "cat-bin", "positive", ["neighbourhood"],
            ["cat-bin"], *extend(h, rows, "neighbourhood", shuffled(rng, picks)))
    h, rows = base(rng, 200)
    regions = shuffled(rng, ["Manhattan", "Brooklyn", "Queens", "Bronx",
                             "Staten Island"] * 40)
    fixture("cat-bin.negative.csv", "cat-bin", "negative", [], [],
            *extend(h, rows, "neighbourhood_group", regions))

    # misc-sensitive
    h, rows = base(rng, 60)
    fixture("misc-sensitive.positive.csv", "misc-sensitive", "positive",
            ["age"], ["misc-sensitive"],
            *extend(h, rows, "age", [rng.randint(18, 90) for _ in rows]))
    h, rows = base(rng, 60)
    fixture("misc-sensitive.negative.csv", "misc-sensitive", "negative", [],
            [], *extend(h, rows, "sextant_reading",
                        [f"{rng.uniform(0, 90):.3f}" for _ in rows]))

    # misc-balance: fraud-like binary target.
    h, rows = base(rng, 200)
    fixture("misc-balance.positive.csv", "misc-balance", "positive",
            ["class"], ["misc-balance"],
            *extend(h, rows, "class", shuffled(rng, [0] * 198 + [1] * 2)))
    h, rows = base(rng, 200)
    fixture("misc-balance.negative.csv", "misc-balance", "negative", [], [],
            *extend(h, rows, "class", shuffled(rng, [0] * 100 + [1] * 100)))

    # misc-unit
    h, rows = base(rng, 60)
    fixture("misc-unit.positive.csv", "misc-unit", "positive", ["radius"],
            ["misc-unit"], *extend(h, rows, "radius",
                                   [f"{rng.uniform(6, 28):.3f}" for _ in rows]))
    h, rows = base(rng, 60)
    fixture("misc-unit.negative.csv", "misc-unit", "negative", [], [],
            *extend(h, rows, "radius_mm",
                    [f"{rng.uniform(6, 28):.3f}" for _ in rows]))

    # miss-null
    h, rows = base(rng, 60)
    reading = [f"{rng.uniform(0, 10):.2f}" for _ in rows]
    for i in rng.sample(range(60), 30):
        reading[i] = None
    fixture("miss-null.positive.csv", "miss-null", "positive", ["reading"],
            ["miss-null"], *extend(h, rows, "reading", reading))
    h, rows = base(rng, 60)
    fixture("miss-null.negative.csv", "miss-null", "negative", [], [],
            *extend(h, rows, "reading",
                    [f"{rng.uniform(0, 10):.2f}" for _ in rows]))

    # miss-sp-val: '?' for 5% of a string column.
    work = ["Private", "Self-emp-not-inc", "Local-gov", "State-gov"] * 15
    work = shuffled(rng, work)
    work_q = list(work)
    for i in rng.sample(range(60), 3):
        work_q[i] = "?"
    h, rows = base(rng, 60)
    fixture("miss-sp-val.positive.csv", "miss-sp-val", "positive",
            ["workclass"], ["miss-sp-val"],
            *extend(h, rows, "workclass", work_q))
    h, rows = base(rng, 60)
    fixture("miss-sp-val.negative.csv", "miss-sp-val", "negative", [], [],
            *extend(h, rows, "workclass", work))

    # miss-bin
    h, rows = base(rng, 60)
    notif = [None] * 54 + ["Y"] * 6
    fixture("miss-bin.positive.csv", "miss-bin", "positive",
            ["structural_notification"], ["miss-bin", "miss-null"],
            *extend(h, rows, "structural_notification", shuffled(rng, notif)))
    h, rows = base(rng, 60)
    notif = [None] * 18 + ["Y"] * 42
    fixture("miss-bin.negative.csv", "miss-bin", "negative", [],
            ["miss-null"],
            *extend(h, rows, "structural_notification", shuffled(rng, notif)))

    # str-num: release versions.
    versions = ["1.1.9", "2.0.1", "1.0", "3.2.5", "4.1.0", "1.2.3", "2.3.3",
                "5.0.2", "1.0.19", "6.1.61.1", "2.2.1", "3.0.0", "7.4.1",
                "0.9.8", "10.2.1"]
    h, rows = base(rng, 60)
    fixture("str-num.positive.csv", "str-num", "positive", ["current_ver"],
            ["str-num"],
            *extend(h, rows, "current_ver",
                    [rng.choice(versions) for _ in rows]))
    sentences = ["Great app for daily use", "Crashes on startup",
                 "Works as expected", "Too many ads", "Love the new design",
                 "Could be faster", "Best in its category", "Needs dark mode",
                 "Battery drain is noticeable", "Simple and clean",
                 "Support was helpful", "Not worth the price"]
    h, rows = base(rng, 60)
    fixture("str-num.negative.csv", "str-num", "negative", [], [],
            *extend(h, rows, "review", [rng.choice(sentences) for _ in rows]))

    # str-sanitise: padded and case-varied grades.
    grades = shuffled(rng, ["A", " B", "C ", "A", "B", " C "] * 10)
    h, rows = base(rng, 60)
    fixture("str-sanitise.positive.csv", "str-sanitise", "positive",
            ["grade"], ["str-sanitise"], *extend(h, rows, "grade", grades))
    h, rows = base(rng, 60)
    fixture("str-sanitise.negative.csv", "str-sanitise", "negative", [], [],
            *extend(h, rows, "grade", shuffled(rng, ["A", "B", "C"] * 20)))

    # str-human: netflix-like durations; homogeneous units are str-num.
    h, rows = base(rng, 60)
    kinds = shuffled(rng, ["Movie"] * 36 + ["TV Show"] * 24)
    durations = []
    for k in kinds:
        if k == "Movie":
            durations.append(f"{rng.randint(80, 150)} min")
        else:
            s = rng.randint(1, 9)
            durations.append(f"{s} Season" + ("s" if s > 1 else ""))
    h, rows = extend(h, rows, "type", kinds)
    fixture("str-human.positive.csv", "str-human", "positive", ["duration"],
            ["str-human"], *extend(h, rows, "duration", durations))
    h, rows = base(rng, 60)
    minutes = [f"{rng.randint(88, 100)} min" for _ in rows]
    fixture("str-human.negative.csv", "str-human", "negative", [],
            ["str-num"], *extend(h, rows, "duration", minutes))

    # Clean table: nothing to report.
    h, rows = base(rng, 60)
    fixture("clean.csv", None, "negative", [], [], h, rows)

    # Dataset-mirroring fixtures.
    netflix = [("Movie", "90 min"), ("TV Show", "2 Seasons"),
               ("TV Show", "1 Season"), ("TV Show", "1 Season"),
               ("TV Show", "2 Seasons"), ("TV Show", "1 Season"),
               ("Movie", "91 min"), ("Movie", "125 min"),
               ("TV Show", "9 Seasons"), ("Movie", "104 min")]
    write("netflix_excerpt.csv", ["type", "duration"], [list(r) for r in netflix])

    adult = []
    work_adult = [" Private", " Self-emp-not-inc", " Local-gov", " State-gov",
                  " Federal-gov"]
    edu_adult = [" Bachelors", " HS-grad", " Some-college", " Masters",
                 " Doctorate"]
    for i in range(120):
        wc = " ?" if i % 16 == 3 else rng.choice(work_adult)
        adult.append([rng.randint(17, 80), wc, rng.choice(edu_adult),
                      rng.choice([" Male", " Female"]),
                      rng.choice([" White", " Black", " Asian-Pac-Islander",
                                  " Other"]),
                      rng.randint(20, 60),
                      rng.choice([" <=50K", " >50K"])])
    write("adult_like.csv", ["age", "workclass", "education", "sex", "race",
                             "hours-per-week", "income"], adult)

    permit = []
    for i in range(100):
        permit.append([f"P{100000 + i * 7}",
                       rng.choice(["Additions", "New Construction",
                                   "Demolition", "Alterations"]),
                       f"{rng.uniform(1000, 90000):.2f}",
                       "Y" if i % 10 == 4 else None,
                       "Y" if i % 10 == 7 else None])
    write("permit_like.csv", ["permit_number", "permit_type",
                              "estimated_cost_usd", "structural_notification",
                              "tidf_compliance"], permit)

    sexes = shuffled(rng, [" M", "F ", " I ", "M", "F", "I"] * 10)
    abalone = [[s, f"{rng.uniform(0.1, 0.8):.3f}",
                f"{rng.uniform(0.05, 0.65):.3f}", rng.randint(1, 29)]
               for s in sexes]
    write("abalone_like.csv", ["sex", "length_mm", "diameter_mm", "rings"],
          abalone)

    with open(os.path.join(HERE, "expectations.json"), "w") as f:
        json.dump(expectations, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
