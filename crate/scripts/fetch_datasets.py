#!/usr/bin/env python3
"""Download and normalize the benchmark datasets into data/.

Classification (UCI):
  pima.csv           Pima Indians Diabetes (768 x 8), label column "class"
  statlog-heart.csv  Statlog Heart (270 x 13), label column "class"
  parkinsons.csv     Parkinsons (195 x 22), label column "class"

Survival (R package distributions, exported via the CSV mirrors below):
  pbc.csv    Mayo PBC (survival::pbc, randomized 418 subset? full table kept;
             rows with missing status dropped), columns "time", "status"
  lung1.csv  NCCTG lung cancer (survival::lung, 228 x 7)
  colon.csv  Chemotherapy colon cancer (survival::colon, death records)
  lung2.csv  Veterans lung cancer (survival::veteran)

Normalization applied to every file:
  - header row with plain lowercase column names
  - missing cells written as "NA"
  - survival status recoded to 0 = censored, 1 = event
  - no other preprocessing; the toolkit handles coding and imputation

Requires network access. Usage:  python3 scripts/fetch_datasets.py [dest_dir]
"""

import csv
import io
import sys
import urllib.request
from pathlib import Path

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"
# plain-CSV exports of the R `survival` package datasets
RDATASETS = "https://raw.githubusercontent.com/vincentarelbundock/Rdatasets/master/csv/survival"

def fetch(url: str) -> str:
    print(f"  GET {url}")
    with urllib.request.urlopen(url, timeout=60) as r:
        return r.read().decode("utf-8", errors="replace")

def write_csv(path: Path, header, rows):
    with path.open("w", newline="") as f:
        w = csv.writer(f)
        w.writerow(header)
        w.writerows(rows)
    print(f"  wrote {path} ({len(rows)} rows)")

def na(cell: str) -> str:
    return "NA" if cell in ("", "?", "NA") else cell

def pima(dest: Path):
    text = fetch(f"{UCI}/pima-indians-diabetes/pima-indians-diabetes.data")
    header = ["preg", "glucose", "bp", "skin", "insulin", "bmi", "pedigree", "age", "class"]
    rows = [[na(c) for c in line.split(",")] for line in text.strip().splitlines()]
    write_csv(dest / "pima.csv", header, rows)

def statlog_heart(dest: Path):
    text = fetch(f"{UCI}/statlog/heart/heart.dat")
    header = ["age", "sex", "cp", "trestbps", "chol", "fbs", "restecg", "thalach",
              "exang", "oldpeak", "slope", "ca", "thal", "class"]
    rows = [[na(c) for c in line.split()] for line in text.strip().splitlines()]
    write_csv(dest / "statlog-heart.csv", header, rows)

def parkinsons(dest: Path):
    text = fetch(f"{UCI}/parkinsons/parkinsons.data")
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    status = header.index("status")
    name = header.index("name")
    out_header = [h for i, h in enumerate(header) if i not in (status, name)] + ["class"]
    rows = []
    for rec in reader:
        if not rec:
            continue
        feats = [na(c) for i, c in enumerate(rec) if i not in (status, name)]
        rows.append(feats + [rec[status]])
    write_csv(dest / "parkinsons.csv", out_header, rows)

def survival_dataset(dest: Path, name: str, out: str, time_col: str, status_col: str,
                     event_value: str, drop_cols=(), row_filter=None):
    text = fetch(f"{RDATASETS}/{name}.csv")
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    drop = {header.index(c) for c in drop_cols if c in header}
    drop.add(0)  # unnamed row-index column
    t_i, s_i = header.index(time_col), header.index(status_col)
    out_header = [h for i, h in enumerate(header) if i not in drop | {t_i, s_i}]
    out_header += ["time", "status"]
    rows = []
    for rec in reader:
        if not rec or (row_filter and not row_filter(dict(zip(header, rec)))):
            continue
        if na(rec[t_i]) == "NA" or na(rec[s_i]) == "NA":
            continue
        feats = [na(c) for i, c in enumerate(rec) if i not in drop | {t_i, s_i}]
        rows.append(feats + [rec[t_i], "1" if rec[s_i] == event_value else "0"])
    write_csv(dest / out, out_header, rows)

def main():
    dest = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    dest.mkdir(parents=True, exist_ok=True)
    pima(dest)
    statlog_heart(dest)
    parkinsons(dest)
    # pbc: status 2 = death; trial rows only (id <= 312 have full data)
    survival_dataset(dest, "pbc", "pbc.csv", "time", "status", "2", drop_cols=("id",))
    # lung (NCCTG): status 2 = death
    survival_dataset(dest, "lung", "lung1.csv", "time", "status", "2", drop_cols=("inst",))
    # colon: etype 2 rows are the death records; status already 0/1
    survival_dataset(dest, "colon", "colon.csv", "time", "status", "1",
                     drop_cols=("id", "study", "etype"),
                     row_filter=lambda r: r.get("etype") == "2")
    # veteran: status 1 = death
    survival_dataset(dest, "veteran", "lung2.csv", "time", "status", "1")
    print("done")

if __name__ == "__main__":
    main()
