"""Grid sweep over specialisations t = a/b of the underlying polynomials.

Rows are produced block by block.  Each finished block is written atomically
to ``<out>.parts/``, so an interrupted run can be resumed; the final CSV and
summary are assembled in grid order once every block exists.
"""
from __future__ import annotations

import csv
import io
import json
import os
import shutil
import tempfile
import time
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd
from multiprocessing import get_context
from pathlib import Path
from typing import Iterator, Optional

from .batch import batch_galois_scan, family_member
from .galois import GaloisReport, SieveBudget, Status, Verdict

CSV_FIELDS = (
    "n",
    "delta",
    "t_num",
    "t_den",
    "sieve",
    "status",
    "jordan_prime",
    "disc_square",
    "primes_sampled",
    "runtime_ms",
)
BLOCK_SIZE = 512


@dataclass(frozen=True)
class SweepConfig:
    """``n`` is the degree of the underlying polynomial (the Krawtchouk degree is 2n + delta)."""

    n_min: int = 1
    n_max: int = 12
    num_bound: int = 50
    den_bound: int = 50
    deltas: tuple[int, ...] = (0, 1)
    prime_bound: int = 500
    seed: int = 0
    workers: int = 1
    timings: bool = False

    def __post_init__(self):
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.num_bound < 1 or self.den_bound < 1:
            raise ValueError("bounds must be at least 1")
        if not self.deltas or any(d not in (0, 1) for d in self.deltas):
            raise ValueError("deltas must be a nonempty subset of {0, 1}")
        if self.prime_bound < 2 or self.workers < 1:
            raise ValueError("prime_bound >= 2 and workers >= 1 required")
        object.__setattr__(self, "deltas", tuple(sorted(set(self.deltas))))


@dataclass(frozen=True)
class SpecializationRecord:
    n: int
    delta: int
    t: Fraction
    sieve: str
    status: str
    jordan_prime: Optional[int]
    disc_square: bool
    primes_sampled: int
    runtime_ms: Optional[float] = None

    def row(self) -> list:
        return [
            self.n,
            self.delta,
            self.t.numerator,
            self.t.denominator,
            self.sieve,
            self.status,
            "" if self.jordan_prime is None else self.jordan_prime,
            "true" if self.disc_square else "false",
            self.primes_sampled,
            "" if self.runtime_ms is None else f"{self.runtime_ms:.3f}",
        ]

    @property
    def certified_irreducible(self) -> bool:
        return self.sieve.startswith(Verdict.IRREDUCIBLE.value)

    @property
    def contradicts_full_symmetric(self) -> bool:
        # irreducible with square discriminant: the group sits inside A_n, a proper subgroup
        return self.n >= 2 and self.certified_irreducible and self.disc_square


def parameter_values(num_bound: int, den_bound: int) -> tuple[list[Fraction], int]:
    """Distinct reduced a/b with |a| <= num_bound, 1 <= b <= den_bound, and the raw count."""
    values = [
        Fraction(a, b)
        for a in range(-num_bound, num_bound + 1)
        for b in range(1, den_bound + 1)
        if gcd(a, b) == 1
    ]
    values.sort(key=lambda t: (t.numerator, t.denominator))
    return values, (2 * num_bound + 1) * den_bound


def grid_blocks(config: SweepConfig) -> Iterator[tuple[int, int, int, tuple[Fraction, ...]]]:
    """(block id, n, delta, t-values) in grid order."""
    values, _ = parameter_values(config.num_bound, config.den_bound)
    block_id = 0
    for n in range(config.n_min, config.n_max + 1):
        for delta in config.deltas:
            for start in range(0, len(values), BLOCK_SIZE):
                yield block_id, n, delta, tuple(values[start : start + BLOCK_SIZE])
                block_id += 1


def _record(n: int, delta: int, t: Fraction, report: GaloisReport, ms: Optional[float]) -> SpecializationRecord:
    return SpecializationRecord(
        n=n,
        delta=delta,
        t=t,
        sieve=str(report.sieve),
        status=report.status.value,
        jordan_prime=report.jordan_prime,
        disc_square=report.disc_square,
        primes_sampled=report.primes_sampled,
        runtime_ms=ms,
    )


def run_block(n: int, delta: int, ts: tuple[Fraction, ...], prime_bound: int, timings: bool = False) -> list[SpecializationRecord]:
    start = time.perf_counter()
    polys = [family_member(n, delta, t) for t in ts]
    reports = batch_galois_scan(polys, prime_bound, SieveBudget(prime_bound=prime_bound))
    ms = (time.perf_counter() - start) * 1000 / len(ts) if timings else None
    return [_record(n, delta, t, r, ms) for t, r in zip(ts, reports)]


def _block_job(args) -> tuple[int, str]:
    block_id, n, delta, ts, prime_bound, timings = args
    return block_id, _csv_text(run_block(n, delta, ts, prime_bound, timings))


def _csv_text(records, header: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(CSV_FIELDS)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def atomic_write(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_records(path: Path) -> list[SpecializationRecord]:
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(
                SpecializationRecord(
                    n=int(row["n"]),
                    delta=int(row["delta"]),
                    t=Fraction(int(row["t_num"]), int(row["t_den"])),
                    sieve=row["sieve"],
                    status=row["status"],
                    jordan_prime=int(row["jordan_prime"]) if row["jordan_prime"] else None,
                    disc_square=row["disc_square"] == "true",
                    primes_sampled=int(row["primes_sampled"]),
                    runtime_ms=float(row["runtime_ms"]) if row["runtime_ms"] else None,
                )
            )
    return out


@dataclass
class SweepSummary:
    config: dict
    raw_points: int
    distinct_points: int
    rows: int
    status_counts: dict
    sieve_counts: dict
    per_n: dict
    contradiction_witnesses: list

    def to_json(self) -> dict:
        return asdict(self)


def summarize(config: SweepConfig, records: list[SpecializationRecord]) -> SweepSummary:
    values, raw = parameter_values(config.num_bound, config.den_bound)
    per_combo = len(config.deltas) * (config.n_max - config.n_min + 1)
    status_counts = Counter({s.value: 0 for s in Status})
    sieve_counts = Counter({v.value: 0 for v in Verdict})
    per_n: dict = {}
    witnesses = []
    for rec in records:
        status_counts[rec.status] += 1
        sieve_counts[rec.sieve.split("(")[0]] += 1
        per_n.setdefault(str(rec.n), Counter())[rec.status] += 1
        if rec.contradicts_full_symmetric:
            witnesses.append(
                {
                    "n": rec.n,
                    "delta": rec.delta,
                    "t": f"{rec.t.numerator}/{rec.t.denominator}",
                    "sieve": rec.sieve,
                    "status": rec.status,
                }
            )
    cfg = asdict(config)
    cfg.pop("workers")
    cfg["deltas"] = list(config.deltas)
    return SweepSummary(
        config=cfg,
        raw_points=raw * per_combo,
        distinct_points=len(values) * per_combo,
        rows=len(records),
        status_counts=dict(status_counts),
        sieve_counts=dict(sieve_counts),
        per_n={k: dict(sorted(v.items())) for k, v in per_n.items()},
        contradiction_witnesses=witnesses,
    )


def conjecture_sweep(
    config: SweepConfig, out: Path, resume: bool = False, progress=None
) -> SweepSummary:
    """Run the sweep, writing ``out`` (CSV) and ``out`` with suffix ``.summary.json``.

    The files depend only on the config (worker count excluded) unless
    ``config.timings`` adds the per-row runtime column.
    """
    out = Path(out)
    parts = out.with_name(out.name + ".parts")
    if parts.exists() and not resume:
        shutil.rmtree(parts)
    parts.mkdir(parents=True, exist_ok=True)
    stamp = json.dumps(asdict(config) | {"workers": None}, sort_keys=True)
    stamp_file = parts / "config.json"
    if stamp_file.exists() and stamp_file.read_text() != stamp:
        raise ValueError(f"{parts} belongs to a different sweep configuration")
    atomic_write(stamp_file, stamp)

    blocks = list(grid_blocks(config))
    todo = [
        (bid, n, d, ts, config.prime_bound, config.timings)
        for bid, n, d, ts in blocks
        if not (parts / f"{bid:06d}.csv").exists()
    ]

    def store(bid: int, text: str):
        atomic_write(parts / f"{bid:06d}.csv", text)
        if progress:
            progress(bid, len(blocks))

    if config.workers == 1 or len(todo) <= 1:
        for job in todo:
            store(*_block_job(job))
    else:
        with get_context("spawn").Pool(config.workers) as pool:
            for bid, text in pool.imap_unordered(_block_job, todo):
                store(bid, text)

    header = io.StringIO()
    csv.writer(header, lineterminator="\n").writerow(CSV_FIELDS)
    body = [header.getvalue()]
    for bid, *_ in blocks:
        body.append((parts / f"{bid:06d}.csv").read_text())
    atomic_write(out, "".join(body))
    records = read_records(out)
    summary = summarize(config, records)
    atomic_write(summary_path(out), json.dumps(summary.to_json(), indent=2, sort_keys=True) + "\n")
    shutil.rmtree(parts)
    return summary


def summary_path(out: Path) -> Path:
    out = Path(out)
    return out.with_name(out.stem + ".summary.json")
