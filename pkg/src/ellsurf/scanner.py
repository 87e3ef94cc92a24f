"""Height-bounded census of fiber root numbers."""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, Sequence, Union

from .classify import ConstancyVerdict, SurfaceJ0, SurfaceJ1728, classify
from .local_root import root_number

Surface = Union[SurfaceJ0, SurfaceJ1728]
WORKERS_ENV = "ELLSURF_WORKERS"


def enumerate_fibers(H: int, include_infinity: bool = False) -> Iterator[tuple[int, int]]:
    """Coprime (m, n) with |m| <= H, 1 <= n <= H, ordered by (n, m)."""
    if H < 1:
        raise ValueError("H must be >= 1")
    for n in range(1, H + 1):
        for m in range(-H, H + 1):
            if math.gcd(m, n) == 1:
                yield m, n
    if include_infinity:
        yield 1, 0


def family_id(surface: Surface) -> str:
    if isinstance(surface, SurfaceJ0):
        return f"j0:a={surface.a},b={surface.b}"
    return f"j1728:A={surface.A},B={surface.B},C={surface.C}"


@dataclass(frozen=True)
class FiberSample:
    m: int
    n: int
    delta: int
    sign: int


def fiber_sample(surface: Surface, m: int, n: int) -> FiberSample | None:
    """None for a singular fiber."""
    d = surface.delta(m, n)
    if d == 0:
        return None
    return FiberSample(m, n, d, root_number(d, surface.family))


@dataclass
class ScanReport:
    family: str
    H: int
    wplus: int = 0
    wminus: int = 0
    skipped: int = 0
    witnesses: list[FiberSample] = field(default_factory=list)

    @property
    def constant_observed(self) -> bool:
        return self.wplus == 0 or self.wminus == 0

    @property
    def signs(self) -> set[int]:
        return {w.sign for w in self.witnesses}

    @property
    def total(self) -> int:
        return self.wplus + self.wminus + self.skipped

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "H": self.H,
            "wplus": self.wplus,
            "wminus": self.wminus,
            "skipped": self.skipped,
            "constant_observed": self.constant_observed,
            "witnesses": [asdict(w) for w in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ScanReport":
        return cls(d["family"], d["H"], d["wplus"], d["wminus"], d["skipped"], [FiberSample(**w) for w in d["witnesses"]])

    def to_csv(self) -> str:
        """One row per witness; report-level columns repeat on every row."""
        buf = io.StringIO()
        cols = ["family", "H", "wplus", "wminus", "skipped", "constant_observed", "m", "n", "delta", "sign"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        head = [self.family, self.H, self.wplus, self.wminus, self.skipped, self.constant_observed]
        for s in self.witnesses or [None]:
            w.writerow(head + ([s.m, s.n, s.delta, s.sign] if s else ["", "", "", ""]))
        return buf.getvalue()


@dataclass(frozen=True)
class _Chunk:
    wplus: int
    wminus: int
    skipped: int
    first: tuple[FiberSample | None, FiberSample | None]  # first +1, first -1


def _scan_rows(surface: Surface, H: int, rows: Sequence[int]) -> _Chunk:
    wp = wm = sk = 0
    first_p = first_m = None
    for n in rows:
        row: dict[int, int] = {}
        for m in range(-H, H + 1):
            if math.gcd(m, n) != 1:
                continue
            s = fiber_sample(surface, m, n)
            if s is None:
                sk += 1
                continue
            row[m] = s.sign
            if s.sign == 1:
                wp += 1
                first_p = first_p or s
            else:
                wm += 1
                first_m = first_m or s
        for m, sg in row.items():
            # both families are even in T
            assert row.get(-m, sg) == sg, f"sign({m},{n}) != sign({-m},{n})"
    return _Chunk(wp, wm, sk, (first_p, first_m))


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def _chunks(H: int, parts: int) -> list[list[int]]:
    rows = list(range(1, H + 1))
    size = max(1, math.ceil(len(rows) / parts))
    return [rows[i : i + size] for i in range(0, len(rows), size)]


def scan(surface: Surface, H: int, workers: int | None = None) -> ScanReport:
    """Root numbers of every fiber of height <= H, merged in enumeration order."""
    if H < 1:
        raise ValueError("H must be >= 1")
    workers = default_workers() if workers is None else max(1, workers)
    chunks = _chunks(H, workers * 4 if workers > 1 else 1)
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_scan_rows, [surface] * len(chunks), [H] * len(chunks), chunks))
    else:
        results = [_scan_rows(surface, H, c) for c in chunks]
    rep = ScanReport(family_id(surface), H)
    first_p = first_m = None
    for r in results:
        rep.wplus += r.wplus
        rep.wminus += r.wminus
        rep.skipped += r.skipped
        first_p = first_p or r.first[0]
        first_m = first_m or r.first[1]
    rep.witnesses = [w for w in (first_p, first_m) if w is not None]
    return rep


def find_both_signs(surface: Surface, H: int) -> dict[int, FiberSample]:
    """Walk fibers by increasing height and stop once both signs are seen."""
    found: dict[int, FiberSample] = {}
    for h in range(1, H + 1):
        ring = [(m, h) for m in range(-h, h + 1)] + [(m, n) for n in range(1, h) for m in (-h, h)]
        for m, n in ring:
            if math.gcd(m, n) != 1:
                continue
            s = fiber_sample(surface, m, n)
            if s is not None and s.sign not in found:
                found[s.sign] = s
                if len(found) == 2:
                    return found
    return found


@dataclass(frozen=True)
class Validation:
    status: str  # "Agree", "SoundnessViolation", "WitnessNotFound"
    verdict: ConstancyVerdict
    witnesses: tuple[FiberSample, ...] = ()
    H: int = 0

    @property
    def ok(self) -> bool:
        return self.status != "SoundnessViolation"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "H": self.H,
            "verdict": self.verdict.to_dict(),
            "witnesses": [asdict(w) for w in self.witnesses],
        }


def cross_validate(surface: Surface, H: int, method: str = "local", workers: int | None = None, **kw) -> Validation:
    """Check a classifier verdict against a census up to height H."""
    verdict = classify(surface, method, **kw)
    if verdict.constant:
        rep = scan(surface, H, workers)
        bad = [w for w in rep.witnesses if w.sign != verdict.sign]
        if bad:
            return Validation("SoundnessViolation", verdict, tuple(bad), H)
        return Validation("Agree", verdict, tuple(rep.witnesses), H)
    found = find_both_signs(surface, H)
    if len(found) == 2:
        return Validation("Agree", verdict, (found[1], found[-1]), H)
    return Validation("WitnessNotFound", verdict, tuple(found.values()), H)


def twist_consistent(surface: Surface, m: int, n: int, k: int) -> bool:
    """(km, kn) multiplies delta by k^6 or k^4, which must not change the sign."""
    d, dk = surface.delta(m, n), surface.delta(k * m, k * n)
    if d == 0:
        return dk == 0
    return root_number(d, surface.family) == root_number(dk, surface.family)


@dataclass
class SweepResult:
    families: int = 0
    constant: int = 0
    varies: int = 0
    violations: list[dict] = field(default_factory=list)
    varies_witnessed: int = 0
    unwitnessed: list[str] = field(default_factory=list)

    @property
    def completeness(self) -> float:
        return self.varies_witnessed / self.varies if self.varies else 1.0

    def to_dict(self) -> dict:
        return dict(asdict(self), completeness=self.completeness)


def soundness_sweep(
    surfaces: Sequence[Surface],
    H_constant: int = 100,
    H_varies: int = 200,
    method: str = "local",
    workers: int | None = None,
) -> SweepResult:
    """Scan every Constant verdict to H_constant and look for both signs on
    every Varies verdict up to H_varies."""
    res = SweepResult()
    for s in surfaces:
        res.families += 1
        val = cross_validate(s, H_constant if classify(s, method).constant else H_varies, method, workers)
        if val.verdict.constant:
            res.constant += 1
            if not val.ok:
                res.violations.append({"family": family_id(s), "witnesses": [asdict(w) for w in val.witnesses]})
        else:
            res.varies += 1
            if val.status == "Agree":
                res.varies_witnessed += 1
            else:
                res.unwitnessed.append(family_id(s))
    return res


def random_j0_surfaces(rng, count: int, bound: int) -> list[SurfaceJ0]:
    """Half uniform over 0 < |a|, |b| <= bound, half uniform over the pairs in
    that box that admit a = 3A^2 C, b = B^2 C (so Constant verdicts occur)."""
    reps = [
        (a, b)
        for C in range(-bound, bound + 1) if C
        for A in range(1, math.isqrt(bound // max(1, 3 * abs(C))) + 1)
        for B in range(1, math.isqrt(bound // abs(C)) + 1)
        if math.gcd(A, B) == 1
        for a, b in ((3 * A * A * C, B * B * C),)
    ]
    out = []
    for i in range(count):
        if i % 2:
            out.append(SurfaceJ0(*rng.choice(reps)))
        else:
            a = b = 0
            while a == 0 or b == 0:
                a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
            out.append(SurfaceJ0(a, b))
    return out


def random_j1728_surfaces(rng, count: int, bound: int) -> list[SurfaceJ1728]:
    out = []
    while len(out) < count:
        A, B, C = (rng.choice((-1, 1)) * rng.randint(1, bound) for _ in range(3))
        if math.gcd(A, B) == 1:
            out.append(SurfaceJ1728(A, B, C))
    return out
