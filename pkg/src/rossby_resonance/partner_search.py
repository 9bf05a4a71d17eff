"""Complete bounded search for resonant partners and box enumeration.

If (x, y) decomposes n resonantly, the triangle inequality applied to the
three dispersion terms forces the smaller-norm leg into the disk

    |k| <= 2 |n|^2 / |n1|,

so scanning first components x over that disk, extracting the integer roots
of the partner quartic for each x, and adding the complementary leg n - k of
every hit is a complete search. All hits are reconfirmed with the exact
resonance predicate.

Enumeration over a norm box works in the quadrant n1 >= 1, n2 >= 0 and
expands results through the sign symmetries, which cuts the work by four
without affecting the output. Results can be streamed to a JSON Lines cache
so an interrupted run resumes where it stopped.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import isqrt
from multiprocessing import Pool
from typing import IO, Iterable, NamedTuple

from .exact_core import (
    ResonantTriad,
    Wavenumber,
    canonical_triad,
    integer_roots,
    is_resonant,
    quartic_coeffs,
)

JSONL_SCHEMA = 1


class SearchBound(NamedTuple):
    """Inclusive Euclidean bound on the smaller leg of any decomposition."""

    radius: int


@dataclass(frozen=True)
class EnumerationReport:
    """Outcome of a box enumeration.

    triads holds every canonical triad discovered from box members (legs may
    lie outside the box); lambda_members holds exactly the box wavenumbers
    that admit a non-trivial resonant decomposition. stats carries counts and
    wall times per phase and is deliberately excluded from the deterministic
    JSONL serialization.
    """

    max_norm: int
    triads: frozenset[ResonantTriad]
    lambda_members: frozenset[Wavenumber]
    stats: dict = field(compare=False, hash=False, default_factory=dict)


def search_radius(n) -> SearchBound:
    """ceil(2 |n|^2 / |n1|), valid for either leg of minimal norm."""
    n1, n2 = n
    if n1 == 0:
        raise ValueError("search radius requires a nonzero zonal component")
    b = n1 * n1 + n2 * n2
    return SearchBound(-((-2 * b) // abs(n1)))


def find_partners(n) -> list[Wavenumber]:
    """All partners (x, y) with is_resonant(n, (x, y)), sorted.

    Complete: both legs of every decomposition are returned (if k appears,
    so does n - k). Per first component x the quartic's integer roots are
    isolated exactly within the disk x^2 + y^2 <= radius^2 and every hit is
    confirmed with is_resonant before being accepted.
    """
    n1, n2 = n
    if n1 == 0:
        raise ValueError("partner search requires a nonzero zonal component")
    radius = search_radius(n).radius
    r2 = radius * radius
    found: set[Wavenumber] = set()
    for x in range(-radius, radius + 1):
        if x == 0 or x == n1:
            continue
        ymax = isqrt(r2 - x * x)
        poly = quartic_coeffs((n1, n2), x)
        for y in integer_roots(poly, ymax):
            if is_resonant((n1, n2), (x, y)):
                found.add(Wavenumber(x, y))
                found.add(Wavenumber(n1 - x, n2 - y))
    return sorted(found)


def naive_partner_oracle(n) -> list[Wavenumber]:
    """Brute-force reference for find_partners: test every disk point.

    Intentionally simple and slow; this is the ground truth the fast search
    is validated against.
    """
    n1, n2 = n
    if n1 == 0:
        raise ValueError("partner search requires a nonzero zonal component")
    radius = search_radius(n).radius
    r2 = radius * radius
    found: set[Wavenumber] = set()
    for x in range(-radius, radius + 1):
        if x == 0 or x == n1:
            continue
        ymax = isqrt(r2 - x * x)
        for y in range(-ymax, ymax + 1):
            if is_resonant((n1, n2), (x, y)):
                found.add(Wavenumber(x, y))
                found.add(Wavenumber(n1 - x, n2 - y))
    return sorted(found)


def _quadrant_points(max_norm: int) -> list[Wavenumber]:
    """Canonical work order: n1 >= 1, n2 >= 0, |n| <= max_norm, lexicographic."""
    points = []
    m2 = max_norm * max_norm
    for n1 in range(1, max_norm + 1):
        for n2 in range(0, isqrt(m2 - n1 * n1) + 1):
            points.append(Wavenumber(n1, n2))
    return points


def _triads_for(n: Wavenumber) -> list[ResonantTriad]:
    """Canonical triads of all decompositions of n, sorted."""
    return sorted({canonical_triad(n, k) for k in find_partners(n)})


def _worker(n: Wavenumber) -> tuple[Wavenumber, list[ResonantTriad]]:
    return n, _triads_for(n)


def _triad_record(triad: ResonantTriad, source: Wavenumber) -> dict:
    return {
        "triad": [[m.n1, m.n2] for m in triad.members()],
        "source_n": [source.n1, source.n2],
        "norms2": [m.norm2() for m in triad.members()],
    }


def _dump_line(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _header(max_norm: int) -> dict:
    return {"schema": JSONL_SCHEMA, "max_norm": max_norm, "quadrant": True}


def _read_cache(path, max_norm: int) -> dict[Wavenumber, list[ResonantTriad]]:
    """Completed per-source triads from a cache file; {} when absent.

    Only sources acknowledged by a done_upto marker count as complete;
    records after the last marker belong to an interrupted source and are
    recomputed. A truncated trailing line is ignored.
    """
    done: dict[Wavenumber, list[ResonantTriad]] = {}
    pending: dict[Wavenumber, list[ResonantTriad]] = {}
    try:
        fh = open(path, "r", encoding="utf-8")
    except FileNotFoundError:
        return {}
    with fh:
        first = fh.readline()
        if not first:
            return {}
        try:
            header = json.loads(first)
        except json.JSONDecodeError:
            raise ValueError(f"cache file {path} has a corrupt header line")
        if header != _header(max_norm):
            raise ValueError(
                f"cache file {path} was written for different parameters: {header}"
            )
        for line in fh:
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                break
            if "done_upto" in rec:
                n = Wavenumber(*rec["done_upto"])
                done[n] = pending.pop(n, [])
            elif "triad" in rec:
                triad = ResonantTriad.from_members(*rec["triad"])
                source = Wavenumber(*rec["source_n"])
                pending.setdefault(source, []).append(triad)
    return done


def enumerate_lambda(max_norm: int, jobs: int = 1, cache_path=None) -> EnumerationReport:
    """Every resonant triad discoverable from box members |n| <= max_norm.

    Work is restricted to the canonical quadrant and expanded by the sign
    symmetries afterwards. Identical inputs produce identical reports for
    any jobs value; the cache file, when given, is appended to as sources
    complete and consulted on the next run.
    """
    if max_norm < 1:
        raise ValueError("max_norm must be >= 1")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")

    t0 = time.perf_counter()
    points = _quadrant_points(max_norm)
    cached = _read_cache(cache_path, max_norm) if cache_path else {}
    pending = [n for n in points if n not in cached]

    writer: IO[str] | None = None
    if cache_path is not None:
        new_file = not cached
        writer = open(cache_path, "a" if not new_file else "w", encoding="utf-8")
        if new_file:
            writer.write(_dump_line(_header(max_norm)) + "\n")
            writer.flush()

    per_source: dict[Wavenumber, list[ResonantTriad]] = dict(cached)
    try:
        if jobs == 1 or len(pending) < 2:
            computed: Iterable[tuple[Wavenumber, list[ResonantTriad]]] = map(_worker, pending)
            _collect(computed, per_source, writer)
        else:
            chunk = max(1, len(pending) // (jobs * 8))
            with Pool(processes=jobs) as pool:
                _collect(pool.imap(_worker, pending, chunksize=chunk), per_source, writer)
    finally:
        if writer is not None:
            writer.close()
    t_search = time.perf_counter()

    triads: set[ResonantTriad] = set()
    lambda_members: set[Wavenumber] = set()
    quadrant_hits = 0
    for n in points:
        source_triads = per_source[n]
        if not source_triads:
            continue
        quadrant_hits += 1
        lambda_members.update((n, -n, n.mirror(), -n.mirror()))
        for t in source_triads:
            triads.add(t)
            triads.add(t.mirrored())
    t_end = time.perf_counter()

    stats = {
        "quadrant_points": len(points),
        "cache_hits": len(cached),
        "quadrant_lambda": quadrant_hits,
        "triads": len(triads),
        "lambda_members": len(lambda_members),
        "jobs": jobs,
        "wall_time_ms": {
            "search": (t_search - t0) * 1000.0,
            "expand": (t_end - t_search) * 1000.0,
            "total": (t_end - t0) * 1000.0,
        },
    }
    return EnumerationReport(
        max_norm=max_norm,
        triads=frozenset(triads),
        lambda_members=frozenset(lambda_members),
        stats=stats,
    )


def _collect(results, per_source, writer) -> None:
    for n, triads_n in results:
        per_source[n] = triads_n
        if writer is not None:
            for t in triads_n:
                writer.write(_dump_line(_triad_record(t, n)) + "\n")
            writer.write(_dump_line({"done_upto": [n.n1, n.n2]}) + "\n")
            writer.flush()


def _box_source(triad: ResonantTriad, max_norm: int) -> Wavenumber:
    """Smallest sign-normalized box member of the triad: its box anchor."""
    m2 = max_norm * max_norm
    candidates = []
    for m in triad.members():
        s = m if m.n1 > 0 else -m
        if s.norm2() <= m2:
            candidates.append(s)
    if not candidates:
        raise ValueError("triad has no member inside the box")
    return min(candidates)


def report_to_jsonl(report: EnumerationReport) -> str:
    """Deterministic JSONL body: header line plus one sorted record per triad.

    No timing or other run-dependent data appears here, so bodies from runs
    with different parallelism are byte-identical.
    """
    lines = [_dump_line(_header(report.max_norm))]
    for triad in sorted(report.triads):
        lines.append(_dump_line(_triad_record(triad, _box_source(triad, report.max_norm))))
    return "\n".join(lines) + "\n"


def read_triads_jsonl(stream: Iterable[str]) -> tuple[dict, list[ResonantTriad]]:
    """Parse a JSONL triad stream: (header, triads). Unknown records are skipped."""
    header: dict = {}
    triads: list[ResonantTriad] = []
    for i, line in enumerate(stream):
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"line {i + 1}: not valid JSON: {exc}") from exc
        if i == 0 and "schema" in rec and "triad" not in rec:
            header = rec
            continue
        if "triad" in rec:
            triads.append(ResonantTriad.from_members(*rec["triad"]))
    return header, triads


def report_from_triads(max_norm: int, triads: Iterable[ResonantTriad]) -> EnumerationReport:
    """Rebuild an EnumerationReport from serialized triads.

    lambda_members is recovered as the box wavenumbers appearing (up to
    sign) in some triad, which coincides with the members a fresh
    enumeration at the same box would report.
    """
    triad_set = frozenset(triads)
    m2 = max_norm * max_norm
    members: set[Wavenumber] = set()
    for t in triad_set:
        for m in t.members():
            for s in (m, -m):
                if s.norm2() <= m2:
                    members.add(s)
    return EnumerationReport(
        max_norm=max_norm,
        triads=triad_set,
        lambda_members=frozenset(members),
        stats={},
    )
