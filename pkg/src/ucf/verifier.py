"""Campaign driver: enumerate families, run conjecture checks on each,
aggregate per-T and per-shape statistics, and emit reports, checkpoints,
and counterexample dumps.

A campaign is split into the enumeration's independent subtree jobs.
Jobs run serially or in a process pool; each returns its own exact
aggregate and the merge is associative, so totals, statistics, and the
(sorted) counterexample list are identical for any worker count and for
either candidate ordering.  Completed jobs are appended to a checkpoint
file as they finish, which makes campaigns resumable after interruption.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Sequence

from .core import (
    Mask,
    SetFamily,
    frankl_holds,
    frequency_profile,
    full_mask,
    lemma_1_2_bound,
    level_profile,
    s_frankl_holds,
    t_value,
    union_closure,
)
from .decomposition import (
    AbundanceWitness,
    PairDecomposition,
    _shape_tag,
    abundance_witness,
    classify_shape,
    pair_decompose,
)
from .enumeration import (
    EnumerationConstraints,
    ensure_enumerable,
    enumerate_job,
    job_depth,
    job_label,
    subtree_jobs,
)
from .errors import (
    CampaignIncomplete,
    DegenerateFamily,
    NoNonemptyMember,
    NotApplicable,
    NotInScope,
    PreconditionViolation,
    WitnessUnavailable,
)
from .fileformat import format_family

CHECK_NAMES = ("frankl", "s_frankl", "lemma_1_2_spot")


def _failure_record(check: str, family: SetFamily, extra: dict | None = None) -> dict:
    prof = frequency_profile(family)
    try:
        t = t_value(family)
    except NoNonemptyMember:
        t = 0
    record = {
        "check": check,
        "family": format_family(family),
        "t": t,
        "m": prof.m,
        "freq": list(prof.freq),
        "abundant": sorted(prof.abundant),
    }
    if extra:
        record.update(extra)
    return record


def _check_frankl(family: SetFamily) -> dict | None:
    try:
        ok = frankl_holds(family)
    except DegenerateFamily:
        return None
    return None if ok else _failure_record("frankl", family)


def _check_s_frankl(family: SetFamily) -> dict | None:
    try:
        ok = s_frankl_holds(family)
    except (NoNonemptyMember, NotApplicable):
        return None
    return None if ok else _failure_record("s_frankl", family)


def _check_lemma_1_2_spot(family: SetFamily) -> dict | None:
    coatoms = family.members_of_size(family.n - 1)
    if len(coatoms) < 2:
        return None
    result = lemma_1_2_bound(full_mask(family.n), SetFamily(family.n, coatoms))
    if result.holds:
        return None
    return _failure_record("lemma_1_2_spot", family, {"min_freq": result.min_freq})


CHECK_FNS = {
    "frankl": _check_frankl,
    "s_frankl": _check_s_frankl,
    "lemma_1_2_spot": _check_lemma_1_2_spot,
}


@dataclass
class VerificationReport:
    constraints: EnumerationConstraints
    checks: tuple[str, ...]
    families_total: int
    families_by_T: dict[int, int]
    families_by_shape: dict[str, int] | None
    counterexamples: list[dict]
    wall_time: float
    workers: int
    order: str = "desc"

    def body_dict(self) -> dict:
        """The invariant report content: everything that must be
        byte-identical across worker counts and candidate orderings."""
        return {
            "constraints": {
                "n": self.constraints.n,
                "t": self.constraints.t,
                "require_universe": self.constraints.require_universe,
                "up_to_iso": self.constraints.up_to_iso,
            },
            "checks": list(self.checks),
            "families_total": self.families_total,
            "families_by_T": {str(k): v for k, v in sorted(self.families_by_T.items())},
            "families_by_shape": (
                None
                if self.families_by_shape is None
                else {k: v for k, v in sorted(self.families_by_shape.items())}
            ),
            "counterexamples": self.counterexamples,
        }

    def body_bytes(self) -> bytes:
        return json.dumps(self.body_dict(), sort_keys=True, separators=(",", ":")).encode()

    def to_dict(self) -> dict:
        out = self.body_dict()
        out["wall_time"] = self.wall_time
        out["workers"] = self.workers
        out["order"] = self.order
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _job_worker(payload: tuple) -> dict:
    (n, t, require_universe, up_to_iso, order, checks, lemma_every, unbounded, job) = payload
    c = EnumerationConstraints(n, t, require_universe, up_to_iso)
    shape_mode = n == 6 and t == 3
    full = full_mask(n)
    by_t: dict[int, int] = {}
    by_shape: dict[str, int] = {}
    failures: list[dict] = []
    visited = 0

    def visit(family: SetFamily) -> None:
        nonlocal visited
        visited += 1
        try:
            tv = t_value(family)
        except NoNonemptyMember:
            tv = 0
        by_t[tv] = by_t.get(tv, 0) + 1
        if shape_mode and tv == 3 and full in set(family.members):
            # enumerated families are union-closed with the empty set
            # included, so the full classify_shape guards are redundant
            levels = level_profile(family)
            tag = _shape_tag(levels.counts[4] > 0, levels.counts[5] > 0)
            by_shape[tag] = by_shape.get(tag, 0) + 1
        for name in checks:
            if name == "lemma_1_2_spot" and lemma_every > 1 and (visited - 1) % lemma_every:
                continue
            failure = CHECK_FNS[name](family)
            if failure is not None:
                failures.append(failure)

    count = enumerate_job(c, job, visit, order=order, unbounded=unbounded)
    if count != visited:
        raise AssertionError(f"visit stream ({visited}) disagrees with count ({count})")
    return {
        "job": job,
        "label": job_label(c, job, order),
        "count": count,
        "by_t": by_t,
        "by_shape": by_shape,
        "failures": failures,
    }


def _checkpoint_header(c: EnumerationConstraints, order: str, checks: Sequence[str], lemma_every: int) -> dict:
    return {
        "n": c.n,
        "t": c.t,
        "require_universe": c.require_universe,
        "up_to_iso": c.up_to_iso,
        "order": order,
        "depth": job_depth(c, order),
        "checks": list(checks),
        "lemma_every": lemma_every,
    }


def _load_checkpoint(path: str, header: dict) -> dict[int, dict]:
    """Completed job records from an earlier run of the same campaign."""
    if not os.path.exists(path):
        return {}
    done: dict[int, dict] = {}
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    seen_header = False
    for line in lines:
        if line.startswith("# campaign "):
            stored = json.loads(line[len("# campaign "):])
            if stored != header:
                raise PreconditionViolation(
                    f"checkpoint {path} belongs to a different campaign: {stored} != {header}"
                )
            seen_header = True
        elif line.startswith("# agg "):
            record = json.loads(line[len("# agg "):])
            done[record["job"]] = record
    if lines and not seen_header:
        raise PreconditionViolation(f"checkpoint {path} has no campaign header line")
    return done


def _dump_counterexample(directory: str, failure: dict) -> str:
    os.makedirs(directory, exist_ok=True)
    digest = hashlib.sha256(
        (failure["check"] + "\n" + failure["family"]).encode()
    ).hexdigest()[:16]
    path = os.path.join(directory, f"ce-{digest}.family")
    body = f"# failed check: {failure['check']}\n" + failure["family"]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(body)
    return path


def run_campaign(
    c: EnumerationConstraints,
    checks: Sequence[str] = ("frankl", "s_frankl"),
    *,
    order: str = "desc",
    workers: int = 1,
    checkpoint: str | None = None,
    counterexample_dir: str | None = None,
    lemma_every: int = 1,
    unbounded: bool = False,
    max_jobs: int | None = None,
) -> VerificationReport:
    """Run every selected check on every enumerated family.

    Totals are exact; the report body is independent of the worker
    count and of the candidate ordering.  With a checkpoint path,
    completed subtrees are recorded as they finish and skipped on the
    next run; max_jobs limits this run to that many subtrees and raises
    CampaignIncomplete if work remains (split-run support).
    """
    checks = tuple(checks)
    for name in checks:
        if name not in CHECK_FNS:
            raise PreconditionViolation(f"unknown check {name!r}; available: {CHECK_NAMES}")
    if lemma_every < 1:
        raise PreconditionViolation("lemma_every must be >= 1")
    ensure_enumerable(c, unbounded)
    start = time.perf_counter()
    jobs = subtree_jobs(c, order)
    header = _checkpoint_header(c, order, checks, lemma_every)
    done = _load_checkpoint(checkpoint, header) if checkpoint else {}
    pending = [j for j in jobs if j not in done]
    todo = pending if max_jobs is None else pending[:max_jobs]

    ck_fh = None
    if checkpoint:
        fresh = not os.path.exists(checkpoint) or os.path.getsize(checkpoint) == 0
        ck_fh = open(checkpoint, "a", encoding="utf-8")
        if fresh:
            ck_fh.write(f"# campaign {json.dumps(header, sort_keys=True)}\n")
            ck_fh.flush()

    results: dict[int, dict] = {}

    def consume(record: dict) -> None:
        results[record["job"]] = record
        if ck_fh is not None:
            ck_fh.write(f"subtree={record['label']} count={record['count']}\n")
            ck_fh.write(f"# agg {json.dumps(record, sort_keys=True)}\n")
            ck_fh.flush()
        if counterexample_dir:
            for failure in record["failures"]:
                _dump_counterexample(counterexample_dir, failure)

    payloads = [
        (c.n, c.t, c.require_universe, c.up_to_iso, order, checks, lemma_every, unbounded, job)
        for job in todo
    ]
    try:
        if workers <= 1 or len(payloads) <= 1:
            for payload in payloads:
                consume(_job_worker(payload))
        else:
            ctx = multiprocessing.get_context("fork")
            chunk = max(1, len(payloads) // (workers * 8))
            with ctx.Pool(workers) as pool:
                for record in pool.imap_unordered(_job_worker, payloads, chunksize=chunk):
                    consume(record)
    finally:
        if ck_fh is not None:
            ck_fh.close()

    if len(todo) < len(pending):
        raise CampaignIncomplete(
            f"{len(pending) - len(todo)} of {len(jobs)} subtrees remain; "
            "re-run with the same checkpoint to finish"
        )

    merged = {**done, **results}
    families_total = 0
    by_t: dict[int, int] = {}
    by_shape: dict[str, int] = {}
    counterexamples: list[dict] = []
    for job in jobs:
        record = merged[job]
        families_total += record["count"]
        for key, value in record["by_t"].items():
            by_t[int(key)] = by_t.get(int(key), 0) + value
        for key, value in record["by_shape"].items():
            by_shape[key] = by_shape.get(key, 0) + value
        counterexamples.extend(record["failures"])
    counterexamples.sort(key=lambda r: (r["check"], r["family"]))

    shape_mode = c.n == 6 and c.t == 3
    report = VerificationReport(
        constraints=c,
        checks=checks,
        families_total=families_total,
        families_by_T=by_t,
        families_by_shape=by_shape if shape_mode else None,
        counterexamples=counterexamples,
        wall_time=time.perf_counter() - start,
        workers=workers,
        order=order,
    )
    if sum(by_t.values()) != families_total:
        raise AssertionError("families_by_T does not sum to families_total")
    if shape_mode and c.require_universe and sum(by_shape.values()) != by_t.get(3, 0):
        raise AssertionError("families_by_shape does not sum to the T=3 total")
    return report


@dataclass
class CheckRecord:
    """Diagnostic record for one family; verdicts refer to the closure."""

    family: SetFamily
    closed: SetFamily
    was_union_closed: bool
    closure_added: tuple[Mask, ...]
    t: int | None
    levels: tuple[int, ...]
    freq: tuple[int, ...]
    m: int
    abundant: tuple[int, ...]
    frankl: bool | None
    s_frankl: bool | None
    shape: str | None
    decomposition: PairDecomposition | None
    witness: AbundanceWitness | None
    notes: tuple[str, ...]
    verdict: str  # "pass" | "fail" | "not-applicable"

    def to_dict(self) -> dict:
        def set_list(mask: Mask) -> list[int]:
            return [e + 1 for e in range(self.closed.n) if mask >> e & 1]

        out: dict = {
            "family": format_family(self.family),
            "was_union_closed": self.was_union_closed,
            "closure_added": [set_list(m) for m in self.closure_added],
            "t": self.t,
            "levels": list(self.levels),
            "freq": list(self.freq),
            "m": self.m,
            "abundant": list(self.abundant),
            "frankl": self.frankl,
            "s_frankl": self.s_frankl,
            "shape": self.shape,
            "notes": list(self.notes),
            "verdict": self.verdict,
        }
        if not self.was_union_closed:
            out["closure"] = format_family(self.closed)
        if self.decomposition is not None:
            out["decomposition"] = {
                "k": self.decomposition.k,
                "pairs": [[set_list(a), set_list(b)] for a, b in self.decomposition.pairs],
                "residue": [set_list(m) for m in self.decomposition.residue],
                "target": set_list(self.decomposition.target),
            }
        if self.witness is not None:
            out["witness"] = {
                "elements": list(self.witness.elements),
                "m": self.witness.m,
                "freq": {str(e): f for e, f in zip(self.witness.elements, self.witness.counts)},
            }
        return out


def check_single(family: SetFamily) -> CheckRecord:
    """Full diagnostic on one family: closure delta, T, profiles,
    conjecture verdicts, shape, T-slice pairing, and witness."""
    closed = union_closure(family)
    was_closed = closed.members == family.members
    added = tuple(m for m in closed.members if m not in set(family.members))
    notes: list[str] = []
    if not was_closed:
        notes.append(
            f"input is not union-closed; {len(added)} set(s) added, verdicts refer to the closure"
        )
    prof = frequency_profile(closed)
    levels = level_profile(closed)
    t: int | None
    frankl: bool | None = None
    s_frankl: bool | None = None
    try:
        t = t_value(closed)
    except NoNonemptyMember:
        t = None
        notes.append("no nonempty member; the conjectures say nothing here")
    if t is not None:
        frankl = frankl_holds(closed)
        if t >= 2:
            s_frankl = s_frankl_holds(closed)
        else:
            notes.append("T(F)=1: the at-least-T form is not applicable, frankl verdict applies")
    shape: str | None = None
    try:
        shape = classify_shape(closed).tag
    except NotInScope:
        pass
    decomposition = None
    if t is not None:
        decomposition = pair_decompose(closed.members_of_size(t), full_mask(closed.n))
    witness = None
    if t is not None:
        try:
            witness = abundance_witness(closed)
        except WitnessUnavailable as exc:
            notes.append(f"no abundance witness: {exc}")
    if t is None:
        verdict = "not-applicable"
    elif frankl is False or s_frankl is False:
        verdict = "fail"
    else:
        verdict = "pass"
    return CheckRecord(
        family=family,
        closed=closed,
        was_union_closed=was_closed,
        closure_added=added,
        t=t,
        levels=levels.counts,
        freq=prof.freq,
        m=prof.m,
        abundant=tuple(sorted(prof.abundant)),
        frankl=frankl,
        s_frankl=s_frankl,
        shape=shape,
        decomposition=decomposition,
        witness=witness,
        notes=tuple(notes),
        verdict=verdict,
    )
