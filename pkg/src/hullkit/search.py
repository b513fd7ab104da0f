"""Search drivers: enumerate or sample transform pairs against seed codes to
discover doubly even self-dual codes and improved LCD codes, with
fingerprint deduplication and replayable JSON-lines persistence.

Every emitted record's code is certified against its guaranteed
predicate at emission time, and records are reproducible: replaying
(seed, x, y) must give back identical parameters and fingerprint.
"""
from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Iterator, Mapping

from .code import (
    LinearCode,
    is_doubly_even,
    is_lcd,
    is_self_dual,
    standard_form,
)
from .errors import CapacityError, IntegrityError, PostconditionError, PredicateError
from .field import GF2, FieldVector, inner_product
from .invariant import is_equivalent, nt_from_masks
from .minweight import _scan_binary, codeword_masks_of_weight, min_weight
from .transform import TransformPair, transform_code

RNG_NAME = "python-random-mt19937"
SEARCH_NODE_BUDGET = 50_000


def make_yi(m: int, i: int) -> FieldVector:
    """The length-m binary vector with the last i coordinates set."""
    if not 0 < i <= m:
        raise ValueError(f"need 0 < i <= {m}, got i={i}")
    return FieldVector(GF2, [0] * (m - i) + [1] * i)


def _fingerprint(dist_counts: Mapping[int, int], nt_counts: Mapping[int, int]) -> dict[str, str]:
    def h(counts: Mapping[int, int]) -> str:
        blob = json.dumps(sorted((int(a), int(b)) for a, b in counts.items()))
        return hashlib.sha256(blob.encode()).hexdigest()

    return {"distribution": h(dist_counts), "nt": h(nt_counts)}


def fingerprint_code(code: LinearCode, weight: int | None = None,
                     threads: int = 1) -> dict[str, str]:
    """Dedup key: (weight-distribution hash, N_t-sequence hash).

    ``weight`` defaults to the minimum weight.
    """
    _, dist, _, _ = _scan_binary(code, want_dist=True, threads=threads)
    counts = {int(w): int(c) for w, c in enumerate(dist) if c}
    w = weight if weight is not None else min(v for v in counts if v > 0)
    masks = codeword_masks_of_weight(code, w, threads=threads)
    return _fingerprint(counts, nt_from_masks(masks, code.n))


@dataclass
class SearchRecord:
    """One persisted discovery; everything needed to replay it."""

    seed_id: str
    x: str
    y: str
    n: int
    k: int
    d: int
    self_dual: bool
    doubly_even: bool
    lcd: bool
    fingerprint: dict[str, str]
    collision: str | None = None
    created: str | None = None

    def payload(self) -> dict:
        """Deterministic content; excludes the creation timestamp."""
        return {
            "seed_id": self.seed_id,
            "x": self.x,
            "y": self.y,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "self_dual": self.self_dual,
            "doubly_even": self.doubly_even,
            "lcd": self.lcd,
            "fingerprint": dict(self.fingerprint),
            "collision": self.collision,
        }

    def to_json_line(self) -> str:
        doc = {"kind": "record", **self.payload()}
        if self.created:
            doc["created"] = self.created
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json_doc(cls, doc: Mapping) -> "SearchRecord":
        return cls(
            seed_id=doc["seed_id"], x=doc["x"], y=doc["y"],
            n=doc["n"], k=doc["k"], d=doc["d"],
            self_dual=doc["self_dual"], doubly_even=doc["doubly_even"],
            lcd=doc["lcd"], fingerprint=dict(doc["fingerprint"]),
            collision=doc.get("collision"), created=doc.get("created"),
        )


def write_records(path: str, records: Iterable[SearchRecord],
                  header: Mapping | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header is not None:
            fh.write(json.dumps({"kind": "header", **dict(header)}, sort_keys=True) + "\n")
        for rec in records:
            fh.write(rec.to_json_line() + "\n")


def read_records(path: str) -> tuple[dict | None, list[SearchRecord]]:
    header = None
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for i, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            doc = json.loads(line)
            kind = doc.get("kind")
            if kind == "header":
                header = {k: v for k, v in doc.items() if k != "kind"}
            elif kind == "record":
                records.append(SearchRecord.from_json_doc(doc))
            else:
                raise IntegrityError(f"{path}:{i}: unknown line kind {kind!r}")
    return header, records


# --- candidate streams -------------------------------------------------------

def _x_ok(x: FieldVector, y: FieldVector, rule: str) -> bool:
    if x.is_zero():
        return False
    if inner_product(x, y):
        return False
    if rule == "mod4":
        return x.weight % 4 == 0
    if rule == "even":
        return x.weight % 2 == 0
    raise ValueError(f"unknown rule {rule!r}")


def exhaustive_x(m: int, y: FieldVector, rule: str = "mod4") -> Iterator[FieldVector]:
    """All valid x in lexicographic order of the packed representation."""
    for v in range(1, 1 << m):
        x = FieldVector.from_bits(v, m)
        if _x_ok(x, y, rule):
            yield x


def sampled_x(m: int, y: FieldVector, count: int, rng_seed: int,
              rule: str = "mod4") -> list[FieldVector]:
    """``count`` distinct valid x drawn with the named, seeded PRNG."""
    rng = random.Random(rng_seed)
    seen: set[int] = set()
    out: list[FieldVector] = []
    attempts = 0
    limit = max(100_000, 10_000 * count)
    while len(out) < count:
        attempts += 1
        if attempts > limit:
            raise CapacityError(
                f"could not sample {count} valid x in {limit} attempts (m={m})"
            )
        v = rng.getrandbits(m)
        if v == 0 or v in seen:
            continue
        x = FieldVector.from_bits(v, m)
        if _x_ok(x, y, rule):
            seen.add(v)
            out.append(x)
    return out


def exhaustive_isotropic_pairs(m: int) -> Iterator[TransformPair]:
    """All isotropic (x, y) over GF(2)^m; tiny m only."""
    if m > 14:
        raise CapacityError(f"exhaustive pair enumeration supports m <= 14, got {m}")
    evens = [v for v in range(1, 1 << m) if v.bit_count() % 2 == 0]
    for xv in evens:
        for yv in evens:
            if (xv & yv).bit_count() % 2 == 0:
                yield TransformPair(FieldVector.from_bits(xv, m), FieldVector.from_bits(yv, m))


def sampled_isotropic_pairs(m: int, count: int, rng_seed: int) -> list[TransformPair]:
    """``count`` isotropic pairs drawn with the named, seeded PRNG."""
    rng = random.Random(rng_seed)
    out: list[TransformPair] = []
    seen: set[tuple[int, int]] = set()
    attempts = 0
    limit = max(100_000, 10_000 * count)
    while len(out) < count:
        attempts += 1
        if attempts > limit:
            raise CapacityError(
                f"could not sample {count} isotropic pairs in {limit} attempts (m={m})"
            )
        xv, yv = rng.getrandbits(m), rng.getrandbits(m)
        if not xv or not yv or (xv, yv) in seen:
            continue
        if xv.bit_count() % 2 or yv.bit_count() % 2 or (xv & yv).bit_count() % 2:
            continue
        seen.add((xv, yv))
        out.append(TransformPair(FieldVector.from_bits(xv, m), FieldVector.from_bits(yv, m)))
    return out


# --- drivers ------------------------------------------------------------------

@dataclass
class _DedupEntry:
    index: int
    code: LinearCode


def _emit(records: list[SearchRecord], dedup: dict, rec: SearchRecord,
          code: LinearCode, node_budget: int, threads: int) -> None:
    key = (rec.fingerprint["distribution"], rec.fingerprint["nt"])
    prior = dedup.get(key)
    if prior is None:
        dedup[key] = _DedupEntry(len(records), code)
        records.append(rec)
        return
    res = is_equivalent(prior.code, code, node_budget=node_budget, threads=threads)
    if res.verdict == "equivalent":
        return  # merged into the earlier record
    rec.collision = (
        f"fingerprint collision with record {prior.index} (equivalence: {res.verdict})"
    )
    records.append(rec)


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def sd_search(seed: LinearCode, y: FieldVector,
              x_candidates: Iterable[FieldVector], d_target: int,
              rule: str = "mod4", seed_id: str = "seed",
              node_budget: int = SEARCH_NODE_BUDGET, threads: int = 1,
              stamp: bool = False) -> list[SearchRecord]:
    """Transform a doubly even self-dual seed by (x, y) candidates and keep
    outputs with min weight >= d_target.

    rule="mod4" enforces the double-evenness hypothesis wt(x) = 0 (mod 4)
    and transforms in checked mode; rule="even" admits all even-weight x,
    transforms unchecked, and keeps only outputs passing post-hoc doubly
    even + self-dual verification.  Candidates failing the rule are skipped.
    """
    if not seed.field.binary:
        raise PredicateError("sd_search operates on binary seeds")
    if not is_self_dual(seed) or not is_doubly_even(seed):
        raise PredicateError("sd_search needs a doubly even self-dual seed")
    if y.weight % 4:
        raise PredicateError("sd_search needs wt(y) = 0 (mod 4)")
    form = standard_form(seed)
    if len(y) != form.a_block.cols:
        raise PredicateError(f"y must have length n-k = {form.a_block.cols}")
    records: list[SearchRecord] = []
    dedup: dict = {}
    for x in x_candidates:
        if not _x_ok(x, y, rule):
            continue
        pair = TransformPair(x, y)
        mode = "checked" if rule == "mod4" else "unchecked"
        out = transform_code(form, pair, mode=mode)
        if rule == "even" and not (is_doubly_even(out) and is_self_dual(out)):
            continue
        best, dist, _, aborted = _scan_binary(
            out, abort_below=d_target, want_dist=True, threads=threads)
        if aborted or best < d_target:
            continue
        if not (is_doubly_even(out) and is_self_dual(out)):
            raise PostconditionError("sd_search emitted a non doubly-even-self-dual code")
        counts = {int(wt): int(c) for wt, c in enumerate(dist) if c}
        d = min(wt for wt in counts if wt > 0)
        masks = codeword_masks_of_weight(out, d, threads=threads)
        rec = SearchRecord(
            seed_id=seed_id, x=x.to_string(), y=y.to_string(),
            n=out.n, k=out.k, d=d,
            self_dual=True, doubly_even=True, lcd=False,
            fingerprint=_fingerprint(counts, nt_from_masks(masks, out.n)),
            created=_timestamp() if stamp else None,
        )
        _emit(records, dedup, rec, out, node_budget, threads)
    return records


def lcd_improve(seed: LinearCode, pairs: Iterable[TransformPair], d_target: int,
                seed_id: str = "seed", node_budget: int = SEARCH_NODE_BUDGET,
                threads: int = 1, stamp: bool = False) -> list[SearchRecord]:
    """Transform an LCD seed by isotropic pairs; keep LCD outputs with
    min weight >= d_target.  Non-isotropic pairs are skipped."""
    if not seed.field.binary:
        raise PredicateError("lcd_improve operates on binary seeds")
    if not is_lcd(seed):
        raise PredicateError("lcd_improve needs an LCD seed")
    form = standard_form(seed)
    records: list[SearchRecord] = []
    dedup: dict = {}
    for pair in pairs:
        if not pair.isotropic:
            continue
        if pair.length != form.a_block.cols:
            raise PredicateError(f"pair length must be n-k = {form.a_block.cols}")
        out = transform_code(form, pair, mode="checked")
        if not is_lcd(out):
            raise PostconditionError("lcd_improve emitted a non-LCD code")
        best, dist, _, aborted = _scan_binary(
            out, abort_below=d_target, want_dist=True, threads=threads)
        if aborted or best < d_target:
            continue
        counts = {int(wt): int(c) for wt, c in enumerate(dist) if c}
        d = min(wt for wt in counts if wt > 0)
        masks = codeword_masks_of_weight(out, d, threads=threads)
        rec = SearchRecord(
            seed_id=seed_id, x=pair.x.to_string(), y=pair.y.to_string(),
            n=out.n, k=out.k, d=d,
            self_dual=is_self_dual(out), doubly_even=is_doubly_even(out), lcd=True,
            fingerprint=_fingerprint(counts, nt_from_masks(masks, out.n)),
            created=_timestamp() if stamp else None,
        )
        _emit(records, dedup, rec, out, node_budget, threads)
    return records


def replay(record: SearchRecord, seed_store: Mapping[str, LinearCode],
           threads: int = 1) -> LinearCode:
    """Reconstruct a record's code and verify parameters and fingerprint."""
    seed = seed_store.get(record.seed_id)
    if seed is None:
        raise IntegrityError(f"seed id {record.seed_id!r} not resolvable")
    form = standard_form(seed)
    m = form.a_block.cols
    if len(record.x) != m or len(record.y) != m:
        raise IntegrityError(
            f"record vectors have length {len(record.x)}/{len(record.y)}, "
            f"seed needs {m}"
        )
    x = FieldVector(seed.field, [int(c) for c in record.x])
    y = FieldVector(seed.field, [int(c) for c in record.y])
    pair = TransformPair(x, y)
    mode = "checked" if (pair.isotropic or pair.de_safe) else "unchecked"
    out = transform_code(form, pair, mode=mode)
    if (out.n, out.k) != (record.n, record.k):
        raise IntegrityError(
            f"replayed parameters [{out.n},{out.k}] != recorded [{record.n},{record.k}]"
        )
    d = min_weight(out, threads=threads)
    if d != record.d:
        raise IntegrityError(f"replayed d={d} != recorded d={record.d}")
    certs = (is_self_dual(out), is_doubly_even(out), is_lcd(out))
    if certs != (record.self_dual, record.doubly_even, record.lcd):
        raise IntegrityError(f"replayed predicates {certs} do not match record")
    fp = fingerprint_code(out, weight=d, threads=threads)
    if fp != record.fingerprint:
        raise IntegrityError("replayed fingerprint does not match record")
    return out
