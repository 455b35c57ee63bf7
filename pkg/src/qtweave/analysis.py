"""Exact verification: weight spectra, Griesmer bound, gap prediction, projectivity.

The weight distribution is computed by enumerating all q^k messages of the
2t-dimensional message space.  The enumeration walks the span with numpy:
a suffix of the generator rows is expanded into an in-memory table of partial
codewords, and the remaining message prefixes are folded in one at a time.
Partitioning over message prefixes also gives the optional multi-process mode;
partial weight counts merge by plain addition.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .construction import GeneratorMatrix, QtCodeSpec, TWO_WEIGHT
from .errors import BudgetExceededError, ParameterError, VerificationError
from .fields import Field, field_create

DEFAULT_BUDGET = 1 << 24
_CHUNK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    k: int
    q: int
    counts: dict  # weight -> number of codewords, weight 0 included

    def nonzero_weights(self) -> tuple[int, ...]:
        return tuple(sorted(w for w, c in self.counts.items() if w > 0 and c > 0))

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class TwoWeightVerdict:
    ok: bool
    w1: int
    w2: int
    observed: tuple[int, ...]
    unexpected: tuple[int, ...]
    missing: tuple[int, ...]


@dataclass(frozen=True)
class GriesmerReport:
    n: int
    k: int
    d: int
    q: int
    griesmer_length: int
    gap_observed: int
    i: int
    r: int
    gap_predicted: int
    gap_match: bool
    length_optimal: bool


def _add_table(field: Field) -> np.ndarray:
    q = field.q
    a = np.arange(q)
    if field.e == 1:
        return ((a[:, None] + a[None, :]) % q).astype(np.int16)
    out = np.zeros((q, q), dtype=np.int16)
    x, y, shift = a[:, None], a[None, :], 1
    for _ in range(field.e):
        out += (((x % field.p) + (y % field.p)) % field.p).astype(np.int16) * shift
        x, y, shift = x // field.p, y // field.p, shift * field.p
    return out


def _scaled_rows(field: Field, rows) -> list[np.ndarray]:
    return [
        np.array([[field.mul(a, v) for v in row] for a in field.elements()], dtype=np.int16)
        for row in rows
    ]


def _count_slice(field: Field, rows, split: int, start: int, stop: int) -> np.ndarray:
    """Weight counts over messages whose prefix index lies in [start, stop)."""
    q, n = field.q, len(rows[0])
    tbl = _add_table(field)
    scaled = _scaled_rows(field, rows)
    span = np.zeros((1, n), dtype=np.int16)
    for s in scaled[split:]:
        span = tbl[span[:, None, :], s[None, :, :]].reshape(-1, n)
    counts = np.zeros(n + 1, dtype=np.int64)
    for idx in range(start, stop):
        offset = None
        rem = idx
        for r in range(split - 1, -1, -1):
            rem, digit = divmod(rem, q)
            if digit:
                v = scaled[r][digit]
                offset = v if offset is None else tbl[offset, v]
        block = span if offset is None else tbl[span, offset[None, :]]
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)
    return counts


def _count_slice_job(args):
    p, e, rows, split, start, stop = args
    return _count_slice(field_create(p, e), rows, split, start, stop)


def weight_distribution_of_rows(field: Field, rows, budget: int | None = None,
                                jobs: int = 1) -> WeightDistribution:
    """Exact weight counts of the code spanned by the given rows."""
    rows = [tuple(r) for r in rows]
    if not rows or not rows[0]:
        raise ParameterError("need at least one nonempty row")
    k, n, q = len(rows), len(rows[0]), field.q
    if any(len(r) != n for r in rows):
        raise ParameterError("rows have unequal lengths")
    total = q**k
    limit = DEFAULT_BUDGET if budget is None else budget
    if total > limit:
        raise BudgetExceededError(
            f"enumeration needs q^k = {total} messages, budget is {limit}",
            required=total,
            budget=limit,
        )
    split = k
    while split > 0 and q ** (k - split + 1) * n <= _CHUNK_ENTRIES:
        split -= 1
    if jobs > 1:
        while split < k and q**split < jobs:
            split += 1
    if jobs > 1 and q**split >= jobs:
        prefix_total = q**split
        bounds = [prefix_total * i // jobs for i in range(jobs + 1)]
        payload = [
            (field.p, field.e, rows, split, lo, hi)
            for lo, hi in zip(bounds, bounds[1:])
            if lo < hi
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = sum(pool.map(_count_slice_job, payload))
    else:
        counts = _count_slice(field, rows, split, 0, q**split)
    result = {int(w): int(c) for w, c in enumerate(counts) if c}
    if sum(result.values()) != total:
        raise AssertionError("enumeration lost codewords")
    return WeightDistribution(n=n, k=k, q=q, counts=result)


def weight_distribution(G: GeneratorMatrix, budget: int | None = None,
                        jobs: int = 1) -> WeightDistribution:
    return weight_distribution_of_rows(G.field, G.rows, budget=budget, jobs=jobs)


def min_distance(W: WeightDistribution) -> int:
    weights = W.nonzero_weights()
    if not weights:
        raise ParameterError("the trivial code has no minimum distance")
    return weights[0]


def verify_two_weight(W: WeightDistribution, code: QtCodeSpec) -> TwoWeightVerdict:
    """Check that the nonzero weights are exactly the two predicted values."""
    if code.variant != TWO_WEIGHT:
        raise ParameterError("two-weight verification applies to the two-weight variant only")
    unit = code.simplex.weight
    w1, w2 = (code.p - 1) * unit, code.p * unit
    observed = W.nonzero_weights()
    expected = {w1, w2}
    unexpected = tuple(w for w in observed if w not in expected)
    missing = tuple(sorted(expected - set(observed)))
    return TwoWeightVerdict(
        ok=not unexpected and not missing,
        w1=w1,
        w2=w2,
        observed=observed,
        unexpected=unexpected,
        missing=missing,
    )


def expected_counts(code: QtCodeSpec) -> tuple[int, int]:
    """Predicted codeword counts at the two weights: (count at w1, count at w2).

    This is a closed-form prediction used as a cross-check target; callers
    must compare it against an actual enumeration rather than trust it.
    """
    if code.variant != TWO_WEIGHT:
        raise ParameterError("count prediction applies to the two-weight variant only")
    qt = code.simplex.q**code.simplex.t
    return code.p * (qt - 1), (qt - code.p + 1) * (qt - 1)


def griesmer_length(k: int, d: int, q: int) -> int:
    """Smallest length allowed by the Griesmer bound for a [n, k, d]_q code."""
    if k < 1 or d < 1 or q < 2:
        raise ParameterError(f"need k >= 1, d >= 1, q >= 2, got ({k}, {d}, {q})")
    return sum((d + q**j - 1) // q**j for j in range(k))


def gap_fn(i: int, t: int, q: int) -> int:
    """Predicted distance of the family from the Griesmer bound, as a function of i."""
    if t <= 1:
        raise ParameterError(f"t must be > 1, got {t}")
    if not 1 <= i <= q ** (t - 1):
        raise ParameterError(f"i must be in 1..{q ** (t - 1)}, got {i}")
    return sum(-(-i // q ** (j - 1)) - 1 for j in range(1, t + 1))


def decompose_block_count(p: int, t: int, q: int) -> tuple[int, int]:
    """The unique (i, r) with r in 1..q and p = q^t - i*q + r + 1."""
    if not 2 <= p <= q**t + 1:
        raise ParameterError(f"p must be in 2..{q ** t + 1}, got {p}")
    s = q**t + 1 - p
    i = -(-(s + 1) // q)
    r = i * q - s
    return i, r


def griesmer_report(code: QtCodeSpec, W: WeightDistribution) -> GriesmerReport:
    """Compare the code's length with the Griesmer bound and the predicted gap."""
    t, q = code.simplex.t, code.simplex.q
    p_eff = code.p if code.variant == TWO_WEIGHT else code.p + 1
    d = min_distance(W)
    if d != (p_eff - 1) * code.simplex.weight:
        raise VerificationError(
            f"minimum distance {d} does not match (p-1)q^(t-1) = "
            f"{(p_eff - 1) * code.simplex.weight}; construction bug"
        )
    k = code.k
    gb = griesmer_length(k, d, q)
    gap_observed = code.n - gb
    i, r = decompose_block_count(p_eff, t, q)
    gap_predicted = gap_fn(i, t, q)
    return GriesmerReport(
        n=code.n,
        k=k,
        d=d,
        q=q,
        griesmer_length=gb,
        gap_observed=gap_observed,
        i=i,
        r=r,
        gap_predicted=gap_predicted,
        gap_match=gap_observed == gap_predicted,
        length_optimal=gap_observed == 0,
    )


def is_projective(G: GeneratorMatrix) -> bool:
    """True iff no column is zero and no two columns are scalar multiples."""
    f = G.field
    seen = set()
    for col in zip(*G.rows):
        pivot = next((c for c in col if c), None)
        if pivot is None:
            return False
        inv = f.inv(pivot)
        canon = tuple(f.mul(inv, c) for c in col)
        if canon in seen:
            return False
        seen.add(canon)
    return True


def mean_weight_identity_holds(W: WeightDistribution) -> bool:
    """Sum of all codeword weights equals n(q-1)q^(k-1); holds when no coordinate is identically zero."""
    lhs = sum(w * c for w, c in W.counts.items())
    return lhs == W.n * (W.q - 1) * W.q ** (W.k - 1)
