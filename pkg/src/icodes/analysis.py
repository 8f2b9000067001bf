"""Certification of code properties against closed-form predictions.

Provides the predicted Lee weight distributions for the five defining-set
variants, a brute-force-vs-prediction comparator, and the individual
certificates: exhaustive minimality, the minimum/maximum weight-ratio
sufficient condition for minimality, direct self-orthogonality, the
divisible-by-4 sufficient condition, Griesmer sums with an optimality
verdict, the closed-form optimality predictor for T2 parameters, and the
replicated-simplex structure check for 1-weight codes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .construction import (
    Alphabet,
    CodeParams,
    CodeTable,
    DefiningSetSpec,
    Variant,
    binary_params,
    build_defining_set,
    check_work_budget,
    enumerate_code,
    gray_image,
    weight_enumerator,
)
from .errors import BudgetExceededError, EmptyDefiningSetError
from .geometry import gf2_basis

#: Everything cmd_analyze knows how to run.
ALL_ANALYSES = (
    "weights",
    "gray",
    "minimal",
    "self-orthogonal",
    "griesmer",
    "simplex",
    "verify",
)

#: Largest codeword count accepted by the exhaustive pairwise scans.
PAIRWISE_SCAN_LIMIT = 1 << 16

#: Above this size, self-orthogonality switches to a spanning basis
#: (exact by bilinearity, not an approximation).
DIRECT_ORTHOGONALITY_LIMIT = 1 << 10


@dataclass(frozen=True)
class PredictedDistribution:
    """Closed-form prediction for one variant and parameter choice.

    rows maps Lee weight to message frequency (frequencies sum to 4^m);
    rows with frequency zero are dropped and equal weights merged, which
    is what degenerate parameter choices collapse to.  empty means the
    defining set itself has no elements, so no code exists at all.
    """

    variant: Variant
    m: int
    size_m: int
    size_n: int
    length: int
    rows: dict[int, int]
    code_size: int
    kernel_size: int
    num_weights: int
    binary_n: int
    binary_k: int
    binary_d: int | None

    @property
    def empty(self) -> bool:
        return self.length == 0

    @property
    def zero_code(self) -> bool:
        return self.num_weights == 0


def predicted_distribution(
    variant: Variant, m: int, M: Iterable[int], N: Iterable[int]
) -> PredictedDistribution:
    """Tabulated Lee weight distribution and binary parameters.

    Every frequency is an exact integer expression in m, |M|, |N|; the
    binary [n, k, d] follows from the merged rows (k from the kernel row,
    d as the least nonzero predicted weight).
    """
    variant = Variant(variant)
    if variant is Variant.GENERIC:
        raise ValueError("no closed-form prediction for GENERIC defining sets")
    checked = DefiningSetSpec(variant=variant, m=m, M=frozenset(M), N=frozenset(N))
    a, b = len(checked.M), len(checked.N)
    full = 1 << m
    messages = 1 << (2 * m)

    if variant is Variant.T1:
        length = 1 << (a + b)
        raw = [
            (1 << (a + b), (1 << (2 * m - a)) * ((1 << a) - 1)),
            (0, 1 << (2 * m - a)),
        ]
    elif variant is Variant.T2:
        length = (full - (1 << a)) << b
        raw = [
            (1 << (m + b), full * ((1 << (m - a)) - 1)),
            (length, (1 << (2 * m - a)) * ((1 << a) - 1)),
            (0, full),
        ]
    elif variant is Variant.T3:
        length = (1 << a) * (full - (1 << b))
        raw = [
            (length, (1 << (2 * m - a)) * ((1 << a) - 1)),
            (0, 1 << (2 * m - a)),
        ]
    elif variant is Variant.T4:
        length = (full - (1 << a)) * (full - (1 << b))
        raw = [
            (full * (full - (1 << b)), full * ((1 << (m - a)) - 1)),
            (length, (1 << (2 * m - a)) * ((1 << a) - 1)),
            (0, full),
        ]
    elif variant is Variant.T5:
        length = (full * full) - (1 << (a + b))
        raw = [
            (full * full, full * ((1 << (m - a)) - 1)),
            (length, (1 << (2 * m - a)) * ((1 << a) - 1)),
            (0, full),
        ]
    else:  # pragma: no cover - exhaustive over the named variants
        raise AssertionError(f"unhandled variant {variant}")

    merged: Counter[int] = Counter()
    for weight, frequency in raw:
        if frequency:
            merged[weight] += frequency
    rows = {w: merged[w] for w in sorted(merged)}
    assert sum(rows.values()) == messages, "table frequencies must sum to 4^m"
    code_size = messages // rows[0]
    assert messages % rows[0] == 0
    nonzero = [w for w in rows if w]
    return PredictedDistribution(
        variant=variant,
        m=m,
        size_m=a,
        size_n=b,
        length=length,
        rows=rows,
        code_size=code_size,
        kernel_size=rows[0],
        num_weights=len(nonzero),
        binary_n=2 * length,
        binary_k=code_size.bit_length() - 1,
        binary_d=min(nonzero) if nonzero else None,
    )


@dataclass(frozen=True)
class PredictionMatch:
    """Outcome of comparing a brute-force profile with its prediction."""

    variant: Variant
    m: int
    M: tuple[int, ...]
    N: tuple[int, ...]
    matched: bool
    degenerate: bool
    diffs: tuple[str, ...]
    predicted_rows: dict[int, int] | None
    actual_profile: dict[int, int] | None


def verify_against_prediction(
    spec: DefiningSetSpec, *, work_budget: int | None = None,
    agreement_samples: int | None = None,
) -> PredictionMatch:
    """Enumerate the code of spec and compare with the closed forms.

    Parameter choices that predict an empty defining set must also fail
    construction (and vice versa); that agreement is reported as a
    degenerate match.
    """
    if spec.variant is Variant.GENERIC:
        raise ValueError("GENERIC defining sets have no closed-form prediction")
    pred = predicted_distribution(spec.variant, spec.m, spec.M, spec.N)
    ctx = dict(
        variant=spec.variant,
        m=spec.m,
        M=tuple(sorted(spec.M)),
        N=tuple(sorted(spec.N)),
    )
    try:
        check_work_budget(spec, work_budget)
        ds = build_defining_set(spec)
    except EmptyDefiningSetError:
        if pred.empty:
            return PredictionMatch(
                **ctx, matched=True, degenerate=True, diffs=(),
                predicted_rows=dict(pred.rows), actual_profile=None,
            )
        return PredictionMatch(
            **ctx, matched=False, degenerate=True,
            diffs=(f"construction is empty but prediction has length {pred.length}",),
            predicted_rows=dict(pred.rows), actual_profile=None,
        )
    if pred.empty:
        return PredictionMatch(
            **ctx, matched=False, degenerate=True,
            diffs=(f"prediction is empty but construction has length {len(ds)}",),
            predicted_rows=dict(pred.rows), actual_profile=None,
        )

    table = enumerate_code(
        ds, work_budget=work_budget, agreement_samples=agreement_samples
    )
    diffs = _profile_diffs(pred, len(ds), table)
    return PredictionMatch(
        **ctx, matched=not diffs, degenerate=False, diffs=tuple(diffs),
        predicted_rows=dict(pred.rows), actual_profile=dict(table.message_profile),
    )


def _profile_diffs(
    pred: PredictedDistribution, length: int, table: CodeTable
) -> list[str]:
    """Row-for-row comparison of an enumerated code with its prediction."""
    diffs: list[str] = []
    if length != pred.length:
        diffs.append(f"length {length} != predicted {pred.length}")
    if len(table.codewords) != pred.code_size:
        diffs.append(f"code size {len(table.codewords)} != predicted {pred.code_size}")
    if table.kernel_size != pred.kernel_size:
        diffs.append(f"kernel {table.kernel_size} != predicted {pred.kernel_size}")
    for w in sorted(set(table.message_profile) | set(pred.rows)):
        got = table.message_profile.get(w, 0)
        want = pred.rows.get(w, 0)
        if got != want:
            diffs.append(f"weight {w}: {got} messages, predicted {want}")
    return diffs


# ---------------------------------------------------------------------------
# individual certificates on binary code tables


@dataclass(frozen=True)
class OrthogonalityFinding:
    self_orthogonal: bool
    witness: tuple[int, int] | None
    method: str  # "direct-pairs" or "spanning-basis"


def is_self_orthogonal(table: CodeTable) -> OrthogonalityFinding:
    """Check that every pair of codewords has even overlap.

    Small codes are scanned pair by pair (including each word against
    itself); larger ones check a spanning basis, which is equivalent by
    bilinearity of the inner product.
    """
    _require_binary(table)
    words: Sequence[int] = table.codewords
    method = "direct-pairs"
    if len(words) > DIRECT_ORTHOGONALITY_LIMIT:
        words = gf2_basis(words)
        method = "spanning-basis"
    for i, u in enumerate(words):
        for v in words[i:]:
            if (u & v).bit_count() & 1:
                return OrthogonalityFinding(False, (u, v), method)
    return OrthogonalityFinding(True, None, method)


def weights_divisible_by_4(table: CodeTable) -> bool:
    """True iff every nonzero weight is a multiple of 4 (forces
    self-orthogonality)."""
    _require_binary(table)
    return all(w % 4 == 0 for w in table.weight_distribution if w)


@dataclass(frozen=True)
class MinimalityFinding:
    minimal: bool
    witness: tuple[int, int] | None  # (covered, covering) codeword pair


def is_minimal_exhaustive(table: CodeTable) -> MinimalityFinding:
    """Scan all ordered pairs of distinct nonzero codewords for a
    support containment; none may exist."""
    _require_binary(table)
    if len(table.codewords) > PAIRWISE_SCAN_LIMIT:
        raise BudgetExceededError(
            len(table.codewords) ** 2, PAIRWISE_SCAN_LIMIT**2, "minimality scan"
        )
    nonzero = [w for w in table.codewords if w]
    for u in nonzero:
        for v in nonzero:
            if u != v and u & v == u:
                return MinimalityFinding(False, (u, v))
    return MinimalityFinding(True, None)


@dataclass(frozen=True)
class AbFinding:
    holds: bool
    ratio: Fraction
    min_weight: int
    max_weight: int


def ab_condition(table: CodeTable) -> AbFinding:
    """Minimum/maximum nonzero weight ratio test: a ratio above 1/2
    suffices for minimality over F_2 (sufficient, not necessary)."""
    _require_binary(table)
    low = table.min_nonzero_weight()
    if low is None:
        raise ValueError("the zero code has no nonzero weights")
    high = table.max_weight()
    ratio = Fraction(low, high)
    return AbFinding(ratio > Fraction(1, 2), ratio, low, high)


class GriesmerStatus(str, Enum):
    GRIESMER_CODE = "griesmer-code"
    CERTIFIED_OPTIMAL = "certified-optimal"
    INCONCLUSIVE = "inconclusive"
    INFEASIBLE = "infeasible-parameters"


@dataclass(frozen=True)
class GriesmerFinding:
    n: int
    k: int
    d: int
    sum_at_d: int
    sum_at_d_plus_1: int
    status: GriesmerStatus

    @property
    def certified_optimal(self) -> bool:
        return self.status in (
            GriesmerStatus.GRIESMER_CODE,
            GriesmerStatus.CERTIFIED_OPTIMAL,
        )


def griesmer_sum(k: int, d: int) -> int:
    """Sum over i < k of ceil(d / 2^i)."""
    return sum((d + (1 << i) - 1) >> i for i in range(k))


def griesmer_check(n: int, k: int, d: int) -> GriesmerFinding:
    """Griesmer sums at d and d+1 with the optimality verdict.

    Meeting the bound with equality makes a Griesmer code; if d is
    admissible but d+1 is not, the code is certified distance optimal;
    if d+1 is also admissible the bound alone cannot decide.
    """
    if k < 1 or d < 1 or n < 1:
        raise ValueError(f"need n, k, d >= 1, got ({n}, {k}, {d})")
    at_d = griesmer_sum(k, d)
    at_d1 = griesmer_sum(k, d + 1)
    if at_d > n:
        status = GriesmerStatus.INFEASIBLE
    elif at_d == n:
        status = GriesmerStatus.GRIESMER_CODE
    elif at_d1 > n:
        status = GriesmerStatus.CERTIFIED_OPTIMAL
    else:
        status = GriesmerStatus.INCONCLUSIVE
    return GriesmerFinding(n, k, d, at_d, at_d1, status)


@dataclass(frozen=True)
class ThetaFinding:
    theta1: int | None
    theta2: int | None
    predicts_optimal: bool


def theta_conditions(m: int, size_m: int, size_n: int) -> ThetaFinding:
    """Closed-form distance-optimality predictor for T2 parameters.

    For 1 <= |M|+|N| <= m-1 the Griesmer slack is theta1 = 2^(|N|+1) - 1
    and the image is optimal iff theta1 < |M|+|N|+1; for m <= |M|+|N| <=
    2m-1 the slack is theta2 = 2^(|M|+|N|+1-m) * (2^(m-|M|) - 1) and the
    image is optimal iff theta2 < m.  Requires 1 <= |M| <= m-1: outside
    that band the T2 code is empty or collapses to one weight and the
    predicted [n, k, d] no longer applies.
    """
    if not 0 <= size_n <= m:
        raise ValueError(f"|N| = {size_n} outside 0..{m}")
    if not 1 <= size_m <= m - 1:
        raise ValueError(
            f"predictor needs 1 <= |M| <= m-1, got |M| = {size_m}, m = {m}"
        )
    total = size_m + size_n
    if total <= m - 1:
        theta1 = (1 << (size_n + 1)) - 1
        return ThetaFinding(theta1, None, 0 < theta1 < total + 1)
    theta2 = (1 << (total + 1 - m)) * ((1 << (m - size_m)) - 1)
    return ThetaFinding(None, theta2, 0 < theta2 < m)


@dataclass(frozen=True)
class SimplexFinding:
    kind: str  # "replicated-simplex", "structure-check-failed", "not-one-weight"
    replication: int | None
    zero_columns: int | None


def simplex_structure(table: CodeTable) -> SimplexFinding:
    """Decompose a 1-weight binary code as a replicated simplex code.

    Drops identically-zero coordinates, takes a basis as the generator
    matrix, and demands that the remaining columns form r copies of every
    nonzero vector of F_2^k, with the common weight equal to r * 2^(k-1).
    """
    _require_binary(table)
    nonzero_weights = [w for w in table.weight_distribution if w]
    if len(nonzero_weights) != 1:
        raise ValueError("not a 1-weight code")
    common = nonzero_weights[0]
    basis = gf2_basis(table.codewords)
    k = len(basis)
    if 1 << k != len(table.codewords):
        raise ValueError("codeword count is not a power of two (linearity violation)")
    columns: Counter[int] = Counter()
    zero_columns = 0
    for j in range(table.length):
        col = 0
        for i, row in enumerate(basis):
            col |= (row >> j & 1) << i
        if col:
            columns[col] += 1
        else:
            zero_columns += 1
    replication, remainder = divmod(table.length - zero_columns, (1 << k) - 1)
    ok = (
        remainder == 0
        and len(columns) == (1 << k) - 1
        and all(count == replication for count in columns.values())
        and common == replication << (k - 1)
    )
    if not ok:
        return SimplexFinding("structure-check-failed", None, zero_columns)
    return SimplexFinding("replicated-simplex", replication, zero_columns)


def _require_binary(table: CodeTable) -> None:
    if table.alphabet is not Alphabet.BINARY:
        raise ValueError("expected a binary-alphabet code table")


# ---------------------------------------------------------------------------
# full analysis driver


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyzer found for one defining-set spec.

    prediction_diffs lists every requested certificate whose outcome
    contradicts its closed-form expectation; an empty tuple means all
    expectations (where any exist) were met.
    """

    variant: Variant
    m: int
    M: tuple[int, ...]
    N: tuple[int, ...]
    analyses: tuple[str, ...]
    degenerate: bool = False
    degenerate_reason: str | None = None
    length: int | None = None
    code_size: int | None = None
    kernel_size: int | None = None
    lee_weight_distribution: dict[int, int] | None = None
    message_profile: dict[int, int] | None = None
    lee_enumerator: str | None = None
    params: CodeParams | None = None
    num_weights: int | None = None
    minimal: str | None = None
    minimal_witness: tuple[str, str] | None = None
    ab_ratio: str | None = None
    ab_holds: bool | None = None
    self_orthogonal: str | None = None
    self_orthogonal_witness: tuple[str, str] | None = None
    weights_div4: bool | None = None
    griesmer_sum_at_d: int | None = None
    griesmer_sum_at_d_plus_1: int | None = None
    optimality: str | None = None
    theta1: int | None = None
    theta2: int | None = None
    theta_predicts_optimal: bool | None = None
    simplex: SimplexFinding | None = None
    prediction_match: bool | None = None
    prediction_diffs: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "m": self.m,
            "M": list(self.M),
            "N": list(self.N),
            "analyses": list(self.analyses),
            "degenerate": self.degenerate,
            "degenerate_reason": self.degenerate_reason,
            "length": self.length,
            "code_size": self.code_size,
            "kernel_size": self.kernel_size,
            "lee_weight_distribution": _str_keys(self.lee_weight_distribution),
            "message_profile": _str_keys(self.message_profile),
            "lee_enumerator": self.lee_enumerator,
            "params": None if self.params is None else self.params.as_list(),
            "num_weights": self.num_weights,
            "minimal": self.minimal,
            "minimal_witness": _listify(self.minimal_witness),
            "ab_ratio": self.ab_ratio,
            "ab_holds": self.ab_holds,
            "self_orthogonal": self.self_orthogonal,
            "self_orthogonal_witness": _listify(self.self_orthogonal_witness),
            "weights_div4": self.weights_div4,
            "griesmer_sum_at_d": self.griesmer_sum_at_d,
            "griesmer_sum_at_d_plus_1": self.griesmer_sum_at_d_plus_1,
            "optimality": self.optimality,
            "theta1": self.theta1,
            "theta2": self.theta2,
            "theta_predicts_optimal": self.theta_predicts_optimal,
            "simplex": None
            if self.simplex is None
            else {
                "kind": self.simplex.kind,
                "replication": self.simplex.replication,
                "zero_columns": self.simplex.zero_columns,
            },
            "prediction_match": self.prediction_match,
            "prediction_diffs": list(self.prediction_diffs),
        }


def _str_keys(mapping: dict[int, int] | None) -> dict[str, int] | None:
    if mapping is None:
        return None
    return {str(k): mapping[k] for k in sorted(mapping)}


def _listify(pair: tuple[str, str] | None) -> list[str] | None:
    return None if pair is None else list(pair)


def _bitstring(word: int, length: int) -> str:
    return "".join("1" if word >> i & 1 else "0" for i in range(length))


def _normalize_analyses(analyses: Iterable[str] | None) -> tuple[str, ...]:
    if analyses is None:
        return ALL_ANALYSES
    chosen = []
    for name in analyses:
        if name not in ALL_ANALYSES:
            raise ValueError(f"unknown analysis {name!r}; valid: {ALL_ANALYSES}")
        if name not in chosen:
            chosen.append(name)
    if not chosen:
        raise ValueError("no analyses requested")
    # keep canonical order and pull in prerequisites of the certificates
    needs_gray = {"gray", "minimal", "self-orthogonal", "griesmer", "simplex"}
    if needs_gray & set(chosen):
        chosen.append("gray")
    chosen.append("weights")
    return tuple(name for name in ALL_ANALYSES if name in chosen)


def analyze(
    spec: DefiningSetSpec,
    *,
    analyses: Iterable[str] | None = None,
    work_budget: int | None = None,
    agreement_samples: int | None = None,
) -> AnalysisReport:
    """Construct, enumerate, and certify the code of one spec.

    Degenerate parameter choices (an empty defining set, or a zero code)
    produce a structured degenerate report instead of raising, so sweeps
    can walk every parameter combination.
    """
    requested = _normalize_analyses(analyses)
    has_prediction = spec.variant is not Variant.GENERIC
    pred = (
        predicted_distribution(spec.variant, spec.m, spec.M, spec.N)
        if has_prediction
        else None
    )
    ctx = dict(
        variant=spec.variant,
        m=spec.m,
        M=tuple(sorted(spec.M)),
        N=tuple(sorted(spec.N)),
        analyses=requested,
    )

    try:
        check_work_budget(spec, work_budget)
        ds = build_defining_set(spec)
    except EmptyDefiningSetError as exc:
        matched = pred.empty if pred is not None else None
        diffs: tuple[str, ...] = ()
        if matched is False:
            diffs = (f"defining set is empty but prediction has length {pred.length}",)
        return AnalysisReport(
            **ctx,
            degenerate=True,
            degenerate_reason=f"empty defining set: {exc}",
            prediction_match=matched,
            prediction_diffs=diffs,
        )

    table = enumerate_code(
        ds, work_budget=work_budget, agreement_samples=agreement_samples
    )
    diffs: list[str] = []
    prediction_match: bool | None = None
    if "verify" in requested and pred is not None:
        profile_diffs = _profile_diffs(pred, len(ds), table)
        prediction_match = not profile_diffs
        diffs.extend(profile_diffs)

    fields: dict = dict(
        length=len(ds),
        code_size=len(table.codewords),
        kernel_size=table.kernel_size,
        lee_weight_distribution=dict(table.weight_distribution),
        message_profile=dict(table.message_profile),
        lee_enumerator=weight_enumerator(table),
        num_weights=table.num_weights,
    )

    zero_code = table.num_weights == 0
    if zero_code:
        fields["degenerate"] = True
        fields["degenerate_reason"] = "zero code (k = 0, distance undefined)"

    image = params = None
    if "gray" in requested:
        image = gray_image(table)
        params = binary_params(image)
        fields["params"] = params

    if image is not None and "self-orthogonal" in requested:
        orth = is_self_orthogonal(image)
        div4 = weights_divisible_by_4(image)
        fields["self_orthogonal"] = "yes-direct" if orth.self_orthogonal else "no"
        fields["weights_div4"] = div4
        if orth.witness is not None:
            fields["self_orthogonal_witness"] = tuple(
                _bitstring(w, image.length) for w in orth.witness
            )
        if div4 and not orth.self_orthogonal:
            raise AssertionError(
                "weights divisible by 4 must force self-orthogonality"
            )

    if image is not None and not zero_code and "minimal" in requested:
        ab = ab_condition(image)
        fields["ab_ratio"] = str(ab.ratio)
        fields["ab_holds"] = ab.holds
        try:
            finding = is_minimal_exhaustive(image)
            fields["minimal"] = "yes-exhaustive" if finding.minimal else "no"
            if finding.witness is not None:
                fields["minimal_witness"] = tuple(
                    _bitstring(w, image.length) for w in finding.witness
                )
            if ab.holds and not finding.minimal:
                raise AssertionError(
                    "weight-ratio condition must force exhaustive minimality"
                )
        except BudgetExceededError:
            fields["minimal"] = "yes-AB" if ab.holds else "undecided-budget"

    if params is not None and not zero_code and "griesmer" in requested:
        finding = griesmer_check(params.n, params.k, params.d)
        fields["griesmer_sum_at_d"] = finding.sum_at_d
        fields["griesmer_sum_at_d_plus_1"] = finding.sum_at_d_plus_1
        fields["optimality"] = finding.status.value
        if (
            spec.variant is Variant.T2
            and pred is not None
            and 1 <= pred.size_m <= spec.m - 1
        ):
            theta = theta_conditions(spec.m, pred.size_m, pred.size_n)
            fields["theta1"] = theta.theta1
            fields["theta2"] = theta.theta2
            fields["theta_predicts_optimal"] = theta.predicts_optimal
            if theta.predicts_optimal != finding.certified_optimal:
                diffs.append(
                    "closed-form optimality predictor says "
                    f"{theta.predicts_optimal}, Griesmer status is "
                    f"{finding.status.value}"
                )

    if image is not None and not zero_code and "simplex" in requested:
        if table.num_weights == 1:
            finding = simplex_structure(image)
            fields["simplex"] = finding
            if finding.kind != "replicated-simplex":
                diffs.append("1-weight image failed the replicated-simplex check")
        else:
            fields["simplex"] = SimplexFinding("not-one-weight", None, None)

    diffs.extend(_expectation_diffs(spec, pred, fields, requested))
    return AnalysisReport(
        **ctx, **fields, prediction_match=prediction_match,
        prediction_diffs=tuple(diffs),
    )


def _expectation_diffs(
    spec: DefiningSetSpec,
    pred: PredictedDistribution | None,
    fields: dict,
    requested: tuple[str, ...],
) -> list[str]:
    """Compare computed findings with the closed-form expectations.

    Only sufficient conditions are gated: where the tables make no claim
    (e.g. optimality of T4/T5 images) the finding is reported ungated.
    """
    if pred is None:
        return []
    diffs: list[str] = []
    a, b = pred.size_m, pred.size_n
    m = spec.m

    if fields.get("message_profile") is not None and "weights" in requested:
        if fields["length"] != pred.length:
            diffs.append(f"length {fields['length']} != predicted {pred.length}")
        if fields["code_size"] != pred.code_size:
            diffs.append(
                f"code size {fields['code_size']} != predicted {pred.code_size}"
            )
        if fields["num_weights"] != pred.num_weights:
            diffs.append(
                f"{fields['num_weights']} nonzero weights, predicted {pred.num_weights}"
            )

    params = fields.get("params")
    if params is not None:
        expected = (pred.binary_n, pred.binary_k, pred.binary_d)
        if (params.n, params.k, params.d) != expected:
            diffs.append(f"binary params {params} != predicted {list(expected)}")

    if fields.get("self_orthogonal") is not None and a + b >= 2:
        if fields["self_orthogonal"] != "yes-direct":
            diffs.append("expected self-orthogonal (|M|+|N| >= 2)")

    minimal = fields.get("minimal")
    if minimal is not None:
        expect_minimal = (
            pred.num_weights == 1
            or (spec.variant in (Variant.T2, Variant.T4) and a <= m - 2)
            or (spec.variant is Variant.T5 and a + b <= 2 * m - 2)
        )
        if expect_minimal and minimal not in ("yes-exhaustive", "yes-AB"):
            diffs.append("expected a minimal code for these parameters")

    return diffs
