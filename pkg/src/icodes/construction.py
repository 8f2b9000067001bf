"""Defining sets over I^m and the codes they generate.

A defining set is an ordered list of elements a*t1 + b*t2 of I^m, built
from two subsets D1, D2 of F_2^m as all pairs (t1, t2).  Five named
variants draw D1 and D2 from a simplicial complex, its complement, or
(for T5) take the set complement of the T1 set inside I^m.  The code is
the image of the evaluation map v -> (v . d)_{d in D} over all messages
v in I^m; because b kills every product, a codeword depends only on the
a-part of the message, which this module exploits after checking that
raw ring arithmetic and the reduced form agree.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

from .errors import BudgetExceededError, DimensionMismatchError, EmptyDefiningSetError
from .geometry import (
    MAX_DIMENSION,
    BitVector,
    complex_from_generator,
    gf2_basis,
)
from .ring import B, ZERO, RingElement

#: Default cap on elementary parity operations for one code enumeration.
DEFAULT_WORK_BUDGET = 1 << 32


class Variant(str, Enum):
    """How the two halves of the defining set are chosen."""

    T1 = "T1"  # a*complex(M)            + b*complex(N)
    T2 = "T2"  # a*complement(M)         + b*complex(N)
    T3 = "T3"  # a*complex(M)            + b*complement(N)
    T4 = "T4"  # a*complement(M)         + b*complement(N)
    T5 = "T5"  # complement in I^m of the T1 set
    GENERIC = "GENERIC"  # caller-supplied D1, D2


class Alphabet(str, Enum):
    RING = "ring-I"
    BINARY = "binary"


@dataclass(frozen=True, slots=True)
class RingVector:
    """A vector a*alpha + b*beta in I^m, stored as two bit words.

    Also used for codewords, whose length may exceed the ambient-dimension
    cap of :class:`BitVector`; the words are plain ints for that reason.
    """

    m: int
    s_word: int = 0
    t_word: int = 0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"length must be positive, got {self.m}")
        for word in (self.s_word, self.t_word):
            if not 0 <= word < 1 << self.m:
                raise ValueError(f"word {word:#x} does not fit in {self.m} bits")

    @classmethod
    def from_elements(cls, elements: Sequence[RingElement]) -> RingVector:
        s_word = t_word = 0
        for i, x in enumerate(elements):
            s_word |= x.s << i
            t_word |= x.t << i
        return cls(len(elements), s_word, t_word)

    @classmethod
    def from_string(cls, text: str) -> RingVector:
        return cls.from_elements([RingElement.from_symbol(ch) for ch in text])

    def element(self, i: int) -> RingElement:
        """Coordinate i (1-based)."""
        if not 1 <= i <= self.m:
            raise IndexError(f"coordinate {i} outside [{self.m}]")
        return RingElement(self.s_word >> (i - 1) & 1, self.t_word >> (i - 1) & 1)

    def elements(self) -> tuple[RingElement, ...]:
        return tuple(self.element(i) for i in range(1, self.m + 1))

    def lee_weight(self) -> int:
        return self.t_word.bit_count() + (self.s_word ^ self.t_word).bit_count()

    def gray_bits(self) -> int:
        """Gray image as a 2m-bit word: t-part low, (s+t)-part high."""
        return self.t_word | (self.s_word ^ self.t_word) << self.m

    def dot(self, other: RingVector) -> RingElement:
        """Ring inner product, evaluated coordinate by coordinate in I."""
        if self.m != other.m:
            raise DimensionMismatchError(f"dimension mismatch: {self.m} vs {other.m}")
        acc = ZERO
        for i in range(1, self.m + 1):
            acc = acc + self.element(i) * other.element(i)
        return acc

    def scaled_by(self, r: RingElement) -> RingVector:
        """Coordinatewise ring action r*x (module structure)."""
        return RingVector.from_elements([r * x for x in self.elements()])

    def __add__(self, other: RingVector) -> RingVector:
        if self.m != other.m:
            raise DimensionMismatchError(f"dimension mismatch: {self.m} vs {other.m}")
        return RingVector(self.m, self.s_word ^ other.s_word, self.t_word ^ other.t_word)

    def __str__(self) -> str:
        return "".join(self.element(i).symbol for i in range(1, self.m + 1))


@dataclass(frozen=True)
class DefiningSetSpec:
    """Parameters selecting a defining set.

    M and N are subsets of [m] generating the complexes used by variants
    T1..T5; GENERIC instead takes explicit component lists d1, d2 (kept as
    multisets: duplicates are preserved).
    """

    variant: Variant
    m: int
    M: frozenset[int] = frozenset()
    N: frozenset[int] = frozenset()
    d1: tuple[BitVector, ...] | None = None
    d2: tuple[BitVector, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "M", frozenset(int(i) for i in self.M))
        object.__setattr__(self, "N", frozenset(int(i) for i in self.N))
        if not 1 <= self.m <= MAX_DIMENSION:
            raise ValueError(f"m must be in 1..{MAX_DIMENSION}, got {self.m}")
        for name, subset in (("M", self.M), ("N", self.N)):
            for i in subset:
                if not 1 <= i <= self.m:
                    raise IndexError(f"{name} contains {i}, outside [{self.m}]")
        if self.variant is Variant.GENERIC:
            if not self.d1 or not self.d2:
                raise EmptyDefiningSetError("GENERIC requires nonempty d1 and d2")
            object.__setattr__(self, "d1", tuple(self.d1))
            object.__setattr__(self, "d2", tuple(self.d2))
            for part in (self.d1, self.d2):
                for v in part:
                    if v.m != self.m:
                        raise DimensionMismatchError(
                            f"component dimension {v.m} does not match m={self.m}"
                        )
        elif self.d1 is not None or self.d2 is not None:
            raise ValueError("explicit d1/d2 are only valid for the GENERIC variant")


@dataclass(frozen=True)
class DefiningSet:
    """Ordered list of pairs (t1, t2), each standing for a*t1 + b*t2."""

    m: int
    pairs: tuple[tuple[BitVector, BitVector], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[BitVector, BitVector]]:
        return iter(self.pairs)

    def element(self, i: int) -> RingVector:
        """The i-th (0-based) defining element as a vector over I."""
        t1, t2 = self.pairs[i]
        return RingVector(self.m, t1.bits, t2.bits)

    def elements(self) -> tuple[RingVector, ...]:
        return tuple(self.element(i) for i in range(len(self.pairs)))


def _member_bits(m: int, indices: frozenset[int]) -> list[int]:
    return [v.bits for v in complex_from_generator(m, indices).members()]


def _complement_bits(m: int, indices: frozenset[int]) -> list[int]:
    inside = set(_member_bits(m, indices))
    return [bits for bits in range(1 << m) if bits not in inside]


def _product_pairs(m: int, part1: list[int], part2: list[int]) -> list[tuple[BitVector, BitVector]]:
    return [
        (BitVector(m, b1), BitVector(m, b2))
        for b1 in part1
        for b2 in part2
    ]


def defining_set_length(spec: DefiningSetSpec) -> int:
    """Closed-form length of the defining set, without materializing it.

    Raises EmptyDefiningSetError for parameter choices whose set has no
    elements, so callers can budget (or reject) before any construction.
    """
    if spec.variant is Variant.GENERIC:
        assert spec.d1 is not None and spec.d2 is not None
        return len(spec.d1) * len(spec.d2)
    m, full = spec.m, 1 << spec.m
    size_m, size_n = len(spec.M), len(spec.N)
    if spec.variant is Variant.T1:
        return 1 << (size_m + size_n)
    if spec.variant is Variant.T2:
        if size_m == m:
            raise EmptyDefiningSetError("complement of the full complex is empty (|M| = m)")
        return (full - (1 << size_m)) << size_n
    if spec.variant is Variant.T3:
        if size_n == m:
            raise EmptyDefiningSetError("complement of the full complex is empty (|N| = m)")
        return (1 << size_m) * (full - (1 << size_n))
    if spec.variant is Variant.T4:
        if size_m == m or size_n == m:
            raise EmptyDefiningSetError("complement of the full complex is empty")
        return (full - (1 << size_m)) * (full - (1 << size_n))
    if spec.variant is Variant.T5:
        if size_m == m and size_n == m:
            raise EmptyDefiningSetError("T1 set is all of I^m, its complement is empty")
        return (full * full) - (1 << (size_m + size_n))
    raise ValueError(f"unhandled variant {spec.variant}")  # pragma: no cover


def check_work_budget(spec: DefiningSetSpec, work_budget: int | None) -> int:
    """Estimate enumeration work for spec and enforce the budget.

    Returns the closed-form defining-set length.  The estimate is the
    2^m alpha walk times the length, the same formula enumerate_code
    enforces, checked here before any pair list is materialized.
    """
    length = defining_set_length(spec)
    budget = DEFAULT_WORK_BUDGET if work_budget is None else work_budget
    work = (1 << spec.m) * max(length, 1)
    if work > budget:
        raise BudgetExceededError(work, budget, "code enumeration")
    return length


def build_defining_set(spec: DefiningSetSpec) -> DefiningSet:
    """Materialize the ordered defining set described by spec.

    Pairs are listed lexicographically, t1 major and t2 minor, with each
    component in increasing integer order.  T5 lists its two disjoint
    blocks in turn (a-part outside the M-complex with free b-part, then
    a-part inside with b-part outside the N-complex), each block in the
    same lexicographic order.
    """
    m = spec.m
    expected = defining_set_length(spec)
    if spec.variant is Variant.GENERIC:
        assert spec.d1 is not None and spec.d2 is not None
        pairs = sorted(
            ((t1, t2) for t1 in spec.d1 for t2 in spec.d2),
            key=lambda p: (p[0].bits, p[1].bits),
        )
    elif spec.variant is Variant.T1:
        pairs = _product_pairs(m, _member_bits(m, spec.M), _member_bits(m, spec.N))
    elif spec.variant is Variant.T2:
        pairs = _product_pairs(m, _complement_bits(m, spec.M), _member_bits(m, spec.N))
    elif spec.variant is Variant.T3:
        pairs = _product_pairs(m, _member_bits(m, spec.M), _complement_bits(m, spec.N))
    elif spec.variant is Variant.T4:
        pairs = _product_pairs(m, _complement_bits(m, spec.M), _complement_bits(m, spec.N))
    else:
        block_a = _product_pairs(m, _complement_bits(m, spec.M), list(range(1 << m)))
        block_b = _product_pairs(m, _member_bits(m, spec.M), _complement_bits(m, spec.N))
        pairs = block_a + block_b

    if len(pairs) != expected:
        raise AssertionError(
            f"defining-set length {len(pairs)} disagrees with closed form {expected}"
        )
    return DefiningSet(m, tuple(pairs))


def encode(v: RingVector, ds: DefiningSet) -> RingVector:
    """Evaluate the codeword (v . d)_{d in D}.

    Computes every coordinate twice: once with plain ring arithmetic and
    once with the reduced form b*(alpha . t1); the two must agree.
    """
    if v.m != ds.m:
        raise DimensionMismatchError(f"message length {v.m} != ambient {ds.m}")
    n = len(ds)
    raw = [v.dot(ds.element(i)) for i in range(n)]
    word = 0
    for i, (t1, _t2) in enumerate(ds.pairs):
        if (v.s_word & t1.bits).bit_count() & 1:
            word |= 1 << i
    reduced = [B if word >> i & 1 else ZERO for i in range(n)]
    if raw != reduced:
        raise AssertionError(
            "ring-arithmetic evaluation disagrees with the reduced form b*(alpha.t1)"
        )
    return RingVector(n, 0, word)


@dataclass(frozen=True)
class CodeTable:
    """An enumerated code with its weight bookkeeping.

    codewords holds RingVector values for the ring alphabet and plain bit
    words (ints) for the binary alphabet.  weight_distribution counts
    distinct codewords per weight; message_profile counts messages, so
    its values are the distribution's times the kernel size.
    """

    alphabet: Alphabet
    length: int
    codewords: tuple
    kernel_size: int
    weight_distribution: dict[int, int] = field(compare=False)
    message_profile: dict[int, int] = field(compare=False)

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def num_weights(self) -> int:
        """Number of distinct nonzero weights."""
        return sum(1 for w in self.weight_distribution if w > 0)

    def min_nonzero_weight(self) -> int | None:
        nonzero = [w for w in self.weight_distribution if w > 0]
        return min(nonzero) if nonzero else None

    def max_weight(self) -> int:
        return max(self.weight_distribution)

    def validate(self) -> None:
        """Check the internal consistency laws; raises AssertionError."""
        wd, mp = self.weight_distribution, self.message_profile
        assert len(set(self.codewords)) == len(self.codewords), "duplicate codewords"
        assert wd.get(0) == 1, "zero codeword must be the unique weight-0 word"
        assert sum(wd.values()) == len(self.codewords)
        assert set(wd) == set(mp)
        for w, count in wd.items():
            assert mp[w] == count * self.kernel_size, f"kernel law fails at weight {w}"
        cap = 2 * self.length if self.alphabet is Alphabet.RING else self.length
        assert all(0 <= w <= cap for w in wd), "weight outside the possible range"
        if self.alphabet is Alphabet.RING:
            assert any(cw.s_word == 0 and cw.t_word == 0 for cw in self.codewords)
        else:
            assert 0 in self.codewords


def _sample_messages(m: int, count: int, seed: int) -> list[RingVector]:
    """Deterministic spot-check messages: structured corners plus randoms."""
    full = (1 << m) - 1
    picks = {(0, 0), (full, 0), (0, full), (full, full)}
    rng = random.Random(seed)
    while len(picks) < min(count + 4, 1 << (2 * m)):
        picks.add((rng.randrange(1 << m), rng.randrange(1 << m)))
    return [RingVector(m, s, t) for s, t in sorted(picks)]


def enumerate_code(
    ds: DefiningSet,
    *,
    work_budget: int | None = None,
    collapse_beta: bool = True,
    agreement_samples: int | None = None,
) -> CodeTable:
    """Enumerate the code of a defining set with its Lee weight data.

    The default path walks the 2^m a-parts only, crediting each with the
    2^m free b-parts, after spot-checking (via :func:`encode`) that raw
    ring evaluation matches the reduced form on sampled messages; m <= 2
    is spot-checked exhaustively.  collapse_beta=False forces the plain
    4^m message walk with full ring arithmetic everywhere.
    """
    m, n = ds.m, len(ds)
    budget = DEFAULT_WORK_BUDGET if work_budget is None else work_budget
    messages = 1 << (2 * m)
    work = ((1 << m) if collapse_beta else messages) * max(n, 1)
    if work > budget:
        raise BudgetExceededError(work, budget, "code enumeration")

    codeword_hits: Counter[int] = Counter()
    profile: Counter[int] = Counter()

    if not collapse_beta:
        for s_word in range(1 << m):
            for t_word in range(1 << m):
                cw = encode(RingVector(m, s_word, t_word), ds)
                codeword_hits[cw.t_word] += 1
                profile[cw.lee_weight()] += 1
        per_codeword = set(codeword_hits.values())
        assert len(per_codeword) == 1, "codeword preimage counts must be uniform"
        kernel_size = per_codeword.pop()
    else:
        if agreement_samples is None:
            agreement_samples = 16 if m <= 2 else 8
        groups: dict[int, int] = {}
        for i, (t1, _t2) in enumerate(ds.pairs):
            groups[t1.bits] = groups.get(t1.bits, 0) | 1 << i
        group_items = list(groups.items())

        if agreement_samples > 0:
            for v in _sample_messages(m, agreement_samples, seed=m * 0x9E3779B1 ^ n):
                cw = encode(v, ds)  # raises if raw and reduced forms disagree
                word = 0
                for t1_bits, mask in group_items:
                    if (v.s_word & t1_bits).bit_count() & 1:
                        word |= mask
                assert word == cw.t_word, "grouped fast path disagrees with encode"

        beta_mult = 1 << m
        for alpha in range(1 << m):
            word = 0
            for t1_bits, mask in group_items:
                if (alpha & t1_bits).bit_count() & 1:
                    word |= mask
            codeword_hits[word] += 1
            profile[2 * word.bit_count()] += beta_mult
        per_codeword = set(codeword_hits.values())
        assert len(per_codeword) == 1, "codeword preimage counts must be uniform"
        kernel_size = per_codeword.pop() * beta_mult

    assert sum(profile.values()) == messages
    codewords = tuple(RingVector(n, 0, word) for word in sorted(codeword_hits))
    distribution = dict(Counter(2 * word.bit_count() for word in codeword_hits))
    table = CodeTable(
        alphabet=Alphabet.RING,
        length=n,
        codewords=codewords,
        kernel_size=kernel_size,
        weight_distribution=distribution,
        message_profile={w: profile[w] for w in sorted(profile)},
    )
    table.validate()
    return table


def gray_image(table: CodeTable) -> CodeTable:
    """Binary image of a ring code under the componentwise Gray map.

    Each length-n ring word maps to 2n bits in block layout (t-part, then
    (s+t)-part).  Hamming weight must equal the Lee weight coordinate for
    coordinate (the map is an isometry), and the image must be closed
    under addition; either failure aborts, since it signals a bug.
    """
    if table.alphabet is not Alphabet.RING:
        raise ValueError("gray_image expects a ring-alphabet code")
    n = table.length
    words = []
    for cw in table.codewords:
        bits = cw.gray_bits()
        if bits.bit_count() != cw.lee_weight():
            raise RuntimeError("Gray image weight differs from Lee weight")
        words.append(bits)
    if len(set(words)) != len(words):
        raise RuntimeError("Gray map collapsed distinct codewords")
    rank = len(gf2_basis(words))
    if 1 << rank != len(words):
        raise RuntimeError("Gray image is not closed under addition")
    distribution = dict(Counter(w.bit_count() for w in words))
    image = CodeTable(
        alphabet=Alphabet.BINARY,
        length=2 * n,
        codewords=tuple(sorted(words)),
        kernel_size=table.kernel_size,
        weight_distribution=distribution,
        message_profile=dict(table.message_profile),
    )
    image.validate()
    return image


@dataclass(frozen=True)
class CodeParams:
    """Binary code parameters [n, k, d]; d is None for the zero code."""

    n: int
    k: int
    d: int | None

    @property
    def degenerate(self) -> bool:
        return self.k == 0 or self.d is None

    def as_list(self) -> list:
        return [self.n, self.k, self.d]

    def __str__(self) -> str:
        d = "-" if self.d is None else str(self.d)
        return f"[{self.n}, {self.k}, {d}]"


def binary_params(table: CodeTable) -> CodeParams:
    """[n, k, d] of a binary table; k must come out an integer."""
    if table.alphabet is not Alphabet.BINARY:
        raise ValueError("binary_params expects a binary-alphabet code")
    count = len(table.codewords)
    k = count.bit_length() - 1
    if 1 << k != count:
        raise ValueError(
            f"codeword count {count} is not a power of two (linearity violation)"
        )
    return CodeParams(table.length, k, table.min_nonzero_weight())


def weight_enumerator(table: CodeTable) -> str:
    """Homogeneous two-variable weight enumerator as text.

    Terms appear in increasing codeword weight; the X-exponent base is
    twice the length for ring codes (Lee weights run up to 2n) and the
    length itself for binary codes.
    """
    top = 2 * table.length if table.alphabet is Alphabet.RING else table.length
    parts = []
    for w in sorted(table.weight_distribution):
        count = table.weight_distribution[w]
        term = "" if count == 1 else str(count)
        if top - w > 0:
            term += f"X^{top - w}"
        if w > 0:
            term += f"Y^{w}"
        parts.append(term or "1")
    return " + ".join(parts)
