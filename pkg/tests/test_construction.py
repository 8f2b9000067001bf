"""Defining sets, encoding, code enumeration, and Gray images.

The key dual-route check lives in `table_driven_code`: a brute-force
encoder written directly from the 4x4 symbol tables, sharing nothing with
the library's arithmetic, against which small enumerations are compared.
"""

import itertools
import random

import pytest

from icodes import (
    Alphabet,
    BitVector,
    BudgetExceededError,
    CodeTable,
    DefiningSetSpec,
    DimensionMismatchError,
    EmptyDefiningSetError,
    RingVector,
    Variant,
    binary_params,
    build_defining_set,
    encode,
    enumerate_code,
    gray_image,
    weight_enumerator,
)

# Independent mini-ring: symbol tables only, no bit tricks.
ADD = {
    ("0", "0"): "0", ("0", "a"): "a", ("0", "b"): "b", ("0", "c"): "c",
    ("a", "0"): "a", ("a", "a"): "0", ("a", "b"): "c", ("a", "c"): "b",
    ("b", "0"): "b", ("b", "a"): "c", ("b", "b"): "0", ("b", "c"): "a",
    ("c", "0"): "c", ("c", "a"): "b", ("c", "b"): "a", ("c", "c"): "0",
}
MUL = {
    ("0", "0"): "0", ("0", "a"): "0", ("0", "b"): "0", ("0", "c"): "0",
    ("a", "0"): "0", ("a", "a"): "b", ("a", "b"): "0", ("a", "c"): "b",
    ("b", "0"): "0", ("b", "a"): "0", ("b", "b"): "0", ("b", "c"): "0",
    ("c", "0"): "0", ("c", "a"): "b", ("c", "b"): "0", ("c", "c"): "b",
}
LEE = {"0": 0, "a": 1, "b": 2, "c": 1}


def table_dot(x: str, y: str) -> str:
    acc = "0"
    for xi, yi in zip(x, y):
        acc = ADD[(acc, MUL[(xi, yi)])]
    return acc


def table_driven_code(ds):
    """Oracle: full 4^m message walk using the symbol tables alone."""
    m = ds.m
    d_strings = [str(ds.element(i)) for i in range(len(ds))]
    profile: dict[int, int] = {}
    codewords: dict[str, int] = {}
    for symbols in itertools.product("0abc", repeat=m):
        v = "".join(symbols)
        cw = "".join(table_dot(v, d) for d in d_strings)
        weight = sum(LEE[ch] for ch in cw)
        profile[weight] = profile.get(weight, 0) + 1
        codewords[cw] = codewords.get(cw, 0) + 1
    return profile, codewords


def spec(variant, m, M=(), N=()):
    return DefiningSetSpec(variant=variant, m=m, M=frozenset(M), N=frozenset(N))


# --- defining sets -------------------------------------------------------------


def test_t1_small_example_pairs_in_order():
    ds = build_defining_set(spec(Variant.T1, 2, {1}, {2}))
    rendered = [(str(t1), str(t2)) for t1, t2 in ds]
    assert rendered == [("00", "00"), ("00", "01"), ("10", "00"), ("10", "01")]
    assert len(ds) == 4


def test_lengths_match_closed_forms():
    for m in range(1, 5):
        for mm in range(1 << m):
            for nn in range(1 << m):
                M = frozenset(i + 1 for i in range(m) if mm >> i & 1)
                N = frozenset(i + 1 for i in range(m) if nn >> i & 1)
                a, b, full = len(M), len(N), 1 << m
                expected = {
                    Variant.T1: 1 << (a + b),
                    Variant.T2: (full - (1 << a)) << b,
                    Variant.T3: (1 << a) * (full - (1 << b)),
                    Variant.T4: (full - (1 << a)) * (full - (1 << b)),
                    Variant.T5: full * full - (1 << (a + b)),
                }
                for variant, length in expected.items():
                    if length == 0:
                        with pytest.raises(EmptyDefiningSetError):
                            build_defining_set(spec(variant, m, M, N))
                    else:
                        assert len(build_defining_set(spec(variant, m, M, N))) == length


def test_t4_and_t5_reference_lengths():
    assert len(build_defining_set(spec(Variant.T4, 5, {1, 2, 3}, {1, 2, 3, 4}))) == 384
    assert len(build_defining_set(spec(Variant.T5, 4, {1, 2, 3}, {1, 2, 3}))) == 192


def test_pairs_are_lexicographic_t1_major():
    ds = build_defining_set(spec(Variant.T2, 3, {1}, {2, 3}))
    keys = [(t1.bits, t2.bits) for t1, t2 in ds]
    assert keys == sorted(keys)


def test_t5_blocks_partition_the_complement():
    m = 3
    M, N = {1, 2}, {3}
    t1_pairs = {
        (t1.bits, t2.bits) for t1, t2 in build_defining_set(spec(Variant.T1, m, M, N))
    }
    t5_list = [
        (t1.bits, t2.bits) for t1, t2 in build_defining_set(spec(Variant.T5, m, M, N))
    ]
    assert len(set(t5_list)) == len(t5_list)  # blocks are disjoint
    everything = {(x, y) for x in range(1 << m) for y in range(1 << m)}
    assert set(t5_list) | t1_pairs == everything
    assert set(t5_list) & t1_pairs == set()
    # block A first: a-part outside the M-complex, with the full 2^m b-parts
    m_complex_bits = {0b000, 0b001, 0b010, 0b011}
    block_a_len = (8 - 4) * 8
    assert all(t1 not in m_complex_bits for t1, _ in t5_list[:block_a_len])
    assert all(t1 in m_complex_bits for t1, _ in t5_list[block_a_len:])


def test_empty_defining_sets_raise():
    with pytest.raises(EmptyDefiningSetError):
        build_defining_set(spec(Variant.T5, 3, {1, 2, 3}, {1, 2, 3}))
    with pytest.raises(EmptyDefiningSetError):
        build_defining_set(spec(Variant.T2, 3, {1, 2, 3}, {1}))
    with pytest.raises(EmptyDefiningSetError):
        build_defining_set(spec(Variant.T3, 2, {1}, {1, 2}))
    with pytest.raises(EmptyDefiningSetError):
        DefiningSetSpec(variant=Variant.GENERIC, m=2, d1=(), d2=())


def test_generic_preserves_multiset_duplicates():
    v = BitVector(2, 0b01)
    w = BitVector(2, 0b10)
    ds = build_defining_set(
        DefiningSetSpec(variant=Variant.GENERIC, m=2, d1=(v, v), d2=(w,))
    )
    assert len(ds) == 2
    assert [(t1.bits, t2.bits) for t1, t2 in ds] == [(1, 2), (1, 2)]


def test_spec_validation():
    with pytest.raises(IndexError):
        spec(Variant.T1, 3, {4}, set())
    with pytest.raises(ValueError):
        DefiningSetSpec(variant=Variant.T1, m=0)
    with pytest.raises(ValueError):
        DefiningSetSpec(variant=Variant.T1, m=2, d1=(BitVector(2, 1),))


# --- ring vectors and encoding -------------------------------------------------


def test_ring_vector_round_trip_and_weight():
    v = RingVector.from_string("0abc")
    assert str(v) == "0abc"
    assert v.lee_weight() == 0 + 1 + 2 + 1
    assert v.element(2).symbol == "a"
    assert RingVector.from_elements(v.elements()) == v


def test_ring_vector_gray_blocks():
    # "ab": t-part is 01 (bit 1), s+t part is 11 (bits 2 and 3)
    v = RingVector.from_string("ab")
    assert v.gray_bits() == 0b1110
    assert v.gray_bits().bit_count() == v.lee_weight() == 3


def test_encode_zero_message_gives_zero_codeword():
    ds = build_defining_set(spec(Variant.T1, 2, {1}, {2}))
    cw = encode(RingVector(2, 0, 0), ds)
    assert str(cw) == "0000"


def test_encode_worked_example():
    ds = build_defining_set(spec(Variant.T1, 2, {1}, {2}))
    cw = encode(RingVector.from_string("a0"), ds)
    assert str(cw) == "00bb"
    assert cw.lee_weight() == 4


def test_encode_b_multiples_lie_in_kernel():
    ds = build_defining_set(spec(Variant.T2, 3, {1}, {2}))
    for t_word in range(8):
        cw = encode(RingVector(3, 0, t_word), ds)
        assert cw.lee_weight() == 0


def test_encode_agrees_with_symbol_table_oracle():
    rng = random.Random(5)
    ds = build_defining_set(spec(Variant.T5, 3, {1, 3}, {2}))
    d_strings = [str(ds.element(i)) for i in range(len(ds))]
    for _ in range(20):
        v = RingVector(3, rng.randrange(8), rng.randrange(8))
        expected = "".join(table_dot(str(v), d) for d in d_strings)
        assert str(encode(v, ds)) == expected


def test_encode_dimension_mismatch():
    ds = build_defining_set(spec(Variant.T1, 2, {1}, {2}))
    with pytest.raises(DimensionMismatchError):
        encode(RingVector(3, 0, 0), ds)


# --- enumeration ---------------------------------------------------------------


def test_hand_computed_t1_m2_code():
    table = enumerate_code(build_defining_set(spec(Variant.T1, 2, {1}, {2})))
    assert table.weight_distribution == {0: 1, 4: 1}
    assert table.message_profile == {0: 8, 4: 8}
    assert table.kernel_size == 8
    assert {str(cw) for cw in table.codewords} == {"0000", "00bb"}


@pytest.mark.parametrize("variant", [Variant.T1, Variant.T2, Variant.T3, Variant.T4, Variant.T5])
def test_enumeration_matches_symbol_table_oracle_m2(variant):
    for mm in range(4):
        for nn in range(4):
            M = frozenset(i + 1 for i in range(2) if mm >> i & 1)
            N = frozenset(i + 1 for i in range(2) if nn >> i & 1)
            try:
                ds = build_defining_set(spec(variant, 2, M, N))
            except EmptyDefiningSetError:
                continue
            table = enumerate_code(ds)
            profile, codewords = table_driven_code(ds)
            assert table.message_profile == profile
            assert {str(cw) for cw in table.codewords} == set(codewords)
            assert table.kernel_size == codewords["0" * len(ds)]


def test_collapsed_and_plain_walks_agree():
    ds = build_defining_set(spec(Variant.T4, 2, {1}, {2}))
    fast = enumerate_code(ds)
    slow = enumerate_code(ds, collapse_beta=False)
    assert fast.weight_distribution == slow.weight_distribution
    assert fast.message_profile == slow.message_profile
    assert fast.kernel_size == slow.kernel_size
    assert fast.codewords == slow.codewords


def test_reference_distributions():
    table = enumerate_code(build_defining_set(spec(Variant.T1, 6, {2, 3}, {4, 5})))
    assert table.weight_distribution == {0: 1, 16: 3}
    table = enumerate_code(build_defining_set(spec(Variant.T2, 5, {1, 2, 3}, {4})))
    assert table.weight_distribution == {0: 1, 48: 28, 64: 3}
    table = enumerate_code(build_defining_set(spec(Variant.T5, 4, {2, 3, 4}, {1, 2, 4})))
    assert table.weight_distribution == {0: 1, 192: 14, 256: 1}


def test_code_sizes_follow_the_variant():
    for m, M, N in [(3, {1, 2}, {3}), (4, {2}, {1, 3})]:
        for variant in (Variant.T1, Variant.T3):
            table = enumerate_code(build_defining_set(spec(variant, m, M, N)))
            assert len(table.codewords) == 1 << len(M)
        for variant in (Variant.T2, Variant.T4, Variant.T5):
            table = enumerate_code(build_defining_set(spec(variant, m, M, N)))
            assert len(table.codewords) == 1 << m


def test_kernel_law_and_totals():
    table = enumerate_code(build_defining_set(spec(Variant.T2, 4, {1, 2}, {3})))
    assert sum(table.message_profile.values()) == 4**4
    assert len(table.codewords) * table.kernel_size == 4**4
    for w, count in table.weight_distribution.items():
        assert table.message_profile[w] == count * table.kernel_size


def test_code_is_a_module_over_the_ring():
    from icodes import ELEMENTS

    table = enumerate_code(build_defining_set(spec(Variant.T2, 3, {1}, {2})))
    codewords = set(table.codewords)
    for u in table.codewords:
        for v in table.codewords:
            assert u + v in codewords
        for r in ELEMENTS:
            assert u.scaled_by(r) in codewords


def test_budget_exceeded_reports_required_work():
    ds = build_defining_set(spec(Variant.T1, 4, {1, 2}, {3, 4}))
    with pytest.raises(BudgetExceededError) as err:
        enumerate_code(ds, work_budget=10)
    assert err.value.required == (1 << 4) * len(ds)
    assert err.value.budget == 10


# --- Gray images ---------------------------------------------------------------


def test_gray_image_of_worked_example():
    table = enumerate_code(build_defining_set(spec(Variant.T1, 6, {2, 3}, {4, 5})))
    image = gray_image(table)
    assert binary_params(image).as_list() == [32, 2, 16]
    assert image.weight_distribution == {0: 1, 16: 3}


def test_gray_zero_and_all_b_codewords():
    zero = RingVector(4, 0, 0)
    assert zero.gray_bits() == 0
    all_b = RingVector(4, 0, 0b1111)
    assert all_b.gray_bits() == 0b11111111


def test_gray_isometry_exhaustive_small():
    for m in range(1, 4):
        for s in range(1 << m):
            for t in range(1 << m):
                v = RingVector(m, s, t)
                assert v.gray_bits().bit_count() == v.lee_weight()


def test_gray_distance_form_random_pairs():
    rng = random.Random(3)
    for _ in range(500):
        m = rng.randint(1, 10)
        x = RingVector(m, rng.randrange(1 << m), rng.randrange(1 << m))
        y = RingVector(m, rng.randrange(1 << m), rng.randrange(1 << m))
        diff = x + y  # additive group has exponent 2, so x - y = x + y
        assert (x.gray_bits() ^ y.gray_bits()).bit_count() == diff.lee_weight()


def test_gray_image_closure_check_catches_non_linear_input():
    # {0, a, b} is not additively closed, so its image cannot be linear.
    words = (RingVector(1, 0, 0), RingVector(1, 1, 0), RingVector(1, 0, 1))
    bogus = CodeTable(
        alphabet=Alphabet.RING,
        length=1,
        codewords=words,
        kernel_size=1,
        weight_distribution={0: 1, 1: 1, 2: 1},
        message_profile={0: 1, 1: 1, 2: 1},
    )
    with pytest.raises(RuntimeError):
        gray_image(bogus)


def test_binary_params_reference_values():
    t2 = enumerate_code(build_defining_set(spec(Variant.T2, 5, {1, 2, 3}, {4})))
    assert binary_params(gray_image(t2)).as_list() == [96, 5, 48]
    t3 = enumerate_code(build_defining_set(spec(Variant.T3, 3, {1, 2, 3}, {1, 2})))
    assert binary_params(gray_image(t3)).as_list() == [64, 3, 32]


def test_binary_params_zero_code_degenerate():
    table = enumerate_code(build_defining_set(spec(Variant.T1, 3, set(), set())))
    params = binary_params(gray_image(table))
    assert params.n == 2 and params.k == 0 and params.d is None
    assert params.degenerate


def test_binary_params_rejects_non_power_of_two():
    bogus = CodeTable(
        alphabet=Alphabet.BINARY,
        length=3,
        codewords=(0, 0b101, 0b011),
        kernel_size=1,
        weight_distribution={0: 1, 2: 2},
        message_profile={0: 1, 2: 2},
    )
    with pytest.raises(ValueError):
        binary_params(bogus)


# --- enumerator rendering -------------------------------------------------------


def test_weight_enumerator_strings():
    t1 = enumerate_code(build_defining_set(spec(Variant.T1, 6, {2, 3}, {4, 5})))
    assert weight_enumerator(t1) == "X^32 + 3X^16Y^16"
    t5 = enumerate_code(build_defining_set(spec(Variant.T5, 4, {2, 3, 4}, {1, 2, 4})))
    assert weight_enumerator(t5) == "X^384 + 14X^192Y^192 + X^128Y^256"
    assert weight_enumerator(gray_image(t1)) == "X^32 + 3X^16Y^16"
