import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shadowcalc.compat import (
    IntSeq,
    check_compatible,
    chi,
    chi_table,
    is_compatible,
    is_compatible_relaxed,
    is_compatible_upper,
    is_f_vector,
    parse_seq,
)
from shadowcalc.verify import relaxed_slacks

seqs = st.lists(st.integers(min_value=0, max_value=50), max_size=6)


def test_intseq_canonical_and_padded():
    s = IntSeq([3, 3, 0, 0])
    assert s.entries == (3, 3)
    assert s[5] == 0
    assert s == (3, 3, 0)
    assert IntSeq() == IntSeq([0, 0])
    assert str(IntSeq()) == "0"


def test_intseq_partial_order():
    a, b = IntSeq([1, 2]), IntSeq([2, 1])
    assert not a <= b and not b <= a
    assert IntSeq([1]) <= IntSeq([1, 1])
    assert IntSeq([1]) < IntSeq([1, 1])


def test_intseq_arithmetic():
    assert IntSeq([4, 4]) - IntSeq([0, 1]) == IntSeq([4, 3])
    assert IntSeq([0, 1]) + IntSeq([1]) == IntSeq([1, 1])
    with pytest.raises(ValueError):
        IntSeq([1]) - IntSeq([2])
    with pytest.raises(ValueError):
        IntSeq([-1])


def test_parse_seq():
    assert parse_seq("3,3,0") == IntSeq([3, 3])
    assert parse_seq(" 1, 2 ") == IntSeq([1, 2])
    assert parse_seq("") == IntSeq()
    with pytest.raises(ValueError, match="'x'"):
        parse_seq("3,x")


def test_chi_examples():
    assert all(chi((), (), k) == 0 for k in range(-1, 4))
    assert chi((3, 3), (0, 1), 0) == 2
    assert chi((3, 3), (0, 1), -1) == 1
    assert chi((1,), (0,), -1) == 1


@given(seqs, seqs)
def test_chi_identity(f, beta):
    table = chi_table(f, beta)
    f, beta = IntSeq(f), IntSeq(beta)
    for k in range(0, max(len(f), len(beta)) + 2):
        assert f[k] - chi(f, beta, k - 1) == chi(f, beta, k) + beta[k]
        assert table.get(k - 1, 0) == chi(f, beta, k - 1)


@pytest.mark.parametrize(
    "f, expected",
    [((1,), True), ((3, 3, 1), True), ((2, 3), False), ((4, 6, 4, 1), True), ((5, 10, 10, 5, 1), True), ((4, 6, 5), False)],
)
def test_is_f_vector(f, expected):
    assert is_f_vector(f) is expected


@pytest.mark.parametrize(
    "f, beta, expected",
    [
        ((3, 3), (0, 1), True),
        ((1,), (0,), True),
        ((3, 3), (1, 1), False),
        ((2,), (1,), True),
        ((4, 4), (0, 1), True),
        ((), (), False),
    ],
)
def test_compat_examples(f, beta, expected):
    assert is_compatible(f, beta) is expected
    assert is_compatible_upper(f, beta) is expected


def test_relaxed_examples():
    assert is_compatible_relaxed((3, 3), (0, 1), ())
    assert is_compatible_relaxed((4, 4), (0, 1), (0, 1))
    assert is_compatible_relaxed((2,), (1,), ())
    with pytest.raises(ValueError):
        is_compatible_relaxed((3, 3), (0, 1), (0, 1))  # delta_1(3) = 0
    with pytest.raises(ValueError):
        is_compatible_relaxed((4, 4), (0, 1), (1,))


def test_report_names_first_violation():
    report = check_compatible((3, 3), (1, 1))
    assert not report.ok and report.reason == "chi(-1) = 0"
    report = check_compatible((3, 4), (0, 2))  # chi(-1) = 3 - 0 - (4 - 2) = 1
    assert not report.ok and report.k == 1
    # 2 = C(2,2) + C(1,1), so lower_shadow(2, 1) = C(2,1) + C(1,0) = 3 > chi(0) = 2
    assert report.lhs == 3 and report.rhs == 2


def _draw_pair(rng):
    f = [rng.randint(0, 50) for _ in range(rng.randint(1, 6))]
    beta = [rng.randint(0, 50) for _ in range(rng.randint(0, 6))]
    if rng.random() < 0.5 and f:
        # solve beta_0 from chi(-1) = 1 so a fair share of pairs is compatible
        size = max(len(f), len(beta))
        f = f + [0] * (size - len(f))
        beta = beta + [0] * (size - len(beta))
        beta[0] = 0
        b0 = sum((-1) ** j * (f[j] - beta[j]) for j in range(len(beta))) - 1
        if b0 >= 0:
            beta[0] = b0
    return IntSeq(f), IntSeq(beta)


def test_three_forms_agree_random():
    rng = random.Random(20240611)
    compatible = 0
    for _ in range(20_000):
        f, beta = _draw_pair(rng)
        verdict = is_compatible(f, beta)
        compatible += verdict
        assert is_compatible_upper(f, beta) == verdict
        for eps in relaxed_slacks(f):
            assert is_compatible_relaxed(f, beta, eps) == verdict
        if verdict:
            assert is_f_vector(f)
    assert compatible > 0


@given(seqs, seqs)
def test_three_forms_agree_property(f, beta):
    verdict = is_compatible(f, beta)
    assert is_compatible_upper(f, beta) == verdict
    for eps in relaxed_slacks(IntSeq(f)):
        assert is_compatible_relaxed(f, beta, eps) == verdict
