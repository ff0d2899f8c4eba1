"""
End-to-end reproductions: state counts, closed forms, the factorial
pipeline, Fibonacci and lsd transduction, overlap-free Dyck words.
"""

from math import factorial

import pytest

import library
from automaton import DEAD, apply_morphism, equivalent, reverse
from config import DEFAULT_CONFIG
from dekking import iterated_transductions, transduce_dfao, transduce_lsd, transduce_with_stats
from extension import transduce_extended, transduce_numeration
from fractal import render_fractal
from numeration import FIB_MSD, value
from transducer import transduce_word

HORIZON = DEFAULT_CONFIG["testing"]["oracle_horizon"]

A359228 = [8, 16, 12, 32, 24, 19, 28, 64, 48, 38, 36, 34, 29, 48, 52, 128, 96, 76]


@pytest.fixture(scope="module")
def running_sums():
    """Minimal DFAOs for t_1 ... t_18, the m-fold running sums of Thue-Morse"""
    return list(iterated_transductions(library.T, library.RUNSUM2, len(A359228)))


@pytest.mark.slow
def test_random_pairs_against_word_oracle(random_pairs):
    for M, T in random_pairs:
        result, stats = transduce_with_stats(M, T)
        expected = transduce_word(T, M.outputs_prefix(HORIZON))
        assert result.outputs_prefix(HORIZON) == expected
        assert stats.p <= stats.orbit_bound and stats.r <= stats.orbit_bound


@pytest.mark.slow
def test_running_sum_state_counts(running_sums):
    assert [M.num_states for M in running_sums] == A359228


@pytest.mark.slow
def test_power_of_two_running_sums_double(running_sums):
    for n in range(5):
        assert running_sums[2**n - 1].num_states == 2 ** (n + 3)


@pytest.mark.slow
def test_power_of_two_closed_form(running_sums):
    for n in range(5):
        prefix = running_sums[2**n - 1].outputs_prefix(2**14)
        assert prefix == [library.t_pow2_formula(n, k) for k in range(2**14)]


def test_binomial_form():
    t = library.thue_morse_prefix(256)
    for m in range(9):
        assert [library.t_binomial_value(m, k) for k in range(256)] == library.iterated_runsum(t, m)


@pytest.mark.slow
def test_morphic_form(running_sums):
    for n in range(4):
        transduced = running_sums[2**n - 1].outputs_prefix(HORIZON)
        assert library.morphic_running_sum_prefix(n, HORIZON) == transduced


def test_thue_morse_and_period_doubling_running_sums():
    tsum1 = transduce_dfao(library.T, library.RUNSUM2)
    prefix = "".join(map(str, tsum1.outputs_prefix(16)))
    assert prefix[:15] == "010011101110010"
    assert prefix == "0100111011100100"
    shifted = transduce_dfao(library.PD, library.RUNSUM2)
    assert shifted.outputs_prefix(2**14) == [library.thue_morse(n + 1) for n in range(2**14)]


class TestFactorialsAsSumsOfThreeSquares:
    N = 2**16

    @pytest.fixture(scope="class")
    def automata(self):
        return library.factorial_automata()

    def test_valuation_running_sum(self, automata):
        prefix = automata["NU_RUNSUM"].outputs_prefix(self.N)
        assert prefix == [library.nu2_factorial_mod2(n) for n in range(self.N)]

    def test_odd_part_running_product(self, automata):
        expected, product = [], 1
        for n in range(self.N):
            product = (product * library.g_mod8(n)) % 8
            expected.append(product)
        assert automata["G_RUNPROD"].outputs_prefix(self.N) == expected

    def test_state_counts(self, automata):
        assert automata["G_MOD8"].num_states == 12
        assert automata["S"].num_states == 32
        assert automata["NOT_S_REV"].num_states == 35

    def test_membership(self, automata):
        assert automata["S"].outputs_prefix(self.N) == library.factorial_in_S3_prefix(self.N)
        assert automata["S"].outputs_prefix(200) == [int(library.in_S3(factorial(n))) for n in range(200)]

    def test_reversed_complement(self, automata):
        s = automata["S"].outputs_prefix(1024)
        assert automata["NOT_S_REV"].outputs_prefix(1024) == [1 - x for x in s]


def test_fibonacci_thue_morse_xor():
    extended = transduce_extended(library.FTM, library.XOR)
    ftm = library.zeckendorf_digit_sum_parity
    for m in range(32):
        digits = tuple(int(c) for c in bin(m)[2:]) if m else ()
        if any(a == b == 1 for a, b in zip(digits, digits[1:])):
            assert extended.eval(m) is DEAD
        else:
            n = value(digits, FIB_MSD)
            assert extended.eval(m) == (ftm(n - 1) ^ ftm(n) if n else 0)

    ftmxor = transduce_numeration(library.FTM, library.XOR)
    assert "".join(map(str, ftmxor.outputs_prefix(20))) == "01001110110010100111"
    assert ftmxor.outputs_prefix(HORIZON) == [ftm(n - 1) ^ ftm(n) if n else 0 for n in range(HORIZON)]


def test_fibonacci_word_from_running_sum():
    assert library.NSLDF.outputs_prefix(17) == [1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 1]
    result = transduce_numeration(library.NSLDF, library.RUNSUM2)
    assert result.outputs_prefix(HORIZON) == library.fibonacci_word_prefix(HORIZON + 1)[1:]


def test_lsd_transduction_by_reversal():
    tsum1 = transduce_dfao(library.T, library.RUNSUM2)
    tsum2 = transduce_dfao(tsum1, library.RUNSUM2)
    assert equivalent(reverse(library.TSUM1_REV), tsum1)
    assert equivalent(transduce_lsd(library.TSUM1_REV, library.RUNSUM2), reverse(tsum2))


class TestOverlapFreeDyckWords:
    N = 2**14

    @pytest.fixture(scope="class")
    def d(self):
        return library.D.outputs_prefix(self.N)

    def test_prefix(self, d):
        assert d == library.d_prefix(self.N)
        for n in range(6):
            start = 2 * 4**n
            assert d[start : 2 * 4 ** (n + 1)] == library.dyck_y(n)

    def test_differences_with_mu_squared(self, d):
        mu2 = apply_morphism(library.D, {0: (0, 1, 1, 0), 1: (1, 0, 0, 1)}).outputs_prefix(self.N)
        assert mu2 == library.mu(library.mu(d))[: self.N]
        differ = [i for i in range(self.N) if d[i] != mu2[i]]
        assert differ == library.d_mu2_differences(self.N)

    def test_overlap_free(self):
        for n in range(6):
            assert library.is_overlap_free(library.dyck_y(n))

    def test_nesting(self, d):
        nested = transduce_dfao(library.D, library.NEST).outputs_prefix(self.N)
        assert nested == transduce_word(library.NEST, d)
        assert library.NEST_SINK not in nested
        zeros = [i for i, x in enumerate(nested) if x == 0]
        assert zeros == library.nesting_zero_positions(self.N)
        # a 3 between every two zeros from position 7 on
        for left, right in zip(zeros[1:], zeros[2:]):
            assert 3 in nested[left + 1 : right]


@pytest.mark.slow
def test_running_sum_fractal():
    bitmap = render_fractal(library.T, library.RUNSUM2, 512, 512)
    word = library.thue_morse_prefix(512)
    for k in range(512):
        assert bitmap[k].tolist() == word
        word = library.iterated_runsum(word, 1)
    assert "".join(map(str, bitmap[1, :15])) == "010011101110010"
