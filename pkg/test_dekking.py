"""
Tests for the transduction construction
"""

import pytest

import library
from automaton import Dfao, equivalent, minimize, reverse, to_morphism
from dekking import (
    concat,
    explore,
    find_period_preperiod,
    identity_signature,
    iterated_transductions,
    letter_signature,
    signature_of,
    transduce_dfao,
    transduce_lsd,
    transduce_with_stats,
)
from errors import AlphabetMismatch, IncompleteAutomaton
from transducer import StateFunction, identity_transducer, state_function, transduce_word

IDENTITY = StateFunction((0, 1))
SWAP = StateFunction((1, 0))


def brute_force_orbit(m, T, depth):
    """orbit[n][q] = f_{λ(h^n(q))}, by expanding h^n(q) letter by letter"""
    orbit = []
    words = [[a] for a in m.letters]
    for _ in range(depth):
        orbit.append(tuple(state_function(T, [m.coding[c] for c in w]) for w in words))
        words = [m.apply(w) for w in words]
    return orbit


def check_orbit(m, T, depth=12):
    pr = find_period_preperiod(m, T)
    orbit = brute_force_orbit(m, T, depth)
    for i in range(pr.r, depth - pr.p):
        assert orbit[i + pr.p] == orbit[i]
    for n in range(min(pr.length, depth)):
        assert pr.functions[n] == orbit[n]
    return pr


def test_thue_morse_runsum_orbit():
    pr = check_orbit(library.MU, library.RUNSUM2)
    assert (pr.p, pr.r) == (1, 2)


def test_one_state_transducer_has_period_one():
    T = identity_transducer((0, 1))
    for m in (library.MU, library.PD_MORPHISM, library.DD):
        assert find_period_preperiod(m, T).p == 1


def test_period_doubling_orbit_matches_brute_force():
    check_orbit(library.PD_MORPHISM, library.RUNSUM2)
    check_orbit(library.DD, library.NEST, depth=8)


def test_orbit_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        find_period_preperiod(library.MU, library.RUNPROD1357)


def test_signature_examples():
    pr = find_period_preperiod(library.MU, library.RUNSUM2)
    assert signature_of(library.MU, library.RUNSUM2, pr, []) == identity_signature(pr, 2)
    # 1 and h(1) = 10 hold one 1 each, h^2(1) = 1001 holds two
    assert signature_of(library.MU, library.RUNSUM2, pr, [1]) == (SWAP, SWAP, IDENTITY)
    assert letter_signature(pr, 1) == (SWAP, SWAP, IDENTITY)


def test_signature_concatenation(rng):
    m, T = library.DD, library.NEST
    pr = find_period_preperiod(m, T)
    for _ in range(100):
        u = [rng.randrange(10) for _ in range(rng.randrange(8))]
        v = [rng.randrange(10) for _ in range(rng.randrange(8))]
        whole = signature_of(m, T, pr, u + v)
        assert whole == concat(signature_of(m, T, pr, u), signature_of(m, T, pr, v))
        # direct expansion of h^i(uv)
        word = u + v
        for i in range(pr.length):
            assert whole[i] == state_function(T, [m.coding[c] for c in word])
            word = m.apply(word)


def test_incremental_signatures_agree(random_pairs):
    """States record a position n; their signature is I of the first n letters"""
    for M, T in random_pairs[:60]:
        run = explore(M, T)
        m = run.morphism
        fixed = m.fixed_point_prefix(max(p for p in run.positions if p < 4096) + 1)
        for letter, sig, n in zip(run.letters, run.signatures, run.positions):
            if n >= 4096:
                continue
            assert letter == fixed[n]
            assert sig == signature_of(m, T, run.orbit, fixed[:n])


def test_tsum1():
    """Running sum of Thue-Morse has 8 states"""
    tsum1 = transduce_dfao(library.T, library.RUNSUM2)
    assert tsum1.num_states == 8
    assert equivalent(tsum1, reverse(library.TSUM1_REV))
    assert tsum1.outputs_prefix(4096) == [library.running_sum_tm(n) for n in range(4096)]


def test_tsum2_has_16_states():
    tsum2 = transduce_dfao(transduce_dfao(library.T, library.RUNSUM2), library.RUNSUM2)
    assert tsum2.num_states == 16


def test_period_doubling_runsum_is_shifted_thue_morse():
    result = transduce_dfao(library.PD, library.RUNSUM2)
    horizon = 2**14
    assert result.outputs_prefix(horizon) == [library.thue_morse(n + 1) for n in range(horizon)]


def test_nu_runsum():
    nu_runsum = transduce_dfao(library.NU_MOD2, library.RUNSUM2)
    assert nu_runsum.outputs_prefix(4096) == [library.nu2_factorial_mod2(n) for n in range(4096)]


def test_identity_transduction():
    for M in (library.T, library.RS, library.D):
        assert transduce_dfao(M, identity_transducer(M.output_alphabet)) == minimize(M)


def test_transduce_rejects_bad_input():
    with pytest.raises(IncompleteAutomaton):
        transduce_dfao(library.FTM, library.XOR)
    with pytest.raises(AlphabetMismatch):
        transduce_dfao(library.G8, library.RUNPROD1357)
    with pytest.raises(AlphabetMismatch):
        transduce_dfao(library.T, library.RUNPROD1357)


def test_random_pairs_against_word_oracle(random_pairs):
    for M, T in random_pairs[:40]:
        N = transduce_dfao(M, T)
        assert N.outputs_prefix(1024) == transduce_word(T, M.outputs_prefix(1024))


def test_stats_bounds(random_pairs):
    for M, T in random_pairs[:40]:
        result, stats = transduce_with_stats(M, T)
        assert stats.p <= stats.orbit_bound
        assert stats.r <= stats.orbit_bound
        assert stats.explored_states <= stats.state_bound
        assert stats.minimal_states == result.num_states <= stats.explored_states


def test_transduce_lsd():
    tsum2 = transduce_dfao(transduce_dfao(library.T, library.RUNSUM2), library.RUNSUM2)
    lsd = transduce_lsd(library.TSUM1_REV, library.RUNSUM2)
    assert lsd.numeration.order == "lsd"
    assert equivalent(lsd, reverse(tsum2))
    expected = library.iterated_runsum(library.thue_morse_prefix(2048), 2)
    assert lsd.outputs_prefix(2048) == expected


def test_transduce_lsd_identity():
    tm_rev = reverse(library.T)
    assert equivalent(transduce_lsd(tm_rev, identity_transducer((0, 1))), tm_rev)
    with pytest.raises(AlphabetMismatch):
        transduce_lsd(library.T, library.RUNSUM2)


def test_iterated_transductions():
    counts = [M.num_states for M in iterated_transductions(library.T, library.RUNSUM2, 4)]
    assert counts == [8, 16, 12, 32]


def test_morphism_of_transduced_dfao_is_prolongable():
    tsum1 = transduce_dfao(library.T, library.RUNSUM2)
    assert to_morphism(tsum1).is_prolongable()
    assert isinstance(tsum1, Dfao)
