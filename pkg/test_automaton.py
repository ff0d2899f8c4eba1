"""
Tests for the DFAO model and the automata algebra
"""

import pytest

import library
from automaton import (
    DEAD,
    Dfao,
    UniformMorphism,
    apply_morphism,
    combine,
    count_states,
    equivalent,
    from_morphism,
    map_outputs,
    minimize,
    minimize_partial,
    normalize_leading_zeros,
    prefix,
    reversal_maps,
    reverse,
    symbol_key,
    to_morphism,
)
from conftest import make_random_dfao
from dekking import transduce_dfao
from errors import AlphabetMismatch, IncompleteAutomaton, NotProlongable, UndefinedTransition
from numeration import BASE2_LSD, BASE2_MSD, FIB_MSD, represent

HORIZON = 2**14


def eval_lsd(M, n):
    return M.output_on(represent(n, M.numeration).digits)


def test_eval_thue_morse():
    """Test evaluation against the Thue-Morse prefix"""
    T = library.T
    assert T.eval(3) == 0
    assert "".join(map(str, T.outputs_prefix(16))) == "0110100110010110"
    assert T.eval(0) == T.outputs[T.initial]


def test_eval_fibonacci():
    assert library.FTM.eval(4) == 0
    with pytest.raises(UndefinedTransition):
        library.FTM.output_on((1, 1))


def test_outputs_prefix_matches_eval():
    for M in (library.T, library.RS, library.D, library.G8, library.FTM):
        assert M.outputs_prefix(300) == [M.eval(n) for n in range(300)]


@pytest.mark.parametrize("name", ["mu", "pd", "dd", "mu2"])
def test_from_morphism_agrees_with_fixed_point(name):
    """eval(from_morphism(m), n) == prefix(m, n+1)[n]"""
    m = library.get(name).obj
    M = from_morphism(m)
    assert M.outputs_prefix(HORIZON) == prefix(m, HORIZON)


def test_prefix_examples():
    assert "".join(map(str, prefix(library.MU, 16))) == "0110100110010110"
    assert "".join(map(str, prefix(library.PD_MORPHISM, 8))) == "10111010"
    assert prefix(library.MU, 0) == []


def test_from_morphism_examples():
    assert from_morphism(library.MU) == library.T
    assert from_morphism(library.PD_MORPHISM) == library.PD
    assert from_morphism(library.DD).num_states == 10
    constant = from_morphism(UniformMorphism(((0, 0),), (0,), 0))
    assert constant.outputs_prefix(10) == [0] * 10


def test_from_morphism_not_prolongable():
    with pytest.raises(NotProlongable):
        from_morphism(UniformMorphism(((1, 0), (0, 1)), (0, 1), 0))


def test_to_morphism_round_trip():
    tsum1 = transduce_dfao(library.T, library.RUNSUM2)
    for M in (library.T, library.RS, library.D, library.S3, tsum1):
        again = from_morphism(to_morphism(M))
        assert again.transitions == M.transitions
        assert again.outputs == M.outputs


def test_to_morphism_normalizes_leading_zeros():
    g_mod8 = reverse(library.G8)
    assert g_mod8.num_states == 12
    m = to_morphism(g_mod8)
    assert m.k == 2
    assert m.is_prolongable()
    assert prefix(m, 500) == g_mod8.outputs_prefix(500)


def test_to_morphism_rejects_partial():
    with pytest.raises(IncompleteAutomaton):
        to_morphism(library.FTM)


def test_normalize_leading_zeros():
    M = Dfao(((1, 1), (0, 1)), (0, 1), BASE2_MSD)
    N = normalize_leading_zeros(M)
    assert N.num_states == 3
    assert N.transitions[0][0] == 0
    assert equivalent(M, N)


def test_minimize_idempotent(rng):
    for _ in range(50):
        M = make_random_dfao(rng)
        small = minimize(M)
        assert small.num_states <= M.num_states
        assert minimize(small) == small
        assert equivalent(small, M)


def test_minimize_merges_duplicates():
    # two copies of Thue-Morse glued together
    M = Dfao(((1, 2), (1, 3), (2, 1), (3, 1)), (0, 0, 1, 1), BASE2_MSD)
    assert minimize(M) == library.T


def test_minimize_requires_complete():
    with pytest.raises(IncompleteAutomaton):
        minimize(library.FTM)
    assert minimize_partial(library.FTM).num_states == 4


def test_reverse_tsum1_rev():
    """The reversal of TSUM1_REV computes the running sum msd-first"""
    tsum1 = reverse(library.TSUM1_REV)
    assert tsum1.numeration == BASE2_MSD
    assert tsum1.num_states == 8
    expected = [library.running_sum_tm(n) for n in range(2000)]
    assert tsum1.outputs_prefix(2000) == expected


def test_reverse_g8_has_12_states():
    g_mod8 = reverse(library.G8)
    assert g_mod8.numeration == BASE2_MSD
    assert g_mod8.num_states == 12
    assert g_mod8.outputs_prefix(HORIZON) == [library.g_mod8(n) for n in range(HORIZON)]


def test_reverse_semantics(rng):
    """eval(reverse(M)) lsd-first equals eval(M) msd-first"""
    for _ in range(30):
        M = make_random_dfao(rng)
        R = reverse(M)
        maps = reversal_maps(M)
        bound = len(M.output_alphabet) ** M.num_states
        assert R.numeration.order == maps.numeration.order == "lsd"
        assert R.num_states <= maps.num_states <= bound
        assert minimize(maps) == R
        for n in range(1000):
            assert eval_lsd(R, n) == eval_lsd(maps, n) == M.eval(n)
        assert equivalent(reverse(R), M)


def test_reverse_rejects_partial():
    with pytest.raises(IncompleteAutomaton):
        reverse(library.FTM)


def test_combine():
    tm = library.T
    zero = combine([tm, tm], lambda u, v: u ^ v)
    assert zero.num_states == 1
    assert zero.outputs == (0,)
    assert combine([library.RS], lambda u: u) == minimize(library.RS)


def test_combine_pointwise(rng):
    for _ in range(20):
        M1 = make_random_dfao(rng, max_base=2)
        M2 = make_random_dfao(rng, max_base=2)
        if M1.numeration != M2.numeration:
            continue
        C = combine([M1, M2], lambda u, v: 3 * u + v)
        a, b, c = M1.outputs_prefix(2000), M2.outputs_prefix(2000), C.outputs_prefix(2000)
        assert c == [3 * u + v for u, v in zip(a, b)]


def test_combine_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        combine([library.T, library.G8], lambda u, v: u)


def test_equivalent_witness():
    constant = Dfao(((0, 0),), (0,), BASE2_MSD)
    result = equivalent(library.T, constant)
    assert not result
    assert str(result.witness) == "1"
    assert equivalent(library.T, minimize(library.T))
    with pytest.raises(AlphabetMismatch):
        equivalent(library.T, library.G8)


def test_equivalent_ignores_non_canonical_inputs():
    """Automata differing only after leading zeros compute the same sequence"""
    M = Dfao(((1, 2), (1, 1), (2, 2)), (0, 0, 1), BASE2_MSD)
    N = Dfao(((0, 1), (1, 1)), (0, 1), BASE2_MSD)
    assert equivalent(M, N)


def test_equivalent_partial_fibonacci():
    assert equivalent(library.FTM, minimize_partial(library.FTM))
    other = Dfao(((0, 1), (2, None), (2, 3), (0, None)), (0, 1, 1, 1), FIB_MSD)
    result = equivalent(library.FTM, other)
    assert not result
    assert str(result.witness) == "101"


def test_map_outputs():
    assert map_outputs(library.T, lambda x: x) == library.T
    negated = map_outputs(library.T, {0: 1, 1: 0})
    assert negated.outputs_prefix(8) == [1 - x for x in library.T.outputs_prefix(8)]
    d = map_outputs(from_morphism(UniformMorphism(library.DD.images, range(10), 0)), dict(enumerate(library.DD.coding)))
    assert d.outputs_prefix(500) == library.D.outputs_prefix(500)


def test_count_states_with_dead():
    M = Dfao(((0, 1), (1, 1)), (0, DEAD), BASE2_MSD)
    assert count_states(M) == 2
    assert count_states(M, DEAD) == 1


def test_symbol_key_puts_dead_last():
    assert sorted([DEAD, 3, 0], key=symbol_key) == [0, 3, DEAD]
    assert repr(DEAD) == "#"


def test_apply_morphism_mu2():
    """Image of d under mu^2 agrees with the word-level image"""
    images = {0: (0, 1, 1, 0), 1: (1, 0, 0, 1)}
    DP = apply_morphism(library.D, images)
    d = library.D.outputs_prefix(1024)
    expected = [c for x in d for c in images[x]]
    assert DP.outputs_prefix(4096) == expected


def test_apply_morphism_coding_and_errors():
    coded = apply_morphism(library.T, {0: (1,), 1: (0,)})
    assert coded.outputs_prefix(16) == [1 - x for x in library.T.outputs_prefix(16)]
    with pytest.raises(AlphabetMismatch):
        apply_morphism(library.T, {0: (0, 1, 1), 1: (1, 0, 0)})
    with pytest.raises(IncompleteAutomaton):
        apply_morphism(library.G8.with_numeration(BASE2_LSD), {x: (x,) for x in (1, 3, 5, 7)})
