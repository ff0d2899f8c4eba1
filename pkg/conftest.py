"""
Shared fixtures: deterministic random DFAOs and transducers.
"""

import random

import pytest

from automaton import Dfao
from config import DEFAULT_CONFIG
from numeration import NumerationSystem
from transducer import Transducer

TESTING = DEFAULT_CONFIG["testing"]


def make_random_dfao(rng, max_states=4, max_base=3, max_outputs=3):
    k = rng.randint(2, max_base)
    n = rng.randint(1, max_states)
    outputs_size = rng.randint(1, max_outputs)
    transitions = [tuple(rng.randrange(n) for _ in range(k)) for _ in range(n)]
    outputs = [rng.randrange(outputs_size) for _ in range(n)]
    return Dfao(transitions, outputs, NumerationSystem("base", k, "msd"))


def make_random_transducer(rng, alphabet, max_states=3, max_outputs=3):
    v = rng.randint(1, max_states)
    rows = [{a: (rng.randrange(v), rng.randrange(max_outputs)) for a in alphabet} for _ in range(v)]
    return Transducer(tuple(alphabet), tuple(rows))


@pytest.fixture
def rng():
    return random.Random(TESTING["seed"])


@pytest.fixture(scope="session")
def random_pairs():
    """(DFAO, transducer) pairs with |Q| <= 4, k <= 3, |V| <= 3"""
    generator = random.Random(TESTING["seed"])
    pairs = []
    for _ in range(TESTING["random_instances"]):
        M = make_random_dfao(generator)
        alphabet = sorted(set(M.outputs) | {generator.randrange(3)})
        pairs.append((M, make_random_transducer(generator, alphabet)))
    return pairs
