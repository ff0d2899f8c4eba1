"""
Transduction over numeration systems other than plain base k.

A DFAO over, say, Zeckendorf representations is read as a base-2 DFAO by
sending every invalid input to a dead state with output DEAD. The
transducer is extended to copy DEAD through without changing state, the
pair is transduced in base 2, and the DEAD states are stripped again.
"""

from typing import List, Optional

from automaton import DEAD, Dfao, minimize_partial, normalize_leading_zeros
from dekking import DEFAULT_MAX_STATES, transduce_dfao, transduce_lsd
from errors import AlphabetMismatch, AlreadyComplete, HashSymbolCollision, NonCanonical
from numeration import NumerationSystem, canonical_acceptor
from transducer import Transducer


def dead_state(M: Dfao) -> Optional[int]:
    """Index of the absorbing DEAD state, if M has one"""
    for q, out in enumerate(M.outputs):
        if out is DEAD and all(t == q for t in M.transitions[q]):
            return q
    return None


def restrict_to_canonical(M: Dfao) -> Dfao:
    """Drop the transitions that leave the canonical language of M's
    numeration system (zeros on the significant end still allowed)."""
    acceptor = canonical_acceptor(M.numeration)
    if len(acceptor.transitions) == 1:
        return M
    start = (M.initial, acceptor.initial)
    index = {start: 0}
    states = [start]
    transitions: List[tuple] = []
    i = 0
    while i < len(states):
        q, s = states[i]
        row = []
        for a in range(M.base):
            t, s2 = M.transitions[q][a], acceptor.step(s, a)
            if t is None or s2 is None:
                row.append(None)
                continue
            child = (t, s2)
            if child not in index:
                index[child] = len(states)
                states.append(child)
            row.append(index[child])
        transitions.append(tuple(row))
        i += 1
    outputs = [M.outputs[q] for q, _ in states]
    return minimize_partial(Dfao(transitions, outputs, M.numeration, 0))


def extend_dfao(M: Dfao, strict=False) -> Dfao:
    """Complete M with a dead state q_# and read it as a base-k DFAO"""
    if M.is_complete():
        if strict:
            raise AlreadyComplete("DFAO is already complete")
        return M
    if not M.numeration.is_msd:
        raise AlphabetMismatch("only msd DFAOs can be extended")
    dead = M.num_states
    transitions = [tuple(dead if t is None else t for t in row) for row in M.transitions]
    transitions.append((dead,) * M.base)
    outputs = M.outputs + (DEAD,)
    return Dfao(transitions, outputs, NumerationSystem("base", M.base, "msd"), M.initial)


def extend_transducer(T: Transducer) -> Transducer:
    """φ'(v, #) = v and σ'(v, #) = #"""
    if DEAD in T.alphabet:
        raise HashSymbolCollision("transducer already reads the dead symbol")
    edges = []
    for v, row in enumerate(T.edges):
        extended = dict(row)
        extended[DEAD] = (v, DEAD)
        edges.append(extended)
    return Transducer(T.alphabet + (DEAD,), tuple(edges), T.initial)


def transduce_extended(M: Dfao, T: Transducer, max_states=DEFAULT_MAX_STATES) -> Dfao:
    """Base-k DFAO for T'(y), where y is M's sequence extended with DEAD"""
    acceptor = canonical_acceptor(M.numeration)
    if not acceptor.is_prefix_closed():
        raise NonCanonical(f"canonical words of {M.numeration} are not prefix-closed")
    restricted = normalize_leading_zeros(restrict_to_canonical(M))
    extended = extend_dfao(restricted)
    return transduce_dfao(extended, extend_transducer(T), max_states)


def strip_dead(E: Dfao, numeration: NumerationSystem) -> Dfao:
    """Remove DEAD-output states and reinterpret over `numeration`"""
    keep = [out is not DEAD for out in E.outputs]
    transitions = [tuple(t if t is not None and keep[t] else None for t in row) for row in E.transitions]
    return minimize_partial(Dfao(transitions, E.outputs, numeration, E.initial))


def transduce_numeration(M: Dfao, T: Transducer, max_states=DEFAULT_MAX_STATES) -> Dfao:
    """Transduce M's sequence whatever its numeration system"""
    system = M.numeration
    if not system.is_msd:
        return transduce_lsd(M, T, max_states)
    if not system.is_fibonacci and M.is_complete():
        return transduce_dfao(M, T, max_states)
    return strip_dead(transduce_extended(M, T, max_states), system)
