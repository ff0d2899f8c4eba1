"""
Transduction of automatic sequences.

Given a complete msd DFAO M for x and a 1-uniform transducer T, build a
DFAO for T(x). States of the result are pairs (a, I(w)) where a is a letter
of the underlying morphism and I(w) is the signature of a prefix w of its
fixed point: the tuple of state functions f_{λ(w)}, f_{λ(h(w))}, ...,
f_{λ(h^{p+r-1}(w))}. The orbit of these functions under h is ultimately
periodic, which keeps the signature finite.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Sequence, Tuple

from automaton import Dfao, UniformMorphism, minimize, reverse, symbol_key, to_morphism
from config import DEFAULT_CONFIG
from errors import AlphabetMismatch, BoundExceeded, IncompleteAutomaton, SizeLimit
from transducer import StateFunction, Transducer, letter_functions

Signature = Tuple[StateFunction, ...]

DEFAULT_MAX_STATES = DEFAULT_CONFIG["limits"]["max_dekking_states"]


@dataclass(frozen=True)
class OrbitResult:
    """Period p and preperiod r of n -> (F_n(q) for q in Q).

    `functions[n][q]` is f_{λ(h^n(q))} for n < p + r.
    """

    p: int
    r: int
    functions: Tuple[Tuple[StateFunction, ...], ...] = field(default=(), repr=False, compare=False)
    bound: int = field(default=0, compare=False)

    @property
    def length(self):
        return self.p + self.r


def orbit_bound(num_letters, num_states):
    """|V|^(|Q|*|V|)"""
    return num_states ** (num_letters * num_states)


def _check_alphabet(m: UniformMorphism, T: Transducer):
    outside = set(m.coding) - set(T.alphabet)
    if outside:
        raise AlphabetMismatch(
            f"outputs {sorted(outside, key=symbol_key)} are not in the transducer alphabet {T.alphabet}"
        )


def find_period_preperiod(m: UniformMorphism, T: Transducer) -> OrbitResult:
    """Iterate F_{n+1}(a) = F_n(h(a)_0) then ... then F_n(h(a)_{k-1}) until a
    tuple repeats; tuples are recorded from n = 1."""
    _check_alphabet(m, T)
    singles = letter_functions(T)
    current = tuple(singles[m.coding[a]] for a in m.letters)
    history = [current]
    bound = orbit_bound(len(m.letters), T.num_states)
    identity = StateFunction.identity(T.num_states)

    seen: Dict[Tuple[StateFunction, ...], int] = {}
    n = 0
    while True:
        nxt = []
        for a in m.letters:
            f = identity
            for c in m.images[a]:
                f = f.then(current[c])
            nxt.append(f)
        current = tuple(nxt)
        n += 1
        if current in seen:
            first = seen[current]
            p, r = n - first, first
            if p > bound or r > bound:
                raise BoundExceeded(f"p={p}, r={r} exceed the bound {bound}")
            return OrbitResult(p, r, tuple(history[: p + r]), bound)
        if n > bound + 1:
            raise BoundExceeded(f"no repetition within {bound} iterations")
        seen[current] = n
        history.append(current)


def letter_signature(pr: OrbitResult, a) -> Signature:
    return tuple(pr.functions[i][a] for i in range(pr.length))


def identity_signature(pr: OrbitResult, num_states) -> Signature:
    return (StateFunction.identity(num_states),) * pr.length


def concat(left: Signature, right: Signature) -> Signature:
    """Signature of uv from those of u and v"""
    return tuple(f.then(g) for f, g in zip(left, right))


def shift(sig: Signature, pr: OrbitResult) -> Signature:
    """I(h(w)) from I(w), wrapping the last slot around to index r"""
    return sig[1:] + (sig[pr.r],)


def signature_of(m: UniformMorphism, T: Transducer, pr: OrbitResult, word: Sequence[int]) -> Signature:
    sig = identity_signature(pr, T.num_states)
    for a in word:
        sig = concat(sig, letter_signature(pr, a))
    return sig


@dataclass(frozen=True)
class DekkingStats:
    p: int
    r: int
    explored_states: int
    minimal_states: int
    orbit_bound: int
    state_bound: int


@dataclass
class DekkingRun:
    """Unminimized construction with bookkeeping for inspection and tests"""

    dfao: Dfao
    morphism: UniformMorphism
    orbit: OrbitResult
    letters: List[int]
    signatures: List[Signature]
    positions: List[int]

    def stats(self, minimal=None):
        num_letters = len(self.morphism.letters)
        v = len(self.signatures[0][0].mapping) if self.signatures[0] else 1
        return DekkingStats(
            p=self.orbit.p,
            r=self.orbit.r,
            explored_states=self.dfao.num_states,
            minimal_states=minimal.num_states if minimal is not None else -1,
            orbit_bound=self.orbit.bound,
            state_bound=num_letters * v ** (self.orbit.length * v),
        )


def _require_msd_base(M: Dfao):
    if not M.is_complete():
        raise IncompleteAutomaton("transduce needs a complete DFAO; numeration-restricted ones go through extension")
    if M.numeration.is_fibonacci or not M.numeration.is_msd:
        raise AlphabetMismatch(f"expected a base-k msd DFAO, got {M.numeration}")


def explore(M: Dfao, T: Transducer, max_states=DEFAULT_MAX_STATES) -> DekkingRun:
    """Breadth-first generation of the states reachable from (q0, I(ε))"""
    _require_msd_base(M)
    m = to_morphism(M)
    pr = find_period_preperiod(m, T)
    k = m.k

    interned: Dict[Signature, Signature] = {}

    def intern(sig):
        return interned.setdefault(sig, sig)

    # prefix_sigs[a][d] = I(h(a)_0 ... h(a)_{d-1})
    letter_sigs = [intern(letter_signature(pr, a)) for a in m.letters]
    empty = intern(identity_signature(pr, T.num_states))
    prefix_sigs = []
    for a in m.letters:
        row = [empty]
        for c in m.images[a][:-1]:
            row.append(intern(concat(row[-1], letter_sigs[c])))
        prefix_sigs.append(row)

    start = (m.seed, empty)
    index = {start: 0}
    states = [start]
    positions = [0]
    queue = deque([start])
    transitions = []
    while queue:
        a, sig = queue.popleft()
        n = positions[index[(a, sig)]]
        shifted = intern(shift(sig, pr))
        row = []
        for d in range(k):
            child = (m.images[a][d], intern(concat(shifted, prefix_sigs[a][d])))
            if child not in index:
                if len(states) >= max_states:
                    raise SizeLimit(f"construction exceeded {max_states} states")
                index[child] = len(states)
                states.append(child)
                positions.append(n * k + d)
                queue.append(child)
            row.append(index[child])
        transitions.append(tuple(row))

    v0 = T.initial
    outputs = [T.sigma(sig[0](v0), m.coding[a]) for a, sig in states]
    dfao = Dfao(transitions, outputs, M.numeration, 0)
    return DekkingRun(
        dfao=dfao,
        morphism=m,
        orbit=pr,
        letters=[a for a, _ in states],
        signatures=[sig for _, sig in states],
        positions=positions,
    )


def transduce_dfao(M: Dfao, T: Transducer, max_states=DEFAULT_MAX_STATES) -> Dfao:
    """Minimal DFAO for T(x) where x is computed by M"""
    return minimize(explore(M, T, max_states).dfao)


def transduce_with_stats(M: Dfao, T: Transducer, max_states=DEFAULT_MAX_STATES):
    run = explore(M, T, max_states)
    result = minimize(run.dfao)
    return result, run.stats(result)


def transduce_lsd(M: Dfao, T: Transducer, max_states=DEFAULT_MAX_STATES) -> Dfao:
    """Reverse to msd, transduce, reverse back"""
    if M.numeration.is_msd:
        raise AlphabetMismatch(f"expected an lsd DFAO, got {M.numeration}")
    if M.numeration.is_fibonacci:
        raise AlphabetMismatch("lsd transduction is only supported in base k")
    return reverse(transduce_dfao(reverse(M), T, max_states))


def iterated_transductions(M: Dfao, T: Transducer, times: int, max_states=DEFAULT_MAX_STATES) -> Iterator[Dfao]:
    """Yield minimal DFAOs for T(x), T(T(x)), ..."""
    current = M
    for _ in range(times):
        current = transduce_dfao(current, T, max_states)
        yield current
