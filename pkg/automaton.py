"""
Deterministic finite automata with output (DFAOs) and their algebra.

A Dfao reads the digits of a number's representation (msd or lsd first,
as tagged by its numeration system) and emits the output of the state it
stops in. Transition tables may be partial (None marks a missing edge),
which is how numeration-restricted automata such as Fibonacci ones are
stored.

After every algebraic operation states are renumbered in breadth-first
order from the initial state, digits ascending, so the initial state is
always 0 and serialized files are deterministic.
"""

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from errors import (
    AlphabetMismatch,
    IncompleteAutomaton,
    NotProlongable,
    UndefinedTransition,
)
from numeration import (
    BASE2_MSD,
    CanonicalAcceptor,
    DigitWord,
    NumerationSystem,
    represent,
)


class _DeadSymbol:
    """Output of the dead state q_#; never equal to a user symbol"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "#"

    __str__ = __repr__

    def __reduce__(self):
        return (_DeadSymbol, ())


DEAD = _DeadSymbol()


def symbol_key(symbol):
    """Sort key for output symbols: user symbols first, DEAD last"""
    if symbol is DEAD:
        return (2, 0, "")
    if isinstance(symbol, (int, float)):
        return (0, symbol, "")
    return (1, 0, str(symbol))


Row = Tuple[Optional[int], ...]


@dataclass(frozen=True)
class Dfao:
    transitions: Tuple[Row, ...]
    outputs: Tuple[Hashable, ...]
    numeration: NumerationSystem = BASE2_MSD
    initial: int = 0

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(tuple(row) for row in self.transitions))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        n, k = len(self.transitions), self.numeration.k
        if n == 0:
            raise ValueError("a DFAO needs at least one state")
        if len(self.outputs) != n:
            raise ValueError(f"{len(self.outputs)} outputs for {n} states")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} does not exist")
        for q, row in enumerate(self.transitions):
            if len(row) != k:
                raise ValueError(f"state {q} has {len(row)} edges, expected {k}")
            for t in row:
                if t is not None and not 0 <= t < n:
                    raise ValueError(f"state {q} points to missing state {t}")

    @property
    def num_states(self):
        return len(self.transitions)

    def __len__(self):
        return len(self.transitions)

    @property
    def base(self):
        return self.numeration.k

    @property
    def output_alphabet(self):
        return tuple(sorted(set(self.outputs), key=symbol_key))

    def is_complete(self):
        return all(t is not None for row in self.transitions for t in row)

    def step(self, state, digit):
        return self.transitions[state][digit]

    def run(self, word, state=None):
        """State reached on word, or None when a transition is missing"""
        state = self.initial if state is None else state
        for d in word:
            state = self.transitions[state][d]
            if state is None:
                return None
        return state

    def output_on(self, word):
        state = self.run(word)
        if state is None:
            raise UndefinedTransition(f"no path for input {DigitWord(tuple(word))}")
        return self.outputs[state]

    def eval(self, n):
        """x_n = λ(δ(q0, (n)_k)) on the canonical representation of n"""
        return self.output_on(represent(n, self.numeration).digits)

    def outputs_prefix(self, count):
        """First `count` outputs x_0 ... x_{count-1}"""
        system = self.numeration
        if count <= 0:
            return []
        if system.is_fibonacci or not system.is_msd:
            return [self.eval(n) for n in range(count)]

        # msd base-k: (n)_k = (n // k)_k followed by n % k
        k = system.k
        states: List[Optional[int]] = [self.initial]
        for n in range(1, count):
            parent = states[n // k] if n >= k else self.initial
            nxt = None if parent is None else self.transitions[parent][n % k]
            states.append(nxt)
        result = []
        for n, q in enumerate(states):
            if q is None:
                raise UndefinedTransition(f"no path for {n} in {system}")
            result.append(self.outputs[q])
        return result

    def with_numeration(self, numeration):
        return Dfao(self.transitions, self.outputs, numeration, self.initial)


@dataclass(frozen=True)
class UniformMorphism:
    """k-uniform morphism on letters 0..m-1, a coding, and a seed letter"""

    images: Tuple[Tuple[int, ...], ...]
    coding: Tuple[Hashable, ...]
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(img) for img in self.images))
        object.__setattr__(self, "coding", tuple(self.coding))
        lengths = {len(img) for img in self.images}
        if len(lengths) != 1:
            raise ValueError("images of a uniform morphism must share one length")
        if len(self.coding) != len(self.images):
            raise ValueError("coding must cover every letter")
        m = len(self.images)
        for img in self.images:
            for c in img:
                if not 0 <= c < m:
                    raise ValueError(f"image letter {c} outside domain")

    @property
    def k(self):
        return len(self.images[0])

    @property
    def letters(self):
        return tuple(range(len(self.images)))

    def is_prolongable(self):
        return self.images[self.seed][0] == self.seed

    def apply(self, word):
        out = []
        for a in word:
            out.extend(self.images[a])
        return out

    def fixed_point_prefix(self, count):
        """First `count` letters of h^ω(seed), before the coding"""
        if count <= 0:
            return []
        if not self.is_prolongable():
            raise NotProlongable(f"h({self.seed}) does not begin with {self.seed}")
        word = [self.seed]
        while len(word) < count:
            grown = self.apply(word)
            if len(grown) == len(word):
                # k == 1 with h(seed) = seed
                word = word * count
                break
            word = grown
        return word[:count]

    def prefix(self, count):
        return [self.coding[a] for a in self.fixed_point_prefix(count)]

    @classmethod
    def parse(cls, text, coding=None, seed=0):
        """Build from "0->01 1->10" style text; letters must be 0..m-1"""
        rules: Dict[int, Tuple[int, ...]] = {}
        for item in text.replace(",", " ").split():
            left, _, right = item.partition("->")
            rules[int(left)] = tuple(int(c) for c in right)
        images = tuple(rules[a] for a in range(len(rules)))
        if coding is None:
            coding = tuple(range(len(images)))
        return cls(images, coding, seed)


def prefix(m: UniformMorphism, count: int):
    return m.prefix(count)


def _bfs_renumber(transitions, outputs, initial, numeration):
    """Keep states reachable from initial, renumbered breadth-first"""
    order = {initial: 0}
    queue = deque([initial])
    visit: List[int] = []
    while queue:
        q = queue.popleft()
        visit.append(q)
        for t in transitions[q]:
            if t is not None and t not in order:
                order[t] = len(order)
                queue.append(t)
    new_transitions = [
        tuple(None if t is None else order[t] for t in transitions[q]) for q in visit
    ]
    new_outputs = [outputs[q] for q in visit]
    return Dfao(new_transitions, new_outputs, numeration, 0)


def canonicalize(M: Dfao) -> Dfao:
    return _bfs_renumber(M.transitions, M.outputs, M.initial, M.numeration)


def _refine(M: Dfao):
    """Moore partition refinement seeded by outputs; None edges form their
    own class. Returns the block index of every state."""
    first_seen: Dict[Hashable, int] = {}
    blocks = [first_seen.setdefault(out, len(first_seen)) for out in M.outputs]
    count = len(first_seen)
    while True:
        signatures: Dict[tuple, int] = {}
        refined = []
        for q, row in enumerate(M.transitions):
            sig = (blocks[q],) + tuple(None if t is None else blocks[t] for t in row)
            refined.append(signatures.setdefault(sig, len(signatures)))
        blocks = refined
        if len(signatures) == count:
            return blocks
        count = len(signatures)


def _quotient(M: Dfao, blocks):
    n_blocks = max(blocks) + 1
    transitions: List[Optional[Row]] = [None] * n_blocks
    outputs: List[Hashable] = [None] * n_blocks
    for q, b in enumerate(blocks):
        if transitions[b] is None:
            transitions[b] = tuple(None if t is None else blocks[t] for t in M.transitions[q])
            outputs[b] = M.outputs[q]
    return _bfs_renumber(transitions, outputs, blocks[M.initial], M.numeration)


def minimize(M: Dfao) -> Dfao:
    """Minimal complete DFAO with the same input/output behaviour"""
    if not M.is_complete():
        raise IncompleteAutomaton("minimize needs a complete DFAO; use minimize_partial")
    return _quotient(M, _refine(M))


def minimize_partial(M: Dfao) -> Dfao:
    """Minimize treating a missing edge as a sink with a unique output"""
    return _quotient(M, _refine(M))


def normalize_leading_zeros(M: Dfao) -> Dfao:
    """Equivalent msd DFAO whose initial state loops on 0"""
    q0 = M.initial
    if M.transitions[q0][0] == q0:
        return M
    shifted = [tuple(None if t is None else t + 1 for t in row) for row in M.transitions]
    start = (0,) + shifted[q0][1:]
    return Dfao([start] + shifted, (M.outputs[q0],) + M.outputs, M.numeration, 0)


def from_morphism(m: UniformMorphism) -> Dfao:
    """Cobham: δ(q, i) = h(q)[i], λ = coding, seed first"""
    if not m.is_prolongable():
        raise NotProlongable(f"h({m.seed}) does not begin with {m.seed}")
    order = [m.seed] + [a for a in m.letters if a != m.seed]
    index = {a: i for i, a in enumerate(order)}
    transitions = [tuple(index[c] for c in m.images[a]) for a in order]
    outputs = [m.coding[a] for a in order]
    return Dfao(transitions, outputs, NumerationSystem("base", m.k, "msd"), 0)


def to_morphism(M: Dfao) -> UniformMorphism:
    """h(q) = δ(q, 0) ... δ(q, k-1); the initial state becomes the seed"""
    if not M.is_complete():
        raise IncompleteAutomaton("only complete DFAOs correspond to uniform morphisms")
    if M.numeration.is_fibonacci or not M.numeration.is_msd:
        raise AlphabetMismatch(f"expected a base-k msd DFAO, got {M.numeration}")
    M = canonicalize(normalize_leading_zeros(M))
    return UniformMorphism(M.transitions, M.outputs, M.initial)


def reverse(M: Dfao) -> Dfao:
    """DFAO reading digits in the opposite order, minimized"""
    return minimize(reversal_maps(M))


def reversal_maps(M: Dfao) -> Dfao:
    """Unminimized reversal over the reachable maps g: Q -> Δ.

    Maps are stored as tuples; g starts as λ, reading a turns g into
    q -> g(δ(q, a)) and the output of g is g(q0). At most |Δ|^|Q| states.
    """
    if not M.is_complete():
        raise IncompleteAutomaton("reverse needs a complete DFAO; extend it first")
    k = M.base
    start = M.outputs
    index = {start: 0}
    queue = deque([start])
    maps = [start]
    transitions: List[Row] = []
    while queue:
        g = queue.popleft()
        row = []
        for a in range(k):
            h = tuple(g[M.transitions[q][a]] for q in range(M.num_states))
            if h not in index:
                index[h] = len(maps)
                maps.append(h)
                queue.append(h)
            row.append(index[h])
        transitions.append(tuple(row))
    outputs = [g[M.initial] for g in maps]
    return Dfao(transitions, outputs, M.numeration.reversed(), 0)


def _check_compatible(machines):
    first = machines[0].numeration
    for M in machines[1:]:
        if M.numeration != first:
            raise AlphabetMismatch(f"numeration {M.numeration} differs from {first}")


def _product(machines, f):
    k = machines[0].base
    start = tuple(M.initial for M in machines)
    index = {start: 0}
    states = [start]
    queue = deque([start])
    transitions: List[Row] = []
    while queue:
        joint = queue.popleft()
        row: List[Optional[int]] = []
        for a in range(k):
            nxt = tuple(M.transitions[q][a] for M, q in zip(machines, joint))
            if any(t is None for t in nxt):
                row.append(None)
                continue
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            row.append(index[nxt])
        transitions.append(tuple(row))
    outputs = [f(*(M.outputs[q] for M, q in zip(machines, joint))) for joint in states]
    return Dfao(transitions, outputs, machines[0].numeration, 0)


def combine(machines: Sequence[Dfao], f: Callable[..., Hashable]) -> Dfao:
    """Pointwise combination: output f(out_1, ..., out_m), minimized"""
    machines = list(machines)
    if not machines:
        raise ValueError("combine needs at least one DFAO")
    _check_compatible(machines)
    product = _product(machines, f)
    if product.is_complete():
        return minimize(product)
    return minimize_partial(product)


def map_outputs(M: Dfao, f) -> Dfao:
    """Relabel outputs with a callable or a mapping; transitions untouched"""
    relabel = f.__getitem__ if isinstance(f, dict) else f
    return Dfao(M.transitions, [relabel(out) for out in M.outputs], M.numeration, M.initial)


@dataclass(frozen=True)
class EquivalenceResult:
    equal: bool
    witness: Optional[DigitWord] = None

    def __bool__(self):
        return self.equal


def _strict_acceptor(system: NumerationSystem) -> CanonicalAcceptor:
    """Canonical words with no insignificant zeros at all.

    msd: 0 = nothing read, 1 = started, 2 = last digit 1 (fibonacci)
    lsd: 0 = empty or last digit nonzero, 1 = last digit 0
    """
    k = system.k
    if system.is_msd:
        if system.is_fibonacci:
            return CanonicalAcceptor(((None, 2), (1, 2), (1, None)), frozenset({0, 1, 2}))
        return CanonicalAcceptor(((None,) + (1,) * (k - 1), (1,) * k), frozenset({0, 1}))
    if system.is_fibonacci:
        return CanonicalAcceptor(((1, 2), (1, 2), (1, None)), frozenset({0, 2}))
    return CanonicalAcceptor(((1,) + (0,) * (k - 1), (1,) + (0,) * (k - 1)), frozenset({0}))


_UNDEFINED = object()


def equivalent(M1: Dfao, M2: Dfao) -> EquivalenceResult:
    """Compare the sequences computed by M1 and M2 on canonical inputs.

    Breadth-first search over (state1, state2, acceptor state) finds a
    shortest canonical word on which the outputs differ, if any. A missing
    transition counts as an output no real state has.
    """
    _check_compatible([M1, M2])
    acceptor = _strict_acceptor(M1.numeration)
    k = M1.base

    def out(M, q):
        return _UNDEFINED if q is None else M.outputs[q]

    def nxt(M, q, a):
        return None if q is None else M.transitions[q][a]

    start = (M1.initial, M2.initial, acceptor.initial)
    parent: Dict[tuple, Optional[Tuple[tuple, int]]] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        q1, q2, s = node
        if s in acceptor.accepting and out(M1, q1) != out(M2, q2):
            digits = []
            while parent[node] is not None:
                node, a = parent[node]
                digits.append(a)
            digits.reverse()
            return EquivalenceResult(False, DigitWord(tuple(digits), M1.numeration.order))
        if q1 is None and q2 is None:
            continue
        for a in range(k):
            s2 = acceptor.step(s, a)
            if s2 is None:
                continue
            child = (nxt(M1, q1, a), nxt(M2, q2, a), s2)
            if child not in parent:
                parent[child] = (node, a)
                queue.append(child)
    return EquivalenceResult(True)


def count_states(M: Dfao, dead_output=None) -> int:
    """Number of states, optionally not counting states that output dead_output"""
    if dead_output is None:
        return M.num_states
    return sum(1 for out in M.outputs if out is not dead_output and out != dead_output)


def apply_morphism(M: Dfao, images) -> Dfao:
    """DFAO for the image of M's sequence under a uniform morphism.

    `images` maps each output of M to a tuple of length k^e. The result
    keeps the last e digits read in a buffer and feeds older digits to M;
    its output is images[λ(q)][value of buffer].
    """
    if not M.is_complete() or M.numeration.is_fibonacci or not M.numeration.is_msd:
        raise IncompleteAutomaton("apply_morphism needs a complete base-k msd DFAO")
    k = M.base
    images = dict(images)
    length = len(next(iter(images.values())))
    e = 0
    while k**e < length:
        e += 1
    if k**e != length or any(len(img) != length for img in images.values()):
        raise AlphabetMismatch(f"image length {length} is not a power of {k}")
    missing = set(M.outputs) - set(images)
    if missing:
        raise AlphabetMismatch(f"no image for outputs {sorted(missing, key=symbol_key)}")
    if e == 0:
        return minimize(map_outputs(M, lambda out: images[out][0]))

    M = normalize_leading_zeros(M)
    start = (M.initial, ())
    index = {start: 0}
    states = [start]
    queue = deque([start])
    transitions: List[Row] = []
    while queue:
        q, buf = queue.popleft()
        row = []
        for a in range(k):
            if len(buf) < e:
                child = (q, buf + (a,))
            else:
                child = (M.transitions[q][buf[0]], buf[1:] + (a,))
            if child not in index:
                index[child] = len(states)
                states.append(child)
                queue.append(child)
            row.append(index[child])
        transitions.append(tuple(row))

    outputs = []
    for q, buf in states:
        offset = 0
        for d in buf:
            offset = offset * k + d
        outputs.append(images[M.outputs[q]][offset])
    return minimize(Dfao(transitions, outputs, M.numeration, 0))
