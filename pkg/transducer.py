"""
1-uniform deterministic transducers.

A Transducer reads one input symbol and writes exactly one output symbol
per step. Symbols are small integers (plus the DEAD marker for extended
transducers); the input alphabet need not be contiguous, e.g. {1, 3, 5, 7}.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

from automaton import symbol_key
from errors import MissingTransition, SymbolOutsideAlphabet


@dataclass(frozen=True)
class StateFunction:
    """Total map V -> V stored as the tuple (f(0), ..., f(|V|-1))"""

    mapping: Tuple[int, ...]

    @classmethod
    def identity(cls, size):
        return cls(tuple(range(size)))

    def __call__(self, v):
        return self.mapping[v]

    def then(self, other):
        """Read self's word, then other's: other ∘ self"""
        return StateFunction(tuple(other.mapping[v] for v in self.mapping))

    def is_identity(self):
        return all(v == i for i, v in enumerate(self.mapping))

    def __repr__(self):
        return "f" + "".join(str(v) for v in self.mapping) if len(self.mapping) <= 10 else f"f{self.mapping}"


@dataclass(frozen=True)
class Transducer:
    """T = <V, Δ, φ, v0, Γ, σ> with edges[v][a] = (φ(v, a), σ(v, a))"""

    alphabet: Tuple[Hashable, ...]
    edges: Tuple[Dict[Hashable, Tuple[int, Hashable]], ...]
    initial: int = 0

    def __post_init__(self):
        alphabet = tuple(sorted(set(self.alphabet), key=symbol_key))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "edges", tuple(dict(row) for row in self.edges))
        n = len(self.edges)
        if n == 0:
            raise ValueError("a transducer needs at least one state")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} does not exist")
        for v, row in enumerate(self.edges):
            for a in alphabet:
                if a not in row:
                    raise MissingTransition(f"state {v} has no transition on {a}")
                target, _ = row[a]
                if not 0 <= target < n:
                    raise ValueError(f"state {v} points to missing state {target}")
            extra = set(row) - set(alphabet)
            if extra:
                raise SymbolOutsideAlphabet(f"state {v} reads symbols {sorted(extra, key=symbol_key)} outside the alphabet")

    def __hash__(self):
        return hash((self.alphabet, self.initial, tuple(tuple(sorted(row.items(), key=lambda kv: symbol_key(kv[0]))) for row in self.edges)))

    @property
    def num_states(self):
        return len(self.edges)

    @property
    def output_alphabet(self):
        return tuple(sorted({out for row in self.edges for _, out in row.values()}, key=symbol_key))

    def _check(self, a):
        if a not in self.edges[0]:
            raise SymbolOutsideAlphabet(f"symbol {a!r} not in transducer alphabet {self.alphabet}")

    def phi(self, v, a):
        self._check(a)
        return self.edges[v][a][0]

    def sigma(self, v, a):
        self._check(a)
        return self.edges[v][a][1]

    def restricted(self, alphabet: Iterable[Hashable]):
        """Same machine reading only the given symbols"""
        keep = set(alphabet)
        return Transducer(
            tuple(keep & set(self.alphabet)),
            tuple({a: e for a, e in row.items() if a in keep} for row in self.edges),
            self.initial,
        )


def transduce_word(T: Transducer, word: Sequence[Hashable]) -> List[Hashable]:
    """σ(v0, x0) σ(φ(v0, x0), x1) ..."""
    v = T.initial
    out = []
    for a in word:
        row = T.edges[v]
        if a not in row:
            raise SymbolOutsideAlphabet(f"symbol {a!r} not in transducer alphabet {T.alphabet}")
        v, b = row[a]
        out.append(b)
    return out


def state_function(T: Transducer, word: Sequence[Hashable]) -> StateFunction:
    """f_y(v) = φ*(v, y)"""
    f = StateFunction.identity(T.num_states)
    for a in word:
        T._check(a)
        f = f.then(StateFunction(tuple(T.edges[v][a][0] for v in range(T.num_states))))
    return f


def letter_functions(T: Transducer) -> Dict[Hashable, StateFunction]:
    return {a: state_function(T, (a,)) for a in T.alphabet}


def identity_transducer(alphabet: Iterable[Hashable]) -> Transducer:
    alphabet = tuple(alphabet)
    return Transducer(alphabet, ({a: (0, a) for a in alphabet},))


def iterate(T: Transducer, word: Sequence[Hashable], times: int) -> List[Hashable]:
    """T applied `times` times; T's outputs must be readable by T"""
    word = list(word)
    for _ in range(times):
        word = transduce_word(T, word)
    return word
