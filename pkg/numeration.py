"""
Numeration systems: base-k (msd and lsd) and Zeckendorf/Fibonacci.

The canonical representation of 0 is the empty word. Fibonacci digits are
weighted by F_2 = 1, F_3 = 2, F_4 = 3, ... and canonical words have no
factor 11.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from errors import InvalidDigit, NonCanonical, UnknownNumeration

MSD = "msd"
LSD = "lsd"
BASE = "base"
FIBONACCI = "fib"


@dataclass(frozen=True)
class NumerationSystem:
    kind: str = BASE
    k: int = 2
    order: str = MSD

    def __post_init__(self):
        if self.kind not in (BASE, FIBONACCI):
            raise UnknownNumeration(f"unknown numeration kind: {self.kind!r}")
        if self.order not in (MSD, LSD):
            raise UnknownNumeration(f"unknown digit order: {self.order!r}")
        if self.kind == FIBONACCI:
            object.__setattr__(self, "k", 2)
        elif self.k < 2:
            raise UnknownNumeration(f"base must be at least 2, got {self.k}")

    @property
    def base(self):
        """Number of digits in the alphabet"""
        return self.k

    @property
    def alphabet(self):
        return tuple(range(self.k))

    @property
    def is_fibonacci(self):
        return self.kind == FIBONACCI

    @property
    def is_msd(self):
        return self.order == MSD

    @property
    def header(self):
        """File header name, e.g. msd_2, lsd_10, msd_fib"""
        suffix = "fib" if self.is_fibonacci else str(self.k)
        return f"{self.order}_{suffix}"

    def reversed(self):
        return NumerationSystem(self.kind, self.k, LSD if self.is_msd else MSD)

    @classmethod
    def from_header(cls, text):
        order, sep, suffix = text.strip().partition("_")
        if not sep or order not in (MSD, LSD):
            raise UnknownNumeration(f"unknown numeration system: {text!r}")
        if suffix == "fib":
            return cls(FIBONACCI, 2, order)
        if not suffix.isdigit():
            raise UnknownNumeration(f"unknown numeration system: {text!r}")
        return cls(BASE, int(suffix), order)

    def __str__(self):
        return self.header


BASE2_MSD = NumerationSystem(BASE, 2, MSD)
BASE2_LSD = NumerationSystem(BASE, 2, LSD)
FIB_MSD = NumerationSystem(FIBONACCI, 2, MSD)
FIB_LSD = NumerationSystem(FIBONACCI, 2, LSD)


@dataclass(frozen=True)
class DigitWord:
    """A finite word of digits, read in the order given by `order`"""

    digits: Tuple[int, ...]
    order: str = MSD

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, index):
        return self.digits[index]

    def __str__(self):
        if not self.digits:
            return "ε"
        if all(d < 10 for d in self.digits):
            return "".join(str(d) for d in self.digits)
        return "[" + ",".join(str(d) for d in self.digits) + "]"

    @classmethod
    def parse(cls, text, order=MSD):
        if text in ("", "ε"):
            return cls((), order)
        return cls(tuple(int(c) for c in text), order)


def fibonacci_weights(limit):
    """Weights F_2, F_3, ... not exceeding limit (always at least [1])"""
    weights = [1, 2]
    while weights[-1] + weights[-2] <= limit:
        weights.append(weights[-1] + weights[-2])
    if weights[-1] > limit:
        weights.pop()
    return weights or [1]


def _lsd_digits(n, system):
    """Canonical digits of n, least significant first"""
    if n < 0:
        raise ValueError(f"cannot represent negative number {n}")
    if n == 0:
        return []
    if system.is_fibonacci:
        weights = fibonacci_weights(n)
        digits = []
        for w in reversed(weights):
            if w <= n:
                digits.append(1)
                n -= w
            else:
                digits.append(0)
        return list(reversed(digits))
    digits = []
    while n:
        n, d = divmod(n, system.k)
        digits.append(d)
    return digits


def represent(n, system):
    """Canonical representation of n in the requested order"""
    digits = _lsd_digits(n, system)
    if system.is_msd:
        digits.reverse()
    return DigitWord(tuple(digits), system.order)


def _check_digits(digits, system):
    for d in digits:
        if not isinstance(d, int) or d < 0 or d >= system.k:
            raise InvalidDigit(f"digit {d!r} outside alphabet {system.alphabet} of {system}")


def _has_factor_11(digits):
    return any(a == 1 and b == 1 for a, b in zip(digits, digits[1:]))


def value(word, system):
    """Value of a digit word; zeros on the significant end are ignored"""
    digits = list(word)
    _check_digits(digits, system)
    if system.is_msd:
        digits.reverse()

    if system.is_fibonacci:
        if _has_factor_11(digits):
            raise NonCanonical(f"{DigitWord(tuple(digits))} contains the factor 11")
        total, a, b = 0, 1, 2
        for d in digits:
            if d:
                total += a
            a, b = b, a + b
        return total

    total, weight = 0, 1
    for d in digits:
        total += d * weight
        weight *= system.k
    return total


def strip_insignificant_zeros(word, system):
    """Drop leading zeros (msd) or trailing zeros (lsd)"""
    digits = list(word)
    if system.is_msd:
        while digits and digits[0] == 0:
            digits.pop(0)
    else:
        while digits and digits[-1] == 0:
            digits.pop()
    return tuple(digits)


def is_canonical(word, system):
    """True iff word is the canonical representation of its value, up to
    insignificant zeros"""
    digits = list(word)
    try:
        _check_digits(digits, system)
    except InvalidDigit:
        return False
    if system.is_fibonacci and _has_factor_11(digits):
        return False
    return True


@dataclass(frozen=True)
class CanonicalAcceptor:
    """DFA over the digit alphabet accepting the canonical words of a system,
    insignificant zeros allowed. A missing transition means rejection of the
    word and of every extension of it."""

    transitions: Tuple[Tuple[Optional[int], ...], ...]
    accepting: frozenset
    initial: int = 0

    def step(self, state, digit):
        if state is None:
            return None
        return self.transitions[state][digit]

    def accepts(self, word):
        state = self.initial
        for d in word:
            state = self.step(state, d)
            if state is None:
                return False
        return state in self.accepting

    def _reachable_from(self, start):
        seen = {start}
        stack = [start]
        while stack:
            s = stack.pop()
            for t in self.transitions[s]:
                if t is not None and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def is_prefix_closed(self):
        """Every prefix of an accepted word is accepted"""
        for s in self._reachable_from(self.initial):
            if s in self.accepting:
                continue
            if self._reachable_from(s) & self.accepting:
                return False
        return True


def canonical_acceptor(system):
    if system.is_fibonacci:
        # state 0: last digit 0 (or nothing read), state 1: last digit 1
        return CanonicalAcceptor(((0, 1), (0, None)), frozenset({0, 1}))
    return CanonicalAcceptor((tuple(0 for _ in range(system.k)),), frozenset({0}))


def zeckendorf_words(length):
    """All no-11 binary words of exactly `length` digits"""
    words: List[Tuple[int, ...]] = [()]
    for _ in range(length):
        words = [w + (d,) for w in words for d in (0, 1) if not (d == 1 and w and w[-1] == 1)]
    return words
