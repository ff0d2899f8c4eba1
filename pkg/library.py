"""
Built-in corpus of automata, transducers and morphisms, plus independent
brute-force oracles for the sequences they compute.

The oracles never go through the automata machinery: they work on plain
integers and words, so they can be used to check it.
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, Hashable, List, Sequence

import numpy as np

from automaton import Dfao, UniformMorphism, combine, from_morphism, map_outputs, reverse
from config import DEFAULT_CONFIG
from dekking import transduce_dfao
from errors import NotBalanced, SizeLimit, UnknownName, ZeroInput
from numeration import BASE2_LSD, BASE2_MSD, FIB_MSD, represent
from transducer import Transducer

DEFAULT_MAX_DYCK_INDEX = DEFAULT_CONFIG["limits"]["max_dyck_index"]

DFAO = "dfao"
TRANSDUCER = "transducer"
MORPHISM = "morphism"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str
    obj: object
    note: str = ""


def _transducer(alphabet, rows):
    return Transducer(tuple(alphabet), tuple(rows))


# Thue-Morse h(0) = 01, h(1) = 10
MU = UniformMorphism(((0, 1), (1, 0)), (0, 1), 0)
# period-doubling 1 -> 10, 0 -> 11, seeded with 1
PD_MORPHISM = UniformMorphism(((1, 1), (1, 0)), (0, 1), 1)
DD = UniformMorphism(
    ((0, 1), (2, 3), (4, 5), (6, 7), (2, 8), (6, 5), (5, 6), (9, 3), (8, 9), (9, 8)),
    (0, 1, 0, 0, 1, 0, 1, 1, 0, 1),
    0,
)
MU2 = UniformMorphism(((0, 1, 1, 0), (1, 0, 0, 1)), (0, 1), 0)

T = Dfao(((0, 1), (1, 0)), (0, 1), BASE2_MSD)
PD = Dfao(((0, 1), (0, 0)), (1, 0), BASE2_MSD)
RS = Dfao(((0, 1), (0, 2), (3, 1), (3, 2)), (0, 0, 1, 1), BASE2_MSD)
D = from_morphism(DD)

# parity of the Zeckendorf digit sum; states are (parity, last digit)
FTM = Dfao(((0, 1), (2, None), (2, 3), (0, None)), (0, 1, 1, 0), FIB_MSD)
# 1 minus the second-to-last Zeckendorf digit
NSLDF = Dfao(((0, 1), (2, None), (0, 1)), (1, 1, 0), FIB_MSD)

# parity of the 2-adic valuation, i.e. words matching (0|1)*10(00)*
NU_MOD2 = Dfao(((0, 1), (2, 1), (1, 1)), (0, 0, 1), BASE2_MSD)
# odd part mod 8, read from the least significant digit
G8 = Dfao(
    ((0, 1), (2, 3), (4, 5), (6, 7), (4, 4), (5, 5), (6, 6), (7, 7)),
    (1, 1, 1, 3, 1, 5, 3, 7),
    BASE2_LSD,
)
# sums of three squares, lsd: strip 00 pairs, then the rest must not end in 111
S3_LSD = Dfao(((1, 2), (0, 3), (3, 4), (3, 3), (3, 5), (5, 5)), (1, 1, 1, 1, 1, 0), BASE2_LSD)
# n is a sum of three squares: not of the form 4^i (8j + 7)
S3 = reverse(S3_LSD)

TSUM1_REV = Dfao(
    ((1, 2), (3, 3), (4, 5), (3, 6), (4, 4), (5, 5), (6, 3)),
    (0, 0, 1, 0, 1, 0, 1),
    BASE2_LSD,
)

RUNSUM2 = _transducer((0, 1), ({0: (0, 0), 1: (1, 1)}, {0: (1, 1), 1: (0, 0)}))
RUNPROD1357 = _transducer(
    (1, 3, 5, 7),
    (
        {1: (0, 1), 3: (1, 3), 5: (2, 5), 7: (3, 7)},
        {1: (1, 3), 3: (0, 1), 5: (3, 7), 7: (2, 5)},
        {1: (2, 5), 3: (3, 7), 5: (0, 1), 7: (1, 3)},
        {1: (3, 7), 3: (2, 5), 5: (1, 3), 7: (0, 1)},
    ),
)
XOR = _transducer(
    (0, 1),
    ({0: (1, 0), 1: (2, 0)}, {0: (1, 0), 1: (2, 1)}, {0: (1, 1), 1: (2, 0)}),
)

NEST_SINK = 4


def _nest_rows():
    """Depth counter where 0 opens and 1 closes; leaving 0..3 is fatal"""
    rows = []
    for depth in range(NEST_SINK):
        row = {}
        for symbol, step in ((0, 1), (1, -1)):
            target = depth + step
            if 0 <= target < NEST_SINK:
                row[symbol] = (target, target)
            else:
                row[symbol] = (NEST_SINK, NEST_SINK)
        rows.append(row)
    rows.append({0: (NEST_SINK, NEST_SINK), 1: (NEST_SINK, NEST_SINK)})
    return rows


NEST = _transducer((0, 1), _nest_rows())


CORPUS: Dict[str, CorpusEntry] = {
    entry.name: entry
    for entry in (
        CorpusEntry("T", DFAO, T, "Thue-Morse sequence"),
        CorpusEntry("PD", DFAO, PD, "period-doubling, fixed point of 1 -> 10, 0 -> 11"),
        CorpusEntry("RS", DFAO, RS, "Rudin-Shapiro, parity of the number of 11 blocks"),
        CorpusEntry("D", DFAO, D, "overlap-free Dyck word d = 01 y_0 y_1 ..."),
        CorpusEntry("FTM", DFAO, FTM, "Fibonacci-Thue-Morse, Zeckendorf digit sum mod 2"),
        CorpusEntry("NSLDF", DFAO, NSLDF, "1 minus the second-to-last Zeckendorf digit"),
        CorpusEntry("NU_MOD2", DFAO, NU_MOD2, "2-adic valuation mod 2"),
        CorpusEntry("G8", DFAO, G8, "odd part mod 8, lsd"),
        CorpusEntry("S3", DFAO, S3, "sums of three squares"),
        CorpusEntry("S3_LSD", DFAO, S3_LSD, "sums of three squares, lsd"),
        CorpusEntry("TSUM1_REV", DFAO, TSUM1_REV, "running sum of Thue-Morse, lsd"),
        CorpusEntry("RUNSUM2", TRANSDUCER, RUNSUM2, "running sum mod 2"),
        CorpusEntry("RUNPROD1357", TRANSDUCER, RUNPROD1357, "running product mod 8"),
        CorpusEntry("XOR", TRANSDUCER, XOR, "xor of consecutive symbols"),
        CorpusEntry("NEST", TRANSDUCER, NEST, "nesting level, 4 once out of range"),
        CorpusEntry("mu", MORPHISM, MU, "Thue-Morse morphism"),
        CorpusEntry("pd", MORPHISM, PD_MORPHISM, "period-doubling morphism"),
        CorpusEntry("dd", MORPHISM, DD, "morphism for d with coding c"),
        CorpusEntry("mu2", MORPHISM, MU2, "square of the Thue-Morse morphism"),
    )
}


def get(name: str) -> CorpusEntry:
    try:
        return CORPUS[name]
    except KeyError:
        raise UnknownName(f"no built-in automaton, transducer or morphism named {name!r}") from None


def names(kind=None) -> List[str]:
    return [n for n, e in CORPUS.items() if kind is None or e.kind == kind]


# --- factorials as sums of three squares ---------------------------------


def factorial_automata():
    """Every intermediate automaton of the n! in S3 pipeline, by name"""
    g_mod8 = reverse(G8)
    nu_runsum = transduce_dfao(NU_MOD2, RUNSUM2)
    g_runprod = transduce_dfao(g_mod8, RUNPROD1357)
    s = combine([nu_runsum, g_runprod], lambda u, v: int(u == 1 or v != 7))
    not_s_rev = reverse(map_outputs(s, lambda x: 1 - x))
    return {
        "G_MOD8": g_mod8,
        "NU_RUNSUM": nu_runsum,
        "G_RUNPROD": g_runprod,
        "S": s,
        "NOT_S_REV": not_s_rev,
    }


# --- oracles -------------------------------------------------------------


def thue_morse(n: int) -> int:
    return bin(n).count("1") % 2


def thue_morse_prefix(count: int) -> List[int]:
    return [thue_morse(n) for n in range(count)]


def running_sum_tm(j: int) -> int:
    """t_1[j]: each aligned pair of Thue-Morse symbols sums to 1"""
    return ((j + 1) // 2 + (thue_morse(j) if j % 2 == 0 else 0)) % 2


def rudin_shapiro(n: int) -> int:
    return bin(n & (n >> 1)).count("1") % 2


def period_doubling_prefix(count: int) -> List[int]:
    return PD_MORPHISM.prefix(count)


def fibonacci_word_prefix(count: int) -> List[int]:
    """Fixed point of 0 -> 01, 1 -> 0"""
    word = [0]
    while len(word) < count:
        word = [c for a in word for c in ((0, 1) if a == 0 else (0,))]
    return word[:count]


def zeckendorf_digit_sum_parity(n: int) -> int:
    return sum(represent(n, FIB_MSD)) % 2


def second_to_last_zeckendorf_digit(n: int) -> int:
    digits = represent(n, FIB_MSD).digits
    return digits[-2] if len(digits) >= 2 else 0


def nu2(n: int) -> int:
    if n == 0:
        raise ZeroInput("the 2-adic valuation of 0 is undefined")
    return (n & -n).bit_length() - 1


def nu2_mod2(n: int) -> int:
    return nu2(n) % 2


def nu2_factorial_mod2(n: int) -> int:
    """ν2(n!) = n - s_2(n)"""
    return (n - bin(n).count("1")) % 2


def g_mod8(n: int) -> int:
    """Odd part of n mod 8, with g(0) = 1"""
    if n == 0:
        return 1
    return (n >> nu2(n)) % 8


def in_S3(n: int) -> bool:
    """Legendre: n is a sum of three squares unless n = 4^i (8j + 7)"""
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def factorial_in_S3_prefix(count: int) -> List[int]:
    """[n! in S3 for n < count] via ν2(n!) and the running product of g"""
    result = []
    product = 1
    for n in range(count):
        product = (product * g_mod8(n)) % 8
        even_power = nu2_factorial_mod2(n) == 0
        result.append(int(not (even_power and product == 7)))
    return result


def iterated_runsum(word: Sequence[int], times: int) -> List[int]:
    """m-fold running sum mod 2 of a binary word"""
    arr = np.asarray(word, dtype=np.uint8)
    for _ in range(times):
        arr = np.bitwise_xor.accumulate(arr) if arr.size else arr
    return arr.tolist()


def t_binomial_value(m: int, k: int) -> int:
    """t_m[k] as the sum over j of binom(m-1+k-j, k-j) t[j], mod 2"""
    if m == 0:
        return thue_morse(k)
    total = 0
    for j in range(k + 1):
        top, bottom = m - 1 + k - j, k - j
        # Lucas: binom(top, bottom) is odd iff bottom's bits are inside top's
        if top & bottom == bottom:
            total ^= thue_morse(j)
    return total


def t_pow2_block_value(n: int, k: int) -> int:
    """t_{2^n}[k] = t_1[k >> n] + ((k >> n) + 1) t[k mod 2^n], mod 2"""
    high = k >> n
    return (running_sum_tm(high) + (high + 1) * thue_morse(k % (1 << n))) % 2


def t_pow2_formula(n: int, k: int) -> int:
    """Four-case closed form for t_{2^n}[k]"""
    block = 1 << n
    q, r = k >> (n + 2), k % (block << 2)
    if r < block:
        return (thue_morse(q) + thue_morse(r)) % 2
    if r < 2 * block:
        return 1
    if r < 3 * block:
        return (thue_morse(q) + thue_morse(r - 2 * block)) % 2
    return 0


def binomial_mod2(a: int, b: int) -> int:
    return comb(a, b) % 2


def _h_power(x: int, n: int) -> List[int]:
    word = [x]
    for _ in range(n):
        word = [c for a in word for c in ((0, 1) if a == 0 else (1, 0))]
    return word


def morphic_running_sum_prefix(n: int, count: int) -> List[int]:
    """First `count` symbols of g_n(t), g_n(x) = h^n(x) 1^(2^n) h^n(x) 0^(2^n)"""
    images = {}
    for x in (0, 1):
        hx = _h_power(x, n)
        images[x] = hx + [1] * (1 << n) + hx + [0] * (1 << n)
    out: List[int] = []
    j = 0
    while len(out) < count:
        out.extend(images[thue_morse(j)])
        j += 1
    return out[:count]


# --- overlap-free Dyck words ---------------------------------------------


def mu(word: Sequence[int]) -> List[int]:
    return [c for a in word for c in ((0, 1) if a == 0 else (1, 0))]


def dyck_x(n: int, max_index: int = DEFAULT_MAX_DYCK_INDEX) -> List[int]:
    if n > max_index:
        raise SizeLimit(f"x_{n} has {6 * 4 ** n - 4} symbols; limit is index {max_index}")
    x = [1, 0]
    for _ in range(n):
        x = mu([1, 0, 1] + mu(x) + [1, 0, 1])
    return x


def dyck_y(n: int, max_index: int = DEFAULT_MAX_DYCK_INDEX) -> List[int]:
    """y_n = 00 x_n 11"""
    return [0, 0] + dyck_x(n, max_index) + [1, 1]


def d_prefix(count: int, max_index: int = DEFAULT_MAX_DYCK_INDEX) -> List[int]:
    """01 y_0 y_1 ..., cut to `count` symbols"""
    word = [0, 1]
    n = 0
    while len(word) < count:
        word.extend(dyck_y(n, max_index))
        n += 1
    return word[:count]


def d_mu2_differences(limit: int) -> List[int]:
    """{2} ∪ {2·4^n - 2} ∪ {2·4^n + 1} for n >= 1, below limit"""
    found = {2}
    power = 4
    while 2 * power - 2 < limit:
        found.add(2 * power - 2)
        found.add(2 * power + 1)
        power *= 4
    return sorted(i for i in found if i < limit)


def nesting_zero_positions(limit: int) -> List[int]:
    """Positions 2·4^i - 1 below limit"""
    positions = []
    power = 1
    while 2 * power - 1 < limit:
        positions.append(2 * power - 1)
        power *= 4
    return positions


def nesting_level(word: Sequence[int]) -> int:
    """Nesting level of a Dyck word with 1 as the left parenthesis"""
    depth = deepest = 0
    for i, c in enumerate(word):
        depth += 1 if c == 1 else -1
        if depth < 0:
            raise NotBalanced(f"unmatched right parenthesis at position {i}")
        deepest = max(deepest, depth)
    if depth != 0:
        raise NotBalanced(f"{depth} unmatched left parentheses")
    return deepest


def complement(word: Sequence[int]) -> List[int]:
    return [1 - c for c in word]


def is_overlap_free(word: Sequence[Hashable]) -> bool:
    """No factor axaxa: for no period p is there a run of p + 1 positions
    with w[i] = w[i + p]"""
    symbols = {s: i for i, s in enumerate(dict.fromkeys(word))}
    arr = np.fromiter((symbols[s] for s in word), dtype=np.int64, count=len(word))
    n = arr.size
    for p in range(1, (n - 1) // 2 + 1):
        equal = (arr[:-p] == arr[p:]).astype(np.int64)
        # longest run of ones: distance since the last zero
        cumulative = np.cumsum(equal)
        last_reset = np.maximum.accumulate(np.where(equal == 0, cumulative, 0))
        if (cumulative - last_reset).max(initial=0) >= p + 1:
            return False
    return True
