"""
Text formats for transducers, DFAOs and morphisms, and DOT export.

Transducer files:

    {0, 1}

    0
    0 -> 0 / 0
    1 -> 1 / 1

DFAO files start with an optional numeration header (msd_2 by default)
followed by blocks "id output" and edges "digit -> target". In both
formats the first block is the initial state, lines starting with '#' are
comments, and '#' as a symbol or output stands for the dead marker.
"""

import re
from typing import Dict, Hashable, List, Optional, Tuple

import graphviz

from automaton import DEAD, Dfao, UniformMorphism, symbol_key
from errors import ParseError
from numeration import BASE2_MSD, NumerationSystem
from transducer import Transducer

HEADER_RE = re.compile(r"^(msd|lsd)_\w+$")
TRANSDUCER_EDGE_RE = re.compile(r"^(\S+)\s*->\s*(\S+)\s*/\s*(\S+)$")
DFAO_EDGE_RE = re.compile(r"^(\S+)\s*->\s*(\S+)$")


def _content_lines(text):
    """(line number, stripped text) for every non-blank, non-comment line"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#") and "->" not in line:
            continue
        yield number, line


def parse_symbol(token, line=None) -> Hashable:
    if token == "#":
        return DEAD
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer symbol, got {token!r}", line) from None


def format_symbol(symbol) -> str:
    return "#" if symbol is DEAD else str(symbol)


def _resolve_ids(blocks, targets, kind):
    """Map state ids to indices in order of their blocks"""
    index: Dict[str, int] = {}
    for state_id, number in blocks:
        if state_id in index:
            raise ParseError(f"{kind} state {state_id} defined twice", number)
        index[state_id] = len(index)
    for target, number in targets:
        if target not in index:
            raise ParseError(f"transition to undefined state {target}", number)
    return index


def parse_transducer(text: str) -> Transducer:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty transducer file")

    number, first = lines[0]
    if not (first.startswith("{") and first.endswith("}")):
        raise ParseError("expected the input alphabet as {a, b, ...}", number)
    inner = first[1:-1].strip()
    alphabet = tuple(parse_symbol(tok.strip(), number) for tok in inner.split(",")) if inner else ()

    blocks: List[Tuple[str, int]] = []
    raw_edges: List[List[Tuple[Hashable, str, Hashable, int]]] = []
    targets = []
    for number, line in lines[1:]:
        match = TRANSDUCER_EDGE_RE.match(line)
        if match:
            if not blocks:
                raise ParseError("transition before any state", number)
            symbol, target, out = match.groups()
            raw_edges[-1].append((parse_symbol(symbol, number), target, parse_symbol(out, number), number))
            targets.append((target, number))
        elif len(line.split()) == 1:
            blocks.append((line, number))
            raw_edges.append([])
        else:
            raise ParseError(f"cannot read {line!r}", number)
    if not blocks:
        raise ParseError("no states defined")

    index = _resolve_ids(blocks, targets, "transducer")
    rows = []
    for edges in raw_edges:
        row = {}
        for symbol, target, out, number in edges:
            if symbol in row:
                raise ParseError(f"two transitions on {format_symbol(symbol)}", number)
            if symbol not in alphabet:
                raise ParseError(f"symbol {format_symbol(symbol)} is not in the alphabet", number)
            row[symbol] = (index[target], out)
        rows.append(row)
    return Transducer(alphabet, tuple(rows), 0)


def write_transducer(T: Transducer) -> str:
    parts = ["{" + ", ".join(format_symbol(a) for a in T.alphabet) + "}"]
    for v, row in enumerate(T.edges):
        lines = [str(v)]
        for a in T.alphabet:
            target, out = row[a]
            lines.append(f"{format_symbol(a)} -> {target} / {format_symbol(out)}")
        parts.append("\n".join(lines))
    return "\n\n".join(parts) + "\n"


def parse_dfao(text: str) -> Dfao:
    lines = list(_content_lines(text))
    numeration = BASE2_MSD
    if lines and HEADER_RE.match(lines[0][1]):
        numeration = NumerationSystem.from_header(lines[0][1])
        lines = lines[1:]

    blocks: List[Tuple[str, int]] = []
    outputs: List[Hashable] = []
    raw_edges: List[List[Tuple[int, str, int]]] = []
    targets = []
    for number, line in lines:
        match = DFAO_EDGE_RE.match(line)
        if match:
            if not blocks:
                raise ParseError("transition before any state", number)
            digit_token, target = match.groups()
            try:
                digit = int(digit_token)
            except ValueError:
                raise ParseError(f"bad digit {digit_token!r}", number) from None
            if not 0 <= digit < numeration.k:
                raise ParseError(f"digit {digit} outside {numeration}", number)
            raw_edges[-1].append((digit, target, number))
            targets.append((target, number))
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'state output', got {line!r}", number)
        blocks.append((tokens[0], number))
        outputs.append(parse_symbol(tokens[1], number))
        raw_edges.append([])
    if not blocks:
        raise ParseError("no states defined")

    index = _resolve_ids(blocks, targets, "DFAO")
    transitions = []
    for edges in raw_edges:
        row: List[Optional[int]] = [None] * numeration.k
        for digit, target, number in edges:
            if row[digit] is not None:
                raise ParseError(f"two transitions on digit {digit}", number)
            row[digit] = index[target]
        transitions.append(tuple(row))
    return Dfao(transitions, outputs, numeration, 0)


def write_dfao(M: Dfao) -> str:
    parts = [M.numeration.header]
    for q, row in enumerate(M.transitions):
        lines = [f"{q} {format_symbol(M.outputs[q])}"]
        lines.extend(f"{d} -> {t}" for d, t in enumerate(row) if t is not None)
        parts.append("\n".join(lines))
    return "\n\n".join(parts) + "\n"


def _parse_rules(text, number):
    rules = {}
    for item in text.split():
        left, sep, right = item.partition("->")
        if not sep or not left.isdigit() or not right.isdigit():
            raise ParseError(f"bad rule {item!r}", number)
        rules[int(left)] = tuple(int(c) for c in right)
    return rules


def parse_morphism(text: str) -> UniformMorphism:
    """Lines 'images: 0->01 1->10', optional 'coding: 0->0 1->1', 'seed: 0'"""
    fields = {}
    for number, line in _content_lines(text):
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", number)
        fields[key.strip()] = (value.strip().strip('"'), number)
    if "images" not in fields:
        raise ParseError("morphism file needs an images line")

    images = _parse_rules(*fields["images"])
    letters = sorted(images)
    if letters != list(range(len(letters))):
        raise ParseError("morphism letters must be 0..m-1", fields["images"][1])
    coding = tuple(letters)
    if "coding" in fields:
        rules = _parse_rules(*fields["coding"])
        coding = tuple(rules[a][0] if a in rules else a for a in letters)
    seed = int(fields["seed"][0]) if "seed" in fields else 0
    try:
        return UniformMorphism(tuple(images[a] for a in letters), coding, seed)
    except ValueError as e:
        raise ParseError(str(e), fields["images"][1]) from e


def write_morphism(m: UniformMorphism) -> str:
    if len(m.letters) > 10:
        raise ValueError("morphism files hold single-digit letters only")
    images = " ".join(f"{a}->{''.join(str(c) for c in m.images[a])}" for a in m.letters)
    coding = " ".join(f"{a}->{m.coding[a]}" for a in m.letters)
    return f"images: {images}\ncoding: {coding}\nseed: {m.seed}\n"


def _edge_labels(pairs):
    """Group labels by (source, target) so parallel edges share one arrow"""
    grouped: Dict[Tuple[int, int], List[str]] = {}
    for source, target, label in pairs:
        grouped.setdefault((source, target), []).append(label)
    return grouped


def dfao_graph(M: Dfao, name="dfao", rankdir="LR") -> graphviz.Digraph:
    dot = graphviz.Digraph(name)
    dot.attr(rankdir=rankdir)
    dot.node("start", label="", shape="none")
    for q, out in enumerate(M.outputs):
        dead = out is DEAD
        dot.node(
            str(q),
            label=f"{q}/{format_symbol(out)}",
            shape="circle",
            style="dashed" if dead else "solid",
        )
    dot.edge("start", str(M.initial))
    pairs = [(q, t, str(d)) for q, row in enumerate(M.transitions) for d, t in enumerate(row) if t is not None]
    for (source, target), labels in _edge_labels(pairs).items():
        dot.edge(str(source), str(target), label=",".join(labels))
    return dot


def transducer_graph(T: Transducer, name="transducer", rankdir="LR") -> graphviz.Digraph:
    dot = graphviz.Digraph(name)
    dot.attr(rankdir=rankdir)
    dot.node("start", label="", shape="none")
    for v in range(T.num_states):
        dot.node(str(v), shape="circle")
    dot.edge("start", str(T.initial))
    pairs = []
    for v, row in enumerate(T.edges):
        for a in sorted(row, key=symbol_key):
            target, out = row[a]
            pairs.append((v, target, f"{format_symbol(a)}/{format_symbol(out)}"))
    for (source, target), labels in _edge_labels(pairs).items():
        dot.edge(str(source), str(target), label=",".join(labels))
    return dot


def render_dot(obj, rankdir="LR") -> str:
    """DOT source for a Dfao or Transducer"""
    if isinstance(obj, Transducer):
        return transducer_graph(obj, rankdir=rankdir).source
    if isinstance(obj, Dfao):
        return dfao_graph(obj, rankdir=rankdir).source
    raise TypeError(f"cannot render {type(obj).__name__}")
