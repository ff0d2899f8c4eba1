#!/usr/bin/env python3
"""
Automatic-sequence transduction toolkit - command-line launcher.

Transduce, reverse, minimize and combine automata stored as text files,
evaluate and compare them, and export graphs and iterated running-sum
bitmaps.
"""

import argparse
import sys
from pathlib import Path

from tqdm import tqdm

import library
from automaton import (
    DEAD,
    Dfao,
    apply_morphism,
    combine,
    count_states,
    equivalent,
    from_morphism,
    map_outputs,
    minimize,
    minimize_partial,
    reverse,
)
from config import load_config
from dekking import transduce_dfao
from errors import (
    ExpressionError,
    MissingTransition,
    ParseError,
    TransductionError,
    UnknownName,
    UnknownNumeration,
)
from expressions import compile_expression
from extension import transduce_numeration
from formats import (
    parse_dfao,
    parse_morphism,
    parse_transducer,
    render_dot,
    write_dfao,
)
from fractal import render_fractal, save_bitmap, to_pbm
from transducer import Transducer

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3

PARSE_ERRORS = (ParseError, UnknownNumeration, MissingTransition, ExpressionError)


def status(message):
    print(message, file=sys.stderr)


def check_dependencies():
    """Check if all required dependencies are installed"""
    required_packages = [
        ("numpy", "numpy"),
        ("Pillow", "PIL"),
        ("tqdm", "tqdm"),
        ("graphviz", "graphviz"),
    ]

    missing_packages = []
    for package_name, import_name in required_packages:
        try:
            __import__(import_name)
        except ImportError:
            missing_packages.append(package_name)

    if missing_packages:
        status("❌ Missing required packages:")
        for package in missing_packages:
            status(f"   - {package}")
        status("\n💡 Install missing packages with:")
        status(f"   pip install {' '.join(missing_packages)}")
        return False

    status("✅ All dependencies are installed!")
    return True


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser exiting with status 1 on bad usage"""

    def error(self, message):
        self.print_usage(sys.stderr)
        status(f"❌ {message}")
        sys.exit(EXIT_USAGE)


class Workspace:
    """Resolves names to automata and writes results"""

    def __init__(self, config, output_dir=None):
        self.config = config
        self.results_dir = Path(output_dir or config["output"]["results_dir"])
        self.automata_dir = Path(config["library"]["automata_dir"])
        self.transducers_dir = Path(config["library"]["transducers_dir"])
        self.morphisms_dir = Path(config["library"]["morphisms_dir"])

    def _candidates(self, name, library_dir):
        yield Path(name)
        yield self.results_dir / f"{name}.txt"
        yield library_dir / f"{name}.txt"

    def _load(self, name, library_dir, parse, kind):
        for path in self._candidates(name, library_dir):
            if path.is_file():
                return parse(path.read_text())
        entry = library.get(name)
        if entry.kind != kind:
            raise UnknownName(f"{name!r} is a {entry.kind}, expected a {kind}")
        return entry.obj

    def dfao(self, name) -> Dfao:
        try:
            return self._load(name, self.automata_dir, parse_dfao, library.DFAO)
        except UnknownName:
            # a morphism name promotes to its DFAO
            morphism = self._load(name, self.morphisms_dir, parse_morphism, library.MORPHISM)
            return from_morphism(morphism)

    def transducer(self, name) -> Transducer:
        return self._load(name, self.transducers_dir, parse_transducer, library.TRANSDUCER)

    def save(self, name, M: Dfao):
        self.results_dir.mkdir(parents=True, exist_ok=True)
        path = self.results_dir / f"{name}.txt"
        path.write_text(write_dfao(M))
        status(f"📁 Saved {name} ({M.num_states} states) to {path}")
        return path


def parse_rules(text):
    """'0->0110 1->1001' to {0: (0, 1, 1, 0), 1: (1, 0, 0, 1)}"""
    rules = {}
    for item in text.replace(",", " ").split():
        left, sep, right = item.partition("->")
        if not sep or not right:
            raise ParseError(f"bad rule {item!r}, expected like 0->01")
        try:
            rules[int(left)] = tuple(int(c) for c in right)
        except ValueError:
            raise ParseError(f"bad rule {item!r}, expected like 0->01") from None
    return rules


def format_word(symbols):
    symbols = list(symbols)
    if not symbols:
        return "ε"
    text = [str(s) for s in symbols]
    if all(len(t) == 1 for t in text):
        return "".join(text)
    return " ".join(text)


def cmd_transduce(ws, args):
    M, T = ws.dfao(args.dfao), ws.transducer(args.transducer)
    result = transduce_numeration(M, T, ws.config["limits"]["max_dekking_states"])
    ws.save(args.out, result)
    status(f"✅ Transduced {args.dfao} with {args.transducer}")


def cmd_reverse(ws, args):
    ws.save(args.out, reverse(ws.dfao(args.dfao)))


def cmd_minimize(ws, args):
    M = ws.dfao(args.dfao)
    ws.save(args.out, minimize(M) if M.is_complete() else minimize_partial(M))


def cmd_combine(ws, args):
    f = compile_expression(args.expr)
    machines = [ws.dfao(name) for name in args.dfaos]
    if f.arity > len(machines):
        raise ExpressionError(f"expression uses {f.arity} variables but {len(machines)} DFAOs were given")
    ws.save(args.out, combine(machines, f))


def cmd_map(ws, args):
    rules = parse_rules(args.mapping)
    M = ws.dfao(args.dfao)
    missing = set(M.outputs) - set(rules)
    if missing:
        raise ParseError(f"mapping does not cover outputs {sorted(missing)}")
    ws.save(args.out, minimize_partial(map_outputs(M, lambda out: rules[out][0])))


def cmd_image(ws, args):
    ws.save(args.out, apply_morphism(ws.dfao(args.dfao), parse_rules(args.mapping)))


def cmd_eval(ws, args):
    limit = ws.config["limits"]["max_eval_terms"]
    if args.count > limit:
        raise TransductionError(f"refusing to print more than {limit} terms")
    print(format_word(ws.dfao(args.dfao).outputs_prefix(args.count)))


def cmd_equiv(ws, args):
    result = equivalent(ws.dfao(args.first), ws.dfao(args.second))
    if result:
        print("TRUE")
    else:
        print(f"FALSE {result.witness}")


def cmd_states(ws, args):
    M = ws.dfao(args.dfao)
    print(count_states(M, DEAD) if args.without_dead else count_states(M))


def cmd_dot(ws, args):
    try:
        obj = ws.dfao(args.name)
    except UnknownName:
        obj = ws.transducer(args.name)
    except ParseError:
        obj = ws.transducer(args.name)
    text = render_dot(obj, rankdir=ws.config["output"]["dot_rankdir"])
    if args.output:
        Path(args.output).write_text(text)
        status(f"📁 Wrote {args.output}")
    else:
        print(text, end="")


def cmd_fractal(ws, args):
    M, T = ws.dfao(args.dfao), ws.transducer(args.transducer)
    bitmap = render_fractal(
        M,
        T,
        args.rows,
        args.cols,
        max_pixels=ws.config["limits"]["max_fractal_pixels"],
        rows_iter=lambda rows: tqdm(rows, total=args.rows, desc="🔁 rows", file=sys.stderr, disable=None),
    )
    if args.output:
        save_bitmap(bitmap, args.output)
        status(f"📁 Wrote {args.output}")
    else:
        print(to_pbm(bitmap), end="")


def cmd_runsums(ws, args):
    M, T = ws.dfao(args.dfao), ws.transducer(args.transducer)
    limit = ws.config["limits"]["max_dekking_states"]
    current = M
    for i in tqdm(range(1, args.times + 1), desc="🔁 transductions", file=sys.stderr, disable=None):
        current = transduce_dfao(current, T, limit)
        print(f"{i} {current.num_states}")


def build_parser():
    parser = UsageErrorParser(
        description="Transduction of automatic sequences",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py transduce TSUM1 RUNSUM2 T      # running sum of Thue-Morse
  python main.py states TSUM1                   # prints 8
  python main.py eval FTM 20                    # first 20 terms
  python main.py combine S "a=1 | b!=7" NU_RUNSUM G_RUNPROD
  python main.py fractal T RUNSUM2 512 512 --output fig.png
        """,
    )
    parser.add_argument("--config", default="config.json", help="Configuration file")
    parser.add_argument("--output-dir", help="Directory for results (overrides config)")
    parser.add_argument("--check-deps", action="store_true", help="Check dependencies and exit")

    sub = parser.add_subparsers(dest="command", parser_class=UsageErrorParser)

    p = sub.add_parser("transduce", help="Transduce a DFAO")
    p.add_argument("out")
    p.add_argument("transducer")
    p.add_argument("dfao")
    p.set_defaults(handler=cmd_transduce)

    p = sub.add_parser("reverse", help="Reverse digit order")
    p.add_argument("out")
    p.add_argument("dfao")
    p.set_defaults(handler=cmd_reverse)

    p = sub.add_parser("minimize", help="Minimize a DFAO")
    p.add_argument("out")
    p.add_argument("dfao")
    p.set_defaults(handler=cmd_minimize)

    p = sub.add_parser("combine", help="Combine DFAOs pointwise")
    p.add_argument("out")
    p.add_argument("expr")
    p.add_argument("dfaos", nargs="+")
    p.set_defaults(handler=cmd_combine)

    p = sub.add_parser("map", help="Relabel outputs, e.g. '0->1 1->0'")
    p.add_argument("out")
    p.add_argument("dfao")
    p.add_argument("mapping")
    p.set_defaults(handler=cmd_map)

    p = sub.add_parser("image", help="Apply a uniform morphism to the outputs")
    p.add_argument("out")
    p.add_argument("dfao")
    p.add_argument("mapping")
    p.set_defaults(handler=cmd_image)

    p = sub.add_parser("eval", help="Print the first N terms")
    p.add_argument("dfao")
    p.add_argument("count", type=int)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("equiv", help="Check two DFAOs compute the same sequence")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("states", help="Print the number of states")
    p.add_argument("dfao")
    p.add_argument("--without-dead", action="store_true", help="Do not count # states")
    p.set_defaults(handler=cmd_states)

    p = sub.add_parser("dot", help="Graphviz DOT for a DFAO or transducer")
    p.add_argument("name")
    p.add_argument("--output")
    p.set_defaults(handler=cmd_dot)

    p = sub.add_parser("fractal", help="Bitmap of iterated transductions")
    p.add_argument("dfao")
    p.add_argument("transducer")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)
    p.add_argument("--output", help=".pbm or .png file (default: PBM on stdout)")
    p.set_defaults(handler=cmd_fractal)

    p = sub.add_parser("runsums", help="State counts of iterated transductions")
    p.add_argument("dfao")
    p.add_argument("transducer")
    p.add_argument("times", type=int)
    p.set_defaults(handler=cmd_runsums)

    return parser


def main(argv=None):
    """Main application launcher"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.check_deps:
        return EXIT_OK if check_dependencies() else EXIT_SEMANTIC
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        workspace = Workspace(load_config(args.config), args.output_dir)
        args.handler(workspace, args)
    except PARSE_ERRORS as e:
        status(f"❌ {e}")
        return EXIT_PARSE
    except TransductionError as e:
        status(f"❌ {e}")
        return EXIT_SEMANTIC
    except OSError as e:
        status(f"❌ {e}")
        return EXIT_SEMANTIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
