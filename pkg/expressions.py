"""
Tiny expression language for `combine`.

Variables a, b, c, ... stand for the outputs of the first, second, third
DFAO. Supported: integer literals, + - * %, comparisons = != < <= > >=,
! & | and parentheses, e.g. "a=1 | !(b=7)". Booleans evaluate to 0/1.
"""

import operator
import re
from typing import Callable, List, Tuple

from errors import ExpressionError

TOKEN_RE = re.compile(
    r"(?P<SKIPWS>\s+)"
    r"|(?P<NUMBER>\d+)"
    r"|(?P<VARIABLE>[a-z])"
    r"|(?P<OP>!=|<=|>=|[=<>+\-*%&|])"
    r"|(?P<NOT>!)"
    r"|(?P<LPAREN>\()"
    r"|(?P<RPAREN>\))"
    r"|(?P<ERROR>.)"
)

BINARY = {
    "|": (1, lambda x, y: int(bool(x) or bool(y))),
    "&": (2, lambda x, y: int(bool(x) and bool(y))),
    "=": (3, lambda x, y: int(x == y)),
    "!=": (3, lambda x, y: int(x != y)),
    "<": (3, lambda x, y: int(x < y)),
    "<=": (3, lambda x, y: int(x <= y)),
    ">": (3, lambda x, y: int(x > y)),
    ">=": (3, lambda x, y: int(x >= y)),
    "+": (4, operator.add),
    "-": (4, operator.sub),
    "*": (5, operator.mul),
    "%": (5, operator.mod),
}

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    tokens = []
    for mo in TOKEN_RE.finditer(text):
        kind = mo.lastgroup
        if kind == "SKIPWS":
            continue
        if kind == "ERROR":
            raise ExpressionError(f"unexpected character {mo.group()!r} at column {mo.start()}")
        tokens.append((kind, mo.group(), mo.start()))
    return tokens


def to_rpn(tokens: List[Token]) -> List[Token]:
    """Shunting-yard; every binary operator is left associative"""
    output, stack = [], []
    expect_operand = True
    for token in tokens:
        kind, value, column = token
        if kind in ("NUMBER", "VARIABLE"):
            if not expect_operand:
                raise ExpressionError(f"missing operator before {value!r} at column {column}")
            output.append(token)
            expect_operand = False
        elif kind in ("NOT", "LPAREN"):
            if not expect_operand:
                raise ExpressionError(f"missing operator before {value!r} at column {column}")
            stack.append(token)
        elif kind == "RPAREN":
            while stack and stack[-1][0] != "LPAREN":
                output.append(stack.pop())
            if not stack:
                raise ExpressionError(f"too many closing parentheses at column {column}")
            stack.pop()
            while stack and stack[-1][0] == "NOT":
                output.append(stack.pop())
            expect_operand = False
        else:
            if expect_operand:
                raise ExpressionError(f"operator {value!r} at column {column} needs a left operand")
            precedence = BINARY[value][0]
            while stack and (stack[-1][0] == "NOT" or (stack[-1][0] == "OP" and BINARY[stack[-1][1]][0] >= precedence)):
                output.append(stack.pop())
            stack.append(token)
            expect_operand = True
    if expect_operand:
        raise ExpressionError("expression ends where an operand is expected")
    while stack:
        token = stack.pop()
        if token[0] == "LPAREN":
            raise ExpressionError(f"unclosed parenthesis at column {token[2]}")
        output.append(token)
    return output


def compile_expression(text: str) -> Callable[..., int]:
    """Callable f(*outputs) evaluating the expression"""
    rpn = to_rpn(tokenize(text))
    if not rpn:
        raise ExpressionError("empty expression")

    def evaluate(*values):
        stack = []
        for kind, value, column in rpn:
            if kind == "NUMBER":
                stack.append(int(value))
            elif kind == "VARIABLE":
                index = ord(value) - ord("a")
                if index >= len(values):
                    raise ExpressionError(f"variable {value} refers to DFAO #{index + 1}, only {len(values)} given")
                stack.append(values[index])
            elif kind == "NOT":
                stack.append(int(not stack.pop()))
            else:
                right, left = stack.pop(), stack.pop()
                try:
                    stack.append(BINARY[value][1](left, right))
                except (TypeError, ZeroDivisionError) as e:
                    raise ExpressionError(f"cannot evaluate {value!r} on {left!r}, {right!r}: {e}") from e
        return int(stack[0]) if isinstance(stack[0], bool) else stack[0]

    evaluate.arity = 1 + max((ord(v) - ord("a") for k, v, _ in rpn if k == "VARIABLE"), default=-1)
    return evaluate
