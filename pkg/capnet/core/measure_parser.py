"""
Measure mini-language.

    expr  := name [':' INT] | ('min' | 'max') '(' expr (',' expr)+ ')'
    name  := edge | mindeg | kclique | sqdeg | conn

Example: min(max(edge,mindeg),max(kclique:3,sqdeg))
"""
import re
from typing import List, Tuple

from .density import Leaf, MaxOf, MeasureExpr, MeasureKind, MinOf
from .errors import MeasureSyntaxError

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<punct>[(),:]))")

_LEAF_NAMES = {kind.value: kind for kind in MeasureKind}


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise MeasureSyntaxError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self, kind: str, value: str = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise MeasureSyntaxError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> MeasureExpr:
        _, name, pos = self.take("name")
        name = name.lower()
        if name in ("min", "max"):
            self.take("punct", "(")
            children = [self.expr()]
            while self.peek()[:2] == ("punct", ","):
                self.i += 1
                children.append(self.expr())
            self.take("punct", ")")
            if len(children) < 2:
                raise MeasureSyntaxError(f"{name}() needs at least two measures", pos)
            return MinOf(tuple(children)) if name == "min" else MaxOf(tuple(children))

        kind = _LEAF_NAMES.get(name)
        if kind is None:
            raise MeasureSyntaxError(f"unknown measure '{name}'", pos)
        k = None
        if self.peek()[:2] == ("punct", ":"):
            self.i += 1
            _, digits, int_pos = self.take("int")
            k = int(digits)
            if kind is not MeasureKind.K_CLIQUE:
                raise MeasureSyntaxError(f"measure '{name}' takes no parameter", int_pos)
        if kind is MeasureKind.K_CLIQUE and (k is None or k < 2):
            raise MeasureSyntaxError("kclique needs a clique size k >= 2, e.g. kclique:3", pos)
        return Leaf(kind, k)


def parse_measure(text: str) -> MeasureExpr:
    parser = _Parser(text)
    expr = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise MeasureSyntaxError(f"trailing input {tok[1]!r}", tok[2])
    return expr


def format_measure(m: MeasureExpr) -> str:
    """Canonical text form; parse_measure(format_measure(m)) == m."""
    if isinstance(m, Leaf):
        return f"{m.kind.value}:{m.k}" if m.k is not None else m.kind.value
    op = "min" if isinstance(m, MinOf) else "max"
    return f"{op}({','.join(format_measure(c) for c in m.children)})"
