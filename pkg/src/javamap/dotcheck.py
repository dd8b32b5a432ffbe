"""Minimal well-formedness checker for the DOT documents this tool emits.

Accepts the digraph subset the emitters produce: quoted or bare ids,
attribute lists, graph attributes, subgraphs, node statements, and directed
edge statements. Returns explicit node and edge statement counts so tests
can compare them against model entity counts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class DotSyntaxError(Exception):
    pass


@dataclass
class DotStats:
    node_count: int
    edge_count: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<quoted>"(?:[^"\\]|\\.)*")
  | (?P<arrow>->)
  | (?P<id>[A-Za-z0-9_.#()\-]+)
  | (?P<sym>[{}\[\]=;,])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DotSyntaxError(f"bad character at offset {pos}: {text[pos]!r}")
        if m.lastgroup != "ws":
            tokens.append(m.group())
        pos = m.end()
    return tokens


class _DotParser:
    def __init__(self, tokens: list[str]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.nodes = 0
        self.edges = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise DotSyntaxError("unexpected end of document")
        self.pos += 1
        return tok

    def expect(self, want: str) -> None:
        tok = self.take()
        if tok != want:
            raise DotSyntaxError(f"expected {want!r}, found {tok!r}")

    def is_id(self, tok: str | None) -> bool:
        if tok is None or tok in ("{", "}", "[", "]", "=", ";", ",", "->"):
            return False
        return True

    def graph(self) -> DotStats:
        if self.take() != "digraph":
            raise DotSyntaxError("document must start with 'digraph'")
        if self.is_id(self.peek()):
            self.take()
        self.body()
        if self.peek() is not None:
            raise DotSyntaxError(f"trailing content: {self.peek()!r}")
        return DotStats(self.nodes, self.edges)

    def body(self) -> None:
        self.expect("{")
        while self.peek() != "}":
            self.statement()
        self.take()

    def statement(self) -> None:
        tok = self.take()
        if tok == "subgraph":
            if self.is_id(self.peek()):
                self.take()
            self.body()
            return
        if not self.is_id(tok):
            raise DotSyntaxError(f"expected a statement, found {tok!r}")
        if self.peek() == "=":  # graph attribute: key=value;
            self.take()
            value = self.take()
            if not self.is_id(value):
                raise DotSyntaxError(f"expected attribute value, found {value!r}")
            self.expect(";")
            return
        if tok in ("node", "edge", "graph") and self.peek() == "[":
            self.attr_list()
            self.expect(";")
            return
        arrows = 0
        while self.peek() == "->":
            self.take()
            target = self.take()
            if not self.is_id(target):
                raise DotSyntaxError(f"expected edge target, found {target!r}")
            arrows += 1
        if self.peek() == "[":
            self.attr_list()
        self.expect(";")
        if arrows:
            self.edges += arrows
        else:
            self.nodes += 1

    def attr_list(self) -> None:
        self.expect("[")
        while self.peek() != "]":
            key = self.take()
            if not self.is_id(key):
                raise DotSyntaxError(f"expected attribute name, found {key!r}")
            self.expect("=")
            value = self.take()
            if not self.is_id(value):
                raise DotSyntaxError(f"expected attribute value, found {value!r}")
            if self.peek() == ",":
                self.take()
        self.take()


def check_dot(text: str) -> DotStats:
    """Validate a DOT document; returns node/edge statement counts."""
    return _DotParser(_tokenize(text)).graph()
