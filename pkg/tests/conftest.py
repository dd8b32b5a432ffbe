from __future__ import annotations

import json
import random
import string
from pathlib import Path

import pytest

from javamap.lexer import tokenize
from javamap.model import SemanticModel, build_semantic_model
from javamap.parser import parse_unit
from javamap.scanner import ProjectInventory, scan_project
from javamap.syntax import CompilationUnit

FIXTURES = Path(__file__).parent / "fixtures"
PRINTSHOP = FIXTURES / "printshop"


@pytest.fixture(scope="session")
def printshop_root() -> str:
    return str(PRINTSHOP)


@pytest.fixture(scope="session")
def expected() -> dict:
    with open(FIXTURES / "printshop_expected.json", "r", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def printshop_inventory(printshop_root) -> ProjectInventory:
    return scan_project(printshop_root)


@pytest.fixture(scope="session")
def printshop_sources(printshop_inventory, printshop_root) -> dict[str, str]:
    sources = {}
    for record in printshop_inventory.components:
        sources[record.path] = (Path(printshop_root) / record.path).read_text(encoding="utf-8")
    return sources


@pytest.fixture(scope="session")
def printshop_units(printshop_sources) -> list[CompilationUnit]:
    return [
        parse_unit(tokenize(text, path), path)
        for path, text in sorted(printshop_sources.items())
    ]


@pytest.fixture(scope="session")
def printshop_model(printshop_inventory, printshop_units) -> SemanticModel:
    return build_semantic_model(printshop_inventory, printshop_units)


# --- random lexically-valid source text ---------------------------------------

_SAMPLE_LEXEMES = [
    "class", "interface", "if", "else", "while", "return", "int", "boolean",
    "alpha", "beta_2", "$gamma", "Widget", "x", "y9",
    "0", "42", "1234567", "0x1F", "0Xabc", "7L", "9l",
    "1.5", "0.25f", "3.", ".5", "2e10", "6.02e-23d", "5F",
    '"hi"', '"a\\"b"', '"tab\\t"', "'c'", "'\\n'", "'\\''",
    "true", "false", "null",
    "+", "-", "*", "/", "%", "=", "==", "!=", "<=", ">=", "&&", "||",
    "++", "--", "<<", ">>", ">>>", ">>>=", "+=", "~", "!", "?", ":",
    "(", ")", "{", "}", "[", "]", ";", ",", ".",
    "// line comment", "/* block */", "/* multi\nline */",
]

_WS_RUNS = [" ", "  ", "\t", "\n", " \n ", "\r\n", "\t\t\n"]


def random_token_text(rng: random.Random, max_tokens: int = 40) -> str:
    """Lexically valid text: sampled lexemes joined by random whitespace."""
    parts = []
    for _ in range(rng.randint(0, max_tokens)):
        parts.append(rng.choice(_SAMPLE_LEXEMES))
        parts.append(rng.choice(_WS_RUNS))
    if rng.random() < 0.5:
        parts.append(rng.choice(string.ascii_lowercase))
    return "".join(parts)
