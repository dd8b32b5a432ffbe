"""Tokenizer for the Java subset.

Whitespace and comments are emitted as ordinary tokens so that concatenating
every lexeme reproduces the input byte-for-byte; the parser skips them. The
token grammar, including the reserved-word list, is documented in
docs/grammar.md. Columns and byte offsets are measured in UTF-8 bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else extends final finally float for goto if implements
    import instanceof int interface long native new package private protected
    public return short static strictfp super switch synchronized this throw
    throws transient try void volatile while
    """.split()
)

# Longest match first.
_OPERATORS = (
    ">>>=",
    "<<=", ">>=", ">>>",
    "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<", ">>",
    "=", "<", ">", "!", "~", "?", ":",
    "+", "-", "*", "/", "&", "|", "^", "%",
)

_SEPARATORS = frozenset("(){}[];,.")

_WHITESPACE = frozenset(" \t\r\n\f")


class TokenKind(Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    INT_LITERAL = "int_literal"
    FLOAT_LITERAL = "float_literal"
    STRING_LITERAL = "string_literal"
    CHAR_LITERAL = "char_literal"
    BOOL_LITERAL = "bool_literal"
    NULL_LITERAL = "null_literal"
    OPERATOR = "operator"
    SEPARATOR = "separator"
    COMMENT = "comment"
    WHITESPACE = "whitespace"
    END_OF_FILE = "end_of_file"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    col: int
    byte_offset: int

    def is_trivia(self) -> bool:
        return self.kind in (TokenKind.WHITESPACE, TokenKind.COMMENT)


class LexError(Exception):
    """Raised at the first lexical error; carries the error position.

    kind is one of "unterminated_string" (covers character literals too),
    "unterminated_comment", "invalid_character".
    """

    def __init__(self, kind: str, file_id: str, line: int, col: int, detail: str) -> None:
        super().__init__(f"{file_id}:{line}:{col}: {detail}")
        self.kind = kind
        self.file_id = file_id
        self.line = line
        self.col = col


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


class _Lexer:
    def __init__(self, source: str, file_id: str) -> None:
        self.source = source
        self.file_id = file_id
        self.n = len(source)
        self.i = 0
        # Position of self.i, maintained as tokens are emitted.
        self.line = 1
        self.col = 1
        self.byte_offset = 0
        self.tokens: list[Token] = []

    def error(self, kind: str, detail: str, line: int | None = None, col: int | None = None) -> LexError:
        return LexError(kind, self.file_id, line or self.line, col or self.col, detail)

    def peek(self, ahead: int = 0) -> str:
        j = self.i + ahead
        return self.source[j] if j < self.n else ""

    def emit(self, kind: TokenKind, start: int) -> None:
        lexeme = self.source[start : self.i]
        self.tokens.append(Token(kind, lexeme, self.line, self.col, self.byte_offset))
        for ch in lexeme:
            nbytes = len(ch.encode("utf-8"))
            self.byte_offset += nbytes
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += nbytes

    def run(self) -> list[Token]:
        while self.i < self.n:
            start = self.i
            ch = self.source[self.i]
            if ch in _WHITESPACE:
                while self.i < self.n and self.source[self.i] in _WHITESPACE:
                    self.i += 1
                self.emit(TokenKind.WHITESPACE, start)
            elif ch == "/" and self.peek(1) == "/":
                while self.i < self.n and self.source[self.i] != "\n":
                    self.i += 1
                self.emit(TokenKind.COMMENT, start)
            elif ch == "/" and self.peek(1) == "*":
                self.block_comment(start)
            elif _is_ident_start(ch):
                self.word(start)
            elif ch.isdigit() or (ch == "." and self.peek(1).isdigit()):
                self.number(start)
            elif ch == '"':
                self.quoted(start, '"', "string literal")
                self.emit(TokenKind.STRING_LITERAL, start)
            elif ch == "'":
                self.quoted(start, "'", "character literal")
                self.emit(TokenKind.CHAR_LITERAL, start)
            elif ch in _SEPARATORS:
                self.i += 1
                self.emit(TokenKind.SEPARATOR, start)
            else:
                self.operator(start)
        self.tokens.append(
            Token(TokenKind.END_OF_FILE, "", self.line, self.col, self.byte_offset)
        )
        return self.tokens

    def block_comment(self, start: int) -> None:
        self.i += 2
        while self.i < self.n:
            if self.source[self.i] == "*" and self.peek(1) == "/":
                self.i += 2
                self.emit(TokenKind.COMMENT, start)
                return
            self.i += 1
        raise self.error("unterminated_comment", "unterminated block comment")

    def word(self, start: int) -> None:
        while self.i < self.n and _is_ident_part(self.source[self.i]):
            self.i += 1
        text = self.source[start : self.i]
        if text in ("true", "false"):
            self.emit(TokenKind.BOOL_LITERAL, start)
        elif text == "null":
            self.emit(TokenKind.NULL_LITERAL, start)
        elif text in KEYWORDS:
            self.emit(TokenKind.KEYWORD, start)
        else:
            self.emit(TokenKind.IDENTIFIER, start)

    def quoted(self, start: int, quote: str, what: str) -> None:
        # Escapes are consumed blindly (backslash plus one char); a raw
        # newline or EOF before the closing quote is an error.
        self.i += 1
        while self.i < self.n:
            ch = self.source[self.i]
            if ch == quote:
                self.i += 1
                return
            if ch == "\n":
                break
            self.i += 2 if ch == "\\" else 1
        raise self.error("unterminated_string", f"unterminated {what}")

    def number(self, start: int) -> None:
        is_float = False
        if self.source[self.i] == "0" and self.peek(1) in ("x", "X"):
            self.i += 2
            if not self._take_digits(hex=True):
                raise self.error("invalid_character", "hex literal needs at least one digit")
        else:
            self._take_digits()
            if self.peek() == "." :
                is_float = True
                self.i += 1
                self._take_digits()
            if self.peek() in ("e", "E"):
                is_float = True
                self.i += 1
                if self.peek() in ("+", "-"):
                    self.i += 1
                if not self._take_digits():
                    raise self.error("invalid_character", "exponent needs at least one digit")
        suffix = self.peek()
        if suffix in ("f", "F", "d", "D"):
            is_float = True
            self.i += 1
        elif suffix in ("l", "L"):
            if is_float:
                raise self.error("invalid_character", "'L' suffix on a float literal")
            self.i += 1
        if self.i < self.n and _is_ident_part(self.source[self.i]):
            raise self.error(
                "invalid_character",
                f"invalid character {self.source[self.i]!r} in numeric literal",
            )
        self.emit(TokenKind.FLOAT_LITERAL if is_float else TokenKind.INT_LITERAL, start)

    def _take_digits(self, hex: bool = False) -> bool:
        took = False
        digits = "0123456789abcdefABCDEF" if hex else "0123456789"
        while self.i < self.n and self.source[self.i] in digits:
            self.i += 1
            took = True
        return took

    def operator(self, start: int) -> None:
        rest = self.source[self.i :]
        for op in _OPERATORS:
            if rest.startswith(op):
                self.i += len(op)
                self.emit(TokenKind.OPERATOR, start)
                return
        raise self.error("invalid_character", f"invalid character {self.source[self.i]!r}")


def tokenize(source: str, file_id: str = "<source>") -> list[Token]:
    """Tokenize source text; the final token is always END_OF_FILE.

    Raises LexError at the first lexical error.
    """
    return _Lexer(source, file_id).run()
