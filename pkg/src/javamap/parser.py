"""Recursive-descent parser for the Java subset.

Consumes the token stream produced by the lexer (trivia tokens are skipped)
and builds a per-file syntax tree. The first syntax error aborts the file
with a ParseError carrying the offending position, an expected-set message,
and the found token. Accepted constructs are listed in docs/grammar.md.
"""

from __future__ import annotations

from .lexer import Token, TokenKind
from . import syntax as ast

PRIMITIVE_TYPES = frozenset(
    ["boolean", "byte", "short", "int", "long", "char", "float", "double"]
)

MODIFIERS = frozenset(
    [
        "public", "private", "protected", "static", "final", "abstract",
        "native", "synchronized", "transient", "volatile", "strictfp",
    ]
)

ASSIGN_OPS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)

# Binding levels for precedence climbing; higher binds tighter.
BINARY_PRECEDENCE = {
    "||": 1,
    "&&": 2,
    "|": 3,
    "^": 4,
    "&": 5,
    "==": 6, "!=": 6,
    "<": 7, ">": 7, "<=": 7, ">=": 7, "instanceof": 7,
    "<<": 8, ">>": 8, ">>>": 8,
    "+": 9, "-": 9,
    "*": 10, "/": 10, "%": 10,
}

UNARY_PREFIX_OPS = frozenset(["+", "-", "!", "~", "++", "--"])

# Tokens that may begin an operand; used to tell a cast from a
# parenthesized expression.
_CAST_FOLLOW_KINDS = frozenset(
    [
        TokenKind.IDENTIFIER,
        TokenKind.INT_LITERAL,
        TokenKind.FLOAT_LITERAL,
        TokenKind.STRING_LITERAL,
        TokenKind.CHAR_LITERAL,
        TokenKind.BOOL_LITERAL,
        TokenKind.NULL_LITERAL,
    ]
)


class ParseError(Exception):
    def __init__(self, file_id: str, line: int, col: int, expected: tuple[str, ...], found: str) -> None:
        what = " or ".join(expected)
        super().__init__(f"{file_id}:{line}:{col}: expected {what}, found {found}")
        self.file_id = file_id
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found


def _token_end(tok: Token) -> int:
    return tok.byte_offset + len(tok.lexeme.encode("utf-8"))


class _Parser:
    def __init__(self, tokens: list[Token], file_id: str) -> None:
        self.tokens = [t for t in tokens if not t.is_trivia()]
        self.file_id = file_id
        self.pos = 0
        self.prev: Token | None = None

    # -- token plumbing ------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        j = min(self.pos + ahead, len(self.tokens) - 1)
        return self.tokens[j]

    def at_end(self) -> bool:
        return self.peek().kind is TokenKind.END_OF_FILE

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind is not TokenKind.END_OF_FILE:
            self.pos += 1
        self.prev = tok
        return tok

    def fail(self, *expected: str) -> ParseError:
        tok = self.peek()
        found = "end of file" if tok.kind is TokenKind.END_OF_FILE else repr(tok.lexeme)
        return ParseError(self.file_id, tok.line, tok.col, expected, found)

    def at_sep(self, sym: str) -> bool:
        tok = self.peek()
        return tok.kind is TokenKind.SEPARATOR and tok.lexeme == sym

    def at_op(self, sym: str) -> bool:
        tok = self.peek()
        return tok.kind is TokenKind.OPERATOR and tok.lexeme == sym

    def at_kw(self, name: str) -> bool:
        tok = self.peek()
        return tok.kind is TokenKind.KEYWORD and tok.lexeme == name

    def accept_sep(self, sym: str) -> bool:
        if self.at_sep(sym):
            self.advance()
            return True
        return False

    def accept_op(self, sym: str) -> bool:
        if self.at_op(sym):
            self.advance()
            return True
        return False

    def accept_kw(self, name: str) -> bool:
        if self.at_kw(name):
            self.advance()
            return True
        return False

    def expect_sep(self, sym: str) -> Token:
        if not self.at_sep(sym):
            raise self.fail(repr(sym))
        return self.advance()

    def expect_op(self, sym: str) -> Token:
        if not self.at_op(sym):
            raise self.fail(repr(sym))
        return self.advance()

    def expect_kw(self, name: str) -> Token:
        if not self.at_kw(name):
            raise self.fail(repr(name))
        return self.advance()

    def expect_ident(self) -> Token:
        if self.peek().kind is not TokenKind.IDENTIFIER:
            raise self.fail("identifier")
        return self.advance()

    def start(self) -> int:
        return self.peek().byte_offset

    def span_from(self, start: int) -> ast.Span:
        assert self.prev is not None
        return (start, _token_end(self.prev))

    # -- shared pieces ---------------------------------------------------

    def qualified_name(self) -> str:
        parts = [self.expect_ident().lexeme]
        while self.at_sep(".") and self.peek(1).kind is TokenKind.IDENTIFIER:
            self.advance()
            parts.append(self.advance().lexeme)
        return ".".join(parts)

    def at_type_start(self) -> bool:
        tok = self.peek()
        if tok.kind is TokenKind.IDENTIFIER:
            return True
        return tok.kind is TokenKind.KEYWORD and tok.lexeme in PRIMITIVE_TYPES

    def type_name(self) -> str:
        if self.peek().kind is TokenKind.KEYWORD and self.peek().lexeme in PRIMITIVE_TYPES:
            name = self.advance().lexeme
        elif self.peek().kind is TokenKind.IDENTIFIER:
            name = self.qualified_name()
        else:
            raise self.fail("type name")
        while self.at_sep("[") and self.peek(1).kind is TokenKind.SEPARATOR and self.peek(1).lexeme == "]":
            self.advance()
            self.advance()
            name += "[]"
        return name

    def modifiers(self) -> frozenset[str]:
        mods = set()
        while self.peek().kind is TokenKind.KEYWORD and self.peek().lexeme in MODIFIERS:
            mods.add(self.advance().lexeme)
        return frozenset(mods)

    # -- compilation unit -------------------------------------------------

    def compilation_unit(self) -> ast.CompilationUnit:
        unit = ast.CompilationUnit(file_id=self.file_id)
        if self.accept_kw("package"):
            unit.package_name = self.qualified_name()
            self.expect_sep(";")
        while self.accept_kw("import"):
            unit.imports.append(self.import_decl())
        while not self.at_end():
            unit.types.append(self.type_decl())
        return unit

    def import_decl(self) -> ast.ImportDecl:
        parts = [self.expect_ident().lexeme]
        on_demand = False
        while self.accept_sep("."):
            if self.accept_op("*"):
                on_demand = True
                break
            parts.append(self.expect_ident().lexeme)
        self.expect_sep(";")
        return ast.ImportDecl(name=".".join(parts), on_demand=on_demand)

    def type_decl(self) -> ast.TypeDecl:
        begin = self.start()
        mods = self.modifiers()
        if self.accept_kw("class"):
            kind = ast.TypeKind.CLASS
        elif self.accept_kw("interface"):
            kind = ast.TypeKind.INTERFACE
        else:
            raise self.fail("'class'", "'interface'")
        name = self.expect_ident().lexeme
        superclass: str | None = None
        interfaces: list[str] = []
        if kind is ast.TypeKind.CLASS:
            if self.accept_kw("extends"):
                superclass = self.qualified_name()
            if self.accept_kw("implements"):
                interfaces.append(self.qualified_name())
                while self.accept_sep(","):
                    interfaces.append(self.qualified_name())
        else:
            if self.accept_kw("extends"):
                interfaces.append(self.qualified_name())
                while self.accept_sep(","):
                    interfaces.append(self.qualified_name())
        decl = ast.TypeDecl(
            name=name,
            kind=kind,
            superclass_name=superclass,
            interface_names=interfaces,
            modifiers=mods,
        )
        self.expect_sep("{")
        while not self.at_sep("}"):
            if self.at_end():
                raise self.fail("'}'")
            if self.accept_sep(";"):
                continue
            self.member(decl)
        self.advance()
        decl.span = self.span_from(begin)
        return decl

    def member(self, decl: ast.TypeDecl) -> None:
        begin = self.start()
        mods = self.modifiers()
        if self.at_kw("class") or self.at_kw("interface"):
            raise self.fail("field or method declaration (nested types are not supported)")
        # Constructor: the type's own name followed directly by '('.
        if (
            self.peek().kind is TokenKind.IDENTIFIER
            and self.peek().lexeme == decl.name
            and self.peek(1).kind is TokenKind.SEPARATOR
            and self.peek(1).lexeme == "("
        ):
            name = self.advance().lexeme
            decl.methods.append(self.method_rest(name, None, mods, begin))
            return
        if self.accept_kw("void"):
            name = self.expect_ident().lexeme
            decl.methods.append(self.method_rest(name, "void", mods, begin))
            return
        if not self.at_type_start():
            raise self.fail("field or method declaration")
        type_name = self.type_name()
        name = self.expect_ident().lexeme
        if self.at_sep("("):
            decl.methods.append(self.method_rest(name, type_name, mods, begin))
        else:
            decl.fields.append(self.field_rest(type_name, name, mods, begin))

    def method_rest(
        self, name: str, return_type: str | None, mods: frozenset[str], begin: int
    ) -> ast.MethodDecl:
        self.expect_sep("(")
        params: list[tuple[str, str]] = []
        if not self.at_sep(")"):
            params.append(self.parameter())
            while self.accept_sep(","):
                params.append(self.parameter())
        self.expect_sep(")")
        if self.accept_kw("throws"):
            self.qualified_name()
            while self.accept_sep(","):
                self.qualified_name()
        body: ast.Block | None = None
        if self.at_sep("{"):
            body = self.block()
        else:
            self.expect_sep(";")
        return ast.MethodDecl(
            name=name,
            params=params,
            return_type=return_type,
            body=body,
            modifiers=mods,
            span=self.span_from(begin),
        )

    def parameter(self) -> tuple[str, str]:
        self.accept_kw("final")
        type_name = self.type_name()
        name = self.expect_ident().lexeme
        # Old-style trailing brackets on the parameter name.
        while self.at_sep("[") and self.peek(1).kind is TokenKind.SEPARATOR and self.peek(1).lexeme == "]":
            self.advance()
            self.advance()
            type_name += "[]"
        return (type_name, name)

    def field_rest(
        self, type_name: str, first_name: str, mods: frozenset[str], begin: int
    ) -> ast.FieldDecl:
        names = [first_name]
        inits: list[ast.Expr | None] = [self.expression() if self.accept_op("=") else None]
        while self.accept_sep(","):
            names.append(self.expect_ident().lexeme)
            inits.append(self.expression() if self.accept_op("=") else None)
        self.expect_sep(";")
        return ast.FieldDecl(
            type_name=type_name,
            names=names,
            initializers=inits,
            modifiers=mods,
            span=self.span_from(begin),
        )

    # -- statements --------------------------------------------------------

    def block(self) -> ast.Block:
        begin = self.start()
        self.expect_sep("{")
        stmts: list[ast.Stmt] = []
        while not self.at_sep("}"):
            if self.at_end():
                raise self.fail("'}'")
            stmts.append(self.statement())
        self.advance()
        return ast.Block(stmts=stmts, span=self.span_from(begin))

    def statement(self) -> ast.Stmt:
        begin = self.start()
        if self.at_sep("{"):
            return self.block()
        if self.accept_sep(";"):
            return ast.Empty(span=self.span_from(begin))
        if self.accept_kw("if"):
            self.expect_sep("(")
            cond = self.expression()
            self.expect_sep(")")
            then_branch = self.statement()
            else_branch = self.statement() if self.accept_kw("else") else None
            return ast.If(cond, then_branch, else_branch, span=self.span_from(begin))
        if self.accept_kw("while"):
            self.expect_sep("(")
            cond = self.expression()
            self.expect_sep(")")
            return ast.While(cond, self.statement(), span=self.span_from(begin))
        if self.accept_kw("do"):
            body = self.statement()
            self.expect_kw("while")
            self.expect_sep("(")
            cond = self.expression()
            self.expect_sep(")")
            self.expect_sep(";")
            return ast.DoWhile(body, cond, span=self.span_from(begin))
        if self.accept_kw("for"):
            return self.for_statement(begin)
        if self.accept_kw("switch"):
            return self.switch_statement(begin)
        if self.accept_kw("try"):
            return self.try_statement(begin)
        if self.accept_kw("return"):
            value = None if self.at_sep(";") else self.expression()
            self.expect_sep(";")
            return ast.Return(value, span=self.span_from(begin))
        if self.accept_kw("throw"):
            value = self.expression()
            self.expect_sep(";")
            return ast.Throw(value, span=self.span_from(begin))
        if self.accept_kw("break"):
            self.expect_sep(";")
            return ast.Break(span=self.span_from(begin))
        if self.accept_kw("continue"):
            self.expect_sep(";")
            return ast.Continue(span=self.span_from(begin))
        if self.looks_like_local_decl():
            return self.local_decl()
        expr = self.statement_expression()
        self.expect_sep(";")
        return ast.ExprStmt(expr, span=self.span_from(begin))

    def statement_expression(self) -> ast.Expr:
        tok = self.peek()
        expr = self.expression()
        if isinstance(expr, (ast.Assign, ast.Call, ast.New)):
            return expr
        if isinstance(expr, ast.Unary) and expr.op in ("++", "--"):
            return expr
        raise ParseError(
            self.file_id, tok.line, tok.col,
            ("assignment, call, 'new', or increment/decrement statement",),
            repr(tok.lexeme),
        )

    def looks_like_local_decl(self) -> bool:
        j = self.pos
        toks = self.tokens

        def kind_at(k: int) -> TokenKind:
            return toks[min(k, len(toks) - 1)].kind

        def lex_at(k: int) -> str:
            return toks[min(k, len(toks) - 1)].lexeme

        if kind_at(j) is TokenKind.KEYWORD and lex_at(j) == "final":
            j += 1
        if kind_at(j) is TokenKind.KEYWORD and lex_at(j) in PRIMITIVE_TYPES:
            j += 1
        elif kind_at(j) is TokenKind.IDENTIFIER:
            j += 1
            while kind_at(j) is TokenKind.SEPARATOR and lex_at(j) == "." \
                    and kind_at(j + 1) is TokenKind.IDENTIFIER:
                j += 2
        else:
            return False
        while kind_at(j) is TokenKind.SEPARATOR and lex_at(j) == "[" \
                and kind_at(j + 1) is TokenKind.SEPARATOR and lex_at(j + 1) == "]":
            j += 2
        return kind_at(j) is TokenKind.IDENTIFIER

    def local_decl(self, expect_semi: bool = True) -> ast.LocalDecl:
        begin = self.start()
        mods = frozenset(["final"]) if self.accept_kw("final") else frozenset()
        type_name = self.type_name()
        names = [self.expect_ident().lexeme]
        inits: list[ast.Expr | None] = [self.expression() if self.accept_op("=") else None]
        while self.accept_sep(","):
            names.append(self.expect_ident().lexeme)
            inits.append(self.expression() if self.accept_op("=") else None)
        if expect_semi:
            self.expect_sep(";")
        return ast.LocalDecl(
            type_name=type_name,
            names=names,
            initializers=inits,
            modifiers=mods,
            span=self.span_from(begin),
        )

    def for_statement(self, begin: int) -> ast.For:
        self.expect_sep("(")
        init: list[ast.Stmt] = []
        if not self.at_sep(";"):
            if self.looks_like_local_decl():
                init.append(self.local_decl(expect_semi=False))
            else:
                init.append(self.init_expr_stmt())
                while self.accept_sep(","):
                    init.append(self.init_expr_stmt())
        self.expect_sep(";")
        cond = None if self.at_sep(";") else self.expression()
        self.expect_sep(";")
        update: list[ast.Expr] = []
        if not self.at_sep(")"):
            update.append(self.statement_expression())
            while self.accept_sep(","):
                update.append(self.statement_expression())
        self.expect_sep(")")
        body = self.statement()
        return ast.For(init=init, cond=cond, update=update, body=body, span=self.span_from(begin))

    def init_expr_stmt(self) -> ast.ExprStmt:
        begin = self.start()
        expr = self.statement_expression()
        return ast.ExprStmt(expr, span=self.span_from(begin))

    def switch_statement(self, begin: int) -> ast.Switch:
        self.expect_sep("(")
        scrutinee = self.expression()
        self.expect_sep(")")
        self.expect_sep("{")
        groups: list[ast.CaseGroup] = []
        default_body: list[ast.Stmt] | None = None
        while not self.at_sep("}"):
            if self.at_end():
                raise self.fail("'}'")
            if self.accept_kw("case"):
                labels = [self.expression()]
                self.expect_op(":")
                while self.accept_kw("case"):
                    labels.append(self.expression())
                    self.expect_op(":")
                groups.append(ast.CaseGroup(labels=labels, body=self.case_body()))
            elif self.accept_kw("default"):
                if default_body is not None:
                    raise self.fail("'case' or '}' (only one default group)")
                self.expect_op(":")
                default_body = self.case_body()
            else:
                raise self.fail("'case'", "'default'", "'}'")
        self.advance()
        return ast.Switch(
            scrutinee=scrutinee, groups=groups, default_body=default_body,
            span=self.span_from(begin),
        )

    def case_body(self) -> list[ast.Stmt]:
        stmts: list[ast.Stmt] = []
        while not (self.at_sep("}") or self.at_kw("case") or self.at_kw("default")):
            if self.at_end():
                raise self.fail("'}'")
            stmts.append(self.statement())
        return stmts

    def try_statement(self, begin: int) -> ast.Try:
        body = self.block()
        catches: list[ast.CatchClause] = []
        while self.accept_kw("catch"):
            self.expect_sep("(")
            self.accept_kw("final")
            type_name = self.type_name()
            name = self.expect_ident().lexeme
            self.expect_sep(")")
            catches.append(ast.CatchClause(type_name=type_name, name=name, body=self.block()))
        finally_body = self.block() if self.accept_kw("finally") else None
        if not catches and finally_body is None:
            raise self.fail("'catch'", "'finally'")
        return ast.Try(
            body=body, catches=catches, finally_body=finally_body,
            span=self.span_from(begin),
        )

    # -- expressions ---------------------------------------------------------

    def expression(self) -> ast.Expr:
        return self.assignment()

    def assignment(self) -> ast.Expr:
        begin = self.start()
        left = self.ternary()
        tok = self.peek()
        if tok.kind is TokenKind.OPERATOR and tok.lexeme in ASSIGN_OPS:
            if not isinstance(left, (ast.Name, ast.FieldAccess, ast.ArrayAccess)):
                raise self.fail("assignable expression before assignment operator")
            op = self.advance().lexeme
            value = self.assignment()
            return ast.Assign(target=left, op=op, value=value, span=self.span_from(begin))
        return left

    def ternary(self) -> ast.Expr:
        begin = self.start()
        cond = self.binary(1)
        if self.accept_op("?"):
            if_true = self.assignment()
            self.expect_op(":")
            if_false = self.assignment()
            return ast.Ternary(cond, if_true, if_false, span=self.span_from(begin))
        return cond

    def binary(self, min_level: int) -> ast.Expr:
        begin = self.start()
        left = self.unary()
        while True:
            tok = self.peek()
            op = tok.lexeme
            if tok.kind is TokenKind.KEYWORD and op == "instanceof":
                level = BINARY_PRECEDENCE[op]
            elif tok.kind is TokenKind.OPERATOR and op in BINARY_PRECEDENCE:
                level = BINARY_PRECEDENCE[op]
            else:
                return left
            if level < min_level:
                return left
            self.advance()
            if op == "instanceof":
                tbegin = self.start()
                right: ast.Expr = ast.Name(self.type_name())
                right.span = self.span_from(tbegin)
            else:
                right = self.binary(level + 1)
            left = ast.Binary(op=op, left=left, right=right, span=self.span_from(begin))

    def unary(self) -> ast.Expr:
        begin = self.start()
        tok = self.peek()
        if tok.kind is TokenKind.OPERATOR and tok.lexeme in UNARY_PREFIX_OPS:
            op = self.advance().lexeme
            operand = self.unary()
            return ast.Unary(op=op, operand=operand, prefix=True, span=self.span_from(begin))
        if self.at_sep("(") and self.is_cast_ahead():
            self.advance()
            type_name = self.type_name()
            self.expect_sep(")")
            operand = self.unary()
            return ast.Cast(type_name=type_name, operand=operand, span=self.span_from(begin))
        return self.postfix()

    def is_cast_ahead(self) -> bool:
        # Cheap disambiguation between "(Type) operand" and "(expr)".
        j = self.pos + 1
        toks = self.tokens

        def tok_at(k: int) -> Token:
            return toks[min(k, len(toks) - 1)]

        tok = tok_at(j)
        if tok.kind is TokenKind.KEYWORD and tok.lexeme in PRIMITIVE_TYPES:
            return True
        if tok.kind is not TokenKind.IDENTIFIER:
            return False
        j += 1
        while tok_at(j).lexeme == "." and tok_at(j).kind is TokenKind.SEPARATOR \
                and tok_at(j + 1).kind is TokenKind.IDENTIFIER:
            j += 2
        saw_dims = False
        while tok_at(j).kind is TokenKind.SEPARATOR and tok_at(j).lexeme == "[" \
                and tok_at(j + 1).kind is TokenKind.SEPARATOR and tok_at(j + 1).lexeme == "]":
            j += 2
            saw_dims = True
        closing = tok_at(j)
        if closing.kind is not TokenKind.SEPARATOR or closing.lexeme != ")":
            return False
        if saw_dims:
            return True
        after = tok_at(j + 1)
        if after.kind in _CAST_FOLLOW_KINDS:
            return True
        if after.kind is TokenKind.SEPARATOR and after.lexeme == "(":
            return True
        if after.kind is TokenKind.OPERATOR and after.lexeme in ("!", "~"):
            return True
        if after.kind is TokenKind.KEYWORD and after.lexeme in ("this", "super", "new"):
            return True
        return False

    def postfix(self) -> ast.Expr:
        begin = self.start()
        expr = self.primary()
        while True:
            if self.at_sep(".") and self.peek(1).kind is TokenKind.IDENTIFIER:
                self.advance()
                name = self.advance().lexeme
                expr = ast.FieldAccess(target=expr, name=name, span=self.span_from(begin))
            elif self.at_sep("("):
                args = self.arguments()
                expr = ast.Call(callee=expr, args=args, span=self.span_from(begin))
            elif self.at_sep("["):
                self.advance()
                index = self.expression()
                self.expect_sep("]")
                expr = ast.ArrayAccess(array=expr, index=index, span=self.span_from(begin))
            elif self.at_op("++") or self.at_op("--"):
                op = self.advance().lexeme
                return ast.Unary(op=op, operand=expr, prefix=False, span=self.span_from(begin))
            else:
                return expr

    def arguments(self) -> list[ast.Expr]:
        self.expect_sep("(")
        args: list[ast.Expr] = []
        if not self.at_sep(")"):
            args.append(self.expression())
            while self.accept_sep(","):
                args.append(self.expression())
        self.expect_sep(")")
        return args

    def primary(self) -> ast.Expr:
        begin = self.start()
        tok = self.peek()
        literal_kinds = {
            TokenKind.INT_LITERAL: "int",
            TokenKind.FLOAT_LITERAL: "float",
            TokenKind.STRING_LITERAL: "string",
            TokenKind.CHAR_LITERAL: "char",
            TokenKind.BOOL_LITERAL: "bool",
            TokenKind.NULL_LITERAL: "null",
        }
        if tok.kind in literal_kinds:
            self.advance()
            return ast.Literal(kind=literal_kinds[tok.kind], text=tok.lexeme, span=self.span_from(begin))
        if tok.kind is TokenKind.IDENTIFIER:
            self.advance()
            return ast.Name(identifier=tok.lexeme, span=self.span_from(begin))
        if self.at_kw("this") or self.at_kw("super"):
            self.advance()
            return ast.Name(identifier=tok.lexeme, span=self.span_from(begin))
        if self.accept_kw("new"):
            return self.new_expr(begin)
        if self.accept_sep("("):
            inner = self.expression()
            self.expect_sep(")")
            return inner
        raise self.fail("expression")

    def new_expr(self, begin: int) -> ast.Expr:
        if self.peek().kind is TokenKind.KEYWORD and self.peek().lexeme in PRIMITIVE_TYPES:
            type_name = self.advance().lexeme
        else:
            type_name = self.qualified_name()
        if self.at_sep("("):
            args = self.arguments()
            return ast.New(type_name=type_name, args=args, dims=[], span=self.span_from(begin))
        if self.at_sep("["):
            dims: list[ast.Expr | None] = []
            while self.accept_sep("["):
                if self.at_sep("]"):
                    dims.append(None)
                else:
                    dims.append(self.expression())
                self.expect_sep("]")
            return ast.New(type_name=type_name, args=None, dims=dims, span=self.span_from(begin))
        raise self.fail("'('", "'['")


def parse_unit(tokens: list[Token], file_id: str) -> ast.CompilationUnit:
    """Parse one file's token stream into a CompilationUnit.

    Trivia tokens (whitespace, comments) are skipped. Raises ParseError at
    the first syntax error; the caller decides whether to exclude the file
    or abort the run.
    """
    return _Parser(tokens, file_id).compilation_unit()
