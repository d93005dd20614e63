"""Hand-rolled lexer shared by the `.ssm` and `.sysml` front ends.

Both languages use the same token shapes (identifiers, strings, numbers,
punctuation); they differ only in comment style and in whether quoted
names and ``/* ... */`` text blocks are legal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .source import SourceSpan

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

# Longest-match first.
PUNCT = (
    ":>>",
    ":>",
    "::",
    ":=",
    "==",
    "!=",
    "<=",
    ">=",
    "->",
    "..",
    "{",
    "}",
    ";",
    ":",
    "=",
    "<",
    ">",
    "+",
    "-",
    "*",
    "/",
    "(",
    ")",
    "[",
    "]",
    ".",
    ",",
    "@",
)

IDENT = "ident"
STRING = "string"
QNAME = "qident"  # single-quoted unrestricted name ('License Allocation')
NUMBER = "number"
PUNCTUATION = "punct"
BLOCKTEXT = "blocktext"  # /* ... */ payload
EOF = "eof"


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    span: SourceSpan

    def __str__(self) -> str:
        return self.value if self.kind != EOF else "<end of input>"


def lex(source: str, file: str, style: str) -> list[Token]:
    """Tokenize `source`; `style` is 'ssm' or 'sysml'.

    Always terminates: every loop iteration either consumes at least one
    character or raises ParseError.
    """
    assert style in ("ssm", "sysml")
    tokens: list[Token] = []
    line, col, i = 1, 1, 0
    n = len(source)

    def here() -> SourceSpan:
        return SourceSpan.point(file, line, col)

    def advance(text: str) -> None:
        nonlocal line, col
        for ch in text:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            advance(ch)
            i += 1
            continue
        if style == "ssm" and ch == "#":
            j = source.find("\n", i)
            j = n if j < 0 else j
            advance(source[i:j])
            i = j
            continue
        if style == "sysml" and source.startswith("//", i):
            j = source.find("\n", i)
            j = n if j < 0 else j
            advance(source[i:j])
            i = j
            continue
        if style == "sysml" and source.startswith("/*", i):
            start = here()
            j = source.find("*/", i + 2)
            if j < 0:
                raise ParseError(start, "unterminated /* ... */ block")
            body = source[i + 2 : j]
            advance(source[i : j + 2])
            tokens.append(Token(BLOCKTEXT, body, start.to(here())))
            i = j + 2
            continue
        if ch == '"' or (style == "sysml" and ch == "'"):
            quote = ch
            start = here()
            j = i + 1
            out: list[str] = []
            while True:
                if j >= n:
                    raise ParseError(start, "unterminated string literal")
                c = source[j]
                if c == "\\":
                    if j + 1 >= n:
                        raise ParseError(start, "unterminated escape sequence")
                    esc = source[j + 1]
                    if esc == "n":
                        out.append("\n")
                    elif esc == "t":
                        out.append("\t")
                    elif esc in ("\\", '"', "'"):
                        out.append(esc)
                    else:
                        raise ParseError(
                            SourceSpan.point(file, line, col),
                            f"unknown escape sequence \\{esc}",
                        )
                    j += 2
                elif c == quote:
                    j += 1
                    break
                elif c == "\n":
                    raise ParseError(start, "newline inside string literal")
                else:
                    out.append(c)
                    j += 1
            advance(source[i:j])
            kind = STRING if quote == '"' else QNAME
            tokens.append(Token(kind, "".join(out), start.to(here())))
            i = j
            continue
        if ch.isdigit():
            start = here()
            j = i
            while j < n and source[j].isdigit():
                j += 1
            # A '.' starts a fraction only if not '..' and followed by a digit.
            if j + 1 < n and source[j] == "." and source[j + 1].isdigit():
                j += 1
                while j < n and source[j].isdigit():
                    j += 1
            advance(source[i:j])
            tokens.append(Token(NUMBER, source[i:j], start.to(here())))
            i = j
            continue
        m = IDENT_RE.match(source, i)
        if m:
            start = here()
            advance(m.group())
            tokens.append(Token(IDENT, m.group(), start.to(here())))
            i = m.end()
            continue
        for p in PUNCT:
            if source.startswith(p, i):
                start = here()
                advance(p)
                tokens.append(Token(PUNCTUATION, p, start.to(here())))
                i += len(p)
                break
        else:
            raise ParseError(here(), f"unexpected character {ch!r}", found=ch)

    tokens.append(Token(EOF, "", here()))
    return tokens


class TokenStream:
    """Cursor over a token list with the usual peek/expect helpers."""

    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def at(self, value: str) -> bool:
        tok = self.current
        return tok.kind in (IDENT, PUNCTUATION) and tok.value == value

    def at_kind(self, kind: str) -> bool:
        return self.current.kind == kind

    def accept(self, value: str) -> Token | None:
        if self.at(value):
            return self.take()
        return None

    def take(self) -> Token:
        tok = self.current
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def expect(self, value: str, what: str | None = None) -> Token:
        if self.at(value):
            return self.take()
        raise self.error((what or repr(value),))

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.current.kind == kind:
            return self.take()
        raise self.error((what,))

    def error(self, expected: tuple[str, ...]) -> ParseError:
        tok = self.current
        listing = ", ".join(expected)
        return ParseError(
            tok.span,
            f"expected {listing}, found {str(tok)!r}",
            expected=expected,
            found=str(tok),
        )
