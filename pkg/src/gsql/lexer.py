"""Tokenizer for query and DDL text.

Keywords are case-insensitive, identifiers case-sensitive.  ``@name`` and
``@@name`` lex as single accumulator-name tokens, and a quote immediately
following one of them is the prime marker rather than a string delimiter.
"""

from __future__ import annotations

from dataclasses import dataclass

from gsql.errors import LexError

KEYWORDS = {
    "CREATE", "QUERY", "VERTEX", "EDGE", "DIRECTED", "UNDIRECTED", "GRAPH",
    "PRIMARY", "KEY", "DISCRIMINATOR", "WITH", "REVERSE", "FOR", "TO",
    "RETURN", "SELECT", "DISTINCT", "ALL", "INTO", "FROM", "WHERE", "ACCUM",
    "POST_ACCUM", "GROUP", "BY", "HAVING", "ORDER", "LIMIT", "ASC", "DESC",
    "AS", "AND", "OR", "NOT", "BETWEEN", "IN", "LIKE", "IS", "NULL",
    "TRUE", "FALSE", "CASE", "WHEN", "THEN", "ELSE", "END", "IF", "WHILE",
    "DO", "FOREACH", "RANGE", "BREAK", "CONTINUE", "UNION", "INTERSECT",
    "MINUS", "BEGIN", "TYPE", "CONTAINS",
    "INT", "UINT", "FLOAT", "DOUBLE", "STRING", "BOOLEAN", "DATETIME", "DATE",
    "TUPLE", "SET", "BAG", "MAP",
    "SUMACCUM", "MINACCUM", "MAXACCUM", "AVGACCUM", "ORACCUM", "ANDACCUM",
    "SETACCUM", "BAGACCUM", "LISTACCUM", "MAPACCUM", "HEAPACCUM",
    "ARRAYACCUM", "GROUPBYACCUM", "BITWISEORACCUM", "BITWISEANDACCUM",
}

# multi-char operators first (longest match wins)
_OPERATORS = [
    ("+=", "PLUSEQ"), ("->", "ARROW"), ("..", "DOTDOT"),
    ("<>", "NE"), ("!=", "NE"), ("<=", "LE"), (">=", "GE"), ("==", "EQ"),
    ("(", "LPAREN"), (")", "RPAREN"), ("[", "LBRACKET"), ("]", "RBRACKET"),
    ("{", "LBRACE"), ("}", "RBRACE"), (",", "COMMA"), (";", "SEMI"),
    (":", "COLON"), (".", "DOT"), ("+", "PLUS"), ("-", "DASH"),
    ("*", "STAR"), ("/", "SLASH"), ("%", "PERCENT"), ("&", "AMP"),
    ("|", "PIPE"), ("<", "LT"), (">", "GT"), ("=", "EQ"),
]


@dataclass(frozen=True)
class Token:
    kind: str        # KW | IDENT | NUMBER | STRING | VACC | GACC | PRIME | op kinds | EOF
    value: object    # canonical keyword, identifier text, literal value, ...
    lexeme: str
    line: int
    col: int
    end: int = 0     # absolute offset just past the token (prime detection)

    def __repr__(self):
        return f"{self.kind}({self.value!r})"


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_ident(c: str) -> bool:
    return c.isalnum() or c == "_"


def tokenize(text: str) -> list[Token]:
    """Produce the full token stream, ending with an EOF token."""
    toks: list[Token] = []
    i, n = 0, len(text)
    line, line_start = 1, 0

    def pos():
        return line, i - line_start + 1

    def err(msg):
        ln, co = pos()
        raise LexError(msg, ln, co)

    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if c in " \t\r":
            i += 1
            continue
        # comments: --, //, /* */
        if text.startswith("--", i) or text.startswith("//", i):
            j = text.find("\n", i)
            i = n if j < 0 else j
            continue
        if text.startswith("/*", i):
            j = text.find("*/", i + 2)
            if j < 0:
                err("unterminated comment")
            line += text.count("\n", i, j)
            if "\n" in text[i:j]:
                line_start = text.rfind("\n", i, j) + 1
            i = j + 2
            continue

        ln, co = pos()

        if c == "'":
            # prime marker if glued to an accumulator name, else string literal
            if toks and toks[-1].kind in ("VACC", "GACC") and toks[-1].end == i:
                toks.append(Token("PRIME", "'", "'", ln, co, i + 1))
                i += 1
                continue
            j = i + 1
            buf = []
            while True:
                if j >= n:
                    err("unterminated string")
                ch = text[j]
                if ch == "'":
                    if j + 1 < n and text[j + 1] == "'":
                        buf.append("'")
                        j += 2
                        continue
                    break
                if ch == "\n":
                    err("unterminated string")
                buf.append(ch)
                j += 1
            lex = text[i:j + 1]
            toks.append(Token("STRING", "".join(buf), lex, ln, co, j + 1))
            i = j + 1
            continue

        if c == "@":
            kind = "VACC"
            j = i + 1
            if j < n and text[j] == "@":
                kind = "GACC"
                j += 1
            if j >= n or not _is_ident_start(text[j]):
                err("expected accumulator name after '@'")
            k = j
            while k < n and _is_ident(text[k]):
                k += 1
            name = text[j:k]
            toks.append(Token(kind, name, text[i:k], ln, co, k))
            i = k
            continue

        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            is_float = False
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                is_float = True
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            if j < n and text[j] in "eE":
                k = j + 1
                if k < n and text[k] in "+-":
                    k += 1
                if k < n and text[k].isdigit():
                    is_float = True
                    j = k
                    while j < n and text[j].isdigit():
                        j += 1
            lex = text[i:j]
            val = float(lex) if is_float else int(lex)
            toks.append(Token("NUMBER", val, lex, ln, co, j))
            i = j
            continue

        if _is_ident_start(c):
            j = i
            while j < n and _is_ident(text[j]):
                j += 1
            word = text[i:j]
            upper = word.upper()
            # POST-ACCUM (hyphen spelling) folds into the POST_ACCUM keyword
            if upper == "POST" and text[j:j + 1] == "-" and text[j + 1:j + 6].upper() == "ACCUM" \
                    and not (j + 6 < n and _is_ident(text[j + 6])):
                toks.append(Token("KW", "POST_ACCUM", text[i:j + 6], ln, co, j + 6))
                i = j + 6
                continue
            if upper in KEYWORDS:
                toks.append(Token("KW", upper, word, ln, co, j))
            else:
                toks.append(Token("IDENT", word, word, ln, co, j))
            i = j
            continue

        for op, kind in _OPERATORS:
            if text.startswith(op, i):
                toks.append(Token(kind, op, op, ln, co, i + len(op)))
                i += len(op)
                break
        else:
            err(f"illegal character {c!r}")

    toks.append(Token("EOF", None, "", line, n - line_start + 1, n))
    return toks
