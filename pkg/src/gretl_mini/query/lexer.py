"""Tokenizer shared by the query and transformation parsers."""

from dataclasses import dataclass

from ..errors import GretlSyntaxError

# longest first: "<>--" must win over "<>", "-->" over "->"
OPERATORS = (
    "<>--", "-->", "<==", ":=", "->", "<>",
    "{", "}", "(", ")", "[", "]", ",", ":", ";", ".", "=", "&", "@", "+", "*", "|",
)

KEYWORDS = frozenset({
    "from", "with", "reportSet", "reportMap", "end", "where",
    "and", "or", "not", "true", "false",
})


@dataclass(frozen=True)
class Token:
    type: str  # IDENT, INT, STRING, SQSTRING, OP, EOF
    value: object
    line: int
    column: int

    def is_op(self, *ops):
        return self.type == "OP" and self.value in ops

    def is_keyword(self, *words):
        return self.type == "IDENT" and self.value in words

    def describe(self):
        if self.type == "EOF":
            return "end of input"
        if self.type == "STRING":
            return f'string "{self.value}"'
        return repr(self.value)


def tokenize(text):
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)

    def advance(k):
        nonlocal i, line, col
        for ch in text[i:i + k]:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        i += k

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        if text.startswith("//", i):
            j = text.find("\n", i)
            advance((n if j < 0 else j) - i)
            continue
        start_line, start_col = line, col
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], start_line, start_col))
            advance(j - i)
        elif ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", int(text[i:j]), start_line, start_col))
            advance(j - i)
        elif ch == '"':
            j, buf = i + 1, []
            while True:
                if j >= n or text[j] == "\n":
                    raise GretlSyntaxError("unterminated string literal", start_line, start_col)
                c = text[j]
                if c == "\\" and j + 1 < n:
                    buf.append({"n": "\n", "t": "\t"}.get(text[j + 1], text[j + 1]))
                    j += 2
                elif c == '"':
                    break
                else:
                    buf.append(c)
                    j += 1
            tokens.append(Token("STRING", "".join(buf), start_line, start_col))
            advance(j + 1 - i)
        elif ch == "'":
            j = text.find("'", i + 1)
            if j < 0:
                raise GretlSyntaxError("unterminated quoted literal", start_line, start_col)
            tokens.append(Token("SQSTRING", text[i + 1:j], start_line, start_col))
            advance(j + 1 - i)
        else:
            for op in OPERATORS:
                if text.startswith(op, i):
                    tokens.append(Token("OP", op, start_line, start_col))
                    advance(len(op))
                    break
            else:
                raise GretlSyntaxError(f"unexpected character {ch!r}", start_line, start_col)
    tokens.append(Token("EOF", None, line, col))
    return tokens
