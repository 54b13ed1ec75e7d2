"""A small total JSON parser that records source positions.

The standard library parser does not expose node positions, and the
workspace format wants diagnostics with line and column for every
validation error, not just syntax errors.  Values parse to plain Python
objects; positions are collected per JSON-pointer-style path
("/algebras/kA2/relations/0").
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    message: str

    def to_json(self):
        return {"line": self.line, "col": self.col, "message": self.message}

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"


class ParseFailure(Exception):
    def __init__(self, diag: Diagnostic):
        self.diagnostic = diag
        super().__init__(str(diag))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.n = len(text)
        self.i = 0
        self.positions = {}

    def pos(self, index=None):
        index = self.i if index is None else index
        line = self.text.count("\n", 0, index) + 1
        last_nl = self.text.rfind("\n", 0, index)
        col = index - last_nl
        return line, col

    def fail(self, message, index=None):
        line, col = self.pos(index)
        raise ParseFailure(Diagnostic(line, col, message))

    def skip_ws(self):
        while self.i < self.n and self.text[self.i] in " \t\r\n":
            self.i += 1

    def parse(self):
        self.skip_ws()
        value = self.value("")
        self.skip_ws()
        if self.i < self.n:
            self.fail("trailing characters after the document")
        return value

    def value(self, path):
        self.skip_ws()
        if self.i >= self.n:
            self.fail("unexpected end of input")
        self.positions[path] = self.pos()
        ch = self.text[self.i]
        if ch == "{":
            return self.obj(path)
        if ch == "[":
            return self.arr(path)
        if ch == '"':
            return self.string()
        if ch in "-0123456789":
            return self.number()
        for lit, val in (("true", True), ("false", False), ("null", None)):
            if self.text.startswith(lit, self.i):
                self.i += len(lit)
                return val
        self.fail(f"unexpected character {ch!r}")

    def obj(self, path):
        out = {}
        self.i += 1
        self.skip_ws()
        if self.i < self.n and self.text[self.i] == "}":
            self.i += 1
            return out
        while True:
            self.skip_ws()
            if self.i >= self.n or self.text[self.i] != '"':
                self.fail("expected a string key")
            key_at = self.i
            key = self.string()
            if key in out:
                self.fail(f"duplicate key {key!r}", key_at)
            self.skip_ws()
            if self.i >= self.n or self.text[self.i] != ":":
                self.fail("expected ':' after key")
            self.i += 1
            out[key] = self.value(f"{path}/{key}")
            self.skip_ws()
            if self.i < self.n and self.text[self.i] == ",":
                self.i += 1
                continue
            if self.i < self.n and self.text[self.i] == "}":
                self.i += 1
                return out
            self.fail("expected ',' or '}' in object")

    def arr(self, path):
        out = []
        self.i += 1
        self.skip_ws()
        if self.i < self.n and self.text[self.i] == "]":
            self.i += 1
            return out
        while True:
            out.append(self.value(f"{path}/{len(out)}"))
            self.skip_ws()
            if self.i < self.n and self.text[self.i] == ",":
                self.i += 1
                continue
            if self.i < self.n and self.text[self.i] == "]":
                self.i += 1
                return out
            self.fail("expected ',' or ']' in array")

    def string(self):
        start = self.i
        self.i += 1
        out = []
        while True:
            if self.i >= self.n:
                self.fail("unterminated string", start)
            ch = self.text[self.i]
            if ch == '"':
                self.i += 1
                return "".join(out)
            if ch == "\\":
                if self.i + 1 >= self.n:
                    self.fail("unterminated escape", self.i)
                esc = self.text[self.i + 1]
                simple = {'"': '"', "\\": "\\", "/": "/", "b": "\b", "f": "\f", "n": "\n", "r": "\r", "t": "\t"}
                if esc in simple:
                    out.append(simple[esc])
                    self.i += 2
                elif esc == "u":
                    hexs = self.text[self.i + 2 : self.i + 6]
                    if len(hexs) < 4:
                        self.fail("bad unicode escape", self.i)
                    try:
                        out.append(chr(int(hexs, 16)))
                    except ValueError:
                        self.fail("bad unicode escape", self.i)
                    self.i += 6
                else:
                    self.fail(f"bad escape \\{esc}", self.i)
            else:
                out.append(ch)
                self.i += 1

    def number(self):
        start = self.i
        if self.text[self.i] == "-":
            self.i += 1
        while self.i < self.n and self.text[self.i] in "0123456789":
            self.i += 1
        is_float = False
        if self.i < self.n and self.text[self.i] == ".":
            is_float = True
            self.i += 1
            while self.i < self.n and self.text[self.i] in "0123456789":
                self.i += 1
        if self.i < self.n and self.text[self.i] in "eE":
            is_float = True
            self.i += 1
            if self.i < self.n and self.text[self.i] in "+-":
                self.i += 1
            while self.i < self.n and self.text[self.i] in "0123456789":
                self.i += 1
        raw = self.text[start : self.i]
        if raw in ("-", ""):
            self.fail("malformed number", start)
        try:
            return float(raw) if is_float else int(raw)
        except ValueError:
            self.fail(f"malformed number {raw!r}", start)


def parse_with_positions(text: str):
    """(value, positions, diagnostics): never raises on malformed input."""
    p = _Parser(text)
    try:
        value = p.parse()
        return value, p.positions, []
    except ParseFailure as e:
        return None, p.positions, [e.diagnostic]
    except RecursionError:
        return None, p.positions, [Diagnostic(1, 1, "document nests too deeply")]
