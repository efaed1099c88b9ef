"""Plain-text algebra and relation files.

Algebra::

    algebra C3
    size 3
    op meet 2
    0 0 0  0 1 1  0 1 2

Relation::

    rel theta
    size 3
    reflexive
    0 1
    1 0

``#`` starts a comment.  Table entries follow the lexicographic order of the
argument tuples, last argument fastest.
"""
from __future__ import annotations

from pathlib import Path

from .algebra import FiniteAlgebra, Operation
from .binrel import BinRel
from .errors import InputError


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        for tok in line.split("#", 1)[0].split():
            yield lineno, tok


class _Stream:
    def __init__(self, text: str):
        self.toks = list(_tokens(text))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def next(self, what: str):
        if self.pos >= len(self.toks):
            last = self.toks[-1][0] if self.toks else 1
            raise InputError(f"line {last}: unexpected end of file, expected {what}")
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def keyword(self, word: str):
        lineno, tok = self.next(f"'{word}'")
        if tok != word:
            raise InputError(f"line {lineno}: expected '{word}', got {tok!r}")
        return lineno

    def integer(self, what: str) -> int:
        lineno, tok = self.next(what)
        try:
            return int(tok)
        except ValueError:
            raise InputError(f"line {lineno}: expected {what}, got {tok!r}") from None


def parse_algebra(text: str) -> FiniteAlgebra:
    s = _Stream(text)
    s.keyword("algebra")
    _, name = s.next("algebra name")
    lineno = s.keyword("size")
    n = s.integer("universe size")
    if n < 1:
        raise InputError(f"line {lineno}: universe must be nonempty")
    ops = []
    while s.peek()[1] is not None:
        lineno = s.keyword("op")
        _, opname = s.next("operation name")
        arity = s.integer("arity")
        if arity < 0:
            raise InputError(f"line {lineno}: negative arity")
        table = []
        for _ in range(n**arity):
            ln, tok = s.next(f"table entry for {opname}")
            try:
                v = int(tok)
            except ValueError:
                raise InputError(f"line {ln}: table entry {tok!r} is not an integer") from None
            if not 0 <= v < n:
                raise InputError(f"line {ln}: table entry {v} outside 0..{n - 1}")
            table.append(v)
        ops.append(Operation(opname, arity, tuple(table)))
    return FiniteAlgebra(name, n, tuple(ops))


def format_algebra(A: FiniteAlgebra) -> str:
    lines = [f"algebra {A.name}", f"size {A.n}"]
    for op in A.ops:
        lines.append(f"op {op.name} {op.arity}")
        row = A.n if op.arity >= 1 else 1
        t = op.table
        for i in range(0, len(t), row):
            lines.append(" ".join(map(str, t[i:i + row])))
    return "\n".join(lines) + "\n"


def parse_relation(text: str, n: int | None = None) -> tuple[str, BinRel]:
    s = _Stream(text)
    s.keyword("rel")
    _, name = s.next("relation name")
    lineno = s.keyword("size")
    size = s.integer("universe size")
    if n is not None and size != n:
        raise InputError(f"line {lineno}: relation size {size} does not match algebra size {n}")
    pairs = set()
    while s.peek()[1] is not None:
        lineno, tok = s.peek()
        if tok == "reflexive":
            s.next("directive")
            pairs.update((a, a) for a in range(size))
            continue
        a = s.integer("pair element")
        b = s.integer("pair element")
        if not (0 <= a < size and 0 <= b < size):
            raise InputError(f"line {lineno}: pair {a} {b} outside 0..{size - 1}")
        pairs.add((a, b))
    return name, BinRel.from_pairs(size, pairs)


def format_relation(R: BinRel, name: str = "R") -> str:
    lines = [f"rel {name}", f"size {R.n}"]
    lines.extend(f"{a} {b}" for a, b in R.pairs())
    return "\n".join(lines) + "\n"


def load_algebra(path) -> FiniteAlgebra:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra(text)


def load_relation(path, n: int | None = None) -> BinRel:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_relation(text, n)[1]
