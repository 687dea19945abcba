"""Words, relations and monoid presentations, plus their text file format.

A word is a tuple of letter names, so the same word can be read in any
presentation whose alphabet contains its letters. The empty tuple is the
identity.

File format::

    # comment
    alphabet: a0 b0 e0 f0
    a0^2 = 1
    (b0 a0)^3 = 1
    z d = (f0 b0)^3 z

``1`` denotes the empty word, ``x^k`` a power of a letter and ``( ... )^k``
a power of a group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

Word = tuple  # tuple[str, ...]

EMPTY: Word = ()


def word(*parts) -> Word:
    """Flatten letters, words and ``(word, exponent)`` pairs into one word."""
    out: list[str] = []
    for p in parts:
        if isinstance(p, str):
            out.extend(p.split())
        elif isinstance(p, Power):
            out.extend(p.expand())
        else:
            out.extend(p)
    return tuple(out)


@dataclass(frozen=True)
class Power:
    base: Word
    exponent: int

    def expand(self) -> Word:
        if self.exponent < 0:
            raise ValueError(f"negative exponent {self.exponent}")
        return tuple(self.base) * self.exponent


def pw(base, k: int) -> Word:
    """``base`` repeated ``k`` times; ``k == 0`` gives the empty word."""
    return Power(word(base), k).expand()


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    label: str = ""

    def __iter__(self):
        yield self.lhs
        yield self.rhs

    def letters(self) -> set[str]:
        return set(self.lhs) | set(self.rhs)


@dataclass
class Presentation:
    alphabet: tuple[str, ...]
    relations: list[Relation]
    name: str = ""
    n: int | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.alphabet = tuple(self.alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError(f"repeated letter in alphabet {self.alphabet}")
        letters = set(self.alphabet)
        for r in self.relations:
            bad = r.letters() - letters
            if bad:
                raise ValueError(f"relation {r.label or r} uses letters {sorted(bad)} outside the alphabet")

    def __len__(self):
        return len(self.relations)

    def extend(self, new_letters: Iterable[str], relations: Iterable[Relation], name: str = "") -> "Presentation":
        alphabet = self.alphabet + tuple(x for x in new_letters if x not in self.alphabet)
        return Presentation(alphabet, list(self.relations) + list(relations), name or self.name, self.n, list(self.notes))

    def reorder(self, alphabet: Iterable[str]) -> "Presentation":
        alphabet = tuple(alphabet)
        if set(alphabet) != set(self.alphabet):
            raise ValueError("reorder must keep the same letters")
        return Presentation(alphabet, list(self.relations), self.name, self.n, list(self.notes))

    def without(self, index: int) -> "Presentation":
        rels = list(self.relations)
        del rels[index]
        return Presentation(self.alphabet, rels, self.name, self.n, list(self.notes))

    def index_of(self, lhs: Word, rhs: Word) -> int:
        for i, r in enumerate(self.relations):
            if r.lhs == tuple(lhs) and r.rhs == tuple(rhs):
                return i
        raise KeyError((lhs, rhs))

    def max_side(self) -> int:
        return max((max(len(r.lhs), len(r.rhs)) for r in self.relations), default=0)


# -- text form ---------------------------------------------------------------


def format_word(w: Word) -> str:
    """Tokens with runs of one letter folded into ``x^k``; ``1`` for empty."""
    if not w:
        return "1"
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        out.append(w[i] if run == 1 else f"{w[i]}^{run}")
        i = j
    return " ".join(out)


_TOKEN_RE = re.compile(r"\(|\)(?:\^(\d+))?|[^\s()^]+(?:\^(\d+))?")


def parse_word(text: str, alphabet: Iterable[str] | None = None) -> Word:
    letters = set(alphabet) if alphabet is not None else None
    stack: list[list[str]] = [[]]
    pos = 0
    text = text.strip()
    for m in _TOKEN_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse {text[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        tok = m.group(0)
        if tok == "(":
            stack.append([])
        elif tok.startswith(")"):
            if len(stack) == 1:
                raise ValueError(f"unbalanced ')' in {text!r}")
            inner = stack.pop()
            k = int(m.group(1)) if m.group(1) else 1
            stack[-1].extend(inner * k)
        else:
            name, _, exp = tok.partition("^")
            k = int(exp) if exp else 1
            if name == "1":
                continue
            if letters is not None and name not in letters:
                raise ValueError(f"letter {name!r} not in alphabet")
            stack[-1].extend([name] * k)
    if text[pos:].strip():
        raise ValueError(f"trailing text {text[pos:]!r}")
    if len(stack) != 1:
        raise ValueError(f"unbalanced '(' in {text!r}")
    return tuple(stack[0])


def format_presentation(p: Presentation) -> str:
    lines = []
    if p.name:
        lines.append(f"# {p.name}" + (f" (n={p.n})" if p.n is not None else ""))
    for note in p.notes:
        lines.append(f"# {note}")
    lines.append("alphabet: " + " ".join(p.alphabet))
    for r in p.relations:
        lines.append(f"{format_word(r.lhs)} = {format_word(r.rhs)}")
    return "\n".join(lines) + "\n"


def parse_presentation(text: str, name: str = "") -> Presentation:
    alphabet = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("alphabet:"):
            alphabet = tuple(line[len("alphabet:"):].split())
            continue
        if alphabet is None:
            raise ValueError(f"line {lineno}: relation before the alphabet header")
        if line.count("=") != 1:
            raise ValueError(f"line {lineno}: expected exactly one '=' in {raw!r}")
        lhs, rhs = line.split("=")
        relations.append(Relation(parse_word(lhs, alphabet), parse_word(rhs, alphabet), f"{name}:{lineno}"))
    if alphabet is None:
        raise ValueError("missing 'alphabet:' header")
    return Presentation(alphabet, relations, name)


def load_presentation(path, name: str = "") -> Presentation:
    with open(path) as fh:
        return parse_presentation(fh.read(), name or str(path))


def save_presentation(p: Presentation, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_presentation(p))
