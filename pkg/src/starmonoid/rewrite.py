"""String rewriting for monoid presentations.

Words are packed into Python strings, one character per letter, with
characters ordered like the alphabet so that string comparison is the
lexicographic order on words. Every rule in a :class:`RewriteSystem` is a
consequence of the presentation it came from, so equal normal forms always
prove a congruence.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .presentation import Presentation, Word

_BASE = 0x41


@dataclass(frozen=True)
class SearchLimits:
    max_word_len: int | None = None  # None: |u| + |v| slack, see congruent()
    max_visited: int = 2_000_000
    max_rules: int = 20_000
    max_passes: int = 5_000_000
    slack: int = 8

    def __post_init__(self):
        for name in ("max_visited", "max_rules", "max_passes", "slack"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_word_len is not None and self.max_word_len <= 0:
            raise ValueError("max_word_len must be positive")


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    partial: "RewriteSystem | None" = None
    stats: dict = field(default_factory=dict)

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Distinct:
    """Different normal forms under a complete system: the words are not congruent."""

    u_nf: Word
    v_nf: Word

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Overflow:
    cap: int

    def __bool__(self):
        return False


class Codec:
    def __init__(self, alphabet: Iterable[str]):
        self.alphabet = tuple(alphabet)
        self._enc = {x: chr(_BASE + i) for i, x in enumerate(self.alphabet)}
        self._dec = {chr(_BASE + i): x for i, x in enumerate(self.alphabet)}

    def encode(self, w: Word) -> str:
        try:
            return "".join([self._enc[x] for x in w])
        except KeyError as exc:
            raise ValueError(f"letter {exc.args[0]!r} not in alphabet {self.alphabet}") from None

    def decode(self, s: str) -> Word:
        return tuple(self._dec[ch] for ch in s)


def shortlex_greater(u: str, v: str) -> bool:
    return (len(u), u) > (len(v), v)


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: str
    source: str


class RewriteSystem:
    """Length-lex decreasing rules over a fixed alphabet order."""

    def __init__(self, alphabet, rules: Iterable[Rule] = (), complete: bool = False):
        self.codec = Codec(alphabet)
        self.rules: list[Rule] = []
        self._lookup: dict[str, int] = {}
        self._lengths: list[int] = []
        self.complete = complete
        for r in rules:
            self._add(r)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.codec.alphabet

    def __len__(self):
        return len(self.rules)

    def _add(self, r: Rule) -> None:
        if not shortlex_greater(r.lhs, r.rhs):
            raise ValueError(f"rule {r} is not shortlex decreasing")
        if r.lhs in self._lookup:
            return
        self._lookup[r.lhs] = len(self.rules)
        self.rules.append(r)
        if len(r.lhs) not in self._lengths:
            self._lengths.append(len(r.lhs))
            self._lengths.sort()

    def word_rules(self) -> list[tuple[Word, Word, str]]:
        d = self.codec.decode
        return [(d(r.lhs), d(r.rhs), r.source) for r in self.rules]

    def _match(self, s: str, i: int) -> int | None:
        """Index of the first rule (in rule order) whose lhs occurs at position i."""
        best = None
        look = self._lookup
        for L in self._lengths:
            if i + L > len(s):
                break
            k = look.get(s[i:i + L])
            if k is not None and (best is None or k < best):
                best = k
        return best

    def reduce(self, s: str, trace: list | None = None) -> str:
        """Leftmost-first reduction of a packed word."""
        if not self._lengths:
            return s
        maxlen = self._lengths[-1]
        i = 0
        rules = self.rules
        while i < len(s):
            k = self._match(s, i)
            if k is None:
                i += 1
                continue
            r = rules[k]
            s = s[:i] + r.rhs + s[i + len(r.lhs):]
            if trace is not None:
                trace.append((s, r.source, i))
            i = max(0, i - maxlen + 1)
        return s

    def normalize(self, w: Word) -> Word:
        return self.codec.decode(self.reduce(self.codec.encode(w)))

    def is_reducible(self, s: str) -> bool:
        look = self._lookup
        for i in range(len(s)):
            for L in self._lengths:
                if i + L > len(s):
                    break
                if s[i:i + L] in look:
                    return True
        return False

    def dump(self) -> str:
        from .presentation import format_word

        return "".join(
            f"{format_word(lhs)} -> {format_word(rhs)}    # {src}\n" for lhs, rhs, src in self.word_rules()
        )


def orient(p: Presentation) -> RewriteSystem:
    """Each relation becomes larger -> smaller in shortlex; trivial ones are dropped."""
    codec = Codec(p.alphabet)
    rules = []
    for r in p.relations:
        u, v = codec.encode(r.lhs), codec.encode(r.rhs)
        if u == v:
            continue
        if shortlex_greater(u, v):
            rules.append(Rule(u, v, r.label or "relation"))
        else:
            rules.append(Rule(v, u, r.label or "relation"))
    return RewriteSystem(p.alphabet, rules)


def normalize(s: RewriteSystem, w: Word) -> Word:
    return s.normalize(w)


# -- Knuth-Bendix -------------------------------------------------------------


class _Completion:
    """Mutable rule store used while completing."""

    def __init__(self):
        self.rules: dict[str, tuple[str, str]] = {}  # lhs -> (rhs, source)
        self.lengths: dict[int, int] = {}
        self.prefixes: dict[str, set[str]] = {}
        self.suffixes: dict[str, set[str]] = {}

    def reduce(self, s: str) -> str:
        rules = self.rules
        if not rules:
            return s
        lengths = sorted(self.lengths)
        maxlen = lengths[-1]
        i = 0
        while i < len(s):
            hit = None
            for L in lengths:
                if i + L > len(s):
                    break
                if s[i:i + L] in rules:
                    hit = s[i:i + L]
                    break
            if hit is None:
                i += 1
                continue
            s = s[:i] + rules[hit][0] + s[i + len(hit):]
            i = max(0, i - maxlen + 1)
        return s

    def add(self, lhs: str, rhs: str, source: str) -> None:
        self.rules[lhs] = (rhs, source)
        self.lengths[len(lhs)] = self.lengths.get(len(lhs), 0) + 1
        for k in range(1, len(lhs)):
            self.prefixes.setdefault(lhs[:k], set()).add(lhs)
            self.suffixes.setdefault(lhs[-k:], set()).add(lhs)

    def remove(self, lhs: str) -> tuple[str, str]:
        rhs, source = self.rules.pop(lhs)
        L = len(lhs)
        self.lengths[L] -= 1
        if not self.lengths[L]:
            del self.lengths[L]
        for k in range(1, len(lhs)):
            self.prefixes[lhs[:k]].discard(lhs)
            self.suffixes[lhs[-k:]].discard(lhs)
        return rhs, source

    def overlaps(self, lhs: str):
        """Critical pairs of ``lhs`` with every rule, including itself."""
        rules = self.rules
        r1 = rules[lhs][0]
        for k in range(1, len(lhs)):
            # suffix of lhs == prefix of other
            for other in self.prefixes.get(lhs[-k:], ()):
                r2 = rules[other][0]
                overlap = lhs + other[k:]
                yield len(overlap), r1 + other[k:], lhs[:-k] + r2
            # prefix of lhs == suffix of other
            for other in self.suffixes.get(lhs[:k], ()):
                if other == lhs:
                    continue
                r2 = rules[other][0]
                overlap = other + lhs[k:]
                yield len(overlap), r2 + lhs[k:], other[:-k] + r1


def kb_complete(p: Presentation, lim: SearchLimits | None = None, seed: RewriteSystem | None = None):
    """Knuth-Bendix completion under shortlex.

    Returns a complete :class:`RewriteSystem`, or :class:`Inconclusive`
    carrying the partial system when a limit is reached.
    """
    lim = lim or SearchLimits()
    codec = Codec(p.alphabet)
    st = _Completion()
    heap: list = []
    counter = 0

    def push(prio, u, v, source):
        nonlocal counter
        heapq.heappush(heap, (prio, counter, u, v, source))
        counter += 1

    for r in p.relations:
        u, v = codec.encode(r.lhs), codec.encode(r.rhs)
        push(0, u, v, r.label or "relation")  # input relations go first
    if seed is not None:
        for r in seed.rules:
            push(len(r.lhs), r.lhs, r.rhs, r.source)

    passes = 0
    while True:
        while heap:
            passes += 1
            if passes > lim.max_passes:
                return Inconclusive("completion pass limit", _snapshot(p, st), {"rules": len(st.rules), "passes": passes})
            _, _, u, v, source = heapq.heappop(heap)
            u = st.reduce(u)
            v = st.reduce(v)
            if u == v:
                continue
            if not shortlex_greater(u, v):
                u, v = v, u
            # interreduce against the new rule
            for lhs in [l for l in st.rules if u in l]:
                rhs, src = st.remove(lhs)
                push(max(len(lhs), len(rhs)), lhs, rhs, src)
            for lhs, (rhs, src) in list(st.rules.items()):
                if u in rhs:
                    st.rules[lhs] = (st.reduce(rhs.replace(u, v)), src)
            st.add(u, v, source)
            if len(st.rules) > lim.max_rules:
                return Inconclusive("rule limit", _snapshot(p, st), {"rules": len(st.rules), "passes": passes})
            for prio, a, b in st.overlaps(u):
                push(prio, a, b, "cp")
        # final audit: every critical pair must be joinable
        missing = 0
        for lhs in list(st.rules):
            for prio, a, b in st.overlaps(lhs):
                if st.reduce(a) != st.reduce(b):
                    push(prio, a, b, "cp")
                    missing += 1
        if not missing:
            break
    system = _snapshot(p, st)
    system.complete = True
    return system


def _snapshot(p: Presentation, st: _Completion) -> RewriteSystem:
    rules = sorted(st.rules.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return RewriteSystem(p.alphabet, [Rule(l, r, src) for l, (r, src) in rules])


def count_normal_forms(s: RewriteSystem, cap: int = 10_000_000):
    """Number of irreducible words, or :class:`Overflow` past ``cap``."""
    look = s._lookup
    lengths = s._lengths
    letters = [chr(_BASE + i) for i in range(len(s.alphabet))]
    count = 1
    frontier = [""]
    while frontier:
        nxt = []
        for w in frontier:
            for x in letters:
                cand = w + x
                reducible = False
                for L in lengths:
                    if L > len(cand):
                        break
                    if cand[-L:] in look:
                        reducible = True
                        break
                if not reducible:
                    count += 1
                    if count > cap:
                        return Overflow(cap)
                    nxt.append(cand)
        frontier = nxt
    return count


def normal_forms(s: RewriteSystem, cap: int = 10_000_000) -> list[Word]:
    look = s._lookup
    lengths = s._lengths
    letters = [chr(_BASE + i) for i in range(len(s.alphabet))]
    out = [""]
    frontier = [""]
    while frontier:
        nxt = []
        for w in frontier:
            for x in letters:
                cand = w + x
                if any(cand[-L:] in look for L in lengths if L <= len(cand)):
                    continue
                out.append(cand)
                if len(out) > cap:
                    raise OverflowError(cap)
                nxt.append(cand)
        frontier = nxt
    return [s.codec.decode(w) for w in out]


# -- bounded congruence search -----------------------------------------------


@dataclass(frozen=True)
class Step:
    word: Word
    rule: str
    position: int


@dataclass(frozen=True)
class Proof:
    """A chain of words from ``u`` to ``v``, one rule application per step."""

    u: Word
    v: Word
    steps: tuple[Step, ...]
    visited: int = 0

    def __bool__(self):
        return True

    @property
    def words(self) -> list[Word]:
        return [self.u] + [s.word for s in self.steps]

    def text(self) -> str:
        from .presentation import format_word

        lines = [format_word(self.u)]
        for s in self.steps:
            lines.append(f"{format_word(s.word)}    # {s.rule} @ {s.position}")
        return "\n".join(lines) + "\n"


def _relation_moves(p: Presentation, codec: Codec):
    moves = []
    for r in p.relations:
        u, v = codec.encode(r.lhs), codec.encode(r.rhs)
        if u == v:
            continue
        label = r.label or "relation"
        moves.append((u, v, label))
        moves.append((v, u, label + "^-1"))
    return moves


def _neighbours(s: str, moves, max_len: int):
    for pat, rep, label in moves:
        grow = len(rep) - len(pat)
        if len(s) + grow > max_len:
            continue
        if not pat:
            for i in range(len(s) + 1):
                yield s[:i] + rep + s[i:], label, i
            continue
        i = s.find(pat)
        while i >= 0:
            yield s[:i] + rep + s[i + len(pat):], label, i
            i = s.find(pat, i + 1)


def congruent(u: Word, v: Word, p: Presentation, lim: SearchLimits | None = None,
              rewriter: RewriteSystem | None = None):
    """Search for a derivation u ~ v.

    Both words are first reduced with ``rewriter`` (rules that are
    consequences of ``p``; by default the oriented relations). Then a
    breadth-first search runs from both ends, each move applying one relation
    of ``p`` in either direction followed by reduction, until the two
    searches meet. Returns a :class:`Proof` or :class:`Inconclusive`, or
    :class:`Distinct` when ``rewriter`` is complete and the normal forms differ.
    """
    lim = lim or SearchLimits()
    rw = rewriter if rewriter is not None else orient(p)
    if set(rw.alphabet) != set(p.alphabet):
        raise ValueError("rewriter alphabet differs from the presentation")
    codec = rw.codec
    su, sv = codec.encode(u), codec.encode(v)
    max_len = lim.max_word_len or (max(len(su), len(sv)) + p.max_side() + lim.slack)

    # parents[side][word] = (previous word, steps from previous to this word)
    parents: list[dict[str, tuple[str | None, list]]] = [{}, {}]
    frontiers: list[deque] = [deque(), deque()]
    for side, start in ((0, su), (1, sv)):
        trace: list = []
        red = rw.reduce(start, trace)
        parents[side][red] = (None, [(start, "start", 0)] + trace)
        frontiers[side].append(red)
    meet = next((w for w in parents[0] if w in parents[1]), None)
    if meet is None and rw.complete:
        (nu,), (nv,) = parents[0], parents[1]
        return Distinct(codec.decode(nu), codec.decode(nv))
    moves = _relation_moves(p, codec) if meet is None else ()
    visited = 2
    while meet is None:
        if not frontiers[0] and not frontiers[1]:
            return Inconclusive("search space exhausted within the length bound", None, {"visited": visited})
        side = 0 if (frontiers[0] and (len(frontiers[0]) <= len(frontiers[1]) or not frontiers[1])) else 1
        other = parents[1 - side]
        mine = parents[side]
        layer = frontiers[side]
        nxt: deque = deque()
        while layer and meet is None:
            w = layer.popleft()
            for cand, label, pos in _neighbours(w, moves, max_len):
                trace = [(cand, label, pos)]
                red = rw.reduce(cand, trace)
                if red in mine:
                    continue
                mine[red] = (w, trace)
                visited += 1
                if red in other:
                    meet = red
                    break
                nxt.append(red)
                if visited > lim.max_visited:
                    return Inconclusive("visited limit", None, {"visited": visited})
        frontiers[side] = nxt if meet is None else deque()
        if meet is None and layer:
            frontiers[side].extendleft(reversed(layer))

    left = _chain(parents[0], meet)
    right = _chain(parents[1], meet)
    steps = list(left)
    # walk the right half backwards: each step is reversed
    rwords = [w for w, _, _ in right]
    rlabels = [(lab, pos) for _, lab, pos in right]
    for idx in range(len(right) - 1, 0, -1):
        lab, pos = rlabels[idx]
        steps.append((rwords[idx - 1], _inverse_label(lab), pos))
    out_steps = tuple(Step(codec.decode(w), lab, pos) for w, lab, pos in steps[1:])
    proof = Proof(tuple(u), tuple(v), out_steps, visited)
    return proof


def _chain(parents: dict, end: str) -> list:
    """Sequence (word, label, pos) from the start word to ``end``."""
    segments = []
    cur = end
    while cur is not None:
        prev, trace = parents[cur]
        segments.append(trace)
        cur = prev
    out = []
    for seg in reversed(segments):
        out.extend(seg)
    return out


def _inverse_label(label: str) -> str:
    return label[:-3] if label.endswith("^-1") else label + "^-1"


def check_proof(proof: Proof, p: Presentation, extra_rules: Iterable[tuple[Word, Word, str]] = ()) -> bool:
    """Every consecutive pair in the chain differs by one application of a
    relation of ``p`` or of one of ``extra_rules``, in either direction."""
    pairs = [(tuple(r.lhs), tuple(r.rhs)) for r in p.relations]
    pairs += [(tuple(a), tuple(b)) for a, b, _ in extra_rules]
    words = proof.words
    if words[-1] != tuple(proof.v):
        return False
    for a, b in zip(words, words[1:]):
        if not any(_one_step(a, b, l, r) or _one_step(a, b, r, l) for l, r in pairs):
            return False
    return True


def _one_step(a: Word, b: Word, pat: Word, rep: Word) -> bool:
    if len(a) - len(pat) != len(b) - len(rep):
        return False
    for i in range(len(a) - len(pat) + 1):
        if a[i:i + len(pat)] == pat and b[:i] == a[:i] and b[i:i + len(rep)] == rep and b[i + len(rep):] == a[i + len(pat):]:
            return True
    return False
