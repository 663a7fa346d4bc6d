"""Finitely presented groups: words, coset enumeration, regular representations.

Words are tuples of signed letters: +(g+1) for generator g, -(g+1) for its
inverse.  Commutators expand left-normed, [x,y] = x^-1 y^-1 x y.

Coset enumeration is the classic relator-scanning strategy with immediate
coincidence processing (HLT), followed by a relator-tracing closure pass over
the finished table; this fixed strategy makes tables reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .perm import Permutation

__all__ = [
    "Presentation",
    "CosetTable",
    "todd_coxeter",
    "regular_representation",
    "verify_homomorphism",
    "parse_word",
    "word_to_text",
]

Word = tuple[int, ...]


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


def commutator_word(x: Sequence[int], y: Sequence[int]) -> Word:
    return free_reduce(invert_word(x) + invert_word(y) + tuple(x) + tuple(y))


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\^-?\d+|[\[\],*]|\S")


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse word syntax like "f0*f1^-1*[e1,f2]" against declared generator names."""
    index = {name: i for i, name in enumerate(names)}
    tokens = _TOKEN_RE.findall(text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of word: {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r} at {tok!r} in {text!r}")
        pos += 1
        return tok

    def factor() -> Word:
        tok = peek()
        if tok == "[":
            take("[")
            parts = [product()]
            while peek() == ",":
                take(",")
                parts.append(product())
            take("]")
            w = parts[0]
            for part in parts[1:]:
                w = commutator_word(w, part)
        else:
            tok = take()
            if tok not in index:
                raise ValueError(f"undeclared symbol {tok!r} in {text!r}")
            w = (index[tok] + 1,)
        if peek() is not None and peek().startswith("^"):
            exp = int(take()[1:])
            base = w if exp >= 0 else invert_word(w)
            w = tuple()
            for _ in range(abs(exp)):
                w = w + base
        return free_reduce(w)

    def product() -> Word:
        w = factor()
        while peek() == "*":
            take("*")
            w = free_reduce(w + factor())
        return w

    result = product()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in word {text!r}")
    return result


def word_to_text(word: Word, names: Sequence[str]) -> str:
    if not word:
        return "1"
    parts = []
    for letter in word:
        name = names[abs(letter) - 1]
        parts.append(name if letter > 0 else f"{name}^-1")
    return "*".join(parts)


@dataclass(frozen=True)
class Presentation:
    """A finite presentation: generator names plus freely reduced relators."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __init__(self, generators: Sequence[str], relators: Sequence[Sequence[int]]):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        reduced = []
        for rel in relators:
            w = free_reduce(rel)
            for letter in w:
                if not 1 <= abs(letter) <= len(gens):
                    raise ValueError(f"relator references undeclared generator: {rel}")
            if w:
                reduced.append(w)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(reduced))

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """Parse the text format: a generators line, then one relator per line."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty presentation text")
        names = re.split(r"[\s,]+", lines[0])
        relators = [parse_word(ln, names) for ln in lines[1:]]
        return cls(names, relators)

    def to_text(self) -> str:
        lines = [" ".join(self.generators)]
        lines.extend(word_to_text(rel, self.generators) for rel in self.relators)
        return "\n".join(lines)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)


class EnumerationOverflow(RuntimeError):
    """Internal signal: the coset limit was hit during enumeration."""


@dataclass
class CosetTable:
    """Right-coset action table produced by coset enumeration.

    ``rows[c][2*g]`` is the image of coset c under generator g, ``rows[c][2*g+1]``
    the image under its inverse.  ``status`` is "closed" or "overflow"; only a
    closed table carries a trustworthy coset count.
    """

    presentation: Presentation
    rows: list[list[int]]
    status: str
    coset_count: int
    max_cosets: int

    @property
    def is_closed(self) -> bool:
        return self.status == "closed"

    def apply(self, coset: int, letter: int) -> int:
        col = 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1
        return self.rows[coset][col]

    def trace(self, coset: int, word: Word) -> int:
        for letter in word:
            coset = self.apply(coset, letter)
        return coset


def todd_coxeter(
    pres: Presentation,
    subgroup_words: Sequence[Sequence[int]] = (),
    max_cosets: int = 10 ** 6,
) -> CosetTable:
    """Enumerate cosets of the subgroup the given words generate.

    Returns a closed table whose coset count is the subgroup index, or a table
    with status "overflow" once more than max_cosets cosets would be needed.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    ngens = len(pres.generators)
    ncols = 2 * ngens

    def to_cols(word: Sequence[int]) -> tuple[int, ...]:
        return tuple(2 * (l - 1) if l > 0 else 2 * (-l - 1) + 1 for l in word)

    relators = [to_cols(free_reduce(w)) for w in pres.relators]
    subgens = [to_cols(free_reduce(w)) for w in subgroup_words]

    table: list[list[int]] = [[-1] * ncols]
    p: list[int] = [0]

    def define(a: int, x: int) -> None:
        if len(table) >= max_cosets:
            raise EnumerationOverflow
        table.append([-1] * ncols)
        p.append(len(table) - 1)
        b = len(table) - 1
        table[a][x] = b
        table[b][x ^ 1] = a

    def rep(k: int) -> int:
        l = k
        while p[l] != l:
            l = p[l]
        while p[k] != l:
            p[k], k = l, p[k]
        return l

    def merge(k: int, lam: int, queue: list[int]) -> None:
        x, y = rep(k), rep(lam)
        if x != y:
            lo, hi = (x, y) if x < y else (y, x)
            p[hi] = lo
            queue.append(hi)

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []
        merge(a, b, queue)
        qi = 0
        while qi < len(queue):
            g = queue[qi]
            qi += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d == -1:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = rep(g), rep(d)
                if table[mu][x] != -1:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] != -1:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(a: int, word: tuple[int, ...]) -> None:
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] != -1:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] != -1:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    try:
        for w in subgens:
            scan_and_fill(0, w)
        a = 0
        while a < len(table):
            if p[a] != a:
                a += 1
                continue
            for rel in relators:
                scan_and_fill(a, rel)
                if p[a] != a:
                    break
            if p[a] == a:
                row = table[a]
                for x in range(ncols):
                    if row[x] == -1:
                        define(a, x)
            a += 1
    except EnumerationOverflow:
        return CosetTable(pres, [], "overflow", 0, max_cosets)

    live = [k for k in range(len(table)) if p[k] == k]
    remap = {old: new for new, old in enumerate(live)}
    rows = [[remap[rep(table[old][x])] for x in range(ncols)] for old in live]
    rows = _standardize(rows, ncols)
    _closure_pass(rows, relators, subgens, ncols)
    return CosetTable(pres, rows, "closed", len(rows), max_cosets)


def _standardize(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Relabel cosets in BFS discovery order over columns; fixes a canonical table."""
    order = {0: 0}
    queue = [0]
    qi = 0
    while qi < len(queue):
        c = queue[qi]
        qi += 1
        for x in range(ncols):
            d = rows[c][x]
            if d not in order:
                order[d] = len(order)
                queue.append(d)
    out = [[0] * ncols for _ in rows]
    for old, new in order.items():
        out[new] = [order[d] for d in rows[old]]
    return out


def _closure_pass(rows, relators, subgens, ncols) -> None:
    for w in subgens:
        c = 0
        for x in w:
            c = rows[c][x]
        if c != 0:
            raise RuntimeError("closure pass failed: subgroup word leaves coset 0")
    for start in range(len(rows)):
        for rel in relators:
            c = start
            for x in rel:
                c = rows[c][x]
            if c != start:
                raise RuntimeError("closure pass failed: relator does not close")


def regular_representation(table: CosetTable) -> list[Permutation]:
    """One permutation per generator, acting on the cosets of a closed table."""
    if not table.is_closed:
        raise ValueError("regular representation requires a closed coset table")
    return [
        Permutation([row[2 * g] for row in table.rows])
        for g in range(len(table.presentation.generators))
    ]


def induced_permutation(table: CosetTable, image_words: Sequence[Word]) -> Permutation:
    """Permutation of the cosets induced by a generator-to-word substitution.

    Requires a table enumerated over the trivial subgroup, so cosets are group
    elements; the substitution must already be known to respect the relators.
    """
    if not table.is_closed:
        raise ValueError("need a closed coset table")
    if len(image_words) != len(table.presentation.generators):
        raise ValueError("one image word per generator is required")
    n = table.coset_count
    ngens = len(table.presentation.generators)
    pi = [-1] * n
    pi[0] = 0
    queue = [0]
    qi = 0
    while qi < len(queue):
        c = queue[qi]
        qi += 1
        for g in range(ngens):
            for col, word in ((2 * g, image_words[g]),
                              (2 * g + 1, invert_word(image_words[g]))):
                d = table.rows[c][col]
                if pi[d] == -1:
                    pi[d] = table.trace(pi[c], word)
                    queue.append(d)
    if min(pi) < 0:
        raise ValueError("coset table is not connected")
    return Permutation(pi)


class RegularGroup:
    """Finite group presented concretely: elements are coset indices of a
    closed table over the trivial subgroup, multiplied through the table."""

    def __init__(self, table: CosetTable):
        if not table.is_closed:
            raise ValueError("need a closed coset table")
        self.table = table
        self.order = table.coset_count
        gens = regular_representation(table)
        ident = Permutation.identity(self.order)
        perms: list[Permutation | None] = [None] * self.order
        perms[0] = ident
        queue = [0]
        qi = 0
        while qi < len(queue):
            c = queue[qi]
            qi += 1
            for g, gen_perm in enumerate(gens):
                d = table.rows[c][2 * g]
                if perms[d] is None:
                    perms[d] = perms[c] * gen_perm
                    queue.append(d)
        self.perms: list[Permutation] = perms  # type: ignore[assignment]
        self.identity = 0

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.perms[b](a)

    def inv(self, a: int) -> int:
        return self.perms[a].inverse()(0)

    def element_of_word(self, word: Word) -> int:
        return self.table.trace(0, word)


def verify_homomorphism(pres: Presentation, images: Sequence[Permutation]) -> bool:
    """True iff mapping each generator to its image kills every relator."""
    if len(images) != len(pres.generators):
        raise ValueError("one image per generator is required")
    degrees = {im.degree for im in images}
    if len(degrees) > 1:
        raise ValueError("images must share one degree")
    degree = degrees.pop() if degrees else 0
    ident = Permutation.identity(degree)
    for rel in pres.relators:
        acc = ident
        for letter in rel:
            im = images[abs(letter) - 1]
            acc = acc * (im if letter > 0 else im.inverse())
        if not acc.is_identity():
            return False
    return True
