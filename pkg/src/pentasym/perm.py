"""Permutation arithmetic and base-and-strong-generating-set machinery.

Permutations act on {0..degree-1} and multiply left-to-right: in ``p * q``,
``p`` is applied first.  External notation (parser/printer) is 1-based cycle
notation; internal storage is a dense 0-based image array.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "compose",
    "element_order",
    "identity",
    "parse_cycles",
    "cycle_string",
    "orbit",
    "StabilizerChain",
    "build_chain",
    "contains",
    "closure",
]

# Explicit transversal permutations are stored up to this degree; above it,
# transversals are kept as Schreier vectors and representatives are rebuilt
# on demand.
EXPLICIT_TRANSVERSAL_MAX_DEGREE = 512


class DegreeMismatch(ValueError):
    """Raised when combining permutations of different degrees."""


class Permutation:
    """A bijection of {0..degree-1}, stored as an image array."""

    __slots__ = ("_img", "_key", "_hash")

    def __init__(self, images: Sequence[int]):
        img = np.asarray(images, dtype=np.int32)
        if img.ndim != 1:
            raise ValueError("images must be a flat sequence")
        n = img.shape[0]
        seen = np.zeros(n, dtype=bool)
        if n and (img.min() < 0 or img.max() >= n):
            raise ValueError("images out of range")
        seen[img] = True
        if not seen.all():
            raise ValueError("images is not a bijection")
        img.flags.writeable = False
        self._img = img
        self._key: bytes | None = None
        self._hash: int | None = None

    @classmethod
    def _raw(cls, img: np.ndarray) -> "Permutation":
        """Wrap a trusted image array without validating it."""
        p = object.__new__(cls)
        img.flags.writeable = False
        p._img = img
        p._key = None
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(np.arange(degree, dtype=np.int32))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation from 0-based cycles."""
        img = np.arange(degree, dtype=np.int32)
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                img[a] = b
            if cyc:
                img[cyc[-1]] = cyc[0]
        return cls(img)

    @property
    def degree(self) -> int:
        return self._img.shape[0]

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(int(i) for i in self._img)

    def key(self) -> bytes:
        if self._key is None:
            self._key = self._img.tobytes()
        return self._key

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img.shape == other._img.shape and self.key() == other.key()

    def __call__(self, point: int) -> int:
        return int(self._img[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._raw(other._img[self._img])

    def __pow__(self, n: int) -> "Permutation":
        if n == 0:
            return Permutation.identity(self.degree)
        if n < 0:
            return self.inverse() ** (-n)
        half = self ** (n >> 1)
        sq = half * half
        return sq * self if n & 1 else sq

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._img)
        inv[self._img] = np.arange(self.degree, dtype=np.int32)
        return Permutation._raw(inv)

    def conj(self, g: "Permutation") -> "Permutation":
        """Conjugate self by g: returns g^-1 * self * g."""
        if self.degree != g.degree:
            raise DegreeMismatch("degree mismatch in conjugation")
        out = np.empty_like(self._img)
        out[g._img] = g._img[self._img]
        return Permutation._raw(out)

    def is_identity(self) -> bool:
        return bool((self._img == np.arange(self.degree, dtype=np.int32)).all())

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, 0-based."""
        img = self._img
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for i in range(self.degree):
            if seen[i] or img[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = int(img[i])
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = int(img[j])
            out.append(tuple(cyc))
        return out

    def cycle_lengths(self) -> list[int]:
        return [len(c) for c in self.cycles()]

    def fixed_points(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self._img == np.arange(self.degree))]

    def order(self) -> int:
        return math.lcm(*self.cycle_lengths()) if self._moves_anything() else 1

    def _moves_anything(self) -> bool:
        return bool((self._img != np.arange(self.degree)).any())

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self._img != np.arange(self.degree))]

    def array(self) -> np.ndarray:
        return self._img

    def __repr__(self) -> str:
        return f"Permutation({cycle_string(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return cycle_string(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Product applying p first, then q."""
    return p * q


def element_order(p: Permutation) -> int:
    """Least k >= 1 with p^k = identity (lcm of cycle lengths)."""
    return p.order()


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(s: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation, e.g. "(1,3)(4,5)"; "()" is the identity."""
    stripped = re.sub(r"\s+", "", s)
    if not stripped:
        raise ValueError("empty permutation string")
    consumed = "".join(_CYCLE_RE.findall(stripped))
    if re.sub(r"[(),]", "", stripped) != consumed.replace(",", ""):
        raise ValueError(f"malformed cycle notation: {s!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        pts = [int(t) for t in body.split(",")]
        if any(t < 1 or t > degree for t in pts):
            raise ValueError(f"point out of range 1..{degree} in {s!r}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point within a cycle in {s!r}")
        cycles.append([t - 1 for t in pts])
    return Permutation.from_cycles(degree, cycles)


def cycle_string(p: Permutation) -> str:
    """1-based cycle notation; the identity prints as "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles)


def orbit(generators: Sequence[Permutation], point: int) -> list[int]:
    """BFS orbit of a point, in ascending discovery order."""
    if generators and point >= generators[0].degree:
        raise ValueError("point outside the permutation domain")
    seen = {point}
    out = [point]
    frontier = [point]
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                b = g(a)
                if b not in seen:
                    seen.add(b)
                    out.append(b)
                    nxt.append(b)
        frontier = nxt
    return out


def closure(generators: Sequence[Permutation], limit: int | None = None) -> list[Permutation]:
    """All products of the generators, by breadth-first multiplication."""
    if not generators:
        return []
    ident = Permutation.identity(generators[0].degree)
    els = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                b = a * g
                k = b.key()
                if k not in els:
                    els[k] = b
                    nxt.append(b)
                    if limit is not None and len(els) > limit:
                        raise ValueError(f"closure exceeded limit {limit}")
        frontier = nxt
    return list(els.values())


class IncompleteChain(RuntimeError):
    """Raised if the final verification sweep finds a non-sifting Schreier generator."""


class _Level:
    """One stabilizer level: a base point, its generators, orbit and transversal."""

    __slots__ = ("point", "gens", "orbit", "_reps", "_svec", "explicit")

    def __init__(self, point: int, explicit: bool):
        self.point = point
        self.gens: list[Permutation] = []
        self.orbit: list[int] = []
        self.explicit = explicit
        self._reps: dict[int, Permutation] = {}
        self._svec: dict[int, tuple[int, int]] = {}

    def recompute(self, ident: Permutation) -> None:
        self.orbit = [self.point]
        self._reps = {self.point: ident}
        self._svec = {self.point: (-1, -1)}
        i = 0
        while i < len(self.orbit):
            a = self.orbit[i]
            i += 1
            for gi, g in enumerate(self.gens):
                b = g(a)
                if b not in self._svec:
                    self._svec[b] = (gi, a)
                    self.orbit.append(b)
                    if self.explicit:
                        self._reps[b] = self._reps[a] * g
        if not self.explicit:
            self._reps = {self.point: ident}

    def rep(self, point: int) -> Permutation:
        """Transversal element u with base-point^u = point."""
        if self.explicit or point == self.point:
            return self._reps[point]
        word = []
        while point != self.point:
            gi, parent = self._svec[point]
            word.append(gi)
            point = parent
        u = self._reps[self.point]
        for gi in reversed(word):
            u = u * self.gens[gi]
        return u


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    The construction ends with a verification sweep re-sifting every Schreier
    generator, so the reported order and membership tests are exact.
    """

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        if degree is None:
            if not generators:
                raise ValueError("degree is required for an empty generator list")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch("generators must share one degree")
        self.degree = degree
        self._ident = Permutation.identity(degree)
        self.levels: list[_Level] = []
        self._explicit = degree <= EXPLICIT_TRANSVERSAL_MAX_DEGREE
        for g in generators:
            self._add_strong_gen(g)
        self._schreier_sims()
        self._verify()

    # -- construction ---------------------------------------------------

    def _add_strong_gen(self, g: Permutation) -> int:
        """Install g at every level whose base prefix it fixes; return the deepest."""
        if g.is_identity():
            return -1
        lvl = 0
        while lvl < len(self.levels) and g(self.levels[lvl].point) == self.levels[lvl].point:
            self.levels[lvl].gens.append(g)
            lvl += 1
        if lvl == len(self.levels):
            base_point = min(g.support())
            self.levels.append(_Level(base_point, self._explicit))
        self.levels[lvl].gens.append(g)
        for j in range(lvl + 1):
            self.levels[j].recompute(self._ident)
        return lvl

    def _sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip g through levels[start:]; returns (residue, stop level)."""
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            target = g(level.point)
            if target == level.point:
                continue
            if target not in level._svec:
                return g, i
            g = g * level.rep(target).inverse()
        return g, len(self.levels)

    def _schreier_sims(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            restart = False
            level = self.levels[i]
            for a in level.orbit:
                u_a = level.rep(a)
                for g in level.gens:
                    b = g(a)
                    s = u_a * g * level.rep(b).inverse()
                    if s.is_identity():
                        continue
                    residue, j = self._sift(s, i + 1)
                    if residue.is_identity():
                        continue
                    deepest = self._add_strong_gen(residue)
                    i = deepest
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def _verify(self) -> None:
        for i, level in enumerate(self.levels):
            for a in level.orbit:
                u_a = level.rep(a)
                for g in level.gens:
                    s = u_a * g * level.rep(g(a)).inverse()
                    residue, _ = self._sift(s, i + 1)
                    if not residue.is_identity():
                        raise IncompleteChain(
                            f"Schreier generator fails to sift at level {i}")

    # -- queries ---------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.point for level in self.levels)

    @property
    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.orbit)
        return n

    def strong_generators(self) -> list[Permutation]:
        return list(self.levels[0].gens) if self.levels else []

    def sift(self, g: Permutation) -> Permutation:
        if g.degree != self.degree:
            raise DegreeMismatch("degree mismatch in sift")
        residue, _ = self._sift(g)
        return residue

    def contains(self, g: Permutation) -> bool:
        return self.sift(g).is_identity()

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def elements(self) -> Iterator[Permutation]:
        """Iterate the whole group (use only at small orders)."""
        def rec(i: int, prefix: Permutation) -> Iterator[Permutation]:
            if i < 0:
                yield prefix
                return
            level = self.levels[i]
            for a in level.orbit:
                yield from rec(i - 1, prefix * level.rep(a))
        yield from rec(len(self.levels) - 1, self._ident)

    def random_element(self, rng) -> Permutation:
        g = self._ident
        for level in self.levels:
            g = level.rep(level.orbit[rng.randrange(len(level.orbit))]) * g
        return g


def build_chain(generators: Sequence[Permutation], degree: int | None = None) -> StabilizerChain:
    """Verified stabilizer chain for the group the generators produce."""
    return StabilizerChain(generators, degree=degree)


def contains(chain: StabilizerChain, p: Permutation) -> bool:
    """Membership via sifting: true iff p strips to the identity."""
    return chain.contains(p)
