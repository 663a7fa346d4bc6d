"""Pinned generator data: graph catalog fixtures and standard group generators.

Every fixture is validated by a group-order check before use; the permutation
strings are stored in 1-based cycle notation exactly as transcribed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fpgroup import Presentation
from .perm import Permutation, parse_cycles

__all__ = [
    "CosetFixture",
    "CayleyFixture",
    "catalog",
    "CATALOG_NAMES",
    "presentation_16",
    "presentation_256",
    "presentation_4096",
    "presentation_class4_4096",
    "alternating_gens",
    "mathieu_gens",
    "MATHIEU_ORDERS",
]


# -- presentations of the two-group family -----------------------------------
#
# Generator layers f, e, d, c; each layer has a closing generator X0 with
# defining product X0*X1*X2*X3*X4 = 1, and the layers are linked by
# e_i = [f_i, f_{i+1}], d_i = [e_i, f_{i+2}], c_i = [d_i, f_{i+3}].

def _layer(prefix: str) -> list[str]:
    return [f"{prefix}{i}" for i in range(5)]


def _product_line(prefix: str) -> str:
    return "*".join(f"{prefix}{i}" for i in range(5))


def _pairs_all(xs: str, ys: str) -> list[str]:
    return [f"[{xs}{i},{ys}{j}]" for i in range(5) for j in range(5)]


def _pairs_sym(xs: str) -> list[str]:
    return [f"[{xs}{i},{xs}{j}]" for i in range(5) for j in range(5) if i < j]


def _squares(prefix: str) -> list[str]:
    return [f"{prefix}{i}^2" for i in range(5)]


@lru_cache(maxsize=None)
def presentation_16() -> Presentation:
    """Elementary abelian group of order 16 on the five closing involutions."""
    lines = [" ".join(_layer("f")), _product_line("f")]
    lines += _squares("f") + _pairs_sym("f")
    return Presentation.parse("\n".join(lines))


@lru_cache(maxsize=None)
def presentation_256() -> Presentation:
    """Class-2 group of order 256: commutator layer e on top of layer f."""
    lines = [" ".join(_layer("e") + _layer("f"))]
    lines += [_product_line("f"), _product_line("e")]
    lines += [f"[f{i},f{(i + 1) % 5}]*e{i}^-1" for i in range(5)]
    lines += _squares("f")
    lines += _pairs_sym("e")
    lines += _pairs_all("e", "f")
    return Presentation.parse("\n".join(lines))


@lru_cache(maxsize=None)
def presentation_4096() -> Presentation:
    """Class-3 group of order 4096: layers d, e on top of layer f."""
    lines = [" ".join(_layer("d") + _layer("e") + _layer("f"))]
    lines += [_product_line("f"), _product_line("e"), _product_line("d")]
    lines += [f"[f{i},f{(i + 1) % 5}]*e{i}^-1" for i in range(5)]
    lines += [f"[e{i},f{(i + 2) % 5}]*d{i}^-1" for i in range(5)]
    lines += _squares("f")
    lines += _pairs_sym("d")
    lines += _pairs_all("d", "e")
    lines += _pairs_all("d", "f")
    return Presentation.parse("\n".join(lines))


@lru_cache(maxsize=None)
def presentation_class4_4096() -> Presentation:
    """Candidate class-4 quotient with layer c; collapses to order 4096."""
    lines = [" ".join(_layer("c") + _layer("d") + _layer("e") + _layer("f"))]
    lines += [_product_line(p) for p in "fedc"]
    lines += [f"[f{i},f{(i + 1) % 5}]*e{i}^-1" for i in range(5)]
    lines += [f"[e{i},f{(i + 2) % 5}]*d{i}^-1" for i in range(5)]
    lines += [f"[d{i},f{(i + 3) % 5}]*c{i}^-1" for i in range(5)]
    lines += _squares("f")
    lines += _pairs_sym("c")
    lines += _pairs_all("c", "d")
    lines += _pairs_all("c", "e")
    lines += _pairs_all("c", "f")
    lines += [f"[d{i},f{j},f{k}]" for i in range(5) for j in range(5) for k in range(5)]
    return Presentation.parse("\n".join(lines))


TWO_GROUP_CONNECTION = ("f1", "f2", "f3", "f4", "f0")


# -- catalog fixtures ---------------------------------------------------------

@dataclass(frozen=True)
class CosetFixture:
    """Arc-transitive coset-graph data: point group T = <H, x> with H the
    vertex stabilizer and x the edge-swapping element."""

    name: str
    degree: int
    group_name: str
    group_order: int
    h_order: int
    vertex_count: int
    h_strings: tuple[str, ...]
    x_string: str

    def h_gens(self) -> list[Permutation]:
        return [parse_cycles(s, self.degree) for s in self.h_strings]

    def x(self) -> Permutation:
        return parse_cycles(self.x_string, self.degree)

    def t_gens(self) -> list[Permutation]:
        return self.h_gens() + [self.x()]


@dataclass(frozen=True)
class CayleyFixture:
    """Cayley-graph data: a presentation plus the five-involution connection set."""

    name: str
    group_order: int
    vertex_count: int
    presentation_factory: object
    connection_names: tuple[str, ...] = TWO_GROUP_CONNECTION

    def presentation(self) -> Presentation:
        return self.presentation_factory()


_X_1456 = (
    "(1,22)(2,23)(3,62)(4,45)(5,31)(6,55)(7,37)(8,30)(9,38)(10,13)(11,33)"
    "(12,60)(14,21)(15,19)(16,39)(17,61)(18,44)(20,54)(24,50)(25,63)(26,47)"
    "(27,59)(28,64)(29,46)(34,35)(36,48)(40,52)(41,56)(42,53)(43,49)(51,58)"
    "(57,65)"
)
_A_1456 = (
    "(1,41,15,8)(2,43,40,12)(3,16,4,38)(5,13,21,46)(6,58,25,11)(7,42,18,36)"
    "(9,62,39,45)(10,14,29,31)(17,65,50,35)(19,30,22,56)(20,28,27,26)"
    "(23,49,52,60)(24,34,61,57)(33,55,51,63)(37,53,44,48)(47,54,64,59)"
)
_B_1456 = (
    "(1,53,34,36,10)(2,13,49,65,64)(3,32,4,38,16)(5,17,12,23,54)"
    "(6,27,51,39,22)(7,44,14,61,41)(8,24,31,37,18)(9,33,20,25,19)"
    "(11,55,30,28,62)(15,29,42,57,48)(21,59,52,43,50)(26,56,63,58,45)"
    "(35,60,46,40,47)"
)

_COSET_FIXTURES = {
    "K6": CosetFixture(
        name="K6", degree=5, group_name="A5", group_order=60, h_order=10,
        vertex_count=6,
        h_strings=("(1,2,3,4,5)", "(2,5)(3,4)"),
        # frozen choice: an involution normalizing <(2,5)(3,4)> outside H
        x_string="(2,4)(3,5)",
    ),
    "G36": CosetFixture(
        name="G36", degree=6, group_name="A6", group_order=360, h_order=10,
        vertex_count=36,
        h_strings=("(1,5)(3,4)", "(1,5,4,6,3)"),
        x_string="(1,3)(4,5)",
    ),
    "G66": CosetFixture(
        name="G66", degree=12, group_name="PSL2(11)", group_order=660, h_order=10,
        vertex_count=66,
        h_strings=("(1,12)(2,5)(3,11)(4,7)(6,10)(8,9)", "(1,7,6,3,5)(2,11,10,4,12)"),
        x_string="(1,5)(2,12)(3,9)(4,6)(7,10)(8,11)",
    ),
    "G126": CosetFixture(
        name="G126", degree=9, group_name="A9", group_order=181440, h_order=1440,
        vertex_count=126,
        h_strings=("(1,2)(3,4)", "(1,2,3)", "(5,6,7)", "(7,8,9)", "(1,2)(5,6)"),
        x_string="(1,5)(2,6)(3,7)(4,8)",
    ),
    "G396": CosetFixture(
        name="G396", degree=11, group_name="M11", group_order=7920, h_order=20,
        vertex_count=396,
        h_strings=("(1,11,10,2)(5,9,6,7)", "(1,11,2,10,3)(4,6,7,9,5)"),
        x_string="(1,5,2,7,10,6,11,9)(3,8)",
    ),
    "G1456": CosetFixture(
        name="G1456", degree=65, group_name="Sz(8)", group_order=29120, h_order=20,
        vertex_count=1456,
        h_strings=(_A_1456, _B_1456),
        x_string=_X_1456,
    ),
    "G2016": CosetFixture(
        name="G2016", degree=21, group_name="PSL3(4)", group_order=20160, h_order=10,
        vertex_count=2016,
        h_strings=(
            "(1,18)(3,15)(5,16)(6,17)(7,12)(8,14)(11,19)(20,21)",
            "(1,18,5,9,16)(2,15,7,12,3)(4,19,20,21,11)(6,17,14,13,8)",
        ),
        x_string="(1,20,18,21)(2,9)(3,19,15,11)(4,10)(5,17,16,6)(7,8,12,14)",
    ),
    "G22176": CosetFixture(
        name="G22176", degree=22, group_name="M22", group_order=443520, h_order=20,
        vertex_count=22176,
        h_strings=(
            "(1,10)(2,4,12,7)(5,17,15,21)(8,13)(9,18,19,11)(14,16,22,20)",
            "(2,12,4,3,7)(5,14,13,22,15)(6,11,9,19,18)(8,17,20,16,21)",
        ),
        x_string="(1,8)(2,21,12,17)(4,15,7,5)(9,22,19,14)(10,13)(11,20,18,16)",
    ),
}

_CAYLEY_FIXTURES = {
    "G16": CayleyFixture("G16", 16, 16, presentation_16),
    "G256": CayleyFixture("G256", 256, 256, presentation_256),
    "G4096": CayleyFixture("G4096", 4096, 4096, presentation_4096),
}

CATALOG_NAMES = (
    "K6", "G16", "G36", "G66", "G126", "G256", "G396",
    "G1456", "G2016", "G4096", "G22176",
)


def catalog(name: str):
    """Return the immutable fixture for a catalog graph name."""
    if name in _COSET_FIXTURES:
        return _COSET_FIXTURES[name]
    if name in _CAYLEY_FIXTURES:
        return _CAYLEY_FIXTURES[name]
    raise KeyError(f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}")


# -- standard generators for groups the catalog does not pin ------------------

def alternating_gens(n: int) -> list[Permutation]:
    """Generators of the alternating group on n points."""
    if n < 3:
        raise ValueError("need n >= 3")
    if n % 2 == 1:
        cyc = list(range(n))
    else:
        cyc = list(range(1, n))
    return [
        Permutation.from_cycles(n, [cyc]),
        Permutation.from_cycles(n, [[0, 1, 2]]),
    ]


def symmetric_gens(n: int) -> list[Permutation]:
    return [
        Permutation.from_cycles(n, [list(range(n))]),
        Permutation.from_cycles(n, [[0, 1]]),
    ]


MATHIEU_ORDERS = {11: 7920, 12: 95040, 22: 443520, 23: 10200960, 24: 244823040}

_M11_STRINGS = ("(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)")
_M12_STRINGS = _M11_STRINGS + ("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",)
_M23_STRINGS = (
    "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
    "(3,17,10,7,9)(5,4,13,14,19)(11,12,23,8,18)(21,16,15,20,22)",
)
_M24_STRINGS = _M23_STRINGS + (
    "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)",
)


def mathieu_gens(n: int) -> list[Permutation]:
    """Generators of the Mathieu group of the given degree."""
    strings = {11: _M11_STRINGS, 12: _M12_STRINGS, 23: _M23_STRINGS, 24: _M24_STRINGS}
    if n == 22:
        fixture = catalog("G22176")
        return fixture.t_gens()
    if n not in strings:
        raise ValueError(f"no Mathieu group of degree {n}")
    return [parse_cycles(s, n) for s in strings[n]]
