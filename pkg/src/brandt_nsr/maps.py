"""Self-maps of B_n: tables, pointwise addition, composition, canonical forms.

A MapTable is a tuple t of length n^2 + 1 with t[x] = code of the image of
the element coded x.  Arguments are written on the left, so in the
composite "f then g" the image of x is g[f[x]], and pointwise addition
distributes from the left over composition but not from the right.

Canonical forms cover exactly the shapes that occur in the additive
closure of the affine maps: the two kinds of constants, maps supported on
a single pair, and maps supported on one full column {(i,p) : i}.  They
are recognized purely from the support size, which is what makes the
classification total on that closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .brandt import Brandt, BrandtElement, Permutation

MapTable = tuple[int, ...]


def map_add(bn: Brandt, f: MapTable, g: MapTable) -> MapTable:
    """Pointwise Brandt addition of two map tables."""
    add = bn.add_table
    return tuple(add[a][b] for a, b in zip(f, g))


def map_compose(f: MapTable, g: MapTable) -> MapTable:
    """The composite "f then g": image of x is g[f[x]]."""
    return tuple(g[x] for x in f)


def support(bn: Brandt, f: MapTable) -> frozenset[BrandtElement]:
    """The arguments with nonzero image, as elements."""
    return frozenset(bn.decode(x) for x, v in enumerate(f) if v != 0)


def support_size(f: MapTable) -> int:
    return sum(1 for v in f if v != 0)


@dataclass(frozen=True)
class ConstTheta:
    """The constant map onto theta."""


@dataclass(frozen=True)
class Const:
    """The constant map onto the pair (p, q)."""

    p: int
    q: int


@dataclass(frozen=True)
class Singleton:
    """Sends (k, l) to (p, q), everything else to theta."""

    k: int
    l: int
    p: int
    q: int


@dataclass(frozen=True)
class NSupport:
    """Sends (i, p) to (sigma(i), q) for every i, everything else to theta."""

    p: int
    q: int
    sigma: Permutation


@dataclass(frozen=True)
class Other:
    """A map outside the four recognized shapes."""


CanonicalForm = Union[ConstTheta, Const, Singleton, NSupport, Other]


def _match_n_support(bn: Brandt, f: MapTable) -> NSupport | None:
    n = bn.n
    if f[0] != 0:
        return None
    srcs = [x for x in range(1, bn.size) if f[x] != 0]
    if len(srcs) != n:
        return None
    cols = {(x - 1) % n + 1 for x in srcs}
    rows = sorted((x - 1) // n + 1 for x in srcs)
    if len(cols) != 1 or rows != list(range(1, n + 1)):
        return None
    p = cols.pop()
    images = [bn.decode(f[bn.pair_code(i, p)]) for i in range(1, n + 1)]
    qs = {im.col for im in images}
    image_rows = [im.row for im in images]
    if len(qs) != 1 or sorted(image_rows) != list(range(1, n + 1)):
        return None
    return NSupport(p, qs.pop(), Permutation(tuple(image_rows)))


def classify(bn: Brandt, f: MapTable) -> CanonicalForm:
    """Recognize a map table by its support size.

    For n = 1 the single-pair support and full-column support shapes
    coincide; the column shape wins, which matches the three maps that
    actually occur there.
    """
    if len(f) != bn.size:
        raise ValueError("map table has the wrong length for this n")
    k = support_size(f)
    if k == 0:
        return ConstTheta()
    if k == bn.size:
        if len(set(f)) == 1:
            el = bn.decode(f[0])
            return Const(el.row, el.col)
        return Other()
    if k == bn.n:
        form = _match_n_support(bn, f)
        if form is not None:
            return form
        if bn.n != 1:
            return Other()
    if k == 1:
        x = next(i for i, v in enumerate(f) if v != 0)
        if x == 0:
            return Other()
        src = bn.decode(x)
        img = bn.decode(f[x])
        return Singleton(src.row, src.col, img.row, img.col)
    return Other()


def realize(bn: Brandt, form: CanonicalForm) -> MapTable:
    """The map table of a canonical form; inverse to classify off Other."""
    if isinstance(form, ConstTheta):
        return (0,) * bn.size
    if isinstance(form, Const):
        return (bn.pair_code(form.p, form.q),) * bn.size
    if isinstance(form, Singleton):
        t = [0] * bn.size
        t[bn.pair_code(form.k, form.l)] = bn.pair_code(form.p, form.q)
        return tuple(t)
    if isinstance(form, NSupport):
        t = [0] * bn.size
        for i in range(1, bn.n + 1):
            t[bn.pair_code(i, form.p)] = bn.pair_code(form.sigma(i), form.q)
        return tuple(t)
    raise ValueError("cannot realize an unrecognized map")


def form_name(form: CanonicalForm) -> str:
    """Stable display name of a canonical form."""
    if isinstance(form, ConstTheta):
        return "c:t"
    if isinstance(form, Const):
        return f"c:{form.p},{form.q}"
    if isinstance(form, Singleton):
        return f"s:{form.k},{form.l}>{form.p},{form.q}"
    if isinstance(form, NSupport):
        return f"n:{form.p},{form.q};{form.sigma.word}"
    raise ValueError("unrecognized maps have no canonical name")


def canonical_name(bn: Brandt, f: MapTable) -> str:
    return form_name(classify(bn, f))


def parse_name(name: str) -> CanonicalForm:
    """Inverse of form_name; raises ValueError on anything malformed."""
    try:
        kind, _, rest = name.partition(":")
        if kind == "c":
            if rest == "t":
                return ConstTheta()
            p, q = (int(v) for v in rest.split(","))
            return Const(p, q)
        if kind == "s":
            src, _, dst = rest.partition(">")
            k, l = (int(v) for v in src.split(","))
            p, q = (int(v) for v in dst.split(","))
            return Singleton(k, l, p, q)
        if kind == "n":
            pos, sep, word = rest.partition(";")
            p, q = (int(v) for v in pos.split(","))
            if not sep or not word:
                raise ValueError("missing permutation word")
            return NSupport(p, q, Permutation(tuple(int(c) for c in word)))
    except ValueError as exc:
        raise ValueError(f"bad canonical name {name!r}") from exc
    raise ValueError(f"bad canonical name {name!r}")


def realize_name(bn: Brandt, name: str) -> MapTable:
    return realize(bn, parse_name(name))
