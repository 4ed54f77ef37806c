"""Built-in algebra catalog, catalog morphisms and polynomial presentations.

Every fixture passes :func:`aspec.algebra.validate_algebra`; golden
expected values for them are frozen in the test suite.  Names accepted
anywhere a CLI flag takes an algebra:

* ``FIX-DUAL``  — Q[x]/(x^2), the dual numbers (one fat point);
* ``FIX-SPLIT`` — Q x Q, two reduced points;
* ``FIX-UT2``   — upper-triangular 2x2 matrices;
* ``FIX-M2``    — the full 2x2 matrix algebra;
* ``FIX-FAT2``  — Q[x]/(x^3 - x^2), a fat point plus a reduced point;
* ``FIX-A2``    — path algebra of the quiver 1 -> 2 (same structure
  constants as FIX-UT2, quiver-flavored labels);
* ``FIX-Q``     — the rationals themselves (handy as a morphism source
  or target).
"""

from __future__ import annotations

from fractions import Fraction

from aspec.algebra import Algebra
from aspec.errors import UnknownFixture

CATALOG_VERSION = "1"


def _table(dim, entries):
    t = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in entries:
        t[i][j][k] = Fraction(c)
    return t


def fix_dual() -> Algebra:
    # basis 1, x with x^2 = 0
    entries = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (1, 0, 1, 1),
    ]
    return Algebra(["1", "x"], _table(2, entries), [1, 0])


def fix_split() -> Algebra:
    # orthogonal idempotents e1, e2
    entries = [
        (0, 0, 0, 1),
        (1, 1, 1, 1),
    ]
    return Algebra(["e1", "e2"], _table(2, entries), [1, 1])


def _ut2_entries():
    # basis e11, e12, e22
    return [
        (0, 0, 0, 1),  # e11 e11 = e11
        (0, 1, 1, 1),  # e11 e12 = e12
        (1, 2, 1, 1),  # e12 e22 = e12
        (2, 2, 2, 1),  # e22 e22 = e22
    ]


def fix_ut2() -> Algebra:
    return Algebra(["e11", "e12", "e22"], _table(3, _ut2_entries()), [1, 0, 1])


def fix_a2() -> Algebra:
    return Algebra(["e1", "a", "e2"], _table(3, _ut2_entries()), [1, 0, 1])


def fix_m2() -> Algebra:
    # matrix units e11, e12, e21, e22
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    entries = []
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                entries.append((i, j, idx[(a, d)], 1))
    return Algebra(["e11", "e12", "e21", "e22"], _table(4, entries), [1, 0, 0, 1])


def fix_fat2() -> Algebra:
    # basis 1, x, x2 with x*x = x2 and x*x2 = x2*x = x2*x2 = x2 (x^3 = x^2)
    entries = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (1, 0, 1, 1),
        (0, 2, 2, 1),
        (2, 0, 2, 1),
        (1, 1, 2, 1),
        (1, 2, 2, 1),
        (2, 1, 2, 1),
        (2, 2, 2, 1),
    ]
    return Algebra(["1", "x", "x2"], _table(3, entries), [1, 0, 0])


def fix_q() -> Algebra:
    return Algebra(["1"], _table(1, [(0, 0, 0, 1)]), [1])


def fix_gauss() -> Algebra:
    # Q[x]/(x^2 + 1): a non-split fixture (the center is a quadratic field)
    entries = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (1, 0, 1, 1),
        (1, 1, 0, -1),
    ]
    return Algebra(["1", "i"], _table(2, entries), [1, 0])


_FIXTURES = {
    "FIX-DUAL": fix_dual,
    "FIX-SPLIT": fix_split,
    "FIX-UT2": fix_ut2,
    "FIX-M2": fix_m2,
    "FIX-FAT2": fix_fat2,
    "FIX-A2": fix_a2,
    "FIX-Q": fix_q,
}

# FIX-GAUSS is reachable by name for NotSplit demonstrations but is not a
# catalog member (it fails the split requirement by design).
_EXTRA = {"FIX-GAUSS": fix_gauss}


def fixture_names() -> list[str]:
    return list(_FIXTURES)


def get_fixture(name: str) -> Algebra:
    fn = _FIXTURES.get(name) or _EXTRA.get(name)
    if fn is None:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(_FIXTURES)}")
    return fn()


def catalog_morphisms():
    """Named algebra morphisms between catalog fixtures.

    Returned as ``{name: (source_name, target_name, matrix_rows)}`` with
    the matrix in row convention (row i = image coordinates of source
    basis element i).  Construction of validated AlgebraMorphism objects
    lives in :mod:`aspec.modules` to avoid an import cycle.
    """
    return {
        "ut2-into-m2": ("FIX-UT2", "FIX-M2", [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
        "fat2-onto-dual": ("FIX-FAT2", "FIX-DUAL", [[1, 0], [0, 1], [0, 0]]),
        "q-into-split": ("FIX-Q", "FIX-SPLIT", [[1, 1]]),
        "split-onto-q": ("FIX-SPLIT", "FIX-Q", [[1], [0]]),
        "dual-onto-q": ("FIX-DUAL", "FIX-Q", [[1], [0]]),
    }


# ---------------------------------------------------------------------------
# polynomial presentations (for truncated localization / kernel probes)

PRESENTATIONS = {
    # name: (variables, relations as {exponent tuple: coefficient})
    "LINE": (("x",), ()),
    "PARABOLA": (("x", "y"), ({(0, 1): Fraction(1), (2, 0): Fraction(-1)},)),
    "NODE": (("x", "y"), ({(1, 1): Fraction(1)},)),
    "DUAL": (("x",), ({(2,): Fraction(1)},)),
    "FAT2": (("x",), ({(3,): Fraction(1), (2,): Fraction(-1)},)),
}


def get_presentation(name: str):
    if name not in PRESENTATIONS:
        raise UnknownFixture(
            f"unknown presentation {name!r}; known: {', '.join(PRESENTATIONS)}"
        )
    return PRESENTATIONS[name]
