"""Degree bound for effective divisors on a surface, and closed-form tables.

For ``C = sum a_i C_i`` on a smooth degree-``d`` surface, adjunction with
``K_X = O(d-4)`` gives the degree of ``O_X(C)|_C`` on ``C_i`` as

    value_i = 2 a_i rho_i - 2 a_i - (d-4) a_i e_i + sum_{j != i} a_j (C_i.C_j)

which is bounded, via ``rho_i <= (e_i-1)(e_i-2)/2``, ``C_i.C_j <= e_i e_j``
and ``d >= deg C + 2``, by

    first_i  = a_i (e_i^2 - (d-1) e_i) + sum_{j != i} a_j (C_i.C_j)
    second_i = a_i (e_i^2 - 3 e_i - e_i deg C) + sum_{j != i} a_j e_i e_j

and ``second_i < 0`` whenever ``a_i >= 1``.  Everything is exact integer
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UsageError


@dataclass(frozen=True)
class Component:
    a: int    # multiplicity
    e: int    # degree
    rho: int  # arithmetic genus


@dataclass(frozen=True)
class DivisorData:
    d: int
    components: tuple[Component, ...]
    intersections: tuple[tuple[int, ...], ...]  # symmetric, diagonal unused

    @classmethod
    def build(cls, d, components, intersections=()) -> DivisorData:
        """From ``(a, e, rho)`` triples (or mappings) and ``(i, j, v)`` entries."""
        comps = []
        for c in components:
            if isinstance(c, Component):
                comps.append(c)
            elif isinstance(c, dict):
                comps.append(Component(int(c["a"]), int(c["e"]), int(c["rho"])))
            else:
                a, e, rho = c
                comps.append(Component(int(a), int(e), int(rho)))
        r = len(comps)
        mat = np.zeros((r, r), dtype=object)
        mat[:] = 0
        for i, j, v in intersections:
            i, j, v = int(i), int(j), int(v)
            if not (0 <= i < r and 0 <= j < r) or i == j:
                raise UsageError(f"intersection entry ({i}, {j}) is not an off-diagonal index")
            if mat[i, j] not in (0, v) or mat[j, i] not in (0, v):
                raise UsageError(f"conflicting intersection numbers for ({i}, {j})")
            mat[i, j] = mat[j, i] = v
        data = cls(int(d), tuple(comps), tuple(tuple(int(x) for x in row) for row in mat))
        data.validate()
        return data

    @property
    def degree(self) -> int:
        """``deg C = sum a_i e_i``."""
        return sum(c.a * c.e for c in self.components)

    def validate(self):
        """Raise :class:`UsageError` naming the first violated hypothesis."""
        if not self.components:
            raise UsageError("a divisor needs at least one component")
        for i, c in enumerate(self.components):
            if c.a < 1 or c.e < 1 or c.rho < 0:
                raise UsageError(f"component {i}: need a >= 1, e >= 1, rho >= 0")
            if 2 * c.rho > (c.e - 1) * (c.e - 2):
                raise UsageError(f"component {i}: genus bound rho <= (e-1)(e-2)/2 violated")
        if self.degree + 4 > self.d:
            raise UsageError(f"degree bound deg C + 4 <= d violated ({self.degree} + 4 > {self.d})")
        r = len(self.components)
        for i in range(r):
            for j in range(r):
                v = self.intersections[i][j]
                if i == j:
                    continue
                if v < 0:
                    raise UsageError(f"intersection ({i}, {j}) is negative")
                if v != self.intersections[j][i]:
                    raise UsageError(f"intersection matrix is not symmetric at ({i}, {j})")
                if v > self.components[i].e * self.components[j].e:
                    raise UsageError(f"intersection bound C_i.C_j <= e_i e_j violated at ({i}, {j})")


@dataclass(frozen=True)
class DivisorBound:
    values: tuple[int, ...]
    first_bounds: tuple[int, ...]
    second_bounds: tuple[int, ...]

    @property
    def chain_holds(self) -> bool:
        return all(v <= f <= s for v, f, s in zip(self.values, self.first_bounds,
                                                  self.second_bounds))

    @property
    def all_negative(self) -> bool:
        return all(v < 0 for v in self.values)

    @property
    def passed(self) -> bool:
        """Every component degree is negative and the bound chain holds."""
        return self.all_negative and self.chain_holds


def divisor_degree_bound(data: DivisorData) -> DivisorBound:
    data.validate()
    comps = data.components
    d = data.d
    deg = data.degree
    values, first, second = [], [], []
    for i, ci in enumerate(comps):
        cross = sum(cj.a * data.intersections[i][j] for j, cj in enumerate(comps) if j != i)
        cross_max = sum(cj.a * ci.e * cj.e for j, cj in enumerate(comps) if j != i)
        values.append(2 * ci.a * ci.rho - 2 * ci.a - (d - 4) * ci.a * ci.e + cross)
        first.append(ci.a * (ci.e ** 2 - (d - 1) * ci.e) + cross)
        second.append(ci.a * (ci.e ** 2 - 3 * ci.e - ci.e * deg) + cross_max)
    return DivisorBound(tuple(values), tuple(first), tuple(second))


def random_divisor(rng: np.random.Generator, d_max: int = 20, e_max: int = 3) -> DivisorData:
    """A random :class:`DivisorData` satisfying every hypothesis."""
    while True:
        d = int(rng.integers(5, d_max + 1))
        budget = d - 4
        comps = []
        while budget > 0 and (not comps or rng.random() < 0.6):
            e = int(rng.integers(1, min(e_max, budget) + 1))
            a = int(rng.integers(1, budget // e + 1))
            rho_max = (e - 1) * (e - 2) // 2
            comps.append(Component(a, e, int(rng.integers(0, rho_max + 1))))
            budget -= a * e
        if not comps:
            continue
        inter = []
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                inter.append((i, j, int(rng.integers(0, comps[i].e * comps[j].e + 1))))
        return DivisorData.build(d, comps, inter)


#: Dimension of the family of integral space curves of degree ``e``:
#: lines 4, conics 3 (plane) + 5 (conic in it), twisted cubics 12.
_HILBERT_DIMS = {1: 4, 2: 8, 3: 12}


def hilbert_scheme_dim(e: int) -> int:
    """``4e`` for integral space curves of degree ``e`` in ``{1, 2, 3}``."""
    if e not in _HILBERT_DIMS:
        raise UsageError(f"curve degree {e} unsupported (only 1, 2, 3)")
    return _HILBERT_DIMS[e]


@dataclass(frozen=True)
class CodimRow:
    d: int
    line: int
    conic: int
    twisted_cubic: int


def expected_codim(e: int, d: int) -> int:
    """``h^0(O_C(d)) - dim(family)`` = ``(ed + 1) - 4e`` for ``e`` in ``{1, 2, 3}``."""
    if d < 5:
        raise UsageError("need d >= 5")
    return e * d + 1 - hilbert_scheme_dim(e)


def expected_codim_table(ds) -> list[CodimRow]:
    """Expected tangent codimensions: ``d-3``, ``2d-7``, ``3d-11``."""
    return [CodimRow(d, expected_codim(1, d), expected_codim(2, d), expected_codim(3, d))
            for d in ds]
