"""Lie algebras given by structure constants."""
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from base.algebra import AlgebraFlags
from base.errors import AlgebraError
from base.scalars import ScalarLike, to_scalar
from base.structure import StructureConstantAlgebra

Vector = Dict[int, Fraction]


class LieAlgebraData:
    """Structure constants c_ij^k of a Lie algebra with basis e_0..e_{n-1}.

    Antisymmetry and the Jacobi identity are checked at construction.
    """

    def __init__(
        self,
        names: Sequence[str],
        brackets: Dict[Tuple[int, int], Dict[int, ScalarLike]],
        semisimple: bool = False,
        name: str = "lie",
        validate: bool = True,
    ):
        """Initialize Lie algebra data.

        Args:
            names: Basis names
            brackets: Map (i, j) -> {k: c_ij^k} for i < j; the rest follows by antisymmetry
            semisimple: Whether the algebra is semisimple (enables invariant-theory checks)
            name: Display name
            validate: Check the Jacobi identity

        Raises:
            AlgebraError: On bad indices, conflicting entries or a Jacobi failure
        """
        self.names = list(names)
        self.dim = len(self.names)
        self.semisimple = semisimple
        self.name = name
        self.c: Dict[Tuple[int, int], Vector] = {}
        for (i, j), row in brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraError(f"bracket [{i}, {j}] outside dimension {self.dim}")
            if i == j:
                raise AlgebraError(f"[e{i}, e{i}] must vanish")
            vector = {k: to_scalar(v) for k, v in row.items() if to_scalar(v)}
            if any(not 0 <= k < self.dim for k in vector):
                raise AlgebraError(f"bracket [{i}, {j}] has a target outside dimension {self.dim}")
            for key, value in (((i, j), vector), ((j, i), {k: -v for k, v in vector.items()})):
                if key in self.c and self.c[key] != value:
                    raise AlgebraError(f"conflicting entries for bracket {key}")
                if value:
                    self.c[key] = value
        if validate:
            self._check_jacobi()

    @classmethod
    def from_triples(cls, names: Sequence[str], triples: Iterable[Sequence], **kwargs) -> "LieAlgebraData":
        """Build from (i, j, k, value) triples."""
        brackets: Dict[Tuple[int, int], Dict[int, ScalarLike]] = {}
        for entry in triples:
            if len(entry) != 4:
                raise AlgebraError(f"Lie triple {entry} must have four entries")
            i, j, k, value = entry
            brackets.setdefault((int(i), int(j)), {})[int(k)] = value
        return cls(names, brackets, **kwargs)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c.get((i, j), {})

    def bracket(self, x: Vector, y: Vector) -> Vector:
        result: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    result[k] = result.get(k, 0) + a * b * c
        return {k: v for k, v in result.items() if v}

    def _check_jacobi(self) -> None:
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    ei, ej, ek = {i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)}
                    total: Vector = {}
                    for x, y, z in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
                        for idx, v in self.bracket(x, self.bracket(y, z)).items():
                            total[idx] = total.get(idx, 0) + v
                    if any(total.values()):
                        raise AlgebraError(
                            f"Jacobi identity fails on ({self.names[i]}, {self.names[j]}, {self.names[k]})",
                            {"triple": [i, j, k]},
                        )

    @property
    def is_abelian(self) -> bool:
        return not self.c

    def as_algebra(self) -> StructureConstantAlgebra:
        """The Lie bracket as a (non-associative) product on a degree-0 algebra."""
        return StructureConstantAlgebra(
            [0] * self.dim,
            self.c,
            AlgebraFlags(),
            names=self.names,
            name=self.name,
        )

    def triples(self) -> List[Tuple[int, int, int, Fraction]]:
        return sorted((i, j, k, v) for (i, j), row in self.c.items() if i < j for k, v in row.items())


def sl2() -> LieAlgebraData:
    """sl_2 with basis e, f, h: [h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return LieAlgebraData(
        ["e", "f", "h"],
        {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}},
        semisimple=True,
        name="sl2",
    )


def abelian(n: int) -> LieAlgebraData:
    return LieAlgebraData([f"a{i + 1}" for i in range(n)], {}, name=f"abelian{n}")


def nonabelian_2d() -> LieAlgebraData:
    """The two-dimensional non-abelian Lie algebra [x, y] = y."""
    return LieAlgebraData(["x", "y"], {(0, 1): {1: 1}}, name="aff1")


BUILTIN_LIE_ALGEBRAS = {
    "sl2": sl2,
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "aff1": nonabelian_2d,
}


def builtin_lie_algebra(name: str) -> Optional[LieAlgebraData]:
    factory = BUILTIN_LIE_ALGEBRAS.get(name)
    return factory() if factory else None
