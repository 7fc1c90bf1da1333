"""Finite-dimensional algebras given by a structure constant table."""
import random
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import AlgebraFlags, Superalgebra
from .elements import BasisWord, Element
from .errors import AlgebraError
from .scalars import ScalarLike, derive_seed, to_scalar

Table = Mapping[Tuple[int, int], Mapping[int, ScalarLike]]


class StructureConstantAlgebra(Superalgebra):
    """Algebra with basis e_0..e_{n-1} and e_i e_j = sum_k c_ij^k e_k.

    No law is assumed unless declared through ``flags``.
    """

    def __init__(
        self,
        degrees: Sequence[int],
        table: Table,
        flags: Optional[AlgebraFlags] = None,
        unit_index: Optional[int] = None,
        names: Optional[Sequence[str]] = None,
        name: str = "structure-algebra",
    ):
        """Initialize structure constant algebra.

        Args:
            degrees: Superdegree of each basis element
            table: Map (i, j) -> {k: c_ij^k}; missing entries are zero
            flags: Declared laws (default: none)
            unit_index: Index of the unit basis element, if any
            names: Basis names (default e0, e1, ...)
            name: Display name

        Raises:
            AlgebraError: If the table references unknown indices or breaks
                degree additivity
        """
        self.degrees = list(degrees)
        dim = len(self.degrees)
        self.names = list(names or [f"e{i}" for i in range(dim)])
        if len(self.names) != dim:
            raise AlgebraError("name list does not match dimension")
        self._words = [
            BasisWord(key=(i,), degree=d, label=self.names[i]) for i, d in enumerate(self.degrees)
        ]
        self.table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (i, j), row in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise AlgebraError(f"table entry ({i}, {j}) outside dimension {dim}")
            cleaned = {}
            for k, c in row.items():
                if not 0 <= k < dim:
                    raise AlgebraError(f"table entry ({i}, {j}) -> {k} outside dimension {dim}")
                value = to_scalar(c)
                if value and self.degrees[k] != self.degrees[i] + self.degrees[j]:
                    raise AlgebraError(
                        f"table entry e{i}*e{j} -> e{k} violates degree additivity",
                        {"i": i, "j": j, "k": k},
                    )
                if value:
                    cleaned[k] = value
            if cleaned:
                self.table[(i, j)] = cleaned
        if unit_index is not None and not 0 <= unit_index < dim:
            raise AlgebraError("unit index outside dimension")
        self.unit_index = unit_index
        super().__init__(name, flags or AlgebraFlags(unital=unit_index is not None))

    @property
    def dimension(self) -> int:
        return len(self.degrees)

    def basis_element(self, i: int, coeff: ScalarLike = 1) -> Element:
        return Element.from_word(self._words[i], coeff)

    def owns(self, word: BasisWord) -> bool:
        key = word.key
        return len(key) == 1 and isinstance(key[0], int) and 0 <= key[0] < self.dimension

    def unit(self) -> Optional[Element]:
        if self.unit_index is None:
            return None
        return self.basis_element(self.unit_index)

    def generator_map(self) -> Dict[str, Element]:
        return {name: self.basis_element(i) for i, name in enumerate(self.names)}

    def multiply_words(self, left: BasisWord, right: BasisWord) -> Element:
        row = self.table.get((left.key[0], right.key[0]), {})
        return Element({self._words[k]: c for k, c in row.items()})

    def _enumerate_basis(self) -> List[BasisWord]:
        return list(self._words)


def random_structure_algebra(
    seed: int,
    degrees: Sequence[int] = (0, 0, 1, 1, 2, 3),
    density: float = 0.6,
    coeff_range: int = 3,
) -> StructureConstantAlgebra:
    """Random graded algebra with no laws, for testing general identities.

    Every degree-admissible table entry is filled with probability
    ``density`` by a random nonzero integer in [-coeff_range, coeff_range].
    """
    rng = random.Random(derive_seed(seed, "structure-algebra"))
    dim = len(degrees)
    table: Dict[Tuple[int, int], Dict[int, int]] = {}
    for i in range(dim):
        for j in range(dim):
            targets = [k for k in range(dim) if degrees[k] == degrees[i] + degrees[j]]
            row = {}
            for k in targets:
                if rng.random() < density:
                    row[k] = rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c])
            if row:
                table[(i, j)] = row
    return StructureConstantAlgebra(degrees, table, AlgebraFlags(), name=f"random-algebra[{seed}]")
