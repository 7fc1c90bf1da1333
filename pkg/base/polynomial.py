"""Truncated polynomial superalgebra Q[x_1..x_n] (x) Lambda(theta_1..theta_m)."""
import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraFlags, Superalgebra
from .elements import BasisWord, Element
from .errors import AlgebraError
from .scalars import sort_with_sign


class PolynomialSuperalgebra(Superalgebra):
    """Free supercommutative algebra on even and odd generators.

    Even generators have degree 0, odd generators degree ``odd_degree``.
    Monomials whose total even degree exceeds ``degree_cap`` are identified
    with zero. With no even generators the cap is irrelevant.
    """

    def __init__(
        self,
        n_even: int,
        n_odd: int,
        degree_cap: Optional[int] = None,
        even_names: Optional[Sequence[str]] = None,
        odd_names: Optional[Sequence[str]] = None,
        odd_degree: int = 1,
        name: Optional[str] = None,
    ):
        """Initialize polynomial superalgebra.

        Args:
            n_even: Number of even generators
            n_odd: Number of odd generators
            degree_cap: Maximal total degree in the even generators
            even_names: Generator names (default x1, x2, ...)
            odd_names: Generator names (default t1, t2, ...)
            odd_degree: Superdegree of each odd generator (must be odd)
            name: Display name
        """
        if n_even < 0 or n_odd < 0:
            raise AlgebraError("generator counts must be non-negative")
        if n_even and degree_cap is None:
            raise AlgebraError("a degree cap is required when there are even generators")
        if degree_cap is not None and degree_cap < 0:
            raise AlgebraError("degree cap must be non-negative")
        if odd_degree % 2 == 0:
            raise AlgebraError("odd generators need an odd degree")
        self.n_even = n_even
        self.n_odd = n_odd
        self.odd_degree = odd_degree
        self.even_names = list(even_names or [f"x{i + 1}" for i in range(n_even)])
        self.odd_names = list(odd_names or [f"t{i + 1}" for i in range(n_odd)])
        if len(self.even_names) != n_even or len(self.odd_names) != n_odd:
            raise AlgebraError("generator name lists do not match generator counts")
        if len(set(self.even_names + self.odd_names)) != n_even + n_odd:
            raise AlgebraError("generator names must be distinct")
        super().__init__(
            name or f"Q[{n_even}|{n_odd}]_{degree_cap}",
            AlgebraFlags(supercommutative=True, associative=True, unital=True),
            degree_cap if n_even else None,
        )

    def word(self, exponents: Sequence[int], odds: Sequence[int] = ()) -> BasisWord:
        """Build the canonical word for a monomial.

        Args:
            exponents: Exponent of each even generator
            odds: Sorted, distinct odd generator indices
        """
        exponents = tuple(exponents)
        odds = tuple(odds)
        label_parts = []
        for name, e in zip(self.even_names, exponents):
            if e == 1:
                label_parts.append(name)
            elif e > 1:
                label_parts.append(f"{name}^{e}")
        label_parts.extend(self.odd_names[i] for i in odds)
        return BasisWord(
            key=(exponents, odds),
            degree=self.odd_degree * len(odds),
            label="*".join(label_parts) or "1",
        )

    def monomial(self, exponents: Sequence[int], odds: Sequence[int] = (), coeff=1) -> Element:
        """Monomial element; unsorted odd indices pick up their Koszul sign."""
        ordered, s = sort_with_sign(odds)
        if s == 0 or (self.degree_cap is not None and sum(exponents) > self.degree_cap):
            return Element()
        return Element.from_word(self.word(exponents, ordered), coeff * s)

    def even_generator(self, i: int) -> Element:
        exps = [0] * self.n_even
        exps[i] = 1
        return self.monomial(exps)

    def odd_generator(self, i: int) -> Element:
        return self.monomial([0] * self.n_even, (i,))

    def split(self, word: BasisWord) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return word.key

    def owns(self, word: BasisWord) -> bool:
        key = word.key
        if len(key) != 2:
            return False
        exps, odds = key
        return (
            isinstance(exps, tuple)
            and len(exps) == self.n_even
            and isinstance(odds, tuple)
            and all(isinstance(i, int) and 0 <= i < self.n_odd for i in odds)
        )

    def unit(self) -> Element:
        return self.monomial([0] * self.n_even)

    def generator_map(self) -> Dict[str, Element]:
        names = {name: self.even_generator(i) for i, name in enumerate(self.even_names)}
        names.update({name: self.odd_generator(i) for i, name in enumerate(self.odd_names)})
        return names

    def word_size(self, word: BasisWord) -> int:
        exps, odds = word.key
        return sum(exps) + len(odds)

    def truncation_load(self, word: BasisWord) -> int:
        return sum(word.key[0])

    def multiply_words(self, left: BasisWord, right: BasisWord) -> Element:
        lexp, lodd = left.key
        rexp, rodd = right.key
        exps = tuple(a + b for a, b in zip(lexp, rexp))
        if self.degree_cap is not None and sum(exps) > self.degree_cap:
            return Element()
        odds, s = sort_with_sign(lodd + rodd)
        if s == 0:
            return Element()
        return Element.from_word(self.word(exps, odds), s)

    def _enumerate_basis(self) -> List[BasisWord]:
        cap = self.degree_cap or 0
        exponent_tuples = [
            exps for exps in itertools.product(range(cap + 1), repeat=self.n_even) if sum(exps) <= cap
        ]
        words = []
        for exps in exponent_tuples:
            for k in range(self.n_odd + 1):
                for odds in itertools.combinations(range(self.n_odd), k):
                    words.append(self.word(exps, odds))
        return words


def make_polynomial_superalgebra(n_even: int, n_odd: int, degree_cap: Optional[int] = None) -> PolynomialSuperalgebra:
    return PolynomialSuperalgebra(n_even, n_odd, degree_cap)
