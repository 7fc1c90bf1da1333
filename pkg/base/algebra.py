"""Abstract graded algebra interface."""
import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from .elements import BasisWord, Element
from .errors import AlgebraError
from .scalars import sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraFlags:
    """Declared laws of an algebra. Checkers consult these before running."""

    supercommutative: bool = False
    associative: bool = False
    unital: bool = False

    @property
    def classical(self) -> bool:
        return self.supercommutative and self.associative and self.unital

    def to_dict(self) -> Dict[str, bool]:
        return {
            "supercommutative": self.supercommutative,
            "associative": self.associative,
            "unital": self.unital,
        }


class Superalgebra(ABC):
    """A Z-graded algebra over Q with a finite (possibly truncated) basis.

    Subclasses implement :meth:`multiply_words` and :meth:`basis`; the rest
    is bilinear extension and bookkeeping.
    """

    def __init__(self, name: str, flags: AlgebraFlags, degree_cap: Optional[int] = None):
        """Initialize algebra.

        Args:
            name: Human readable name used in reports
            flags: Declared laws
            degree_cap: Truncation cap for the polynomial part, if any
        """
        self.name = name
        self.flags = flags
        self.degree_cap = degree_cap
        self._basis_cache: Optional[List[BasisWord]] = None

    @abstractmethod
    def multiply_words(self, left: BasisWord, right: BasisWord) -> Element:
        """Product of two basis words."""

    @abstractmethod
    def _enumerate_basis(self) -> List[BasisWord]:
        """All basis words of the (truncated) algebra."""

    @abstractmethod
    def owns(self, word: BasisWord) -> bool:
        """Whether the word belongs to this algebra."""

    def basis(self) -> List[BasisWord]:
        if self._basis_cache is None:
            self._basis_cache = sorted(self._enumerate_basis())
            logger.debug(f"{self.name}: basis of size {len(self._basis_cache)}")
        return self._basis_cache

    def unit(self) -> Optional[Element]:
        return None

    def generator_map(self) -> Dict[str, Element]:
        """Named generators, used by the expression parser."""
        return {}

    def word_size(self, word: BasisWord) -> int:
        """Size used to bound random elements (0 means a multiple of the unit)."""
        return 0

    def truncation_load(self, word: BasisWord) -> int:
        """The part of a word's size that the truncation cap bounds."""
        return 0

    def multiply(self, left: Element, right: Element) -> Element:
        terms: Dict[BasisWord, object] = {}
        for lw, lc in left.items():
            for rw, rc in right.items():
                for w, c in self.multiply_words(lw, rw).items():
                    terms[w] = terms.get(w, 0) + lc * rc * c
        return Element(terms)

    def product(self, factors: Sequence[Element]) -> Element:
        """Left-nested product ((a1 a2) a3) ... ; empty product is the unit."""
        if not factors:
            unit = self.unit()
            if unit is None:
                raise AlgebraError(f"{self.name} has no unit for an empty product")
            return unit
        result = factors[0]
        for factor in factors[1:]:
            result = self.multiply(result, factor)
        return result

    def power(self, element: Element, k: int) -> Element:
        return self.product([element] * k)

    def supercommutator(self, left: Element, right: Element) -> Element:
        """[a, b] = ab - (-1)^{|a||b|} ba, extended over parity parts."""
        result = Element()
        for pa, a in left.parity_parts().items():
            for pb, b in right.parity_parts().items():
                result = result + self.multiply(a, b) - self.multiply(b, a).scale(sign(pa * pb))
        return result

    def element(self, word: BasisWord, coeff=1) -> Element:
        if not self.owns(word):
            raise AlgebraError(f"Word {word} does not belong to {self.name}")
        return Element.from_word(word, coeff)

    def validate(self, element: Element) -> None:
        for word in element.words():
            if not self.owns(word):
                raise AlgebraError(f"Word {word} does not belong to {self.name}")

    def check_flags(self, words: Optional[Sequence[BasisWord]] = None) -> List[str]:
        """Exhaustively test the declared laws on the given basis words.

        Args:
            words: Basis words to test (default: the whole basis)

        Returns:
            List[str]: One message per violated law instance (empty if none)
        """
        words = list(words) if words is not None else self.basis()
        problems = []
        for u, v in itertools.product(words, repeat=2):
            uv = self.multiply_words(u, v)
            for w in uv.words():
                if w.degree != u.degree + v.degree:
                    problems.append(f"degree: {u} * {v} contains {w}")
            if self.flags.supercommutative:
                vu = self.multiply_words(v, u).scale(sign(u.degree * v.degree))
                if uv != vu:
                    problems.append(f"supercommutative: {u}, {v}")
        if self.flags.associative:
            for u, v, w in itertools.product(words, repeat=3):
                a, b, c = (Element.from_word(x) for x in (u, v, w))
                if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                    problems.append(f"associative: {u}, {v}, {w}")
        if self.flags.unital:
            unit = self.unit()
            if unit is None:
                problems.append("unital: no unit element")
            else:
                for u in words:
                    a = Element.from_word(u)
                    if self.multiply(unit, a) != a or self.multiply(a, unit) != a:
                        problems.append(f"unital: {u}")
        return problems

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"
