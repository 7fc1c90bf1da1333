"""Basis words and finite linear combinations over the rationals."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterator, List, Mapping, Optional, Set, Tuple

from .errors import HomogeneityError
from .scalars import ScalarLike, format_scalar, to_scalar


@dataclass(frozen=True, order=True)
class BasisWord:
    """A basis element of a graded vector space.

    Equality, hashing and ordering use ``key`` only; the remaining fields are
    bookkeeping derived from the key by the owning algebra.
    """

    key: Tuple[Hashable, ...]
    degree: int = field(default=0, compare=False)
    weight: Optional[Fraction] = field(default=None, compare=False)
    label: str = field(default="", compare=False)

    @property
    def parity(self) -> int:
        return self.degree % 2

    def __str__(self) -> str:
        return self.label or repr(self.key)


class Element:
    """Finite rational linear combination of basis words.

    Zero coefficients are never stored, so two elements are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[BasisWord, ScalarLike]] = None):
        cleaned: Dict[BasisWord, Fraction] = {}
        for word, coeff in (terms or {}).items():
            value = to_scalar(coeff)
            if value:
                cleaned[word] = value
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def from_word(cls, word: BasisWord, coeff: ScalarLike = 1) -> "Element":
        return cls({word: coeff})

    @classmethod
    def _raw(cls, terms: Dict[BasisWord, Fraction]) -> "Element":
        element = cls.__new__(cls)
        element._terms = {w: c for w, c in terms.items() if c}
        return element

    # -- container protocol -------------------------------------------------

    def items(self) -> List[Tuple[BasisWord, Fraction]]:
        return sorted(self._terms.items())

    def words(self) -> List[BasisWord]:
        return sorted(self._terms)

    def coefficient(self, word: BasisWord) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def __iter__(self) -> Iterator[Tuple[BasisWord, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- vector space operations --------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        result = dict(self._terms)
        for word, coeff in other._terms.items():
            result[word] = result.get(word, 0) + coeff
        return Element._raw(result)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        result = dict(self._terms)
        for word, coeff in other._terms.items():
            result[word] = result.get(word, 0) - coeff
        return Element._raw(result)

    def __neg__(self) -> "Element":
        return Element._raw({w: -c for w, c in self._terms.items()})

    def scale(self, factor: ScalarLike) -> "Element":
        value = to_scalar(factor)
        if not value:
            return Element()
        return Element._raw({w: c * value for w, c in self._terms.items()})

    def __mul__(self, factor: Any) -> "Element":
        if isinstance(factor, Element):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- grading ------------------------------------------------------------

    def degrees(self) -> Set[int]:
        return {w.degree for w in self._terms}

    def degree(self) -> Optional[int]:
        """Superdegree of a homogeneous element.

        Returns:
            Optional[int]: The common degree, or None for the zero element

        Raises:
            HomogeneityError: If the element mixes degrees
        """
        degrees = self.degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise HomogeneityError(f"Element {self} is not homogeneous (degrees {sorted(degrees)})")
        return degrees.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def parity(self) -> int:
        """Parity of a parity-homogeneous element (0 for the zero element)."""
        parities = {d % 2 for d in self.degrees()}
        if len(parities) > 1:
            raise HomogeneityError(f"Element {self} mixes even and odd terms")
        return parities.pop() if parities else 0

    def is_parity_homogeneous(self) -> bool:
        return len({d % 2 for d in self.degrees()}) <= 1

    def homogeneous_parts(self) -> Dict[int, "Element"]:
        parts: Dict[int, Dict[BasisWord, Fraction]] = {}
        for word, coeff in self._terms.items():
            parts.setdefault(word.degree, {})[word] = coeff
        return {d: Element._raw(t) for d, t in sorted(parts.items())}

    def parity_parts(self) -> Dict[int, "Element"]:
        parts: Dict[int, Dict[BasisWord, Fraction]] = {}
        for word, coeff in self._terms.items():
            parts.setdefault(word.parity, {})[word] = coeff
        return {p: Element._raw(t) for p, t in sorted(parts.items())}

    def weights(self) -> Set[Optional[Fraction]]:
        return {w.weight for w in self._terms}

    def weight(self) -> Optional[Fraction]:
        """Common weight of a weight-homogeneous element (None for zero)."""
        weights = self.weights()
        if not weights:
            return None
        if len(weights) > 1:
            raise HomogeneityError(f"Element {self} is not weight-homogeneous")
        return weights.pop()

    def weight_parts(self) -> Dict[Optional[Fraction], "Element"]:
        parts: Dict[Optional[Fraction], Dict[BasisWord, Fraction]] = {}
        for word, coeff in self._terms.items():
            parts.setdefault(word.weight, {})[word] = coeff
        return {k: Element._raw(t) for k, t in parts.items()}

    # -- presentation -------------------------------------------------------

    def serialize(self) -> List[str]:
        """Sorted term list, each entry ``"coeff * word"``."""
        return [f"{format_scalar(c)} * {w}" for w, c in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(self.serialize())

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"
