"""Linear operators on superalgebras."""
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional

from .algebra import Superalgebra
from .elements import BasisWord, Element
from .errors import AlgebraError, ConsistencyError, HomogeneityError
from .polynomial import PolynomialSuperalgebra
from .scalars import ScalarLike, sign, to_scalar

WordAction = Callable[[BasisWord], Element]


class LinOp:
    """A linear map given by its action on basis words.

    ``degree`` is the superdegree shift. Operators that are only
    parity-homogeneous (sums of pieces of different degrees with the same
    parity) carry ``degree=None`` and an explicit ``parity``. Word images are
    memoized, and every image is checked against the declared shift.
    """

    def __init__(
        self,
        action: WordAction,
        degree: Optional[int],
        label: str = "op",
        parity: Optional[int] = None,
        weight_shift: Optional[Fraction] = None,
    ):
        if degree is None and parity is None:
            raise AlgebraError("an operator needs a degree or a parity")
        self._action = action
        self.degree = degree
        self.parity = degree % 2 if degree is not None else parity % 2
        self.label = label
        self.weight_shift = weight_shift
        self._cache: Dict[BasisWord, Element] = {}

    def on_word(self, word: BasisWord) -> Element:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        image = self._action(word)
        for target in image.words():
            if self.degree is not None and target.degree != word.degree + self.degree:
                raise ConsistencyError(
                    f"{self.label} maps {word} (degree {word.degree}) to {target} (degree {target.degree})",
                    {"operator": self.label, "degree": self.degree},
                )
            if self.degree is None and (target.degree - word.degree) % 2 != self.parity:
                raise ConsistencyError(f"{self.label} breaks its parity on {word}")
        self._cache[word] = image
        return image

    def apply(self, element: Element) -> Element:
        terms: Dict[BasisWord, Fraction] = {}
        for word, coeff in element.items():
            for target, c in self.on_word(word).items():
                terms[target] = terms.get(target, 0) + coeff * c
        return Element(terms)

    __call__ = apply

    def compose(self, other: "LinOp") -> "LinOp":
        """self after other."""
        degree = None if self.degree is None or other.degree is None else self.degree + other.degree
        return LinOp(
            lambda w: self.apply(other.on_word(w)),
            degree,
            f"({self.label})({other.label})",
            parity=self.parity + other.parity,
            weight_shift=_add_shifts(self.weight_shift, other.weight_shift),
        )

    def __matmul__(self, other: "LinOp") -> "LinOp":
        return self.compose(other)

    def __add__(self, other: "LinOp") -> "LinOp":
        if self.parity != other.parity:
            raise HomogeneityError(f"cannot add {self.label} and {other.label} of different parity")
        degree = self.degree if self.degree == other.degree else None
        return LinOp(
            lambda w: self.on_word(w) + other.on_word(w),
            degree,
            f"{self.label} + {other.label}",
            parity=self.parity,
            weight_shift=self.weight_shift if self.weight_shift == other.weight_shift else None,
        )

    def scaled(self, factor: ScalarLike) -> "LinOp":
        value = to_scalar(factor)
        return LinOp(
            lambda w: self.on_word(w).scale(value),
            self.degree,
            f"{value}*{self.label}",
            parity=self.parity,
            weight_shift=self.weight_shift,
        )

    def __neg__(self) -> "LinOp":
        return self.scaled(-1)

    def __sub__(self, other: "LinOp") -> "LinOp":
        return self + (-other)

    def is_zero_on(self, words: Iterable[BasisWord]) -> bool:
        return all(self.on_word(w).is_zero() for w in words)

    def __repr__(self) -> str:
        return f"LinOp({self.label!r}, degree={self.degree})"


def _add_shifts(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None or b is None:
        return None
    return a + b


def apply_operator(op: LinOp, element: Element) -> Element:
    return op.apply(element)


def supercommutator(a: LinOp, b: LinOp) -> LinOp:
    """[A, B] = AB - (-1)^{|A||B|} BA."""
    result = a.compose(b) - b.compose(a).scaled(sign(a.parity * b.parity))
    result.label = f"[{a.label}, {b.label}]"
    return result


def sum_operators(ops: Iterable[LinOp], degree: int, label: str) -> LinOp:
    ops = list(ops)
    if not ops:
        return zero_operator(degree, label)
    result = ops[0]
    for op in ops[1:]:
        result = result + op
    result.label = label
    return result


def zero_operator(degree: int = 0, label: str = "0") -> LinOp:
    return LinOp(lambda w: Element(), degree, label, weight_shift=Fraction(0))


def identity_operator(label: str = "id") -> LinOp:
    return LinOp(Element.from_word, 0, label, weight_shift=Fraction(0))


def diagonal_operator(eigenvalue: Callable[[BasisWord], ScalarLike], label: str) -> LinOp:
    return LinOp(lambda w: Element.from_word(w, eigenvalue(w)), 0, label, weight_shift=Fraction(0))


def left_multiplication(alg: Superalgebra, element: Element, label: Optional[str] = None) -> LinOp:
    degree = element.degree()
    return LinOp(
        lambda w: alg.multiply(element, Element.from_word(w)),
        degree if degree is not None else 0,
        label or f"L[{element}]",
    )


def even_derivative(alg: PolynomialSuperalgebra, i: int, label: Optional[str] = None) -> LinOp:
    """d/dx_i on a polynomial superalgebra."""
    if not 0 <= i < alg.n_even:
        raise AlgebraError(f"no even generator with index {i}")

    def action(word: BasisWord) -> Element:
        exps, odds = word.key
        if exps[i] == 0:
            return Element()
        lowered = list(exps)
        lowered[i] -= 1
        return Element.from_word(alg.word(lowered, odds), exps[i])

    return LinOp(action, 0, label or f"d/d{alg.even_names[i]}")


def odd_derivative(alg: PolynomialSuperalgebra, i: int, label: Optional[str] = None) -> LinOp:
    """Left derivative d/dtheta_i on a polynomial superalgebra."""
    if not 0 <= i < alg.n_odd:
        raise AlgebraError(f"no odd generator with index {i}")

    def action(word: BasisWord) -> Element:
        exps, odds = word.key
        if i not in odds:
            return Element()
        position = odds.index(i)
        remaining = odds[:position] + odds[position + 1:]
        return Element.from_word(alg.word(exps, remaining), sign(position))

    return LinOp(action, -alg.odd_degree, label or f"d/d{alg.odd_names[i]}")


def euler_operator(alg: PolynomialSuperalgebra, label: str = "E") -> LinOp:
    """Total degree operator: multiplies each monomial by its word size."""
    return diagonal_operator(alg.word_size, label)
