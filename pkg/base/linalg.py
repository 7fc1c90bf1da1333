"""Exact linear algebra on elements, backed by sympy matrices."""
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from .elements import BasisWord, Element
from .operators import LinOp


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def coordinate_words(elements: Sequence[Element]) -> List[BasisWord]:
    words = set()
    for element in elements:
        words.update(element.words())
    return sorted(words)


def to_matrix(columns: Sequence[Element], rows: Optional[Sequence[BasisWord]] = None) -> Tuple[Matrix, List[BasisWord]]:
    """Matrix whose columns are the coordinates of the given elements."""
    rows = list(rows) if rows is not None else coordinate_words(columns)
    index = {w: i for i, w in enumerate(rows)}
    matrix = Matrix.zeros(len(rows), len(columns))
    for j, column in enumerate(columns):
        for word, coeff in column.items():
            matrix[index[word], j] = _rational(coeff)
    return matrix, rows


def rank_of(elements: Sequence[Element]) -> int:
    elements = [e for e in elements if not e.is_zero()]
    if not elements:
        return 0
    matrix, _ = to_matrix(elements)
    return matrix.rank()


def in_span(target: Element, spanning: Sequence[Element]) -> bool:
    if target.is_zero():
        return True
    return rank_of(list(spanning) + [target]) == rank_of(spanning)


def operator_matrix(op: LinOp, domain: Sequence[BasisWord]) -> Tuple[Matrix, List[BasisWord]]:
    images = [op.on_word(w) for w in domain]
    return to_matrix(images)


def kernel(ops: Sequence[LinOp], domain: Sequence[BasisWord]) -> List[Element]:
    """Basis of the common kernel of the operators on span(domain)."""
    domain = list(domain)
    if not domain:
        return []
    blocks = []
    for op in ops:
        matrix, rows = operator_matrix(op, domain)
        if rows:
            blocks.append(matrix)
    if not blocks:
        return [Element.from_word(w) for w in domain]
    stacked = Matrix.vstack(*blocks)
    return [_vector_to_element(v, domain) for v in stacked.nullspace()]


def image(op: LinOp, domain: Sequence[BasisWord]) -> List[Element]:
    """Basis of op(span(domain))."""
    matrix, rows = operator_matrix(op, domain)
    if not rows:
        return []
    return [_vector_to_element(v, rows) for v in matrix.columnspace()]


def _vector_to_element(vector: Matrix, words: Sequence[BasisWord]) -> Element:
    terms: Dict[BasisWord, Fraction] = {}
    for i, word in enumerate(words):
        if vector[i] != 0:
            terms[word] = _fraction(vector[i])
    return Element(terms)
