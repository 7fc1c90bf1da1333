"""Words in contractions iota(e_i) and multiplications eps(e_i') with normal ordering."""
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from base.enums import ComplexCase
from base.errors import AlgebraError
from base.operators import LinOp, identity_operator, sum_operators, zero_operator
from base.scalars import ScalarLike, format_scalar, to_scalar

IOTA = "iota"
EPS = "eps"

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]

STRATEGIES = ("leftmost", "rightmost")


class CliffordElement:
    """Linear combination of words in iota(e_i), eps(e_i').

    The letters satisfy eps eps = -eps eps, iota iota = -iota iota and
    eps_i iota_j + iota_j eps_i = delta_ij.
    """

    def __init__(self, terms: Optional[Dict[Word, ScalarLike]] = None):
        self.terms: Dict[Word, Fraction] = {}
        for word, coeff in (terms or {}).items():
            value = to_scalar(coeff)
            if value:
                self.terms[tuple(word)] = value

    @classmethod
    def letter(cls, kind: str, index: int, coeff: ScalarLike = 1) -> "CliffordElement":
        if kind not in (IOTA, EPS):
            raise AlgebraError(f"unknown letter kind {kind}")
        return cls({((kind, index),): coeff})

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, 0) + coeff
        return CliffordElement(terms)

    def scale(self, factor: ScalarLike) -> "CliffordElement":
        value = to_scalar(factor)
        return CliffordElement({w: c * value for w, c in self.terms.items()})

    def __mul__(self, other: "CliffordElement") -> "CliffordElement":
        terms: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                terms[w1 + w2] = terms.get(w1 + w2, 0) + c1 * c2
        return CliffordElement(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{format_scalar(c)} * {' '.join(f'{k}{i}' for k, i in w) or '1'}" for w, c in sorted(self.terms.items())
        )

    def to_operator(self, realize: Callable[[Letter], LinOp], label: str, degree: int = 0) -> LinOp:
        """Sum of compositions; the rightmost letter acts first."""
        ops = []
        for word, coeff in sorted(self.terms.items()):
            op = identity_operator()
            for letter in word:
                op = op.compose(realize(letter))
            ops.append(op.scaled(coeff))
        if not ops:
            return zero_operator(degree, label)
        return sum_operators(ops, degree, label)


def creator_kind(case: ComplexCase) -> str:
    """Letters that raise the exterior degree: iota for homology, eps for cohomology."""
    return IOTA if case == ComplexCase.HOMOLOGY else EPS


def _rank(letter: Letter, creator: str) -> Tuple[int, int]:
    return (0 if letter[0] == creator else 1, letter[1])


def _disorder(word: Word, creator: str, strategy: str) -> Optional[int]:
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    for pos in positions:
        if _rank(word[pos], creator) >= _rank(word[pos + 1], creator):
            return pos
    return None


def clifford_normalize(
    element: CliffordElement, case: ComplexCase, strategy: str = "leftmost"
) -> CliffordElement:
    """Rewrite to normal order: creators first, then annihilators, each by index.

    Args:
        element: Element to normalize
        case: Decides which letters are creators
        strategy: Which out-of-order pair to rewrite first; the result does not depend on it

    Returns:
        CliffordElement: Normal-ordered element
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown rewriting strategy {strategy}")
    creator = creator_kind(case)
    pending: Dict[Word, Fraction] = dict(element.terms)
    result: Dict[Word, Fraction] = {}
    while pending:
        word, coeff = pending.popitem()
        if not coeff:
            continue
        pos = _disorder(word, creator, strategy)
        if pos is None:
            result[word] = result.get(word, 0) + coeff
            continue
        a, b = word[pos], word[pos + 1]
        if a == b:
            continue
        prefix, suffix = word[:pos], word[pos + 2:]
        swapped = prefix + (b, a) + suffix
        pending[swapped] = pending.get(swapped, 0) - coeff
        if a[0] != b[0] and a[1] == b[1]:
            contracted = prefix + suffix
            pending[contracted] = pending.get(contracted, 0) + coeff
    return CliffordElement(result)
