"""The bc ghost system as a vertex operator superalgebra on its Fock space.

States are words of creation modes acting on the vacuum. Modes are written
in weight indexing, b(z) = sum b_k z^{-k-2} and c(z) = sum c_k z^{-k+1}, with
{b_j, c_k} = delta_{j+k,0}; b_k (k <= -2) and c_k (k <= 1) create. Vertex
operator modes u_(n) use standard indexing u(z) = sum u_(n) z^{-n-1}, so
b_(n) = b_{n-1} and c_(n) = c_{n+2}.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from base.algebra import AlgebraFlags, Superalgebra
from base.elements import BasisWord, Element
from base.errors import AlgebraError, ConsistencyError
from base.scalars import binomial, sign, sort_with_sign

logger = logging.getLogger(__name__)

Mode = Tuple[str, int]

GENERATORS = ("b", "c")
FIELD_WEIGHT = {"b": 2, "c": -1}
FIELD_MODE = {"b": ("b", -2), "c": ("c", 1)}
MIN_STATE_WEIGHT = -1
MAX_MODE_SUM = 10000


def is_creation(mode: Mode) -> bool:
    gen, k = mode
    return k <= -2 if gen == "b" else k <= 1


def to_standard(gen: str, k: int) -> int:
    """Weight index k of a generator mode to its standard index n."""
    return k + 1 if gen == "b" else k - 2


def from_standard(gen: str, n: int) -> int:
    return n - 1 if gen == "b" else n + 2


def mode_weight(mode: Mode) -> int:
    return -mode[1]


def format_modes(modes: Sequence[Mode]) -> str:
    return "".join(f"{g}({k})" for g, k in modes) + "|0>"


class BcVertexAlgebra(Superalgebra):
    """Fock space of the bc system with the Wick product.

    The basis is every state of weight at most ``weight_cap``; products and
    modes are computed exactly and may leave that range. The superdegree is
    the ghost number (#c - #b).
    """

    def __init__(self, weight_cap: int = 6, name: Optional[str] = None):
        if weight_cap < MIN_STATE_WEIGHT:
            raise AlgebraError(f"weight cap {weight_cap} admits no states")
        self.weight_cap = weight_cap
        self._memo: Dict[Tuple[BasisWord, int, BasisWord], Element] = {}
        super().__init__(name or f"bc_{weight_cap}", AlgebraFlags(unital=True))

    # -- words -----------------------------------------------------------

    def word(self, modes: Sequence[Mode]) -> BasisWord:
        """Canonical word for sorted, distinct creation modes."""
        modes = tuple(modes)
        ghost = sum(1 if g == "c" else -1 for g, _ in modes)
        weight = sum(mode_weight(m) for m in modes)
        return BasisWord(key=modes, degree=ghost, weight=Fraction(weight), label=format_modes(modes))

    def state(self, modes: Sequence[Mode], coeff=1) -> Element:
        """The state m_1 m_2 ... |0>, reordered with its fermionic sign."""
        for mode in modes:
            if mode[0] not in GENERATORS or not is_creation(mode):
                raise AlgebraError(f"{mode[0]}({mode[1]}) is not a creation mode")
        ordered, s = sort_with_sign(modes)
        if s == 0:
            return Element()
        return Element.from_word(self.word(ordered), s * coeff)

    def vacuum(self) -> Element:
        return Element.from_word(self.word(()))

    def field_state(self, gen: str) -> Element:
        return self.state([FIELD_MODE[gen]])

    def unit(self) -> Element:
        return self.vacuum()

    def owns(self, word: BasisWord) -> bool:
        modes = word.key
        if not isinstance(modes, tuple):
            return False
        for mode in modes:
            if not (isinstance(mode, tuple) and len(mode) == 2 and mode[0] in GENERATORS and is_creation(mode)):
                return False
        return list(modes) == sorted(set(modes))

    def generator_map(self) -> Dict[str, Element]:
        return {"b": self.field_state("b"), "c": self.field_state("c"), "vac": self.vacuum()}

    def word_size(self, word: BasisWord) -> int:
        return len(word.key)

    def _enumerate_basis(self) -> List[BasisWord]:
        cap = self.weight_cap
        # a single c_1 lowers the weight by one, so modes up to weight cap + 1 can appear
        candidates = [("b", k) for k in range(-2, -cap - 3, -1)] + [("c", k) for k in range(1, -cap - 2, -1)]
        candidates.sort()
        words = []

        def extend(start: int, chosen: List[Mode], weight: int) -> None:
            if weight <= cap:
                words.append(self.word(sorted(chosen)))
            for index in range(start, len(candidates)):
                mode = candidates[index]
                # c_1 is the only negative mode and it sorts last
                if weight + mode_weight(mode) > cap + 1:
                    continue
                chosen.append(mode)
                extend(index + 1, chosen, weight + mode_weight(mode))
                chosen.pop()

        extend(0, [], 0)
        return words

    # -- modes -------------------------------------------------------------

    def generator_mode(self, gen: str, k: int, v: Element) -> Element:
        """Apply the weight-indexed generator mode b_k or c_k."""
        result: Dict[BasisWord, Fraction] = {}
        for word, coeff in v.items():
            for target, c in self._generator_on_word(gen, k, word).items():
                result[target] = result.get(target, 0) + coeff * c
        return Element(result)

    def _generator_on_word(self, gen: str, k: int, word: BasisWord) -> Element:
        mode = (gen, k)
        modes = word.key
        if is_creation(mode):
            return self.state((mode,) + modes)
        partner = ("c" if gen == "b" else "b", -k)
        if partner not in modes:
            return Element()
        position = modes.index(partner)
        remaining = modes[:position] + modes[position + 1:]
        return Element.from_word(self.word(remaining), sign(position))

    def mode_apply(self, u: Element, n: int, v: Element) -> Element:
        """u_(n) v, bilinear in u and v."""
        result: Dict[BasisWord, Fraction] = {}
        for uw, uc in u.items():
            for vw, vc in v.items():
                for target, c in self.mode_words(uw, n, vw).items():
                    result[target] = result.get(target, 0) + uc * vc * c
        return Element(result)

    def product_n(self, u: Element, n: int, v: Element) -> Element:
        return self.mode_apply(u, n, v)

    def wick(self, u: Element, v: Element) -> Element:
        return self.mode_apply(u, -1, v)

    def multiply_words(self, left: BasisWord, right: BasisWord) -> Element:
        return self.mode_words(left, -1, right)

    def mode_words(self, u: BasisWord, n: int, v: BasisWord) -> Element:
        """u_(n) v on basis words.

        A generator state acts by its own modes. A longer word
        x_(m) y (x the field of its first mode) is expanded by
        (x_(m) y)_(n) v = sum_i (-1)^i C(m, i) (x_(m-i) y_(n+i) v
                           - (-1)^{m + |x||y|} y_(m+n-i) x_(i) v),
        where both sums stop once the weights force the terms to vanish.
        """
        key = (u, n, v)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        value = self._compute_mode(u, n, v)
        self._memo[key] = value
        return value

    def _compute_mode(self, u: BasisWord, n: int, v: BasisWord) -> Element:
        modes = u.key
        target_weight = u.weight + v.weight - n - 1
        if target_weight < MIN_STATE_WEIGHT:
            return Element()
        if not modes:
            return Element.from_word(v) if n == -1 else Element()
        gen = modes[0][0]
        if modes == (FIELD_MODE[gen],):
            return self._generator_on_word(gen, from_standard(gen, n), v)
        m = to_standard(gen, modes[0][1])
        y = self.word(modes[1:])
        vv = Element.from_word(v)
        x_weight = FIELD_WEIGHT[gen]
        i_max = int(max(y.weight + v.weight - n, x_weight + v.weight))
        if i_max > MAX_MODE_SUM:
            raise ConsistencyError(f"mode sum for {u}_({n}) {v} does not terminate", {"bound": i_max})
        outer = sign(m + y.parity)
        result = Element()
        for i in range(0, i_max + 1):
            coeff = sign(i) * binomial(m, i)
            first = self.generator_mode(gen, from_standard(gen, m - i), self.mode_words(y, n + i, v))
            inner = self.generator_mode(gen, from_standard(gen, i), vv)
            second = Element()
            for w, c in inner.items():
                second = second + self.mode_words(y, m + n - i, w).scale(c)
            result = result + (first - second.scale(outer)).scale(coeff)
        return result

    def weight_of(self, element: Element) -> Optional[Fraction]:
        return element.weight()


def parse_modes(text: str) -> List[Mode]:
    """Parse "b(-2)c(1)|0>" into weight-indexed modes."""
    body = text.strip()
    if not body.endswith("|0>"):
        raise AlgebraError(f"state {text!r} must end with |0>")
    body = body[:-3]
    modes: List[Mode] = []
    while body:
        gen = body[0]
        if gen not in GENERATORS or len(body) < 4 or body[1] != "(":
            raise AlgebraError(f"cannot read a mode at {body!r}")
        close = body.find(")")
        if close < 0:
            raise AlgebraError(f"unclosed mode index in {text!r}")
        try:
            k = int(body[2:close])
        except ValueError as e:
            raise AlgebraError(f"bad mode index in {text!r}") from e
        modes.append((gen, k))
        body = body[close + 1:]
    return modes
