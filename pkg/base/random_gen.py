"""Seeded generators for random elements and operators."""
import random
from typing import Dict, List, Optional, Sequence

from .algebra import Superalgebra
from .elements import BasisWord, Element
from .errors import AlgebraError
from .operators import LinOp
from .scalars import derive_seed

COEFF_RANGE = range(-5, 6)
MAX_TERMS = 6


def candidate_words(
    alg: Superalgebra,
    degree_bound: Optional[int] = None,
    superdegree: Optional[int] = None,
    load_bound: Optional[int] = None,
) -> List[BasisWord]:
    words = alg.basis()
    if degree_bound is not None:
        words = [w for w in words if alg.word_size(w) <= degree_bound]
    if load_bound is not None:
        words = [w for w in words if alg.truncation_load(w) <= load_bound]
    if superdegree is not None:
        words = [w for w in words if w.degree == superdegree]
    return words


def random_element(
    alg: Superalgebra,
    seed: int,
    degree_bound: Optional[int] = None,
    superdegree: Optional[int] = None,
    load_bound: Optional[int] = None,
) -> Element:
    """Random element with at most six terms and coefficients in [-5, 5].

    Args:
        alg: Algebra to draw from
        seed: Seed; equal seeds give equal elements
        degree_bound: Maximal word size (0 gives a multiple of the unit)
        superdegree: Restrict to words of this superdegree
        load_bound: Maximal truncation load of each word

    Returns:
        Element: The random element (possibly zero)
    """
    words = candidate_words(alg, degree_bound, superdegree, load_bound)
    if not words:
        return Element()
    rng = random.Random(derive_seed(seed, alg.name, degree_bound, superdegree, load_bound))
    count = rng.randint(1, min(MAX_TERMS, len(words)))
    chosen = rng.sample(words, count)
    return Element({w: rng.choice(COEFF_RANGE) for w in chosen})


def random_homogeneous(
    alg: Superalgebra,
    seed: int,
    degree_bound: Optional[int] = None,
    load_bound: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> Element:
    """Random element of a single, randomly chosen superdegree."""
    words = candidate_words(alg, degree_bound, None, load_bound)
    available = sorted({w.degree for w in words})
    if degrees is not None:
        available = [d for d in available if d in degrees]
    if not available:
        return Element()
    rng = random.Random(derive_seed(seed, "degree"))
    return random_element(alg, seed, degree_bound, rng.choice(available), load_bound)


def random_operator(
    alg: Superalgebra,
    degree: int,
    seed: int,
    kill_unit: bool = False,
    domain: Optional[Sequence[BasisWord]] = None,
    max_terms: int = 3,
) -> LinOp:
    """Random linear operator of the given superdegree.

    Each basis word of the domain is sent to a random combination of at most
    ``max_terms`` words of the shifted degree, never raising the truncation
    load. Words outside the domain are sent to zero.
    """
    words = list(domain) if domain is not None else alg.basis()
    unit = alg.unit()
    unit_word = unit.words()[0] if unit is not None and kill_unit else None
    rng = random.Random(derive_seed(seed, alg.name, "operator", degree))
    by_degree: Dict[int, List[BasisWord]] = {}
    for w in alg.basis():
        by_degree.setdefault(w.degree, []).append(w)
    table: Dict[BasisWord, Element] = {}
    for w in words:
        if w == unit_word:
            continue
        targets = [
            t for t in by_degree.get(w.degree + degree, [])
            if alg.truncation_load(t) <= alg.truncation_load(w)
        ]
        if not targets:
            continue
        chosen = rng.sample(targets, rng.randint(1, min(max_terms, len(targets))))
        table[w] = Element({t: rng.choice(COEFF_RANGE) for t in chosen})
    if kill_unit and unit is None:
        raise AlgebraError(f"{alg.name} has no unit to kill")
    return LinOp(lambda w: table.get(w, Element()), degree, f"random[{seed},{degree}]")
