"""Finite sweep domains for checking operator identities on truncated algebras."""
import itertools
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from base.algebra import Superalgebra
from base.elements import BasisWord, Element
from base.scalars import derive_seed

DEFAULT_TUPLE_LIMIT = 4000


def sweep_domain(
    alg: Superalgebra,
    arity: int,
    headroom: int = 1,
    load_bound: Optional[int] = None,
) -> List[BasisWord]:
    """Basis words small enough that products of ``arity`` of them stay below the cap.

    ``headroom`` reserves room for operators that lower the truncation load
    (such as d/dx); words near the cap would otherwise see truncation
    artifacts. Algebras without a cap return their whole basis.
    """
    if load_bound is None:
        if alg.degree_cap is None:
            return alg.basis()
        load_bound = max(alg.degree_cap - headroom, 0) // max(arity, 1)
    return [w for w in alg.basis() if alg.truncation_load(w) <= load_bound]


def tuple_count(domain_size: int, arity: int) -> int:
    return domain_size ** arity


def sweep_tuples(
    domain: Sequence[BasisWord],
    arity: int,
    limit: int = DEFAULT_TUPLE_LIMIT,
    seed: int = 0,
) -> Tuple[Iterator[Tuple[Element, ...]], bool]:
    """Argument tuples over the domain.

    Returns:
        Tuple[Iterator, bool]: The tuples and whether the sweep is exhaustive.
        When the full product exceeds ``limit``, a deterministic sample of
        ``limit`` tuples is returned instead.
    """
    domain = list(domain)
    elements = [Element.from_word(w) for w in domain]
    if tuple_count(len(domain), arity) <= limit:
        return itertools.product(elements, repeat=arity), True
    rng = random.Random(derive_seed(seed, "sweep", arity, len(domain)))

    def sample() -> Iterator[Tuple[Element, ...]]:
        for _ in range(limit):
            yield tuple(rng.choice(elements) for _ in range(arity))

    return sample(), False
