"""Exact rational scalars and the small sign/binomial helpers used everywhere."""
import hashlib
from fractions import Fraction
from math import comb
from typing import Any, Sequence, Tuple, Union

Scalar = Fraction

ScalarLike = Union[Fraction, int, str]


def to_scalar(value: Any) -> Fraction:
    """Coerce an int, str ("3/2") or Fraction to an exact scalar.

    Args:
        value: Value to coerce

    Returns:
        Fraction: Exact rational value

    Raises:
        TypeError: If the value is a float or otherwise inexact
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Cannot use {type(value).__name__} as an exact scalar")


def sign(exponent: int) -> int:
    """Return (-1)**exponent."""
    return -1 if exponent % 2 else 1


def binomial(m: int, i: int) -> int:
    """Binomial coefficient C(m, i) for any integer m and i >= 0."""
    if i < 0:
        return 0
    if m >= 0:
        return comb(m, i)
    return sign(i) * comb(i - m - 1, i)


def sort_with_sign(items: Sequence[Any]) -> Tuple[Tuple[Any, ...], int]:
    """Sort anticommuting symbols and report the sign of the permutation.

    Returns an empty tuple and sign 0 if a symbol repeats.
    """
    seq = list(items)
    if len(set(seq)) != len(seq):
        return (), 0
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return tuple(sorted(seq)), sign(inversions)


def format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def derive_seed(seed: int, *labels: Any) -> int:
    """Split a seed into an independent, run-stable child seed."""
    text = ":".join([str(seed)] + [str(label) for label in labels])
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")
