"""Text syntax for elements and operators in suite files.

Elements are sums of terms such as ``3/2 * x1^2*t1`` or
``b(-2)c(1)|0> - 2*c(-1)|0>``; factors are generator names, rational
coefficients, Fock states and parenthesized sub-expressions. Operators are
sums of compositions ``2 * [x1] . d/dx1``: ``d/dNAME`` differentiates by a
generator, ``[expr]`` multiplies on the left and a bare name refers to a
named operator (or multiplies by a generator).
"""
import re
from fractions import Fraction
from typing import List, Mapping, Optional, Tuple

from base.algebra import Superalgebra
from base.elements import Element
from base.errors import ConfigError, KernelError
from base.operators import LinOp, even_derivative, left_multiplication, odd_derivative
from base.polynomial import PolynomialSuperalgebra
from vosa.fock import BcVertexAlgebra, parse_modes

TOKEN = re.compile(
    r"\s*(?:(?P<state>(?:[bc]\(-?\d+\))*\|0>)"
    r"|(?P<number>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^().\[\]]))"
)

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    """Split text into (kind, text, column) tokens, columns counted from 1."""
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = TOKEN.match(text, position)
        if match is None or match.end() == position:
            column = position + len(text[position:]) - len(text[position:].lstrip()) + 1
            raise ConfigError(f"unexpected character in {text!r}", column=column)
        kind = match.lastgroup
        value = match.group(kind)
        tokens.append((kind, value, match.start(kind) + 1))
        position = match.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, alg: Superalgebra, text: str, operators: Optional[Mapping[str, LinOp]] = None):
        self.alg = alg
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.operators = dict(operators or {})
        self.generators = alg.generator_map()

    # -- token helpers -----------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str, token: Optional[Token] = None) -> ConfigError:
        token = token or self.current
        return ConfigError(f"{message} in {self.text!r}", column=token[2])

    def accept(self, value: str) -> bool:
        kind, text, _ = self.current
        if kind == "op" and text == value:
            self.index += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            raise self.error(f"expected {value!r}")

    def finish(self) -> None:
        if self.current[0] != "end":
            raise self.error(f"unexpected {self.current[1]!r}")

    def number(self) -> Fraction:
        kind, text, _ = self.current
        if kind != "number":
            raise self.error("expected a number")
        self.index += 1
        value = Fraction(int(text))
        if self.accept("/"):
            token = self.current
            denominator = self.number()
            if denominator == 0:
                raise self.error("division by zero", token)
            value = value / denominator
        return value

    def unit(self) -> Element:
        unit = self.alg.unit()
        if unit is None:
            raise self.error(f"{self.alg.name} has no unit for a bare coefficient")
        return unit

    # -- elements ------------------------------------------------------------

    def expression(self) -> Element:
        negative = self.accept("-")
        if not negative:
            self.accept("+")
        total = self.term().scale(-1 if negative else 1)
        while True:
            if self.accept("+"):
                total = total + self.term()
            elif self.accept("-"):
                total = total - self.term()
            else:
                return total

    def term(self) -> Element:
        value = self.factor()
        while self.accept("*"):
            value = self._times(value, self.factor())
        if isinstance(value, Fraction):
            return self.unit().scale(value)
        return value

    def _times(self, left, right):
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left * right
        if isinstance(left, Fraction):
            return right.scale(left)
        if isinstance(right, Fraction):
            return left.scale(right)
        return self.alg.multiply(left, right)

    def factor(self):
        kind, text, _ = self.current
        if kind == "number":
            coeff = self.number()
            if self.current[1] == "*":
                return coeff
            return self.unit().scale(coeff)
        if kind == "state":
            return self.state()
        if kind == "name":
            token = self.current
            self.index += 1
            if text not in self.generators:
                raise self.error(f"unknown generator {text!r}", token)
            return self.power(self.generators[text])
        if self.accept("("):
            inner = self.expression()
            self.expect(")")
            return self.power(inner)
        raise self.error("expected a term")

    def state(self) -> Element:
        token = self.current
        self.index += 1
        if not isinstance(self.alg, BcVertexAlgebra):
            raise self.error(f"{self.alg.name} has no Fock states", token)
        try:
            return self.alg.state(parse_modes(token[1]))
        except KernelError as e:
            raise self.error(e.message, token) from e

    def power(self, base: Element) -> Element:
        if not self.accept("^"):
            return base
        token = self.current
        exponent = self.number()
        if exponent.denominator != 1 or exponent < 1:
            raise self.error("exponents must be positive integers", token)
        return self.alg.power(base, int(exponent))

    # -- operators -----------------------------------------------------------

    def operator_expression(self) -> LinOp:
        negative = self.accept("-")
        if not negative:
            self.accept("+")
        total = self.operator_term()
        if negative:
            total = -total
        while True:
            if self.accept("+"):
                total = total + self.operator_term()
            elif self.accept("-"):
                total = total - self.operator_term()
            else:
                return total

    def operator_term(self) -> LinOp:
        coeff = None
        if self.current[0] == "number":
            coeff = self.number()
            self.expect("*")
        op = self.operator_factor()
        while self.accept("."):
            op = op.compose(self.operator_factor())
        return op.scaled(coeff) if coeff is not None else op

    def operator_factor(self) -> LinOp:
        kind, text, _ = self.current
        token = self.current
        if self.accept("["):
            element = self.expression()
            self.expect("]")
            return left_multiplication(self.alg, element, f"[{element}]")
        if self.accept("("):
            op = self.operator_expression()
            self.expect(")")
            return op
        if kind != "name":
            raise self.error("expected an operator")
        self.index += 1
        if text == "d" and self.accept("/"):
            return self.derivative()
        if text in self.operators:
            return self.operators[text]
        if text in self.generators:
            return left_multiplication(self.alg, self.generators[text], text)
        raise self.error(f"unknown operator {text!r}", token)

    def derivative(self) -> LinOp:
        kind, text, _ = self.current
        token = self.current
        if kind != "name" or not text.startswith("d") or len(text) < 2:
            raise self.error("expected d/dNAME")
        self.index += 1
        name = text[1:]
        alg = self.alg
        if not isinstance(alg, PolynomialSuperalgebra):
            raise self.error(f"{alg.name} has no partial derivatives", token)
        if name in alg.even_names:
            return even_derivative(alg, alg.even_names.index(name), f"d/d{name}")
        if name in alg.odd_names:
            return odd_derivative(alg, alg.odd_names.index(name), f"d/d{name}")
        raise self.error(f"unknown generator {name!r}", token)


def parse_element(alg: Superalgebra, text: str) -> Element:
    """Parse an element expression over ``alg``.

    Raises:
        ConfigError: With the column of the offending token
    """
    if not isinstance(text, str) or not text.strip():
        raise ConfigError("an element expression must be a non-empty string")
    parser = _Parser(alg, text)
    try:
        value = parser.expression()
    except KernelError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"{e.message} in {text!r}") from e
    parser.finish()
    return value


def parse_operator(alg: Superalgebra, text: str, operators: Optional[Mapping[str, LinOp]] = None) -> LinOp:
    """Parse an operator expression over ``alg``; ``operators`` names extra operators."""
    if not isinstance(text, str) or not text.strip():
        raise ConfigError("an operator expression must be a non-empty string")
    parser = _Parser(alg, text, operators)
    try:
        op = parser.operator_expression()
    except KernelError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"{e.message} in {text!r}") from e
    parser.finish()
    op.label = text.strip()
    return op


def parse_scalar(value) -> Fraction:
    """A rational from an int or a string such as "-3/2"."""
    if isinstance(value, bool):
        raise ConfigError(f"{value!r} is not a rational number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ConfigError(f"{value!r} is not a rational number") from e
    raise ConfigError(f"{value!r} is not a rational number (floats are not exact)")


def parse_elements(alg: Superalgebra, texts) -> List[Element]:
    if not isinstance(texts, list):
        raise ConfigError("expected a list of element expressions")
    return [parse_element(alg, text) for text in texts]
