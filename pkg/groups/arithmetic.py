"""
Normal-form arithmetic for every catalog variant

Words are plain hashable tuples; Element wraps them together with the
GroupSpec. Each implementation guarantees a unique normal form, so tuple
equality is group equality.
"""
import itertools
import re
from functools import lru_cache
from typing import Any, Iterable, Iterator, List, Optional, Tuple

from core.exceptions import ParseError
from .catalog import (
    AB_TORSION, CYCLIC_FINITE, DIRECT_PRODUCT, FREE_ABELIAN, FREE_GROUP,
    FREE_LETTERS, FREE_PRODUCT, VC_GROUP, GroupSpec,
)
from .parsing import parse_int, split_top_level, strip_brackets

Word = Any

FREE_TOKEN = re.compile(r'^([a-t])(?:\^?(-?\d+))?$')
VC_TOKEN = re.compile(r'^([ab])(?:\^(-?\d+))?$')


def integer_rank(value: int) -> int:
    """Order 0, 1, -1, 2, -2, ... used for lexicographic tie-breaks."""
    return 2 * value - 1 if value > 0 else -2 * value


class GroupArithmetic:
    """Interface shared by the catalog implementations"""

    order: Optional[int] = None

    def identity(self) -> Word:
        raise NotImplementedError

    def multiply(self, u: Word, v: Word) -> Word:
        raise NotImplementedError

    def inverse(self, u: Word) -> Word:
        raise NotImplementedError

    def normalize(self, raw: Any) -> Word:
        raise NotImplementedError

    def sort_key(self, u: Word) -> tuple:
        raise NotImplementedError

    def format(self, u: Word) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Word:
        raise NotImplementedError

    def generators(self) -> List[Word]:
        """Standard symmetric generating set, in canonical order."""
        raise NotImplementedError

    def elements(self) -> Iterator[Word]:
        raise ValueError("Only finite groups can be listed")

    def is_identity(self, u: Word) -> bool:
        return u == self.identity()

    def power(self, u: Word, n: int) -> Word:
        if n < 0:
            return self.power(self.inverse(u), -n)
        result = self.identity()
        base = u
        while n:
            if n & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            n >>= 1
        return result


class FreeArithmetic(GroupArithmetic):
    """Reduced words; letter i is the integer i, its inverse is -i"""

    def __init__(self, rank: int):
        self.rank = rank

    def identity(self) -> Word:
        return ()

    def multiply(self, u: Word, v: Word) -> Word:
        k = 0
        limit = min(len(u), len(v))
        while k < limit and u[len(u) - 1 - k] == -v[k]:
            k += 1
        return u[:len(u) - k] + v[k:]

    def inverse(self, u: Word) -> Word:
        return tuple(-letter for letter in reversed(u))

    def normalize(self, raw: Iterable[int]) -> Word:
        stack: List[int] = []
        for letter in raw:
            if not isinstance(letter, int) or letter == 0 \
                    or abs(letter) > self.rank:
                raise ParseError(f"Invalid free letter {letter!r}")
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        return tuple(stack)

    def sort_key(self, u: Word) -> tuple:
        return tuple(2 * (abs(l) - 1) + (0 if l > 0 else 1) for l in u)

    def format(self, u: Word) -> str:
        if not u:
            return '1'
        parts = []
        for letter, run in itertools.groupby(u):
            exponent = len(list(run)) * (1 if letter > 0 else -1)
            parts.append(f"{FREE_LETTERS[abs(letter) - 1]}{exponent}")
        return ' '.join(parts)

    def parse(self, text: str) -> Word:
        letters: List[int] = []
        for token in text.split():
            if token == '1':
                continue
            match = FREE_TOKEN.match(token)
            if not match:
                raise ParseError(f"Invalid free-group token {token!r}")
            index = FREE_LETTERS.index(match.group(1)) + 1
            if index > self.rank:
                raise ParseError(
                    f"Letter {match.group(1)!r} exceeds rank {self.rank}"
                )
            exponent = int(match.group(2)) if match.group(2) else 1
            letter = index if exponent > 0 else -index
            letters.extend([letter] * abs(exponent))
        return self.normalize(letters)

    def generators(self) -> List[Word]:
        result = []
        for i in range(1, self.rank + 1):
            result.extend([(i,), (-i,)])
        return result


class AbelianArithmetic(GroupArithmetic):
    """Exponent vectors; modulus 0 marks an infinite cyclic coordinate"""

    def __init__(self, moduli: Tuple[int, ...]):
        self.moduli = moduli
        if all(m > 0 for m in moduli):
            order = 1
            for m in moduli:
                order *= m
            self.order = order

    def _reduce(self, values: Iterable[int]) -> Word:
        return tuple(
            v % m if m else v for v, m in zip(values, self.moduli)
        )

    def identity(self) -> Word:
        return (0,) * len(self.moduli)

    def multiply(self, u: Word, v: Word) -> Word:
        return self._reduce(a + b for a, b in zip(u, v))

    def inverse(self, u: Word) -> Word:
        return self._reduce(-a for a in u)

    def normalize(self, raw: Iterable[int]) -> Word:
        values = tuple(raw)
        if len(values) != len(self.moduli) or \
                not all(isinstance(v, int) for v in values):
            raise ParseError(
                f"Expected {len(self.moduli)} integer coordinates, "
                f"got {values!r}"
            )
        return self._reduce(values)

    def sort_key(self, u: Word) -> tuple:
        return tuple(
            v if m else integer_rank(v) for v, m in zip(u, self.moduli)
        )

    def format(self, u: Word) -> str:
        return '(' + ','.join(str(v) for v in u) + ')'

    def parse(self, text: str) -> Word:
        text = text.strip()
        if text == '1':
            return self.identity()
        if not text.startswith('('):
            if len(self.moduli) != 1:
                raise ParseError(f"Expected a vector token, got {text!r}")
            return self.normalize((parse_int(text, 'abelian token'),))
        inner = strip_brackets(text, '(')
        values = [parse_int(v.strip(), text) for v in inner.split(',')]
        return self.normalize(values)

    def generators(self) -> List[Word]:
        result = []
        for i, m in enumerate(self.moduli):
            unit = [0] * len(self.moduli)
            unit[i] = 1
            positive = self._reduce(unit)
            negative = self.inverse(positive)
            result.append(positive)
            if negative != positive:
                result.append(negative)
        return result

    def elements(self) -> Iterator[Word]:
        if self.order is None:
            raise ValueError("Only finite groups can be listed")
        return iter(itertools.product(*(range(m) for m in self.moduli)))


class VcArithmetic(GroupArithmetic):
    """<a, b | b^4 = 1, b^-1 a b = a^-1>; words are (alpha, beta)"""

    def identity(self) -> Word:
        return (0, 0)

    def multiply(self, u: Word, v: Word) -> Word:
        alpha, beta = u
        gamma, delta = v
        sign = -1 if beta % 2 else 1
        return (alpha + sign * gamma, (beta + delta) % 4)

    def inverse(self, u: Word) -> Word:
        alpha, beta = u
        sign = -1 if beta % 2 else 1
        return (-sign * alpha, (-beta) % 4)

    def normalize(self, raw: Any) -> Word:
        try:
            alpha, beta = raw
        except (TypeError, ValueError):
            raise ParseError(f"VcGroup words are (alpha, beta), got {raw!r}")
        if not isinstance(alpha, int) or not isinstance(beta, int):
            raise ParseError(f"VcGroup exponents must be integers: {raw!r}")
        return (alpha, beta % 4)

    def sort_key(self, u: Word) -> tuple:
        return (integer_rank(u[0]), u[1])

    def format(self, u: Word) -> str:
        alpha, beta = u
        parts = []
        if alpha:
            parts.append('a' if alpha == 1 else f"a^{alpha}")
        if beta:
            parts.append('b' if beta == 1 else f"b^{beta}")
        return ' '.join(parts) or '1'

    def parse(self, text: str) -> Word:
        result = self.identity()
        for token in text.split():
            if token == '1':
                continue
            match = VC_TOKEN.match(token)
            if not match:
                raise ParseError(f"Invalid VcGroup token {token!r}")
            exponent = int(match.group(2)) if match.group(2) else 1
            factor = (exponent, 0) if match.group(1) == 'a' \
                else (0, exponent % 4)
            result = self.multiply(result, factor)
        return result

    def generators(self) -> List[Word]:
        return [(1, 0), (-1, 0), (0, 1), (0, 3)]


class DirectProductArithmetic(GroupArithmetic):
    """Coordinatewise arithmetic over the factor implementations"""

    def __init__(self, factors: List[GroupArithmetic]):
        self.factors = factors
        if all(f.order is not None for f in factors):
            order = 1
            for f in factors:
                order *= f.order
            self.order = order

    def identity(self) -> Word:
        return tuple(f.identity() for f in self.factors)

    def multiply(self, u: Word, v: Word) -> Word:
        return tuple(
            f.multiply(a, b) for f, a, b in zip(self.factors, u, v)
        )

    def inverse(self, u: Word) -> Word:
        return tuple(f.inverse(a) for f, a in zip(self.factors, u))

    def normalize(self, raw: Any) -> Word:
        parts = tuple(raw)
        if len(parts) != len(self.factors):
            raise ParseError(
                f"Expected {len(self.factors)} coordinates, got {len(parts)}"
            )
        return tuple(f.normalize(p) for f, p in zip(self.factors, parts))

    def sort_key(self, u: Word) -> tuple:
        return tuple(f.sort_key(a) for f, a in zip(self.factors, u))

    def format(self, u: Word) -> str:
        return '[' + '; '.join(
            f.format(a) for f, a in zip(self.factors, u)
        ) + ']'

    def parse(self, text: str) -> Word:
        text = text.strip()
        if text == '1':
            return self.identity()
        pieces = split_top_level(strip_brackets(text, '['), ';')
        if len(pieces) != len(self.factors):
            raise ParseError(
                f"Expected {len(self.factors)} coordinates in {text!r}"
            )
        return tuple(f.parse(p) for f, p in zip(self.factors, pieces))

    def generators(self) -> List[Word]:
        result = []
        for i, factor in enumerate(self.factors):
            for g in factor.generators():
                word = list(self.identity())
                word[i] = g
                result.append(tuple(word))
        return result

    def elements(self) -> Iterator[Word]:
        if self.order is None:
            raise ValueError("Only finite groups can be listed")
        return iter(itertools.product(
            *(list(f.elements()) for f in self.factors)
        ))


class FreeProductArithmetic(GroupArithmetic):
    """Alternating syllables (factor index, non-trivial factor word)"""

    def __init__(self, factors: List[GroupArithmetic]):
        self.factors = factors

    def identity(self) -> Word:
        return ()

    def _push(self, stack: List[Tuple[int, Word]], index: int, word: Word):
        factor = self.factors[index]
        if factor.is_identity(word):
            return
        if stack and stack[-1][0] == index:
            merged = factor.multiply(stack.pop()[1], word)
            if not factor.is_identity(merged):
                stack.append((index, merged))
        else:
            stack.append((index, word))

    def multiply(self, u: Word, v: Word) -> Word:
        stack = list(u)
        for index, word in v:
            self._push(stack, index, word)
        return tuple(stack)

    def inverse(self, u: Word) -> Word:
        return tuple(
            (index, self.factors[index].inverse(word))
            for index, word in reversed(u)
        )

    def normalize(self, raw: Iterable[Tuple[int, Any]]) -> Word:
        stack: List[Tuple[int, Word]] = []
        for item in raw:
            try:
                index, word = item
            except (TypeError, ValueError):
                raise ParseError(f"Free-product syllable expected: {item!r}")
            if not isinstance(index, int) or \
                    not 0 <= index < len(self.factors):
                raise ParseError(f"Invalid factor index {index!r}")
            self._push(stack, index, self.factors[index].normalize(word))
        return tuple(stack)

    def sort_key(self, u: Word) -> tuple:
        return tuple(
            (index, self.factors[index].sort_key(word)) for index, word in u
        )

    def format(self, u: Word) -> str:
        if not u:
            return '1'
        return '<' + '|'.join(
            f"{index}:{self.factors[index].format(word)}"
            for index, word in u
        ) + '>'

    def parse(self, text: str) -> Word:
        text = text.strip()
        if text == '1':
            return self.identity()
        syllables = []
        for piece in split_top_level(strip_brackets(text, '<'), '|'):
            index, separator, token = piece.partition(':')
            if not separator:
                raise ParseError(f"Syllable {piece!r} needs 'index:token'")
            position = parse_int(index.strip(), text)
            if not 0 <= position < len(self.factors):
                raise ParseError(f"Invalid factor index in {piece!r}")
            syllables.append((position, self.factors[position].parse(token)))
        return self.normalize(syllables)

    def generators(self) -> List[Word]:
        return [
            ((i, g),)
            for i, factor in enumerate(self.factors)
            for g in factor.generators()
        ]


@lru_cache(maxsize=None)
def get_arithmetic(spec: GroupSpec) -> GroupArithmetic:
    if spec.variant == FREE_GROUP:
        return FreeArithmetic(spec.params[0])
    if spec.variant == FREE_ABELIAN:
        return AbelianArithmetic((0,) * spec.params[0])
    if spec.variant == CYCLIC_FINITE:
        return AbelianArithmetic((spec.params[0],))
    if spec.variant == AB_TORSION:
        return AbelianArithmetic((4,) + (2,) * spec.params[0])
    if spec.variant == VC_GROUP:
        return VcArithmetic()
    factors = [get_arithmetic(f) for f in spec.params]
    if spec.variant == DIRECT_PRODUCT:
        return DirectProductArithmetic(factors)
    if spec.variant == FREE_PRODUCT:
        return FreeProductArithmetic(factors)
    raise ParseError(f"No arithmetic for {spec.variant}")
