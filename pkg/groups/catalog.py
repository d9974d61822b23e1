"""
Catalog of countable groups with solvable word problem
"""
import json
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from core.exceptions import ParseError
from .parsing import parse_int, split_top_level

FREE_GROUP = 'FreeGroup'
FREE_ABELIAN = 'FreeAbelian'
CYCLIC_FINITE = 'CyclicFinite'
DIRECT_PRODUCT = 'DirectProduct'
FREE_PRODUCT = 'FreeProduct'
VC_GROUP = 'VcGroup'
AB_TORSION = 'AbTorsion'

VARIANTS = (
    FREE_GROUP, FREE_ABELIAN, CYCLIC_FINITE, DIRECT_PRODUCT,
    FREE_PRODUCT, VC_GROUP, AB_TORSION,
)

# 'x' is reserved for the variable of G*<x>
FREE_LETTERS = 'abcdefghijklmnopqrst'

SHORT_NAMES = {
    'free': FREE_GROUP,
    'abelian': FREE_ABELIAN,
    'freeabelian': FREE_ABELIAN,
    'cyclic': CYCLIC_FINITE,
    'vc': VC_GROUP,
    'abtorsion': AB_TORSION,
    'product': DIRECT_PRODUCT,
    'freeproduct': FREE_PRODUCT,
}


@dataclass(frozen=True)
class GroupSpec:
    """A catalog entry; immutable and hashable"""

    variant: str
    params: Tuple[Any, ...] = ()

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ParseError(f"Unknown group variant: {self.variant}")

        if self.variant in (FREE_GROUP, FREE_ABELIAN):
            rank = self._single_int()
            if rank < 1:
                raise ParseError(f"{self.variant} needs rank >= 1")
            if self.variant == FREE_GROUP and rank > len(FREE_LETTERS):
                raise ParseError(
                    f"FreeGroup rank is limited to {len(FREE_LETTERS)}"
                )
        elif self.variant == CYCLIC_FINITE:
            if self._single_int() < 2:
                raise ParseError("CyclicFinite needs order >= 2")
        elif self.variant == AB_TORSION:
            if self._single_int() < 1:
                raise ParseError("AbTorsion needs k >= 1")
        elif self.variant == VC_GROUP:
            if self.params:
                raise ParseError("VcGroup takes no parameters")
        else:
            if len(self.params) < 2:
                raise ParseError(f"{self.variant} needs at least two factors")
            if not all(isinstance(p, GroupSpec) for p in self.params):
                raise ParseError(f"{self.variant} factors must be GroupSpecs")

    def _single_int(self) -> int:
        if len(self.params) != 1 or not isinstance(self.params[0], int):
            raise ParseError(f"{self.variant} takes one integer parameter")
        return self.params[0]

    # Constructors

    @classmethod
    def free(cls, rank: int) -> 'GroupSpec':
        return cls(FREE_GROUP, (rank,))

    @classmethod
    def free_abelian(cls, rank: int) -> 'GroupSpec':
        return cls(FREE_ABELIAN, (rank,))

    @classmethod
    def cyclic(cls, order: int) -> 'GroupSpec':
        return cls(CYCLIC_FINITE, (order,))

    @classmethod
    def vc(cls) -> 'GroupSpec':
        return cls(VC_GROUP, ())

    @classmethod
    def ab_torsion(cls, k: int) -> 'GroupSpec':
        return cls(AB_TORSION, (k,))

    @classmethod
    def direct(cls, *factors: 'GroupSpec') -> 'GroupSpec':
        return cls(DIRECT_PRODUCT, tuple(factors))

    @classmethod
    def free_product(cls, *factors: 'GroupSpec') -> 'GroupSpec':
        return cls(FREE_PRODUCT, tuple(factors))

    # Properties

    @property
    def arithmetic(self):
        from .arithmetic import get_arithmetic
        return get_arithmetic(self)

    @property
    def order(self) -> Optional[int]:
        """Group order, or None when the group is infinite."""
        return self.arithmetic.order

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def is_abelian(self) -> bool:
        if self.variant in (FREE_ABELIAN, CYCLIC_FINITE, AB_TORSION):
            return True
        if self.variant == FREE_GROUP:
            return self.params[0] == 1
        if self.variant == DIRECT_PRODUCT:
            return all(f.is_abelian for f in self.params)
        return False

    @property
    def label(self) -> str:
        """Short CLI token, e.g. free:2 or product(cyclic:2,vc)."""
        if self.variant == FREE_GROUP:
            return f"free:{self.params[0]}"
        if self.variant == FREE_ABELIAN:
            return f"abelian:{self.params[0]}"
        if self.variant == CYCLIC_FINITE:
            return f"cyclic:{self.params[0]}"
        if self.variant == AB_TORSION:
            return f"abtorsion:{self.params[0]}"
        if self.variant == VC_GROUP:
            return 'vc'
        name = 'product' if self.variant == DIRECT_PRODUCT else 'freeproduct'
        return f"{name}({','.join(f.label for f in self.params)})"

    def __str__(self) -> str:
        return self.label

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        if self.variant in (FREE_GROUP, FREE_ABELIAN):
            params = {'rank': self.params[0]}
        elif self.variant == CYCLIC_FINITE:
            params = {'order': self.params[0]}
        elif self.variant == AB_TORSION:
            params = {'k': self.params[0]}
        elif self.variant == VC_GROUP:
            params = {}
        else:
            params = {'factors': [f.to_dict() for f in self.params]}
        return {'variant': self.variant, 'params': params}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GroupSpec':
        if not isinstance(data, dict) or 'variant' not in data:
            raise ParseError("GroupSpec JSON needs a 'variant' key")
        variant = data['variant']
        params = data.get('params') or {}
        if variant in (FREE_GROUP, FREE_ABELIAN):
            return cls(variant, (int(params.get('rank', 0)),))
        if variant == CYCLIC_FINITE:
            return cls(variant, (int(params.get('order', 0)),))
        if variant == AB_TORSION:
            return cls(variant, (int(params.get('k', 0)),))
        if variant == VC_GROUP:
            return cls(variant, ())
        if variant in (DIRECT_PRODUCT, FREE_PRODUCT):
            factors = params.get('factors') or []
            return cls(variant, tuple(cls.from_dict(f) for f in factors))
        raise ParseError(f"Unknown group variant: {variant}")

    @classmethod
    def parse(cls, token: str) -> 'GroupSpec':
        """Parse a short CLI token or a GroupSpec JSON object."""
        token = token.strip()
        if token.startswith('{'):
            try:
                return cls.from_dict(json.loads(token))
            except json.JSONDecodeError as exc:
                raise ParseError(f"Invalid GroupSpec JSON: {exc}")

        if token.endswith(')') and '(' in token:
            name, _, inner = token.partition('(')
            variant = SHORT_NAMES.get(name.strip().lower())
            if variant not in (DIRECT_PRODUCT, FREE_PRODUCT):
                raise ParseError(f"Unknown composite group {name!r}")
            factors = split_top_level(inner[:-1], ',')
            return cls(variant, tuple(cls.parse(f) for f in factors))

        name, _, argument = token.partition(':')
        variant = SHORT_NAMES.get(name.strip().lower())
        if variant is None:
            raise ParseError(f"Unknown group token {token!r}")
        if variant == VC_GROUP:
            if argument:
                raise ParseError("vc takes no parameter")
            return cls.vc()
        if not argument:
            raise ParseError(f"Group token {token!r} needs a parameter")
        return cls(variant, (parse_int(argument, token),))
