"""Ordinals below omega^2 and cardinals that are either finite or alephs indexed by such ordinals."""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass


@functools.total_ordering
@dataclass(frozen=True)
class OrdinalW2:
    """The ordinal ``omega * a + b``."""

    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("ordinal coefficients must be natural numbers")

    def __lt__(self, other: OrdinalW2):
        return (self.a, self.b) < (other.a, other.b)

    @property
    def is_limit(self) -> bool:
        return self.a > 0 and self.b == 0

    @classmethod
    def parse(cls, text: str) -> OrdinalW2:
        s = text.replace(" ", "").replace("ω", "w")
        m = re.fullmatch(r"(?:w(?:\*(\d+))?)?(?:\+?(\d+))?", s)
        if not s or m is None:
            raise ValueError(f"cannot parse ordinal {text!r}")
        has_w = s.startswith("w")
        a = (int(m.group(1)) if m.group(1) else 1) if has_w else 0
        b = int(m.group(2)) if m.group(2) else 0
        return cls(a, b)

    def __str__(self):
        if self.a == 0:
            return str(self.b)
        head = "w" if self.a == 1 else f"w*{self.a}"
        return head if self.b == 0 else f"{head}+{self.b}"


def is_kappa_multiple(gamma: OrdinalW2) -> bool:
    """Whether ``gamma`` splits into aleph_0 many cofinal subsets, i.e. ``gamma = omega * alpha``.

    Below omega^2 that means no finite tail: a successor ordinal has a top point
    that every cofinal subset must contain.
    """
    if gamma == OrdinalW2(0, 0):
        raise ValueError("gamma must be positive")
    return gamma.a >= 1 and gamma.b == 0


@functools.total_ordering
@dataclass(frozen=True)
class Cardinal:
    """Finite cardinal ``n`` (``aleph is None``) or ``aleph_index``."""

    n: int = 0
    aleph: OrdinalW2 | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative cardinal")
        if self.aleph is not None and self.n:
            raise ValueError("an aleph carries no finite part")

    @property
    def finite(self) -> bool:
        return self.aleph is None

    def _key(self):
        return (0, self.n, 0) if self.aleph is None else (1, self.aleph.a, self.aleph.b)

    def __lt__(self, other):
        return self._key() < _card(other)._key()

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cardinal(other)
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other):
        other = _card(other)
        if self.finite and other.finite:
            return Cardinal(self.n + other.n)
        return max(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        other = _card(other)
        if self.finite and other.finite:
            return Cardinal(self.n * other.n)
        if self == 0 or other == 0:
            return Cardinal(0)
        return max(self, other)

    __rmul__ = __mul__

    def __str__(self):
        if self.finite:
            return str(self.n)
        return f"aleph_{self.aleph}"

    def __repr__(self):
        return f"Cardinal({self})"

    @classmethod
    def parse(cls, value) -> Cardinal:
        """Accept ints, ``"5"``, ``"aleph_0"``, ``"aleph_w+1"``, ``"ℵ_ω·2"``."""
        if isinstance(value, Cardinal):
            return value
        if isinstance(value, int):
            return cls(value)
        s = str(value).strip().replace("ℵ", "aleph_").replace("·", "*").replace("ω", "w")
        if s.isdigit():
            return cls(int(s))
        m = re.fullmatch(r"aleph_*\(?([^)]*)\)?", s)
        if m is None:
            raise ValueError(f"cannot parse cardinal {value!r}")
        return aleph(OrdinalW2.parse(m.group(1)))

    def to_json(self):
        return self.n if self.finite else str(self)


def _card(x) -> Cardinal:
    return x if isinstance(x, Cardinal) else Cardinal(x)


def aleph(index: OrdinalW2 | int = 0, b: int | None = None) -> Cardinal:
    """``aleph(0)`` is aleph_0; ``aleph(1, 0)`` is aleph_omega; ``aleph(OrdinalW2(2, 1))`` is aleph_{omega*2+1}."""
    if isinstance(index, OrdinalW2):
        return Cardinal(0, index)
    if b is None:
        return Cardinal(0, OrdinalW2(0, index))
    return Cardinal(0, OrdinalW2(index, b))


ALEPH_0 = aleph(0)


def card_compare(x: Cardinal, y: Cardinal) -> int:
    """-1, 0 or 1."""
    x, y = _card(x), _card(y)
    return (x > y) - (x < y)


def card_sum(values) -> Cardinal:
    total = Cardinal(0)
    for v in values:
        total = total + v
    return total
