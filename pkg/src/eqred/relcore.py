"""Finite equivalence relations, maps between them, and the (i)-(v) property taxonomy.

Elements and classes are dense integer indices.  Two relations with the same
:class:`SizeProfile` are isomorphic, so most of the library works on profiles
and only materialises concrete ground sets when a witness map is needed.
"""

from __future__ import annotations

import enum
import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class ParseError(ValueError):
    """Malformed relation or map spec.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class NotAHomomorphism(ValueError):
    """Some E-equivalent pair is sent to F-inequivalent elements, so the class map is undefined."""

    def __init__(self, x: int, x2: int):
        self.pair = (x, x2)
        super().__init__(f"elements {x} and {x2} are E-equivalent but their images are not F-equivalent")


@dataclass(frozen=True)
class FiniteEqRel:
    ground_size: int
    class_of: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "class_of", tuple(self.class_of))
        if self.ground_size < 0 or len(self.class_of) != self.ground_size:
            raise ValueError("class_of must assign a class to each of the ground_size elements")
        seen = set(self.class_of)
        if seen != set(range(len(seen))):
            raise ValueError(f"class indices must form a contiguous range 0..k-1, got {sorted(seen)}")

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> FiniteEqRel:
        """Build from an explicit partition of ``0..n-1``; class ``i`` is the i-th block."""
        blocks = [list(b) for b in classes]
        n = sum(len(b) for b in blocks)
        class_of = [-1] * n
        for i, block in enumerate(blocks):
            if not block:
                raise ValueError("empty class")
            for x in block:
                if not 0 <= x < n or class_of[x] != -1:
                    raise ValueError(f"classes do not partition 0..{n - 1}")
                class_of[x] = i
        return cls(n, tuple(class_of))

    @classmethod
    def from_labels(cls, labels: Sequence) -> FiniteEqRel:
        """Relation whose classes are the level sets of ``labels``, numbered by first occurrence."""
        index: dict = {}
        return cls(len(labels), tuple(index.setdefault(lab, len(index)) for lab in labels))

    @property
    def num_classes(self) -> int:
        return max(self.class_of, default=-1) + 1

    def classes(self) -> tuple[tuple[int, ...], ...]:
        members: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            members[c].append(x)
        return tuple(tuple(m) for m in members)

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.num_classes
        for c in self.class_of:
            sizes[c] += 1
        return sizes

    def equiv(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def profile(self) -> SizeProfile:
        return canonical_profile(self)


@dataclass(frozen=True)
class SizeProfile:
    """Multiset of class sizes, stored as sorted ``(size, count)`` pairs with positive entries."""

    counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: Counter = Counter()
        for size, count in self.counts:
            if size < 1 or count < 0:
                raise ValueError(f"bad profile entry ({size}, {count})")
            merged[size] += count
        object.__setattr__(self, "counts", tuple(sorted((s, c) for s, c in merged.items() if c > 0)))

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> SizeProfile:
        return cls(tuple(Counter(sizes).items()))

    @classmethod
    def from_vector(cls, vector: Sequence[int]) -> SizeProfile:
        """``<n1,...,nm>``: n_k classes of size k."""
        if any(n < 0 for n in vector):
            raise ValueError("class counts must be non-negative")
        return cls(tuple((k + 1, n) for k, n in enumerate(vector)))

    @classmethod
    def parse(cls, text: str) -> SizeProfile:
        """Parse either ``<n1,...,nm>`` or ``{"classes": [s1, ...]}``."""
        stripped = text.strip()
        if stripped.startswith("{"):
            try:
                data = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from None
            return cls.from_json(data)
        return cls.from_vector(_parse_vector(text))

    @classmethod
    def from_json(cls, data: dict) -> SizeProfile:
        if not isinstance(data, dict) or "classes" not in data:
            raise ParseError('expected an object with a "classes" list')
        sizes = data["classes"]
        if not isinstance(sizes, list) or not all(isinstance(s, int) and s >= 1 for s in sizes):
            raise ParseError('"classes" must be a list of positive integers')
        return cls.from_sizes(sizes)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def sizes(self) -> list[int]:
        """Class sizes in nondecreasing order, with multiplicity."""
        return [s for s, c in self.counts for _ in range(c)]

    @property
    def num_classes(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def ground_size(self) -> int:
        return sum(s * c for s, c in self.counts)

    @property
    def max_size(self) -> int:
        return self.counts[-1][0] if self.counts else 0

    def to_vector(self) -> list[int]:
        d = self.as_dict()
        return [d.get(k, 0) for k in range(1, self.max_size + 1)]

    def to_spec(self) -> str:
        return "<" + ",".join(map(str, self.to_vector())) + ">"

    def to_json(self) -> dict:
        return {"classes": self.sizes()}

    def expand(self) -> FiniteEqRel:
        """Deterministic realisation: classes in nondecreasing size, elements numbered consecutively."""
        class_of: list[int] = []
        for i, size in enumerate(self.sizes()):
            class_of.extend([i] * size)
        return FiniteEqRel(len(class_of), tuple(class_of))

    def __str__(self):
        return self.to_spec()


_TOKEN = re.compile(r"\s*(\d+|[<>,]|\S)")


def _parse_vector(text: str) -> list[int]:
    tokens = [(m.group(1), m.start(1)) for m in _TOKEN.finditer(text)]
    if text.strip() and not tokens:
        raise ParseError("empty relation spec", text, 0)
    if not tokens or tokens[0][0] != "<":
        pos = tokens[0][1] if tokens else 0
        raise ParseError("expected '<'", text, pos)
    values: list[int] = []
    expect_number = True
    for i, (tok, pos) in enumerate(tokens[1:], start=1):
        if tok == ">":
            if i != len(tokens) - 1:
                raise ParseError(f"unexpected token {tokens[i + 1][0]!r}", text, tokens[i + 1][1])
            if expect_number and values:
                raise ParseError("expected a number before '>'", text, pos)
            return values
        if expect_number:
            if not tok.isdigit():
                raise ParseError(f"expected a number, got {tok!r}", text, pos)
            values.append(int(tok))
            expect_number = False
        else:
            if tok != ",":
                raise ParseError(f"expected ',' or '>', got {tok!r}", text, pos)
            expect_number = True
    raise ParseError("missing closing '>'", text, len(text))


def canonical_profile(rel: FiniteEqRel) -> SizeProfile:
    return SizeProfile.from_sizes(rel.class_sizes())


def profile_counts(profile: SizeProfile, kappa: int) -> tuple[int, int, int]:
    """Return ``(n_=kappa, n_<=kappa, n_>=kappa)`` for a finite cardinal ``kappa >= 1``."""
    if kappa < 1:
        raise ValueError("kappa must be at least 1")
    eq = leq = geq = 0
    for size, count in profile.counts:
        if size == kappa:
            eq += count
        if size <= kappa:
            leq += count
        if size >= kappa:
            geq += count
    return eq, leq, geq


@dataclass(frozen=True)
class MapWitness:
    domain_size: int
    target: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "target", tuple(self.target))
        if len(self.target) != self.domain_size:
            raise ValueError("target must list one image per domain element")

    @classmethod
    def parse(cls, text: str) -> MapWitness:
        """Parse ``"0,2,1"`` or a JSON list ``[0, 2, 1]``."""
        stripped = text.strip().strip("[]")
        if not stripped:
            return cls(0, ())
        images = []
        pos = text.find(stripped)
        for part in stripped.split(","):
            token = part.strip()
            if not token.isdigit():
                raise ParseError(f"expected an element index, got {token!r}", text, pos + part.find(token))
            images.append(int(token))
            pos += len(part) + 1
        return cls(len(images), tuple(images))

    def table(self) -> list[list[int]]:
        return [[x, y] for x, y in enumerate(self.target)]


@dataclass(frozen=True)
class PropertyFlags:
    inj: bool
    surj: bool
    class_inj: bool
    class_surj: bool
    range_invariant: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool, bool]:
        return (self.inj, self.surj, self.class_inj, self.class_surj, self.range_invariant)

    def as_bits(self) -> str:
        return "".join("1" if b else "0" for b in self.as_tuple())

    def consistent(self) -> bool:
        """phi is onto iff the class map is onto and the range is F-invariant."""
        return self.surj == (self.class_surj and self.range_invariant)


_FLAG_NAMES = ("inj", "surj", "class_inj", "class_surj", "range_invariant")


class ReductionKind(enum.Enum):
    REDUCTION = ("reduction", "≤", frozenset({"class_inj"}))
    EMBEDDING = ("embedding", "⊑", frozenset({"inj", "class_inj"}))
    SURJECTIVE_REDUCTION = ("surjective-reduction", "≼", frozenset({"surj", "class_inj", "class_surj", "range_invariant"}))
    ISOMORPHISM = ("isomorphism", "≅", frozenset(_FLAG_NAMES))
    INVARIANT_REDUCTION = ("inv-reduction", "≤ⁱ", frozenset({"class_inj", "range_invariant"}))
    FULL_REDUCTION = ("full-reduction", "≤ᶠ", frozenset({"class_inj", "class_surj"}))
    INVARIANT_EMBEDDING = ("inv-embedding", "⊑ⁱ", frozenset({"inj", "class_inj", "range_invariant"}))
    FULL_EMBEDDING = ("full-embedding", "⊑ᶠ", frozenset({"inj", "class_inj", "class_surj"}))

    def __init__(self, slug: str, symbol: str, required: frozenset):
        self.slug = slug
        self.symbol = symbol
        self.required = required

    @classmethod
    def parse(cls, name: str) -> ReductionKind:
        key = name.strip().lower().replace("_", "-").replace(" ", "-")
        key = _KIND_ALIASES.get(key, key)
        for kind in cls:
            if kind.slug == key or kind.symbol == name.strip():
                return kind
        raise ValueError(f"unknown reduction kind {name!r}; expected one of {', '.join(k.slug for k in cls)}")

    def __str__(self):
        return self.slug


_KIND_ALIASES = {
    "surj-reduction": "surjective-reduction",
    "surjective": "surjective-reduction",
    "iso": "isomorphism",
    "invariant-reduction": "inv-reduction",
    "invariant-embedding": "inv-embedding",
    "full": "full-reduction",
    "red": "reduction",
    "emb": "embedding",
}


def classify_map(E: FiniteEqRel, F: FiniteEqRel, phi: MapWitness) -> PropertyFlags:
    """Compute flags (i)-(v) of ``phi`` viewed as a homomorphism from E to F."""
    if phi.domain_size != E.ground_size:
        raise ValueError(f"map has {phi.domain_size} inputs but E has {E.ground_size} elements")
    for y in phi.target:
        if not 0 <= y < F.ground_size:
            raise ValueError(f"image {y} outside F's ground set of size {F.ground_size}")

    # induced class map; a clash means phi is not a homomorphism
    induced: list[int | None] = [None] * E.num_classes
    first: list[int] = [0] * E.num_classes
    for x, c in enumerate(E.class_of):
        d = F.class_of[phi.target[x]]
        if induced[c] is None:
            induced[c] = d
            first[c] = x
        elif induced[c] != d:
            raise NotAHomomorphism(first[c], x)

    image = set(phi.target)
    class_image = set(induced)
    inj = len(image) == E.ground_size
    surj = len(image) == F.ground_size
    class_inj = len(class_image) == E.num_classes
    class_surj = len(class_image) == F.num_classes
    hit_sizes = Counter(F.class_of[y] for y in image)
    f_sizes = F.class_sizes()
    range_invariant = all(hit_sizes[d] == f_sizes[d] for d in hit_sizes)
    return PropertyFlags(inj, surj, class_inj, class_surj, range_invariant)


def kind_satisfied(kind: ReductionKind, flags: PropertyFlags) -> bool:
    return all(getattr(flags, name) for name in kind.required)
