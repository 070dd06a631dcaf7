"""Z2^r group elements, characters, subgroups, and their {+1,-1} pairing.

The rank r is a runtime parameter carried by every value (default 3 in the
catalog).  All linear algebra is exact over the two-element field, and every
enumeration is in lexicographic bit order so reports are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import StructuralError


def _checked_bits(bits: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(b) for b in bits)
    if not out:
        raise StructuralError("rank must be at least 1")
    if any(b not in (0, 1) for b in out):
        raise StructuralError("bits must be 0 or 1")
    return out


@dataclass(frozen=True, order=True)
class GroupElement:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", _checked_bits(self.bits))

    @property
    def rank(self) -> int:
        return len(self.bits)

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self.rank != other.rank:
            raise StructuralError("rank mismatch")
        return GroupElement(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


@dataclass(frozen=True, order=True)
class Character:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", _checked_bits(self.bits))

    @property
    def rank(self) -> int:
        return len(self.bits)

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: "Character") -> "Character":
        if self.rank != other.rank:
            raise StructuralError("rank mismatch")
        return Character(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def pair(chi: Character, sigma: GroupElement) -> int:
    """(-1) ** (sum_k chi_k * sigma_k), the value of the character at sigma."""
    if chi.rank != sigma.rank:
        raise StructuralError(
            f"rank mismatch: character has rank {chi.rank}, element rank {sigma.rank}")
    return -1 if sum(j * a for j, a in zip(chi.bits, sigma.bits)) % 2 else 1


def all_elements(rank: int) -> tuple[GroupElement, ...]:
    return tuple(GroupElement(bits) for bits in itertools.product((0, 1), repeat=rank))


def all_characters(rank: int) -> tuple[Character, ...]:
    return tuple(Character(bits) for bits in itertools.product((0, 1), repeat=rank))


def nonzero_characters(rank: int) -> tuple[Character, ...]:
    return tuple(chi for chi in all_characters(rank) if not chi.is_zero)


def _rref(rows: Iterable[tuple[int, ...]], width: int) -> tuple[list[tuple[int, ...]], list[int]]:
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                mat[i] = [a ^ b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    return [tuple(mat[i]) for i in range(rank)], pivots


def _nullspace(rows: Iterable[tuple[int, ...]], width: int) -> list[tuple[int, ...]]:
    rref, pivots = _rref(rows, width)
    basis: list[tuple[int, ...]] = []
    for free_col in (c for c in range(width) if c not in pivots):
        vec = [0] * width
        vec[free_col] = 1
        for row, pivot_col in zip(rref, pivots):
            if row[free_col]:
                vec[pivot_col] = 1
        basis.append(tuple(vec))
    return basis


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of Z2^rank, stored through a canonical echelon basis."""

    rank: int
    basis: tuple[GroupElement, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise StructuralError("rank must be at least 1")
        for b in self.basis:
            if b.rank != self.rank:
                raise StructuralError("basis element rank does not match subgroup rank")
        rref, _ = _rref([b.bits for b in self.basis], self.rank)
        object.__setattr__(self, "basis", tuple(GroupElement(r) for r in rref))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return 1 << len(self.basis)

    def elements(self) -> tuple[GroupElement, ...]:
        zero = GroupElement((0,) * self.rank)
        out = set()
        for mask in itertools.product((0, 1), repeat=len(self.basis)):
            elt = zero
            for take, b in zip(mask, self.basis):
                if take:
                    elt = elt + b
            out.add(elt)
        return tuple(sorted(out))

    def contains(self, elt: GroupElement) -> bool:
        if elt.rank != self.rank:
            raise StructuralError("rank mismatch")
        bits = list(elt.bits)
        for b in self.basis:
            lead = next(i for i, v in enumerate(b.bits) if v)
            if bits[lead]:
                bits = [x ^ y for x, y in zip(bits, b.bits)]
        return not any(bits)

    @classmethod
    def trivial(cls, rank: int) -> "Subgroup":
        return cls(rank, ())

    @classmethod
    def full(cls, rank: int) -> "Subgroup":
        return cls(rank, tuple(GroupElement(tuple(1 if i == j else 0 for j in range(rank)))
                               for i in range(rank)))


def span(elements: Iterable[GroupElement], rank: Optional[int] = None) -> Subgroup:
    """Subgroup generated by the given elements."""
    elements = tuple(elements)
    if rank is None:
        if not elements:
            raise StructuralError("span of an empty set needs an explicit rank")
        rank = elements[0].rank
    return Subgroup(rank, elements)


def perp_basis(gamma: Subgroup) -> tuple[Character, ...]:
    """Echelon basis of the characters vanishing on gamma (quotient coordinates)."""
    return tuple(Character(v) for v in _nullspace([b.bits for b in gamma.basis], gamma.rank))


def perp(gamma: Subgroup) -> tuple[Character, ...]:
    """All characters taking value +1 on every element of gamma, in lex order."""
    base = perp_basis(gamma)
    zero = Character((0,) * gamma.rank)
    out = set()
    for mask in itertools.product((0, 1), repeat=len(base)):
        chi = zero
        for take, b in zip(mask, base):
            if take:
                chi = chi + b
        out.add(chi)
    return tuple(sorted(out))


def annihilator(chars: Iterable[Character], rank: Optional[int] = None) -> Subgroup:
    """Subgroup of elements on which every given character takes value +1."""
    chars = tuple(chars)
    if rank is None:
        if not chars:
            raise StructuralError("annihilator of an empty set needs an explicit rank")
        rank = chars[0].rank
    for chi in chars:
        if chi.rank != rank:
            raise StructuralError("rank mismatch among characters")
    basis = [GroupElement(v) for v in _nullspace([c.bits for c in chars], rank)]
    return Subgroup(rank, tuple(basis))


def coset_image(gamma: Subgroup, sigma: GroupElement) -> tuple[int, ...]:
    """Coordinates of sigma's coset in the quotient by gamma.

    The coordinates come from the echelon basis of the characters vanishing on
    gamma, so equal tuples mean equal cosets and the all-zero tuple is the
    image of gamma itself.
    """
    if sigma.rank != gamma.rank:
        raise StructuralError("rank mismatch")
    return tuple(0 if pair(chi, sigma) == 1 else 1 for chi in perp_basis(gamma))
