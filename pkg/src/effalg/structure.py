"""Sharpness, atoms, isotropic indices, and domination properties.

An element is *sharp* when the only common lower bound it shares with its
orthosupplement is zero (the usual meet condition, phrased so it also works
when the meet does not exist), and *meager* when its only sharp lower bound
is zero.  The isotropic index of a nonzero element is the largest number of
times it can be summed with itself.  The sharp elements carry an induced algebra of their own,
extracted here with an index map back to the parent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import EffectAlgebra, make_algebra
from .errors import ZeroElement
from .order import OrderStructure, derive_order, sharp_mask


def _mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        out.add((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return frozenset(out)


@dataclass(frozen=True)
class StructureProfile:
    """Atoms, sharp/meager split, indices, and the domination flags."""

    atoms: frozenset[int]
    sharp: frozenset[int]
    meager: frozenset[int]
    isotropic: tuple[Optional[int], ...]
    atomic: bool
    archimedean: bool
    sharply_dominating: bool
    s_dominating: bool


def _isotropic_index(E: EffectAlgebra, x: int) -> int:
    """Largest k with the k-fold sum of x defined; x must be nonzero.

    Finite effect algebras cannot sum a nonzero element with itself
    unboundedly (the induced order would gain an infinite strictly
    increasing chain), so the scan terminates.
    """
    k = 1
    acc = x
    while True:
        nxt = E.table[acc][x]
        if nxt is None:
            return k
        acc = nxt
        k += 1
        if k > E.size:
            raise RuntimeError(
                f"isotropic index of {x} exceeds the element count; "
                "the table is not a valid effect algebra"
            )


@lru_cache(maxsize=None)
def structure_profile(E: EffectAlgebra) -> StructureProfile:
    os = derive_order(E)
    n = E.size
    zero_bit = 1 << E.zero

    atoms = frozenset(
        x for x in range(n) if x != E.zero and os.down[x] == zero_bit | (1 << x)
    )
    sharp = _mask_to_set(sharp_mask(E, os))
    smask = sharp_mask(E, os)
    meager = frozenset(
        x for x in range(n) if os.down[x] & smask == zero_bit
    )

    iso: list[Optional[int]] = [None] * n
    iso[E.zero] = 0
    for x in range(n):
        if x != E.zero:
            iso[x] = _isotropic_index(E, x)

    # Atomic: every nonzero element sits above an atom.
    atomic = all(
        any(os.down[x] >> a & 1 for a in atoms)
        for x in range(n)
        if x != E.zero
    )
    # Archimedean here is automatic: indices are finite by finiteness of
    # the carrier, so the flag records that no index failed to terminate.
    archimedean = True

    dominating = all(
        _sharp_cover(E, os, sharp, x) is not None for x in range(n)
    )
    s_dom = dominating and all(
        os.meet[x][p] is not None for x in range(n) for p in sharp
    )
    return StructureProfile(
        atoms, sharp, meager, tuple(iso), atomic, archimedean, dominating, s_dom
    )


def _sharp_cover(
    E: EffectAlgebra, os: OrderStructure, sharp: frozenset[int], x: int
) -> Optional[int]:
    """Least sharp element above x, if one exists."""
    candidates = [s for s in sharp if os.up[x] >> s & 1]
    for s in candidates:
        if all(os.up[s] >> t & 1 for t in candidates):
            return s
    return None


def _sharp_kernel(
    E: EffectAlgebra, os: OrderStructure, sharp: frozenset[int], x: int
) -> Optional[int]:
    """Greatest sharp element below x, if one exists."""
    candidates = [s for s in sharp if os.down[x] >> s & 1]
    for s in candidates:
        if all(os.down[s] >> t & 1 for t in candidates):
            return s
    return None


def atoms(E: EffectAlgebra) -> frozenset[int]:
    return structure_profile(E).atoms


def sharp_elements(E: EffectAlgebra) -> frozenset[int]:
    return structure_profile(E).sharp


def meager_elements(E: EffectAlgebra) -> frozenset[int]:
    return structure_profile(E).meager


def is_sharp(E: EffectAlgebra, x: int) -> bool:
    return x in structure_profile(E).sharp


def isotropic_index(E: EffectAlgebra, x: int) -> int:
    """Largest k with the k-fold sum of x defined; zero is rejected."""
    if x == E.zero:
        raise ZeroElement("the zero element has no isotropic index")
    k = structure_profile(E).isotropic[x]
    assert k is not None
    return k


@dataclass(frozen=True)
class SharpBounds:
    """Least sharp element above (cover) and greatest below (kernel)."""

    cover: Optional[int]
    kernel: Optional[int]


def sharp_bounds(E: EffectAlgebra, x: int) -> SharpBounds:
    os = derive_order(E)
    sharp = structure_profile(E).sharp
    return SharpBounds(
        _sharp_cover(E, os, sharp, x), _sharp_kernel(E, os, sharp, x)
    )


def is_sharply_dominating(E: EffectAlgebra) -> bool:
    """Every element has a least sharp element above it.

    In lattice-ordered algebras the mirror condition (greatest sharp below)
    holds exactly when this one does, via orthosupplements; the cross-check
    guards the implementation.
    """
    profile = structure_profile(E)
    if derive_order(E).is_lattice:
        os = derive_order(E)
        covers_ok = all(
            _sharp_cover(E, os, profile.sharp, x) is not None
            for x in range(E.size)
        )
        kernels_ok = all(
            _sharp_kernel(E, os, profile.sharp, x) is not None
            for x in range(E.size)
        )
        if covers_ok != kernels_ok:
            raise RuntimeError(
                "cover/kernel existence disagrees in a lattice algebra"
            )
    return profile.sharply_dominating


def is_s_dominating(E: EffectAlgebra) -> bool:
    """Sharply dominating, and meets with sharp elements always exist.

    Strictly stronger than :func:`is_sharply_dominating`: beyond every
    element having a least sharp element above it, the meet of any element
    with any sharp element must exist, even when the algebra as a whole is
    not lattice-ordered.
    """
    return structure_profile(E).s_dominating


def is_atomic(E: EffectAlgebra) -> bool:
    return structure_profile(E).atomic


def is_archimedean(E: EffectAlgebra) -> bool:
    return structure_profile(E).archimedean


@dataclass(frozen=True)
class SharpSubalgebra:
    """The algebra of sharp elements with index maps to and from the parent.

    ``to_parent[i]`` is the parent index of sharp element ``i``;
    ``from_parent[x]`` is the sharp index of parent element ``x`` or
    ``None`` when ``x`` is not sharp.
    """

    algebra: EffectAlgebra
    to_parent: tuple[int, ...]
    from_parent: tuple[Optional[int], ...]


@lru_cache(maxsize=None)
def extract_sharp(E: EffectAlgebra) -> SharpSubalgebra:
    """Build the induced algebra on the sharp elements.

    A sum is kept exactly when both operands and the result are sharp; the
    result is revalidated from scratch, so a sharp set that failed to be
    closed under the operations would be caught loudly.
    """
    sharp = sorted(structure_profile(E).sharp)
    pos = {x: i for i, x in enumerate(sharp)}
    sums: dict[tuple[int, int], int] = {}
    for i, x in enumerate(sharp):
        for j, y in enumerate(sharp[i:], start=i):
            z = E.table[x][y]
            if z is not None and z in pos:
                sums[(i, j)] = pos[z]
    names = tuple(E.names[x] for x in sharp)
    algebra = make_algebra(names, pos[E.zero], pos[E.one], sums)
    from_parent: list[Optional[int]] = [None] * E.size
    for x, i in pos.items():
        from_parent[x] = i
    return SharpSubalgebra(algebra, tuple(sharp), tuple(from_parent))
