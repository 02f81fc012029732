"""Finite effect algebras as validated partial-sum tables.

Elements are dense integer indices ``0..n-1``; the partial binary sum is
stored as a dense matrix with ``None`` marking undefined pairs.  Partiality
is the central semantic feature of these structures, so an absent value is
always represented by ``None`` and never by a sentinel element.

Construction closes a declared table under commutativity and the implied
``zero + x = x`` rows, then checks the four defining axioms exhaustively:

* Ei   commutativity: a+b defined implies b+a defined and equal,
* Eii  associativity: either grouping of a+b+c defined implies both are
  defined and equal,
* Eiii every element has exactly one orthosupplement summing to the unit,
* Eiv  the unit admits no nonzero summand.

Only tables with an empty violation report become :class:`EffectAlgebra`
values, so every downstream module may rely on the axioms without
re-checking them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, TYPE_CHECKING

from .errors import AxiomViolation, DuplicateSum, UnknownName

if TYPE_CHECKING:  # pragma: no cover
    from .eaf import EafDocument

AXIOM_COMMUTATIVITY = "Ei"
AXIOM_ASSOCIATIVITY = "Eii"
AXIOM_SUPPLEMENT = "Eiii"
AXIOM_ZERO_ONE = "Eiv"
AXIOM_CLOSURE = "closure"


@dataclass(frozen=True)
class Violation:
    """One axiom violation with up to three witness elements."""

    axiom: str
    witnesses: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_axiom(self, axiom: str) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.axiom == axiom)


@dataclass
class SumTable:
    """A partial sum table prior to validation.

    ``sums`` maps index pairs to result indices.  Entries may be stored in
    either orientation; the rows ``(zero, x) -> x`` are implied and never
    required in the input.
    """

    size: int
    zero: int
    one: int
    sums: dict[tuple[int, int], int]


def close_table(table: SumTable) -> SumTable:
    """Close a declared table under commutativity and the implied zero rows.

    Raises :class:`DuplicateSum` when two declarations (or a declaration and
    an implied zero row) disagree about the same pair.
    """
    n = table.size
    for (x, y), z in table.sums.items():
        if not (0 <= x < n and 0 <= y < n and 0 <= z < n):
            raise ValueError(f"sum entry ({x},{y})->{z} out of range for size {n}")
    closed: dict[tuple[int, int], int] = {}

    def put(x: int, y: int, z: int) -> None:
        for key in ((x, y), (y, x)):
            prior = closed.get(key)
            if prior is not None and prior != z:
                raise DuplicateSum(
                    f"pair ({key[0]},{key[1]}) declared as both {prior} and {z}"
                )
            closed[key] = z

    for x in range(n):
        put(table.zero, x, x)
    for (x, y), z in sorted(table.sums.items()):
        put(x, y, z)
    return SumTable(n, table.zero, table.one, closed)


def verify_axioms(table: SumTable) -> AxiomReport:
    """Exhaustively check the effect-algebra axioms on a sum table.

    The table may be unclosed; lookups treat ``(x, y)`` and ``(y, x)`` as
    one pair and take the implied zero rows as present.  An empty report
    means the closed table is an effect algebra.
    """
    n, zero, one = table.size, table.zero, table.one
    out: list[Violation] = []

    if zero == one:
        out.append(Violation(AXIOM_CLOSURE, (zero,), "zero and one coincide"))

    # Effective symmetric lookup matrix, implied zero rows included.
    eff: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        eff[zero][x] = x
        eff[x][zero] = x
    seen_pairs: set[tuple[int, int]] = set()
    for (x, y), z in sorted(table.sums.items()):
        if zero in (x, y):
            implied = y if x == zero else x
            if z != implied:
                out.append(
                    Violation(
                        AXIOM_CLOSURE,
                        (x, y, z),
                        f"declared element {x} + element {y} = element {z} contradicts the implied zero row",
                    )
                )
            continue
        key = (min(x, y), max(x, y))
        prior = eff[x][y]
        if prior is not None and prior != z:
            if key not in seen_pairs:
                out.append(
                    Violation(
                        AXIOM_COMMUTATIVITY,
                        (x, y),
                        f"element {x} + element {y} and the flipped order disagree (element {prior} vs element {z})",
                    )
                )
                seen_pairs.add(key)
            continue
        eff[x][y] = z
        eff[y][x] = z

    # Eii over every triple where either grouping is defined.
    for x in range(n):
        ex = eff[x]
        for y in range(n):
            u = ex[y]
            row_u = eff[u] if u is not None else None
            ey = eff[y]
            for z in range(n):
                lhs = row_u[z] if row_u is not None else None
                v = ey[z]
                rhs = ex[v] if v is not None else None
                if lhs is None and rhs is None:
                    continue
                if lhs is None or rhs is None or lhs != rhs:
                    out.append(
                        Violation(
                            AXIOM_ASSOCIATIVITY,
                            (x, y, z),
                            f"groupings of elements {x}+{y}+{z} disagree "
                            f"({'undef' if lhs is None else f'element {lhs}'} vs "
                            f"{'undef' if rhs is None else f'element {rhs}'})",
                        )
                    )

    # Eiii: exactly one orthosupplement per element.
    for a in range(n):
        mates = [b for b in range(n) if eff[a][b] == one]
        if not mates:
            out.append(Violation(AXIOM_SUPPLEMENT, (a,), f"element {a} has no orthosupplement"))
        elif len(mates) > 1:
            out.append(
                Violation(
                    AXIOM_SUPPLEMENT,
                    (a, mates[0], mates[1]),
                    f"element {a} has multiple orthosupplements",
                )
            )

    # Eiv: one + a defined forces a = zero.
    for a in range(n):
        if a != zero and eff[one][a] is not None:
            out.append(
                Violation(AXIOM_ZERO_ONE, (a,), f"one + element {a} is defined although {a} is not zero")
            )

    return AxiomReport(tuple(out))


@dataclass(frozen=True)
class EffectAlgebra:
    """A validated finite effect algebra.

    ``table[x][y]`` is the sum of ``x`` and ``y`` or ``None`` when the pair
    is not summable.  The table is closed (symmetric, zero rows present)
    and has passed :func:`verify_axioms`, so ``supplement`` is total.
    Instances are immutable and hashable; derived structure is cached per
    instance by the order and structure modules.
    """

    names: tuple[str, ...]
    zero: int
    one: int
    table: tuple[tuple[Optional[int], ...], ...]
    supplement: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.names)

    def sum(self, x: int, y: int) -> Optional[int]:
        return self.table[x][y]

    def diff(self, b: int, a: int) -> Optional[int]:
        """The unique c with a + c == b, or None when a is not below b."""
        row = self.table[a]
        for c in range(len(row)):
            if row[c] == b:
                return c
        return None

    def orth(self, x: int) -> int:
        return self.supplement[x]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownName(f"unknown element name {name!r}") from None

    def canonical_sums(self) -> list[tuple[int, int, int]]:
        """Defined sums with both operands nonzero, one entry per pair.

        Pairs are reported with the smaller index first and sorted; this is
        the serialization order and the equation order of the state engine.
        """
        out = []
        for x in range(self.size):
            if x == self.zero:
                continue
            row = self.table[x]
            for y in range(x, self.size):
                if y == self.zero:
                    continue
                z = row[y]
                if z is not None:
                    out.append((x, y, z))
        return out

    def __repr__(self) -> str:  # pragma: no cover
        return (
            f"EffectAlgebra({self.size} elements, zero={self.names[self.zero]!r}, "
            f"one={self.names[self.one]!r})"
        )


def make_algebra(
    names: Sequence[str],
    zero: int,
    one: int,
    sums: Mapping[tuple[int, int], int],
) -> EffectAlgebra:
    """Close, validate, and wrap a sum table.

    Raises :class:`DuplicateSum` on inconsistent declarations and
    :class:`AxiomViolation` when the closed table is not an effect algebra.
    """
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError("element names must be unique")
    if not (0 <= zero < len(names) and 0 <= one < len(names)):
        raise ValueError("zero/one index out of range")
    closed = close_table(SumTable(len(names), zero, one, dict(sums)))
    report = verify_axioms(closed)
    if not report.ok:
        raise AxiomViolation(report)
    n = len(names)
    matrix = tuple(
        tuple(closed.sums.get((x, y)) for y in range(n)) for x in range(n)
    )
    supplement = []
    for a in range(n):
        mate = next(b for b in range(n) if matrix[a][b] == one)
        supplement.append(mate)
    return EffectAlgebra(names, zero, one, matrix, tuple(supplement))


def build_effect_algebra(doc: "EafDocument") -> EffectAlgebra:
    """Build a validated algebra from a parsed document.

    Declared sums are closed under commutativity and the implied zero rows
    before validation, so a document only needs the generating entries.
    """
    names = tuple(doc.names)
    position = {name: i for i, name in enumerate(names)}

    def resolve(name: str) -> int:
        if name not in position:
            raise UnknownName(f"unknown element name {name!r}")
        return position[name]

    sums: dict[tuple[int, int], int] = {}
    for xs, ys, zs in doc.sums:
        x, y, z = resolve(xs), resolve(ys), resolve(zs)
        prior = sums.get((x, y))
        if prior is not None and prior != z:
            raise DuplicateSum(
                f"pair ({xs},{ys}) declared as both {names[prior]} and {zs}"
            )
        sums[(x, y)] = z
    return make_algebra(names, resolve(doc.zero), resolve(doc.one), sums)


def partial_sum(E: EffectAlgebra, x: int, y: int) -> Optional[int]:
    """The sum of x and y, or None when the pair is not summable."""
    return E.table[x][y]


def partial_difference(E: EffectAlgebra, b: int, a: int) -> Optional[int]:
    """The unique c with a + c == b, or None; defined exactly when a <= b."""
    return E.diff(b, a)


def multiple(E: EffectAlgebra, x: int, k: int) -> Optional[int]:
    """The k-fold sum of x (k >= 0), or None when it is not defined."""
    if k < 0:
        raise ValueError("multiplicity must be nonnegative")
    acc = E.zero
    for _ in range(k):
        nxt = E.table[acc][x]
        if nxt is None:
            return None
        acc = nxt
    return acc
