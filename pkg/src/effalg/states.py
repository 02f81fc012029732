"""States: the defining linear system, search, verification, smearing.

A state assigns 0 to zero, 1 to one, values in [0, 1] everywhere, and is
additive across every defined sum.  On a finite algebra that is exactly a
feasibility problem over the canonical sum rows, solved exactly in
:mod:`effalg.linear`; no floating point enters at any stage.

Smearing extends a state given only on the sharp elements to the whole of
a lattice-ordered algebra: an atom with isotropic index n gets one n-th of
the value of its n-fold sum (which is sharp), and a general element gets
the value of its sharp kernel plus the weighted atom values of its meager
remainder.  The result is verified to be a state whose restriction to the
sharp part is the input, so a violation of the underlying theory raises
instead of propagating silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

from .core import EffectAlgebra, multiple
from .decompose import basic_decomposition
from .errors import InvalidState, PreconditionFailed
from .linear import (
    FeasiblePoint,
    InfeasibilityCertificate,
    LinearSystem,
    solve_exact,
)
from .order import derive_order
from .structure import extract_sharp, structure_profile


@dataclass(frozen=True)
class State:
    """A verified state: one exact rational per element of its domain."""

    domain: EffectAlgebra
    values: tuple[Fraction, ...]

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    def by_name(self, name: str) -> Fraction:
        return self.values[self.domain.index(name)]


def state_system(E: EffectAlgebra) -> LinearSystem:
    """The equality system whose box-bounded solutions are the states.

    One row per canonical sum (additivity), then the two endpoint rows
    pinning zero to 0 and one to 1.
    """
    n = E.size
    rows: list[tuple[int, ...]] = []
    rhs: list[Fraction] = []
    for x, y, z in E.canonical_sums():
        row = [0] * n
        row[z] += 1
        row[x] -= 1
        row[y] -= 1
        rows.append(tuple(row))
        rhs.append(Fraction(0))
    zero_row = [0] * n
    zero_row[E.zero] = 1
    rows.append(tuple(zero_row))
    rhs.append(Fraction(0))
    one_row = [0] * n
    one_row[E.one] = 1
    rows.append(tuple(one_row))
    rhs.append(Fraction(1))
    return LinearSystem(n, tuple(rows), tuple(rhs))


def state_row_labels(E: EffectAlgebra) -> tuple[str, ...]:
    """Human-readable label per row of ``state_system(E)``, same order."""
    labels = [
        f"{E.names[x]} + {E.names[y]} = {E.names[z]}"
        for x, y, z in E.canonical_sums()
    ]
    labels.append(f"{E.names[E.zero]} = 0")
    labels.append(f"{E.names[E.one]} = 1")
    return tuple(labels)


def find_state(E: EffectAlgebra) -> Union[State, InfeasibilityCertificate]:
    """Find a state or certify that none exists.

    Both outcomes are independently re-checked here: a returned state
    passes :func:`verify_state` and a returned certificate passes the
    arithmetic check in :mod:`effalg.linear`.
    """
    outcome = solve_exact(state_system(E))
    if isinstance(outcome, FeasiblePoint):
        state = State(E, outcome.values)
        report = verify_state(E, dict(enumerate(outcome.values)))
        if report.violations:
            raise RuntimeError(
                "solver returned a point that fails state verification"
            )
        return state
    return outcome


@dataclass(frozen=True)
class StateViolation:
    kind: str  # missing | zero | one | range | additivity
    witnesses: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class StateReport:
    violations: tuple[StateViolation, ...]
    faithful: bool

    @property
    def ok(self) -> bool:
        return not self.violations


def _as_fraction(value: object) -> Fraction:
    if isinstance(value, float):
        raise TypeError("state values must be exact rationals, not floats")
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"state value {value!r} is not a rational number")


def verify_state(E: EffectAlgebra, candidate: Mapping[int, object]) -> StateReport:
    """Check a candidate value mapping against the state axioms.

    Additivity is checked over the whole closed sum table, not only over
    declared generators.  Floats are rejected outright: a state that only
    approximately satisfies additivity is not a state.  The ``faithful``
    flag reports whether 0 is attained only at the zero element; it is
    informational and never a violation.
    """
    violations: list[StateViolation] = []
    values: dict[int, Fraction] = {}
    for x in range(E.size):
        if x not in candidate:
            violations.append(
                StateViolation("missing", (x,), f"no value for {E.names[x]}")
            )
        else:
            values[x] = _as_fraction(candidate[x])

    def have(*xs: int) -> bool:
        return all(x in values for x in xs)

    if have(E.zero) and values[E.zero] != 0:
        violations.append(
            StateViolation("zero", (E.zero,), f"value at zero is {values[E.zero]}")
        )
    if have(E.one) and values[E.one] != 1:
        violations.append(
            StateViolation("one", (E.one,), f"value at one is {values[E.one]}")
        )
    for x in range(E.size):
        if have(x) and not 0 <= values[x] <= 1:
            violations.append(
                StateViolation(
                    "range", (x,), f"value {values[x]} at {E.names[x]} is outside [0,1]"
                )
            )
    for x in range(E.size):
        for y in range(x, E.size):
            z = E.table[x][y]
            if z is None or not have(x, y, z):
                continue
            if values[x] + values[y] != values[z]:
                violations.append(
                    StateViolation(
                        "additivity",
                        (x, y, z),
                        f"{E.names[x]} + {E.names[y]} = {E.names[z]} maps to "
                        f"{values[x]} + {values[y]} != {values[z]}",
                    )
                )
    faithful = all(
        values.get(x) != 0 for x in range(E.size) if x != E.zero
    ) and E.zero in values and values[E.zero] == 0
    return StateReport(tuple(violations), faithful)


def restrict_to_sharp(E: EffectAlgebra, s: State) -> State:
    """Restrict a state on E to the extracted sharp subalgebra."""
    if s.domain is not E and s.domain != E:
        raise InvalidState("state domain is not the given algebra")
    sub = extract_sharp(E)
    values = tuple(s.values[x] for x in sub.to_parent)
    return State(sub.algebra, values)


def smear_state(E: EffectAlgebra, omega: State) -> State:
    """Extend a state on the sharp subalgebra to all of E.

    Atoms get ``omega(n·a)/n`` where ``n`` is the atom's isotropic index;
    every other nonzero element is valued through its basic decomposition
    as sharp kernel plus weighted meager atom multiples.  Requires lattice
    order and raises :class:`InvalidState` if ``omega`` is not a valid
    state on the extracted sharp subalgebra.
    """
    os = derive_order(E)
    if not os.is_lattice:
        raise PreconditionFailed("smearing needs a lattice-ordered algebra")
    sub = extract_sharp(E)
    if omega.domain != sub.algebra:
        raise InvalidState(
            "the input state must live on the extracted sharp subalgebra"
        )
    report = verify_state(sub.algebra, dict(enumerate(omega.values)))
    if report.violations:
        raise InvalidState(
            "the input is not a state on the sharp subalgebra: "
            + "; ".join(v.detail for v in report.violations[:3])
        )
    profile = structure_profile(E)

    def sharp_value(parent_x: int) -> Fraction:
        i = sub.from_parent[parent_x]
        if i is None:
            raise RuntimeError(f"element {parent_x} expected sharp")
        return omega.values[i]

    atom_value: dict[int, Fraction] = {}
    for a in sorted(profile.atoms):
        n_a = profile.isotropic[a]
        assert n_a is not None
        full = multiple(E, a, n_a)
        if full is None:
            raise RuntimeError("isotropic index overshoots its definition")
        if full not in profile.sharp:
            raise RuntimeError(
                f"full multiple of atom {E.names[a]} is not sharp in a "
                "lattice-ordered algebra"
            )
        atom_value[a] = sharp_value(full) / n_a

    values: list[Fraction] = [Fraction(0)] * E.size
    for x in range(E.size):
        if x == E.zero:
            continue
        if x in profile.sharp:
            values[x] = sharp_value(x)
            continue
        basic = basic_decomposition(E, x)
        total = sharp_value(basic.sharp_part)
        for part in basic.meager_parts:
            total += part.multiplicity * atom_value[part.atom]
        values[x] = total

    result = State(E, tuple(values))
    check = verify_state(E, dict(enumerate(result.values)))
    if check.violations:
        raise RuntimeError(
            "smearing produced a non-state: "
            + "; ".join(v.detail for v in check.violations[:3])
        )
    back = restrict_to_sharp(E, result)
    if back.values != omega.values:
        raise RuntimeError("smeared state does not restrict to its input")
    return result
