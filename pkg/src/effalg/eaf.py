"""Plain-text exchange formats for algebras and states.

Algebra files (``.eaf``)::

    ea v1
    elements 6
    names 0 a b ab 2a 1
    zero 0
    one 1
    sum a a = 2a
    sum a b = ab

Sections appear in exactly that order.  Blank lines and ``#`` comments
(whole-line or trailing) are ignored.  Names are whitespace-free tokens and
must be pairwise distinct; ``names`` lists all of them on one line.  Sums
involving the zero element are legal input but redundant.

Canonical serialization omits zero-involving sums, writes the smaller
operand index first, sorts sum lines by operand index pair, writes no
comments, and ends with a trailing newline.  Parsing a serialized document
returns an equal document, and serialization is deterministic, so files can
be compared bytewise.

State files (``.state``)::

    state v1
    value 0 0/1
    value a 1/2

Every element of the intended domain gets exactly one line.  Values are
rationals ``p/q`` with an optional sign on ``p`` and a positive ``q``;
a bare integer abbreviates ``p/1``.  Out-of-range values parse fine and
are reported by state verification, not here.  Canonical serialization
lists every element in index order as explicit reduced ``p/q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import MissingElement, MissingHeader, NegativeDenominator, ParseError

if TYPE_CHECKING:  # pragma: no cover
    from .core import EffectAlgebra
    from .states import State

_EA_HEADER = "ea v1"
_STATE_HEADER = "state v1"


@dataclass(frozen=True)
class EafDocument:
    """A parsed algebra file: names plus declared sums, nothing derived.

    ``sums`` keeps the declarations in file order and by name; resolution
    against indices and all validation happen when an algebra is built.
    """

    names: tuple[str, ...]
    zero: str
    one: str
    sums: tuple[tuple[str, str, str], ...]


def _logical_lines(text: str) -> list[tuple[int, list[str]]]:
    """Non-empty lines as (1-based line number, token list), comments gone."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if tokens:
            out.append((lineno, tokens))
    return out


def parse_eaf(text: str) -> EafDocument:
    """Parse an algebra file into an :class:`EafDocument`.

    Enforces the fixed section order and every lexical rule of the format;
    all errors carry the offending line number.  Semantic validation (axiom
    checking) is not done here.
    """
    lines = _logical_lines(text)
    if not lines:
        raise MissingHeader(1, f"missing {_EA_HEADER!r} header")
    pos = 0

    def take(expect: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise ParseError(last, f"unexpected end of file, expected {expect}")
        item = lines[pos]
        pos += 1
        return item

    lineno, tokens = take("header")
    if tokens != [_EA_HEADER.split()[0], _EA_HEADER.split()[1]]:
        raise MissingHeader(lineno, f"expected {_EA_HEADER!r} header")

    lineno, tokens = take("'elements <n>'")
    if len(tokens) != 2 or tokens[0] != "elements":
        raise ParseError(lineno, "expected 'elements <n>'")
    try:
        count = int(tokens[1])
    except ValueError:
        raise ParseError(lineno, f"element count {tokens[1]!r} is not an integer")
    if count < 2:
        raise ParseError(lineno, "an effect algebra needs at least 2 elements")

    lineno, tokens = take("'names ...'")
    if not tokens or tokens[0] != "names":
        raise ParseError(lineno, "expected 'names <name...>'")
    names = tuple(tokens[1:])
    if len(names) != count:
        raise ParseError(
            lineno, f"expected {count} names, found {len(names)}"
        )
    if len(set(names)) != len(names):
        dup = next(n for i, n in enumerate(names) if n in names[:i])
        raise ParseError(lineno, f"duplicate element name {dup!r}")
    for name in names:
        if not name.isascii() or "#" in name or "=" in name:
            raise ParseError(
                lineno,
                f"element name {name!r} must be ASCII without '#' or '='",
            )

    def known(name: str, lineno: int) -> str:
        if name not in names:
            raise ParseError(lineno, f"unknown element name {name!r}")
        return name

    lineno, tokens = take("'zero <name>'")
    if len(tokens) != 2 or tokens[0] != "zero":
        raise ParseError(lineno, "expected 'zero <name>'")
    zero = known(tokens[1], lineno)

    lineno, tokens = take("'one <name>'")
    if len(tokens) != 2 or tokens[0] != "one":
        raise ParseError(lineno, "expected 'one <name>'")
    one = known(tokens[1], lineno)

    sums = []
    while pos < len(lines):
        lineno, tokens = take("'sum <x> <y> = <z>'")
        if len(tokens) != 5 or tokens[0] != "sum" or tokens[3] != "=":
            raise ParseError(lineno, "expected 'sum <x> <y> = <z>'")
        x = known(tokens[1], lineno)
        y = known(tokens[2], lineno)
        z = known(tokens[4], lineno)
        sums.append((x, y, z))

    return EafDocument(names, zero, one, tuple(sums))


def serialize_eaf(E: "EffectAlgebra") -> str:
    """Canonical text form of an algebra; stable under round trips."""
    lines = [
        _EA_HEADER,
        f"elements {E.size}",
        "names " + " ".join(E.names),
        f"zero {E.names[E.zero]}",
        f"one {E.names[E.one]}",
    ]
    for x, y, z in E.canonical_sums():
        lines.append(f"sum {E.names[x]} {E.names[y]} = {E.names[z]}")
    return "\n".join(lines) + "\n"


def _parse_rational(token: str, lineno: int) -> Fraction:
    parts = token.split("/")
    if len(parts) == 1:
        num, den = parts[0], "1"
    elif len(parts) == 2:
        num, den = parts
    else:
        raise ParseError(lineno, f"value {token!r} is not of the form p/q")
    try:
        p, q = int(num), int(den)
    except ValueError:
        raise ParseError(lineno, f"value {token!r} is not of the form p/q")
    if q <= 0:
        raise NegativeDenominator(
            f"line {lineno}: value {token!r} has nonpositive denominator"
        )
    return Fraction(p, q)


def parse_state(text: str, E: "EffectAlgebra") -> dict[int, Fraction]:
    """Parse a state file against an intended domain algebra.

    Returns a total element-index-to-value mapping.  Whether the values
    form a state (endpoints, range, additivity) is the state engine's
    business; this only enforces the grammar and totality.
    """
    lines = _logical_lines(text)
    if not lines:
        raise MissingHeader(1, f"missing {_STATE_HEADER!r} header")
    lineno, tokens = lines[0]
    if tokens != _STATE_HEADER.split():
        raise MissingHeader(lineno, f"expected {_STATE_HEADER!r} header")
    values: dict[int, Fraction] = {}
    for lineno, tokens in lines[1:]:
        if len(tokens) != 3 or tokens[0] != "value":
            raise ParseError(lineno, "expected 'value <name> <p>/<q>'")
        name = tokens[1]
        if name not in E.names:
            raise ParseError(lineno, f"unknown element name {name!r}")
        idx = E.names.index(name)
        if idx in values:
            raise ParseError(lineno, f"duplicate value for {name!r}")
        values[idx] = _parse_rational(tokens[2], lineno)
    missing = [E.names[i] for i in range(E.size) if i not in values]
    if missing:
        raise MissingElement(
            "no value for element(s): " + " ".join(missing)
        )
    return values


def serialize_state(state: "State") -> str:
    """Canonical text form of a state, one line per element in index order."""
    lines = [_STATE_HEADER]
    for i, name in enumerate(state.domain.names):
        v = state.values[i]
        lines.append(f"value {name} {v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"
