"""Executable law suite: structural identities run as exhaustive checks.

Each law quantifies over the finite carrier (pairs, triples, atoms, or
enumerated orthogonal families) and reports pass, fail with witnesses, or
skipped when its structural hypothesis does not hold for the input.  A
skip is never a pass: algebras outside a law's hypothesis contribute
nothing.

Counterexample mode forces laws whose hypothesis includes lattice order to
run their conclusion checks on non-lattice algebras anyway.  There, an
instance whose own sub-hypothesis cannot be evaluated (say, compatibility
of a pair with no join) counts as vacuous, but a conclusion that needs a
missing bound counts as a failure: the law promised that bound would
exist.  This is how the bundled counterexample tables document exactly
which conclusions break without lattice order.

Law ids, in report order:

==================  =========================================================
L2.2.i              x + y = (x v y) + (x ^ y) for summable pairs
L2.2.ii             (x v y) + z distributes over the join when both summable
L2.2.iii            disjointness of x, y spreads to all defined multiples
L2.2.iv             meets distribute over joins of orthogonal families
L2.3.i              proper atom multiples are non-sharp via their supplement
L2.3.ii             the full multiple of an atom is sharp, others are not
L2.3.iii            elements between an atom and its multiples are multiples
L2.3.iv             equal proper multiples force equal atoms
L2.3.v              greedy decomposition reassembles x as sum and join
T2.4                a multiple below another atom's multiple ties the atoms
T2.6                at most one all-proper atom-multiple sum per element
T3.4                exactly one sharp-plus-proper-multiples form per element
T3.5                the sharp cover of an atom is its full multiple
T4.1                every decomposition splits into kernel and meager parts
T4.2                states on the sharp part smear to states on E
SE-subalgebra       sharp elements form a sub-effect algebra
SE-full-sublattice  meets and joins of sharp pairs are sharp
product-closure     squaring preserves lattice/atomic/sharply-dominating
==================  =========================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional

from .core import EffectAlgebra, multiple
from .decompose import AtomMultiple, atomic_decomposition
from .errors import BoundsMissing, InvalidState, PreconditionFailed
from .linear import InfeasibilityCertificate
from .order import OrderStructure, compatible, derive_order
from .states import State, find_state, restrict_to_sharp, smear_state, verify_state
from .structure import StructureProfile, extract_sharp, sharp_bounds, structure_profile

LAW_IDS = (
    "L2.2.i",
    "L2.2.ii",
    "L2.2.iii",
    "L2.2.iv",
    "L2.3.i",
    "L2.3.ii",
    "L2.3.iii",
    "L2.3.iv",
    "L2.3.v",
    "T2.4",
    "T2.6",
    "T3.4",
    "T3.5",
    "T4.1",
    "T4.2",
    "SE-subalgebra",
    "SE-full-sublattice",
    "product-closure",
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

_WITNESS_CAP = 6
_PRODUCT_FACTOR_CAP = 8


@dataclass(frozen=True)
class LawResult:
    law: str
    status: str
    witnesses: tuple[tuple[int, ...], ...] = ()
    reason: str = ""


@dataclass(frozen=True)
class LawReport:
    algebra: EffectAlgebra
    results: tuple[LawResult, ...]

    def result(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    @property
    def failures(self) -> tuple[LawResult, ...]:
        return tuple(r for r in self.results if r.status == FAIL)


class _Collector:
    """Accumulates failure witnesses without storing unbounded lists."""

    def __init__(self) -> None:
        self.witnesses: list[tuple[int, ...]] = []
        self.count = 0
        self.first_reason = ""

    def add(self, witness: tuple[int, ...], reason: str) -> None:
        self.count += 1
        if len(self.witnesses) < _WITNESS_CAP:
            self.witnesses.append(witness)
        if not self.first_reason:
            self.first_reason = reason

    def result(self, law: str) -> LawResult:
        if self.count == 0:
            return LawResult(law, PASS)
        reason = self.first_reason
        if self.count > 1:
            reason += f" (+{self.count - 1} more instances)"
        return LawResult(law, FAIL, tuple(self.witnesses), reason)


class _Ctx:
    def __init__(self, E: EffectAlgebra, counterexample_mode: bool) -> None:
        self.E = E
        self.cx = counterexample_mode
        self.os: OrderStructure = derive_order(E)
        self.profile: StructureProfile = structure_profile(E)
        self.atoms = sorted(self.profile.atoms)

    @cached_property
    def atom_multiples(self) -> dict[int, list[int]]:
        """For each atom, the elements [a, 2a, ...] up to its full index."""
        out = {}
        for a in self.atoms:
            ms = []
            acc: Optional[int] = None
            for k in range(1, (self.profile.isotropic[a] or 0) + 1):
                acc = a if acc is None else self.E.table[acc][a]
                assert acc is not None
                ms.append(acc)
            out[a] = ms
        return out

    @cached_property
    def atom_families(self) -> list[tuple[int, tuple[AtomMultiple, ...]]]:
        """All orthogonal atom-multiple families, as (iterated sum, parts).

        Parts use strictly ascending atom indices, one multiple per atom,
        and every prefix sum is defined, matching how iterated sums are
        built everywhere else.
        """
        E = self.E
        out: list[tuple[int, tuple[AtomMultiple, ...]]] = []

        def grow(start: int, acc: int, parts: tuple[AtomMultiple, ...]) -> None:
            for i in range(start, len(self.atoms)):
                a = self.atoms[i]
                for k, m in enumerate(self.atom_multiples[a], start=1):
                    s = E.table[acc][m]
                    if s is None:
                        break
                    grown = parts + (AtomMultiple(a, k),)
                    out.append((s, grown))
                    grow(i + 1, s, grown)

        grow(0, E.zero, ())
        return out

    @cached_property
    def orthogonal_sets(self) -> list[tuple[int, tuple[int, ...]]]:
        """Orthogonal sets of distinct nonzero elements, size 2 or more.

        Returned as (iterated sum, ascending element tuple); the size is
        capped by the atom count, which bounds how many pairwise summable
        nonzero elements can coexist without repeating.
        """
        E = self.E
        cap = max(2, len(self.atoms))
        nonzero = [x for x in range(E.size) if x != E.zero]
        out: list[tuple[int, tuple[int, ...]]] = []

        def grow(start: int, acc: int, members: tuple[int, ...]) -> None:
            if len(members) >= cap:
                return
            for i in range(start, len(nonzero)):
                x = nonzero[i]
                s = E.table[acc][x]
                if s is None:
                    continue
                grown = members + (x,)
                if len(grown) >= 2:
                    out.append((s, grown))
                grow(i + 1, s, grown)

        grow(0, E.zero, ())
        return out

    def meet(self, x: int, y: int) -> Optional[int]:
        return self.os.meet[x][y]

    def join(self, x: int, y: int) -> Optional[int]:
        return self.os.join[x][y]

    def join_of(self, xs: Iterable[int]) -> Optional[int]:
        acc: Optional[int] = None
        for x in xs:
            if acc is None:
                acc = x
            else:
                acc = self.os.join[acc][x]
                if acc is None:
                    return None
        return acc if acc is not None else self.E.zero

    def compat(self, x: int, y: int) -> Optional[bool]:
        """Compatibility, or None when the needed bounds do not exist."""
        try:
            return compatible(self.E, x, y)
        except BoundsMissing:
            return None

    def names(self, *xs: int) -> str:
        return ", ".join(self.E.names[x] for x in xs)


def _law_l22i(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for x in range(E.size):
        for y in range(x, E.size):
            s = E.table[x][y]
            if s is None:
                continue
            j, m = ctx.join(x, y), ctx.meet(x, y)
            if j is None or m is None:
                c.add((x, y), f"{ctx.names(x, y)} are summable but lack a bound")
                continue
            via_bounds = E.table[j][m]
            if via_bounds != s:
                c.add(
                    (x, y),
                    f"sum of {ctx.names(x, y)} differs from join-plus-meet",
                )
    return c.result("L2.2.i")


def _law_l22ii(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for z in range(E.size):
        summable = [x for x in range(E.size) if E.table[x][z] is not None]
        for x in summable:
            for y in summable:
                if y < x:
                    continue
                j = ctx.join(x, y)
                if j is None:
                    c.add((x, y, z), f"{ctx.names(x, y)} have no join")
                    continue
                lhs = E.table[j][z]
                rhs = ctx.join(E.table[x][z], E.table[y][z])
                if lhs is None or rhs is None or lhs != rhs:
                    c.add(
                        (x, y, z),
                        f"joining {ctx.names(x, y)} does not commute with "
                        f"adding {E.names[z]}",
                    )
    return c.result("L2.2.ii")


def _law_l22iii(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()

    def multiples_of(x: int) -> list[int]:
        out = []
        acc = x
        while acc is not None:
            out.append(acc)
            acc = E.table[acc][x]
        return out

    for x in range(E.size):
        if x == E.zero:
            continue
        mx = multiples_of(x)
        for y in range(x, E.size):
            if y == E.zero:
                continue
            if ctx.meet(x, y) != E.zero:
                continue
            my = multiples_of(y)
            checked: set[tuple[int, int]] = set()
            for m in range(1, len(mx) + 1):
                for n in range(1, len(my) + 1):
                    if E.table[mx[m - 1]][my[n - 1]] is None:
                        continue
                    for k in range(1, m + 1):
                        for l in range(1, n + 1):
                            if (k, l) in checked:
                                continue
                            checked.add((k, l))
                            kx, ly = mx[k - 1], my[l - 1]
                            meet = ctx.meet(kx, ly)
                            join = ctx.join(kx, ly)
                            s = E.table[kx][ly]
                            if meet != E.zero or join is None or join != s:
                                c.add(
                                    (x, y, kx, ly),
                                    f"multiples {ctx.names(kx, ly)} of disjoint "
                                    f"{ctx.names(x, y)} are not disjoint-joined",
                                )
    return c.result("L2.2.iii")


def _law_l22iv(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for _, members in ctx.orthogonal_sets:
        big = ctx.join_of(members)
        if big is None:
            continue  # hypothesis needs the join of the family
        for x in range(E.size):
            compat_all = True
            for y in members:
                verdict = ctx.compat(x, y)
                if verdict is None:
                    compat_all = False  # hypothesis not evaluable: vacuous
                    break
                if not verdict:
                    compat_all = False
                    break
            if not compat_all:
                continue
            meets = []
            broken = False
            for y in members:
                m = ctx.meet(x, y)
                if m is None:
                    broken = True
                    break
                meets.append(m)
            lhs = ctx.meet(x, big)
            rhs = None if broken else ctx.join_of(meets)
            if lhs is None or rhs is None or lhs != rhs:
                c.add(
                    (x,) + members,
                    f"meet of {E.names[x]} with the join of "
                    f"{ctx.names(*members)} breaks distribution",
                )
                continue
            if ctx.compat(x, big) is not True:
                c.add(
                    (x, big),
                    f"{E.names[x]} fails to commute with the family join "
                    f"{E.names[big]}",
                )
    return c.result("L2.2.iv")


def _law_l23i(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for a in ctx.atoms:
        ms = ctx.atom_multiples[a]
        for k in range(1, len(ms)):  # 1 .. ord-1
            ka = ms[k - 1]
            m = ctx.meet(ka, E.supplement[ka])
            if m is None:
                c.add(
                    (a, ka),
                    f"{E.names[ka]} and its supplement have no meet",
                )
            elif m == E.zero:
                c.add(
                    (a, ka),
                    f"proper multiple {E.names[ka]} of atom {E.names[a]} is sharp",
                )
    return c.result("L2.3.i")


def _law_l23ii(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    sharp = ctx.profile.sharp
    for a in ctx.atoms:
        ms = ctx.atom_multiples[a]
        full = ms[-1]
        if full not in sharp:
            c.add(
                (a, full),
                f"full multiple {E.names[full]} of atom {E.names[a]} is not sharp",
            )
        for k in range(1, len(ms)):
            ka = ms[k - 1]
            if ka in sharp:
                c.add(
                    (a, ka),
                    f"proper multiple {E.names[ka]} of atom {E.names[a]} is sharp",
                )
    return c.result("L2.3.ii")


def _law_l23iii(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for a in ctx.atoms:
        ms = ctx.atom_multiples[a]
        allowed = set(ms)
        for k, ka in enumerate(ms, start=1):
            between = ctx.os.up[a] & ctx.os.down[ka]
            while between:
                x = (between & -between).bit_length() - 1
                between &= between - 1
                if x not in allowed:
                    c.add(
                        (a, x, ka),
                        f"{E.names[x]} sits between atom {E.names[a]} and "
                        f"{E.names[ka]} but is no multiple of it",
                    )
    return c.result("L2.3.iii")


def _law_l23iv(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for a in ctx.atoms:
        ms_a = ctx.atom_multiples[a]
        ord_a = len(ms_a)
        for b in ctx.atoms:
            ms_b = ctx.atom_multiples[b]
            for k in range(1, ord_a + 1):
                if k == ord_a:
                    continue  # hypothesis asks k != ord(a)
                for l in range(1, len(ms_b) + 1):
                    if ms_a[k - 1] != ms_b[l - 1]:
                        continue
                    if a != b or k != l:
                        c.add(
                            (a, b, ms_a[k - 1]),
                            f"{k} copies of {E.names[a]} equal {l} copies "
                            f"of {E.names[b]}",
                        )
    return c.result("L2.3.iv")


def _law_l23v(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    sharp = ctx.profile.sharp
    for x in range(E.size):
        if x == E.zero:
            continue
        d = atomic_decomposition(E, x)
        part_elements = [
            multiple(E, p.atom, p.multiplicity) for p in d.parts
        ]
        if any(m is None for m in part_elements):
            c.add((x,), f"a greedy part of {E.names[x]} has no defined multiple")
            continue
        j = ctx.join_of([m for m in part_elements if m is not None])
        if j != x:
            c.add(
                (x,),
                f"join of the greedy parts of {E.names[x]} is not {E.names[x]}",
            )
        all_full = all(
            p.multiplicity == ctx.profile.isotropic[p.atom] for p in d.parts
        )
        if (x in sharp) != all_full:
            if x in sharp:
                reason = (
                    f"sharp {E.names[x]} decomposes with a proper multiple"
                )
            else:
                reason = (
                    f"non-sharp {E.names[x]} decomposes into full multiples only"
                )
            c.add((x,), reason)
    return c.result("L2.3.v")


def _law_t24(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for a in ctx.atoms:
        ms_a = ctx.atom_multiples[a]
        for b in ctx.atoms:
            ms_b = ctx.atom_multiples[b]
            ord_b = len(ms_b)
            for k in range(1, len(ms_a) + 1):
                for l in range(1, ord_b + 1):
                    if not ctx.os.leq(ms_a[k - 1], ms_b[l - 1]):
                        continue
                    if a == b:
                        continue  # conclusion holds on the spot
                    if l < ord_b:
                        c.add(
                            (a, b, ms_a[k - 1], ms_b[l - 1]),
                            f"{k} copies of {E.names[a]} fit below {l} copies "
                            f"of distinct atom {E.names[b]} short of its index",
                        )
                        continue
                    verdict = ctx.compat(a, b)
                    full_le = ctx.os.leq(ms_a[-1], ms_b[-1])
                    if verdict is None:
                        c.add(
                            (a, b),
                            f"compatibility of atoms {ctx.names(a, b)} is not "
                            "evaluable (missing bounds)",
                        )
                    elif verdict or not full_le:
                        c.add(
                            (a, b),
                            f"distinct atoms {ctx.names(a, b)} with nested "
                            "multiples violate the full-index alternative",
                        )
    return c.result("T2.4")


def _law_t26(ctx: _Ctx) -> LawResult:
    """At most one all-proper family per sum, and nothing else beside it.

    The second half is justified for lattice algebras by kernel
    uniqueness: an element carrying an all-proper decomposition has sharp
    kernel zero, so every decomposition of it must also be all-proper and
    therefore the same multiset.  Stating it this way lets the check catch
    tables where one element is simultaneously a proper and a full
    multiple stack of different atoms.
    """
    E, c = ctx.E, _Collector()
    iso = ctx.profile.isotropic
    admissible: dict[int, set[frozenset[tuple[int, int]]]] = {}
    family_count: dict[int, int] = {}
    for s, parts in ctx.atom_families:
        family_count[s] = family_count.get(s, 0) + 1
        if all(p.multiplicity != iso[p.atom] for p in parts):
            key = frozenset((p.atom, p.multiplicity) for p in parts)
            admissible.setdefault(s, set()).add(key)
    for s, keys in sorted(admissible.items()):
        if len(keys) > 1:
            c.add(
                (s,),
                f"{E.names[s]} carries two distinct all-proper "
                "atom-multiple sums",
            )
        elif family_count[s] > 1:
            c.add(
                (s,),
                f"{E.names[s]} has an all-proper sum and another "
                "decomposition beside it",
            )
    return c.result("T2.6")


def _law_t34(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    iso = ctx.profile.isotropic
    sharp = sorted(ctx.profile.sharp)
    proper: dict[int, list[frozenset[tuple[int, int]]]] = {}
    for s, parts in ctx.atom_families:
        if all(p.multiplicity != iso[p.atom] for p in parts):
            proper.setdefault(s, []).append(
                frozenset((p.atom, p.multiplicity) for p in parts)
            )
    for x in range(E.size):
        if x == E.zero:
            continue
        candidates: set[tuple[int, frozenset[tuple[int, int]]]] = set()
        for v in sharp:
            if v == x:
                candidates.add((v, frozenset()))
                continue
            rest = E.diff(x, v)
            if rest is None:
                continue
            for key in proper.get(rest, []):
                candidates.add((v, key))
        if len(candidates) != 1:
            c.add(
                (x,),
                f"{E.names[x]} admits {len(candidates)} sharp-plus-proper "
                "forms instead of exactly one",
            )
    return c.result("T3.4")


def _law_t35(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    for a in ctx.atoms:
        full = ctx.atom_multiples[a][-1]
        cover = sharp_bounds(E, a).cover
        if cover != full:
            c.add(
                (a, full) + ((cover,) if cover is not None else ()),
                f"sharp cover of atom {E.names[a]} is not its full multiple "
                f"{E.names[full]}",
            )
    return c.result("T3.5")


def _law_t41(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    iso = ctx.profile.isotropic
    sharp = ctx.profile.sharp
    meager = ctx.profile.meager
    for x, parts in ctx.atom_families:
        full = [p for p in parts if p.multiplicity == iso[p.atom]]
        partial = [p for p in parts if p.multiplicity != iso[p.atom]]

        def iterated(ps: list[AtomMultiple]) -> Optional[int]:
            acc = E.zero
            for p in ps:
                m = multiple(E, p.atom, p.multiplicity)
                if m is None:
                    return None
                nxt = E.table[acc][m]
                if nxt is None:
                    return None
                acc = nxt
            return acc

        sf = iterated(full)
        sp = iterated(partial)
        if sf is None or sp is None:
            c.add((x,), f"a split block of {E.names[x]} has no iterated sum")
            continue
        kernel = sharp_bounds(E, x).kernel
        if sf not in sharp:
            c.add(
                (x, sf),
                f"full block of a decomposition of {E.names[x]} sums to "
                f"non-sharp {E.names[sf]}",
            )
            continue
        if kernel is None or sf != kernel:
            c.add(
                (x, sf),
                f"full block of {E.names[x]} misses its greatest sharp "
                "lower bound",
            )
            continue
        if sp not in meager:
            c.add(
                (x, sp),
                f"partial block of {E.names[x]} sums to non-meager {E.names[sp]}",
            )
            continue
        if E.table[sf][sp] != x:
            c.add(
                (x, sf, sp),
                f"split blocks of {E.names[x]} do not reassemble it",
            )
    return c.result("T4.1")


def _law_t42(ctx: _Ctx) -> LawResult:
    E = ctx.E
    sub = extract_sharp(E)
    found = find_state(sub.algebra)
    if isinstance(found, InfeasibilityCertificate):
        return LawResult(
            "T4.2", PASS, (), "vacuous: the sharp subalgebra admits no states"
        )
    try:
        smeared = smear_state(E, found)
    except (PreconditionFailed, InvalidState) as exc:
        return LawResult("T4.2", FAIL, ((E.zero,),), f"smearing failed: {exc}")
    report = verify_state(E, dict(enumerate(smeared.values)))
    if report.violations:
        return LawResult(
            "T4.2",
            FAIL,
            tuple(v.witnesses for v in report.violations[:_WITNESS_CAP]),
            "smeared mapping is not a state",
        )
    back = restrict_to_sharp(E, smeared)
    if back.values != found.values:
        return LawResult(
            "T4.2", FAIL, (), "smeared state does not restrict to its input"
        )
    return LawResult("T4.2", PASS)


def _law_se_subalgebra(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    sharp = ctx.profile.sharp
    if E.zero not in sharp or E.one not in sharp:
        c.add((E.zero, E.one), "zero or one is not sharp")
    for x in sharp:
        if E.supplement[x] not in sharp:
            c.add(
                (x, E.supplement[x]),
                f"supplement of sharp {E.names[x]} is not sharp",
            )
    for x in sorted(sharp):
        for y in sorted(sharp):
            if y < x:
                continue
            s = E.table[x][y]
            if s is not None and s not in sharp:
                c.add(
                    (x, y, s),
                    f"sum of sharp {ctx.names(x, y)} lands outside the "
                    "sharp set",
                )
    if c.count == 0:
        try:
            extract_sharp(E)
        except Exception as exc:  # pragma: no cover - guarded by the above
            c.add((E.zero,), f"sharp set does not validate as an algebra: {exc}")
    return c.result("SE-subalgebra")


def _law_se_full_sublattice(ctx: _Ctx) -> LawResult:
    E, c = ctx.E, _Collector()
    sharp = sorted(ctx.profile.sharp)
    for i, x in enumerate(sharp):
        for y in sharp[i:]:
            m, j = ctx.meet(x, y), ctx.join(x, y)
            if m is None or j is None:
                c.add((x, y), f"sharp pair {ctx.names(x, y)} lacks a bound")
                continue
            if m not in ctx.profile.sharp or j not in ctx.profile.sharp:
                c.add(
                    (x, y),
                    f"a bound of sharp pair {ctx.names(x, y)} is not sharp",
                )
    return c.result("SE-full-sublattice")


def _law_product_closure(ctx: _Ctx) -> LawResult:
    from .constructions import direct_product
    from .order import classify

    E = ctx.E
    if E.size > _PRODUCT_FACTOR_CAP:
        return LawResult(
            "product-closure",
            SKIPPED,
            (),
            f"factor larger than {_PRODUCT_FACTOR_CAP} elements; the product "
            "acceptance suite covers big factors",
        )
    P = direct_product(E, E)
    cls = classify(P)
    prof = structure_profile(P)
    missing = []
    if not cls.is_lattice:
        missing.append("lattice")
    if not prof.atomic:
        missing.append("atomic")
    if not prof.sharply_dominating:
        missing.append("sharply dominating")
    if missing:
        return LawResult(
            "product-closure",
            FAIL,
            (),
            "the squared algebra lost: " + ", ".join(missing),
        )
    return LawResult("product-closure", PASS)


_LATTICE_LAWS: dict[str, Callable[[_Ctx], LawResult]] = {
    "L2.2.i": _law_l22i,
    "L2.2.ii": _law_l22ii,
    "L2.2.iii": _law_l22iii,
    "L2.2.iv": _law_l22iv,
    "L2.3.i": _law_l23i,
    "L2.3.ii": _law_l23ii,
    "L2.3.iii": _law_l23iii,
    "L2.3.iv": _law_l23iv,
    "L2.3.v": _law_l23v,
    "T2.4": _law_t24,
    "T2.6": _law_t26,
    "T3.4": _law_t34,
    "T3.5": _law_t35,
    "T4.1": _law_t41,
    "T4.2": _law_t42,
    "SE-subalgebra": _law_se_subalgebra,
    "SE-full-sublattice": _law_se_full_sublattice,
}


def run_law_suite(
    E: EffectAlgebra,
    selection: Optional[Iterable[str]] = None,
    counterexample_mode: bool = False,
) -> LawReport:
    """Run the selected laws (all by default) against one algebra.

    ``counterexample_mode`` forces lattice-hypothesis laws to evaluate
    their conclusions on non-lattice inputs; see the module docstring.
    """
    if selection is None:
        chosen = list(LAW_IDS)
    else:
        chosen = list(selection)
        unknown = [law for law in chosen if law not in LAW_IDS]
        if unknown:
            raise KeyError(f"unknown law id(s): {', '.join(unknown)}")
        chosen.sort(key=LAW_IDS.index)
    ctx = _Ctx(E, counterexample_mode)
    lattice = ctx.os.is_lattice
    results = []
    for law in chosen:
        if law == "product-closure":
            prof = ctx.profile
            if not (lattice and prof.atomic and prof.sharply_dominating):
                results.append(
                    LawResult(
                        law,
                        SKIPPED,
                        (),
                        "hypothesis needs a lattice, atomic, sharply "
                        "dominating algebra",
                    )
                )
            else:
                results.append(_law_product_closure(ctx))
            continue
        if not lattice and not counterexample_mode:
            results.append(
                LawResult(law, SKIPPED, (), "algebra is not lattice-ordered")
            )
            continue
        results.append(_LATTICE_LAWS[law](ctx))
    return LawReport(E, tuple(results))
