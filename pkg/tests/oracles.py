"""Independent reference computations used to freeze expected values.

Everything here works from the raw sum table alone (dict lookups, no
bitmasks, no imports from the package's order or structure modules) so
test expectations do not inherit bugs from the code under test.
"""

from fractions import Fraction
from itertools import combinations


def oracle_axiom_errors(n, zero, one, sums):
    """Check the effect algebra axioms on a symmetric total dict table.

    ``sums`` maps ordered pairs (x, y) to x + y for every defined pair, in
    both orientations, zero rows included.  Returns a list of complaint
    strings; an empty list means the table is a valid effect algebra.
    """
    errors = []
    if zero == one:
        errors.append("zero equals one")
    for x in range(n):
        if sums.get((zero, x)) != x or sums.get((x, zero)) != x:
            errors.append(f"zero row broken at {x}")
    for (x, y), z in sums.items():
        if sums.get((y, x)) != z:
            errors.append(f"commutativity broken at {x},{y}")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                xy = sums.get((x, y))
                yz = sums.get((y, z))
                left = sums.get((xy, z)) if xy is not None else None
                right = sums.get((x, yz)) if yz is not None else None
                if left != right:
                    errors.append(f"associativity broken at {x},{y},{z}")
    for a in range(n):
        mates = [b for b in range(n) if sums.get((a, b)) == one]
        if len(mates) != 1:
            errors.append(f"{a} has {len(mates)} supplements")
    for a in range(n):
        if a != zero and (one, a) in sums:
            errors.append(f"one + {a} is defined")
    return errors


def table_dict(E):
    """The package algebra's table as the oracle's dict shape."""
    return {
        (x, y): E.table[x][y]
        for x in range(E.size)
        for y in range(E.size)
        if E.table[x][y] is not None
    }


def oracle_leq(E):
    """below[x] = set of elements <= x, straight from the table."""
    below = {x: set() for x in range(E.size)}
    for (a, _), b in table_dict(E).items():
        below[b].add(a)
    return below


def oracle_meet(E, x, y):
    below = oracle_leq(E)
    common = below[x] & below[y]
    greatest = [m for m in common if common <= below[m]]
    return greatest[0] if greatest else None


def oracle_join(E, x, y):
    below = oracle_leq(E)
    above_x = {u for u in range(E.size) if x in below[u]}
    above_y = {u for u in range(E.size) if y in below[u]}
    common = above_x & above_y
    least = [j for j in common if all(j in below[u] for u in common)]
    return least[0] if least else None


def oracle_sharp(E):
    """Sharp elements: only common lower bound with the supplement is 0."""
    below = oracle_leq(E)
    out = set()
    for x in range(E.size):
        if below[x] & below[E.supplement[x]] == {E.zero}:
            out.add(x)
    return out


def oracle_atoms(E):
    below = oracle_leq(E)
    return {
        x for x in range(E.size) if x != E.zero and below[x] == {E.zero, x}
    }


def oracle_ord(E, x):
    if x == E.zero:
        return 0
    k, acc = 1, x
    while E.table[acc][x] is not None:
        acc = E.table[acc][x]
        k += 1
    return k


def _family_sum(E, parts):
    """Iterated sum of [(atom, k), ...] or None if any step is undefined."""
    acc = E.zero
    for atom, k in parts:
        for _ in range(k):
            acc = E.table[acc][atom]
            if acc is None:
                return None
    return acc


def oracle_proper_families(E):
    """All orthogonal atom-multiple families with every k below the index.

    Returns a dict mapping each reachable sum to the set of frozenset
    part-multisets that produce it.
    """
    atoms = sorted(oracle_atoms(E))
    found = {}

    def grow(idx, parts):
        total = _family_sum(E, parts)
        if total is None:
            return
        if parts:
            found.setdefault(total, set()).add(frozenset(parts))
        for i in range(idx, len(atoms)):
            a = atoms[i]
            for k in range(1, oracle_ord(E, a)):
                grow(i + 1, parts + [(a, k)])

    grow(0, [])
    return found


def oracle_basic_decompositions(E, x):
    """Every (sharp part, proper family) pair that reassembles x.

    The sharp part may be any sharp element, the family any orthogonal
    atom-multiple family with all multiplicities below the isotropic
    index; pairs are found by brute force over both.
    """
    families = oracle_proper_families(E)
    out = set()
    for v in oracle_sharp(E):
        if v == x:
            out.add((v, frozenset()))
        rest_candidates = [
            r for r in range(E.size) if E.table[v][r] == x
        ]
        for r in rest_candidates:
            for parts in families.get(r, set()):
                out.add((v, parts))
    return out


def gaussian_solve(rows, rhs):
    """Solve a linear system exactly; None if inconsistent, else one map.

    ``rows`` is a list of coefficient lists over Fractions (or ints) and
    ``rhs`` the right-hand sides.  Returns (pivots, free) where pivots
    maps variable index to its forced expression value assuming free
    variables are zero, or None when the system has no solution at all.
    Used to re-derive forced state values independently of the simplex.
    """
    m, n = len(rows), len(rows[0]) if rows else 0
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, m):
            if a[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][col]
        a[r] = [v / inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [u - factor * v for u, v in zip(a[i], a[r])]
        piv_cols.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if all(v == 0 for v in a[i][:n]) and a[i][n] != 0:
            return None
    values = {}
    for i, col in enumerate(piv_cols):
        if all(a[i][c] == 0 for c in range(n) if c != col):
            values[col] = a[i][n]
    return values


def subsets(iterable, max_size=None):
    items = list(iterable)
    top = len(items) if max_size is None else min(max_size, len(items))
    for size in range(top + 1):
        yield from combinations(items, size)
