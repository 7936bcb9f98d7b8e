"""Finite groups as Cayley tables.

Every group is stored as an order ``m``, an ``m x m`` multiplication table of
element indices, and a list of display names.  The identity is always index 0.
Group axioms are checked exhaustively at construction time (orders here are
desk-scale, at most a few hundred).
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass

MAX_AXIOM_CHECK_ORDER = 256
MAX_SYMMETRIC_DEGREE = 8


class GroupValidationError(ValueError):
    """A Cayley table violates one of the group axioms."""


class GroupSpecParseError(ValueError):
    """Malformed group-spec string; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SizeLimitError(ValueError):
    """Requested object exceeds the configured size cap."""


@dataclass(frozen=True)
class FiniteGroup:
    """Immutable finite group; safe for concurrent reads."""

    order: int
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    identity = 0

    def __post_init__(self):
        m = self.order
        if m < 1:
            raise GroupValidationError("order must be positive")
        if len(self.table) != m or any(len(row) != m for row in self.table):
            raise GroupValidationError("table must be order x order")
        if len(self.names) != m:
            raise GroupValidationError("names must list one string per element")
        for row in self.table:
            for v in row:
                if not (0 <= v < m):
                    raise GroupValidationError("closure: table entry out of range")
        for a in range(m):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupValidationError("identity: index 0 is not a two-sided unit")
        for a in range(m):
            invs = [b for b in range(m) if self.table[a][b] == 0 and self.table[b][a] == 0]
            if len(invs) != 1:
                raise GroupValidationError(f"inverse: element {a} lacks a unique two-sided inverse")
        if m <= MAX_AXIOM_CHECK_ORDER:
            t = self.table
            for a in range(m):
                for b in range(m):
                    tab = t[a][b]
                    for c in range(m):
                        if t[tab][c] != t[a][t[b][c]]:
                            raise GroupValidationError(
                                f"associativity fails at ({a},{b},{c})")

    def op(self, a: int, b: int) -> int:
        if not (0 <= a < self.order and 0 <= b < self.order):
            raise ValueError(f"element index out of range: {a}, {b}")
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"element index out of range: {a}")
        for b in range(self.order):
            if self.table[a][b] == 0:
                return b
        raise AssertionError("unreachable: validated group has inverses")

    def element_order(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"element index out of range: {a}")
        d, x = 1, a
        while x != 0:
            x = self.table[x][a]
            d += 1
        return d

    def power(self, a: int, k: int) -> int:
        """a**k, with negative k via the inverse."""
        if k < 0:
            a, k = self.inverse(a), -k
        x = 0
        for _ in range(k):
            x = self.table[x][a]
        return x

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"no element named {name!r}") from None


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group C_n with element k standing for x^k."""
    if n < 1:
        raise GroupValidationError("invalid order: n must be >= 1")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    names = tuple("1" if k == 0 else ("x" if k == 1 else f"x^{k}") for k in range(n))
    return FiniteGroup(n, table, names)


def _cycle_notation(perm: tuple[int, ...]) -> str:
    # one-line images of 1..k, 1-based
    k = len(perm)
    seen = [False] * k
    out = []
    for start in range(k):
        if seen[start] or perm[start] == start + 1:
            seen[start] = True
            continue
        cyc, i = [], start
        while not seen[i]:
            seen[i] = True
            cyc.append(i + 1)
            i = perm[i] - 1
        out.append("(" + "".join(str(v) for v in cyc) + ")")
    return "".join(out) if out else "1"


def make_symmetric(k: int, names_order: list[str] | None = None) -> FiniteGroup:
    """Symmetric group on {1..k}.

    Elements are permutations in lexicographic one-line order, composed
    apply-right-first: (a.b)(i) = a(b(i)).  Names use cycle notation.
    ``names_order`` relabels the enumeration to an explicit list of cycle
    names (the identity "1" must come first).
    """
    if k < 1:
        raise GroupValidationError("invalid order: k must be >= 1")
    if k > MAX_SYMMETRIC_DEGREE:
        raise SizeLimitError(f"symmetric degree capped at {MAX_SYMMETRIC_DEGREE}")
    perms = sorted(itertools.permutations(range(1, k + 1)))
    names = [_cycle_notation(p) for p in perms]
    if names_order is not None:
        if sorted(names_order) != sorted(names):
            raise GroupValidationError("names_order must be a permutation of the element names")
        if names_order[0] != "1":
            raise GroupValidationError("identity must be listed first")
        perms = [perms[names.index(nm)] for nm in names_order]
        names = list(names_order)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(a[b[i] - 1] for i in range(k))] for b in perms)
        for a in perms
    )
    return FiniteGroup(len(perms), table, tuple(names))


#: The symmetric-group-on-3-letters listing used throughout the worked examples.
S3_CLASSIC_ORDER = ["1", "(12)", "(13)", "(23)", "(123)", "(132)"]


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element i + n*f stands for r^i s^f."""
    if n < 1:
        raise GroupValidationError("invalid order: n must be >= 1")

    def mul(a, b):
        i1, f1 = a % n, a // n
        i2, f2 = b % n, b // n
        i = (i1 + (i2 if f1 == 0 else -i2)) % n
        return i + n * ((f1 + f2) % 2)

    table = tuple(tuple(mul(a, b) for b in range(2 * n)) for a in range(2 * n))
    names = []
    for f in (0, 1):
        for i in range(n):
            r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
            s = "s" if f else ""
            names.append((r + s) or "1")
    return FiniteGroup(2 * n, table, tuple(names))


def load_cayley_table(path: str) -> FiniteGroup:
    """Load a group from a JSON file with fields order, names, table."""
    with open(path) as fh:
        data = json.load(fh)
    for key in ("order", "names", "table"):
        if key not in data:
            raise GroupValidationError(f"cayley table file missing field {key!r}")
    return FiniteGroup(
        int(data["order"]),
        tuple(tuple(int(v) for v in row) for row in data["table"]),
        tuple(str(s) for s in data["names"]),
    )


_ITEM_RE = re.compile(r"([CSD])([0-9]+)$|table:(.+)$")


def parse_group_spec(spec: str) -> list[FiniteGroup]:
    """Parse a comma-separated list of group items.

    Grammar: item ("," item)*, item in { C<n>, S<n>, D<n>, table:<path> }.
    """
    groups = []
    pos = 0
    if not spec.strip():
        raise GroupSpecParseError("empty group spec", 0)
    for item in spec.split(","):
        stripped = item.strip()
        m = _ITEM_RE.match(stripped)
        if m is None:
            raise GroupSpecParseError(f"malformed group item {stripped!r}", pos)
        if m.group(3) is not None:
            groups.append(load_cayley_table(m.group(3)))
        else:
            kind, n = m.group(1), int(m.group(2))
            if kind == "C":
                groups.append(make_cyclic(n))
            elif kind == "S":
                order = S3_CLASSIC_ORDER if n == 3 else None
                groups.append(make_symmetric(n, names_order=order))
            else:
                groups.append(make_dihedral(n))
        pos += len(item) + 1
    return groups
