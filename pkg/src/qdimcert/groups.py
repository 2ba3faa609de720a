"""Small finite groups stored as multiplication tables over indices 0..n-1."""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Any, Callable, Hashable, Sequence

from .errors import GroupClosureError, InputError


class FiniteGroup:
    """A finite group given by its Cayley table.

    Elements are the integers ``0 .. order-1``; index 0 is always the identity.
    ``labels`` holds the concrete object behind each index (a quaternion, a
    permutation tuple, a residue) and ``render`` turns one into text.
    """

    identity = 0

    def __init__(self, name: str, labels: Sequence[Any], table: list[list[int]],
                 render: Callable[[Any], str] = str):
        self.name = name
        self.labels = list(labels)
        self.table = table
        self._render = render
        n = len(labels)
        if any(len(row) != n for row in table) or len(table) != n:
            raise ValueError("multiplication table has the wrong shape")
        if table[0] != list(range(n)):
            raise ValueError("index 0 must be the identity")
        inv = [0] * n
        for a in range(n):
            row = table[a]
            inv[a] = row.index(0)
        self.inverses = inv

    @classmethod
    def from_generators(cls, name: str, gens: Sequence[Hashable], mul: Callable[[Any, Any], Any],
                        identity: Hashable, inverse: Callable[[Any], Any] | None = None,
                        render: Callable[[Any], str] = str,
                        max_order: int | None = None) -> FiniteGroup:
        """Breadth-first closure of ``gens`` (and their inverses, if given).

        Element order is BFS insertion order with generators tried in the
        order supplied, so indices are stable across runs.
        """
        step = list(gens)
        if inverse is not None:
            step += [inverse(g) for g in gens]
        elements = [identity]
        index = {identity: 0}
        parent: list[tuple[int, int]] = [(-1, -1)]
        queue = deque([0])
        while queue:
            ai = queue.popleft()
            a = elements[ai]
            for gi, g in enumerate(step):
                b = mul(a, g)
                if b not in index:
                    if max_order is not None and len(elements) >= max_order:
                        raise GroupClosureError(
                            f"closure of {name} generators exceeds {max_order} elements")
                    index[b] = len(elements)
                    elements.append(b)
                    parent.append((ai, gi))
                    queue.append(len(elements) - 1)
        # a = parent * g  implies  a * b = parent * (g * b): only left
        # multiplication by the generators needs the underlying product
        left = [[index[mul(g, b)] for b in elements] for g in step]
        n = len(elements)
        table: list[list[int]] = [list(range(n))]
        for ai in range(1, n):
            pi, gi = parent[ai]
            prow, lrow = table[pi], left[gi]
            table.append([prow[lrow[b]] for b in range(n)])
        return cls(name, elements, table, render)

    # -- GroupLike protocol ----------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    # --------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} of order {self.order}>"

    def render(self, a: int) -> str:
        return self._render(self.labels[a])

    def check_member(self, a: int) -> None:
        if not (isinstance(a, int) and 0 <= a < self.order):
            raise InputError(f"{a!r} is not an element of {self.name}")

    def index_of(self, label: Any) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise InputError(f"{label!r} is not an element of {self.name}") from None

    @cached_property
    def _label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverses[a], -e
        result = 0
        t = self.table
        while e:
            if e & 1:
                result = t[result][a]
            e >>= 1
            if e:
                a = t[a][a]
        return result

    def element_order(self, a: int) -> int:
        self.check_member(a)
        n, x = 1, a
        while x != 0:
            x = self.table[x][a]
            n += 1
        return n

    @cached_property
    def element_orders(self) -> list[int]:
        return [self.element_order(a) for a in range(self.order)]

    def conjugate(self, a: int, by: int) -> int:
        t = self.table
        return t[t[by][a]][self.inverses[by]]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def center(self) -> list[int]:
        t = self.table
        n = self.order
        return [a for a in range(n) if all(t[a][b] == t[b][a] for b in range(n))]

    @cached_property
    def conjugacy_classes(self) -> list[list[int]]:
        """Classes in order of their smallest element; each list sorted, rep first."""
        seen = [False] * self.order
        classes = []
        for a in range(self.order):
            if seen[a]:
                continue
            cls_ = sorted({self.conjugate(a, g) for g in range(self.order)})
            for c in cls_:
                seen[c] = True
            classes.append(cls_)
        return classes

    def class_of(self, a: int) -> int:
        return self._class_index[a]

    @cached_property
    def _class_index(self) -> list[int]:
        idx = [0] * self.order
        for i, c in enumerate(self.conjugacy_classes):
            for a in c:
                idx[a] = i
        return idx

    def generated_subgroup(self, gens: Sequence[int]) -> set[int]:
        seen = {0}
        frontier = [0]
        t = self.table
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = t[a][g]
                if b not in seen:
                    seen.add(b)
                    frontier.append(b)
        return seen

    def normal_closure(self, gens: Sequence[int]) -> set[int]:
        conj = {self.conjugate(g, h) for g in gens for h in range(self.order)}
        return self.generated_subgroup(sorted(conj))

    def is_simple(self) -> bool:
        # every normal subgroup is the normal closure of its elements, so it
        # suffices to check the normal closure of one element per class
        if self.order == 1:
            return False
        for c in self.conjugacy_classes[1:]:
            if len(self.normal_closure([c[0]])) != self.order:
                return False
        return True

    def check_axioms(self) -> bool:
        n, t = self.order, self.table
        if any(t[0][a] != a or t[a][0] != a for a in range(n)):
            return False
        if any(t[a][self.inverses[a]] != 0 or t[self.inverses[a]][a] != 0 for a in range(n)):
            return False
        for row in t:
            if sorted(row) != list(range(n)):
                return False
        return all(t[t[a][b]][c] == t[a][t[b][c]]
                   for a in range(n) for b in range(n) for c in range(n))


# -- concrete groups -----------------------------------------------------------


def cyclic_group(d: int) -> FiniteGroup:
    if d < 1:
        raise InputError(f"cyclic group order must be positive, got {d}")
    table = [[(a + b) % d for b in range(d)] for a in range(d)]
    return FiniteGroup(f"C{d}", list(range(d)), table)


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply ``p`` first, then ``q`` (left-to-right, as in GAP)."""
    return tuple(q[i] for i in p)


def perm_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycle_notation(p: tuple[int, ...]) -> str:
    """1-based disjoint cycle notation, ``()`` for the identity."""
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = p[i]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def perm_from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> tuple[int, ...]:
    p = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def alternating_group_a5() -> FiniteGroup:
    """A5 generated by (1 2 3) and (1 2 3 4 5)."""
    a = perm_from_cycles([[0, 1, 2]], 5)
    b = perm_from_cycles([[0, 1, 2, 3, 4]], 5)
    return FiniteGroup.from_generators(
        "A5", [a, b], compose, tuple(range(5)), inverse=perm_inverse,
        render=cycle_notation, max_order=60)
