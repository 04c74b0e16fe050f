"""Coset enumeration over the trivial subgroup (HLT strategy).

For a finite group the enumeration terminates with the right-regular
action: one coset per group element, acted on by every signed generator.
The processing order is fixed so results are reproducible: cosets are
scanned in creation order, relators in declaration order, definitions
fill the first undefined column, and coincidences are merged immediately
through a FIFO queue.

References for the algorithm shape: Holt, Eick, O'Brien, "Handbook of
Computational Group Theory", ch. 5 (relator-based enumeration).
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import Presentation

__all__ = ["CayleyTable", "coset_enumerate"]


def _column(letter: int) -> int:
    # +j -> 2j-2, -j -> 2j-1; the inverse column is col ^ 1.
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


class _Overflow(Exception):
    pass


@dataclass(frozen=True)
class CayleyTable:
    """Action of signed generators on cosets; coset 0 is the identity.

    ``complete`` is False when enumeration stopped at the coset limit;
    incomplete tables cannot decide anything.
    """

    ngens: int
    rows: tuple[tuple[int | None, ...], ...]
    complete: bool

    @property
    def cosets(self) -> int:
        return len(self.rows)

    def trace(self, letters: tuple[int, ...], start: int = 0) -> int | None:
        """Image of ``start`` under the word, None on an undefined edge."""
        current: int | None = start
        for x in letters:
            if current is None:
                return None
            current = self.rows[current][_column(x)]
        return current

    def is_regular(self) -> bool:
        """Check each generator column is a permutation (complete tables)."""
        if not self.complete:
            return False
        n = len(self.rows)
        for col in range(2 * self.ngens):
            images = [row[col] for row in self.rows]
            if sorted(images) != list(range(n)):
                return False
        return True


def coset_enumerate(pres: Presentation, max_cosets: int) -> CayleyTable:
    """Run HLT enumeration; returns an incomplete table on overflow.

    Overflow (the group is too large, or infinite) is reported through
    ``complete=False`` so callers can distinguish it from structural
    input errors, which raise.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    nletters = 2 * pres.ngens
    relator_cols = [[_column(x) for x in r.letters] for r in pres.relators]
    table: list[list[int | None]] = [[None] * nletters]
    parent = [0]  # union-find over cosets, path-halving

    def rep(k: int) -> int:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def define(a: int, col: int) -> None:
        if len(table) >= max_cosets:
            raise _Overflow
        table.append([None] * nletters)
        b = len(table) - 1
        parent.append(b)
        table[a][col] = b
        table[b][col ^ 1] = a

    def merge(a: int, b: int, queue: list[int]) -> None:
        a, b = rep(a), rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            parent[b] = a
            queue.append(b)

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []
        merge(a, b, queue)
        while queue:
            dead = queue.pop(0)
            for col in range(nletters):
                image = table[dead][col]
                if image is None:
                    continue
                table[image][col ^ 1] = None
                mu, nu = rep(dead), rep(image)
                if table[mu][col] is not None:
                    merge(nu, table[mu][col], queue)
                elif table[nu][col ^ 1] is not None:
                    merge(mu, table[nu][col ^ 1], queue)
                else:
                    table[mu][col] = nu
                    table[nu][col ^ 1] = mu

    def scan_and_fill(a: int, cols: list[int]) -> None:
        f, i = a, 0
        b, j = a, len(cols) - 1
        while True:
            while i <= j and table[f][cols[i]] is not None:
                f = table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][cols[j] ^ 1] is not None:
                b = table[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][cols[i]] = b
                table[b][cols[i] ^ 1] = f
                return
            define(f, cols[i])

    complete = True
    try:
        alpha = 0
        while alpha < len(table):
            if rep(alpha) == alpha:
                for cols in relator_cols:
                    scan_and_fill(alpha, cols)
                    if rep(alpha) != alpha:
                        break
                if rep(alpha) == alpha:
                    for col in range(nletters):
                        if table[alpha][col] is None:
                            define(alpha, col)
            alpha += 1
    except _Overflow:
        complete = False

    # Compress to live cosets, renumbering in creation order, and route
    # every entry through its representative.
    live = [k for k in range(len(table)) if rep(k) == k]
    renumber = {old: new for new, old in enumerate(live)}
    rows = []
    for old in live:
        row = []
        for entry in table[old]:
            row.append(None if entry is None else renumber[rep(entry)])
        rows.append(tuple(row))
    if complete and any(None in row for row in rows):
        raise RuntimeError("enumeration terminated with an undefined entry")
    return CayleyTable(pres.ngens, tuple(rows), complete)
