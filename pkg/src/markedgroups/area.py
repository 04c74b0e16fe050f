"""Word areas with machine-checkable certificates.

The area of a trivial word ``w`` is the least ``k`` such that

    w = u_1 r_1^(s_1) u_1^-1 * ... * u_k r_k^(s_k) u_k^-1

in the free group, with each ``r_t`` a relator and each ``s_t = +-1``.
A :class:`Certificate` records exactly these factors and is verified by
pure word arithmetic, independent of any search.

Search model: states are reduced words; one move splices a symmetrized
relator (a rotation of some ``r`` or ``r^-1``) into the word at some
position and freely reduces.  One splice corresponds to one conjugate
factor, so the minimal number of moves from ``w`` to the empty word
equals the area restricted to derivations whose intermediate words stay
within ``length_cap``.  Found values are therefore exact in that
cap-restricted sense and can only decrease when the cap grows.

The search must run from the word toward the identity: splice edges are
not symmetric (a splice whose block cancels completely shrinks the word
by more than the block length and has no one-splice reverse), so a
search outward from the identity would traverse the wrong edge set.
Uniform-cost search with the frontier expanded in length-lex order makes
results, certificates and statistics reproducible regardless of call
order or worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .presentations import Presentation, parse_word, symmetrize
from .words import Word, free_reduce, invert_letters, letters_key, shell

__all__ = [
    "Caps",
    "SearchStats",
    "Certificate",
    "AreaResult",
    "AreaNotFound",
    "area_search",
    "expand_certificate",
    "verify_certificate",
    "compose_certificates",
    "area_exact_small",
]


class Caps(NamedTuple):
    """Search budget: maximum intermediate word length and node count."""

    length_cap: int
    node_cap: int


@dataclass(frozen=True)
class SearchStats:
    """``states_explored`` counts every distinct word the search reached
    (the start word included), which also bounds its memory."""

    states_explored: int
    length_cap: int

    def to_json(self) -> dict:
        return {"states_explored": self.states_explored, "length_cap": self.length_cap}


@dataclass(frozen=True)
class Certificate:
    """Ordered factors (conjugator, relator index, sign in {+1, -1})."""

    factors: tuple[tuple[Word, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.factors)

    def to_json(self, pres: Presentation) -> list[dict]:
        return [
            {"conjugator": pres.word_str(u), "relator": j, "sign": "+" if s > 0 else "-"}
            for (u, j, s) in self.factors
        ]

    @classmethod
    def from_json(cls, pres: Presentation, data: list[dict]) -> "Certificate":
        factors = []
        for item in data:
            u = parse_word(item["conjugator"], pres.gen_names)
            sign = 1 if item["sign"] == "+" else -1
            factors.append((u, int(item["relator"]), sign))
        return cls(tuple(factors))


@dataclass(frozen=True)
class AreaResult:
    """A found area value together with its witness.

    ``exact`` asserts the value is minimal among all derivations whose
    intermediate words stay within the length cap; every successful
    search satisfies this, and larger caps can only lower the value.
    """

    value: int
    exact: bool
    certificate: Certificate
    stats: SearchStats

    def to_json(self, pres: Presentation) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "certificate": self.certificate.to_json(pres),
            "stats": self.stats.to_json(),
        }


class AreaNotFound(Exception):
    """The caps were exhausted before the empty word was reached."""

    def __init__(self, word: Word, caps: Caps, stats: SearchStats):
        super().__init__(
            f"no derivation found within caps (length {caps.length_cap}, "
            f"nodes {caps.node_cap}); explored {stats.states_explored} states"
        )
        self.word = word
        self.caps = caps
        self.stats = stats


def _splice(prefix: tuple[int, ...], move: tuple[int, ...], suffix: tuple[int, ...]) -> tuple[int, ...]:
    # prefix, move and suffix are each reduced, so cancellation happens
    # only at the two seams and cascades; single pass, no full rescan.
    out = list(prefix)
    i, n = 0, len(move)
    while i < n and out and out[-1] == -move[i]:
        out.pop()
        i += 1
    out.extend(move[i:])
    j, ns = 0, len(suffix)
    while j < ns and out and out[-1] == -suffix[j]:
        out.pop()
        j += 1
    out.extend(suffix[j:])
    return tuple(out)


def area_search(pres: Presentation, w: Word, length_cap: int, node_cap: int) -> AreaResult:
    """Minimal-splice derivation of ``w`` within the caps.

    Raises :class:`AreaNotFound` when the caps are exhausted first, and
    ValueError on structural misuse (no relators, cap below the word).
    """
    if not pres.relators:
        raise ValueError("presentation has no relators; area is undefined")
    if w.ngens != pres.ngens:
        raise ValueError("word marking does not match the presentation")
    if length_cap < len(w):
        raise ValueError("length_cap must be at least the word length")
    if node_cap < 1:
        raise ValueError("node_cap must be positive")
    caps = Caps(length_cap, node_cap)
    target = w.letters
    if not target:
        return AreaResult(0, True, Certificate(()), SearchStats(0, length_cap))

    sym = symmetrize(pres)
    moves = [(mv.letters, *sym.origin[mv]) for mv in sym.moves]
    move_words = [m[0] for m in moves]

    # Breadth-first over splices; unit costs, so the first time the
    # identity is generated its depth is minimal.  Each visited state
    # records (parent, move, position) for certificate reconstruction.
    # node_cap bounds the number of distinct states reached, so it also
    # bounds the memory of the parents map.
    parents: dict = {target: None}
    frontier = [target]
    explored = 1
    goal_entry = None
    while frontier and goal_entry is None:
        next_frontier = []
        for state in frontier:
            for pos in range(len(state) + 1):
                prefix = state[:pos]
                suffix = state[pos:]
                for mi, mv in enumerate(move_words):
                    nxt = _splice(prefix, mv, suffix)
                    if len(nxt) > length_cap or nxt in parents:
                        continue
                    if not nxt:
                        goal_entry = (state, mi, pos)
                        parents[nxt] = goal_entry
                        explored += 1
                        break
                    if explored >= node_cap:
                        raise AreaNotFound(w, caps, SearchStats(explored, length_cap))
                    parents[nxt] = (state, mi, pos)
                    explored += 1
                    next_frontier.append(nxt)
                if goal_entry is not None:
                    break
            if goal_entry is not None:
                break
        next_frontier.sort(key=letters_key)
        frontier = next_frontier

    stats = SearchStats(explored, length_cap)
    if goal_entry is None:
        raise AreaNotFound(w, caps, stats)

    # Walk parents from the identity back to the word; reversing gives
    # the splice steps in application order.
    steps: list[tuple[tuple[int, ...], int, int]] = []
    node: tuple[int, ...] = ()
    while parents[node] is not None:
        par, mi, pos = parents[node]
        steps.append((par, mi, pos))
        node = par
    steps.reverse()

    factors = []
    for before, mi, pos in steps:
        _, rel_idx, sign, rot = moves[mi]
        rel = pres.relators[rel_idx].letters
        rho = rel if sign == 1 else invert_letters(rel)
        # Splicing rot_t(rho) at position p of v inserts the factor
        # (v[:p] * rho[:t]^-1) rho^-1 (...)^-1 into the derivation.
        conj = free_reduce(before[:pos] + invert_letters(rho[:rot]))
        factors.append((Word(pres.ngens, conj), rel_idx, -sign))
    cert = Certificate(tuple(factors))
    if not verify_certificate(pres, w, cert):
        raise RuntimeError("internal error: reconstructed certificate failed verification")
    return AreaResult(len(factors), True, cert, stats)


def expand_certificate(pres: Presentation, cert: Certificate) -> Word:
    """Reduced product of the certificate's conjugated relators."""
    acc: tuple[int, ...] = ()
    for (u, j, s) in cert.factors:
        if not 0 <= j < len(pres.relators):
            raise ValueError(f"relator index {j} out of range")
        if s not in (1, -1):
            raise ValueError(f"invalid sign {s}")
        if u.ngens != pres.ngens:
            raise ValueError("conjugator marking does not match the presentation")
        rel = pres.relators[j].letters
        body = rel if s == 1 else invert_letters(rel)
        acc = free_reduce(acc + u.letters + body + invert_letters(u.letters))
    return Word(pres.ngens, acc)


def verify_certificate(pres: Presentation, w: Word, cert: Certificate) -> bool:
    """Check the defining identity in the free group; pure, no search."""
    if w.ngens != pres.ngens:
        raise ValueError("word marking does not match the presentation")
    return expand_certificate(pres, cert) == w


def compose_certificates(
    limit_pres: Presentation,
    member_pres: Presentation,
    cert: Certificate,
    subs: dict[int, Certificate],
) -> Certificate:
    """Substitute member-side certificates for each limit relator used.

    Every factor (a, j, s) of ``cert`` expands through ``subs[j]``: for
    each inner factor (u, t, s') emit (a*u, t, s*s'), keeping the inner
    order for s = +1 and reversing it for s = -1.  The composed size is
    the sum of the substitutes' sizes over the factors of ``cert``.
    """
    if limit_pres.ngens != member_pres.ngens:
        raise ValueError("presentations use different markings")
    for j in {j for (_, j, _) in cert.factors}:
        if j not in subs:
            raise ValueError(f"missing substitution for relator {j}")
        if not verify_certificate(member_pres, limit_pres.relators[j], subs[j]):
            raise ValueError(f"substitute certificate for relator {j} fails verification")
    out: list[tuple[Word, int, int]] = []
    for (a, j, s) in cert.factors:
        inner = subs[j].factors
        ordered = inner if s == 1 else tuple(reversed(inner))
        for (u, t, s_inner) in ordered:
            out.append((a * u, t, s * s_inner))
    composed = Certificate(tuple(out))
    if expand_certificate(member_pres, composed) != expand_certificate(limit_pres, cert):
        raise RuntimeError("internal error: composed certificate expands to a different word")
    return composed


def _cat_reduce(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = list(a)
    i, n = 0, len(b)
    while i < n and out and out[-1] == -b[i]:
        out.pop()
        i += 1
    out.extend(b[i:])
    return tuple(out)


@lru_cache(maxsize=None)
def _single_conjugates(pres: Presentation, conj_cap: int) -> frozenset[tuple[int, ...]]:
    """All reduced u r^(+-1) u^-1 with |u| <= conj_cap."""
    out: set[tuple[int, ...]] = set()
    for length in range(conj_cap + 1):
        for u in shell(pres.ngens, length):
            inv_u = invert_letters(u)
            for rel in pres.relators:
                for body in (rel.letters, invert_letters(rel.letters)):
                    out.add(free_reduce(u + body + inv_u))
    return frozenset(out)


@lru_cache(maxsize=None)
def _products(pres: Presentation, conj_cap: int, k: int) -> frozenset[tuple[int, ...]]:
    """Products of exactly k bounded conjugates, as reduced tuples."""
    if k == 1:
        return _single_conjugates(pres, conj_cap)
    smaller = _products(pres, conj_cap, k - 1)
    singles = _single_conjugates(pres, conj_cap)
    return frozenset(_cat_reduce(x, y) for x in smaller for y in singles)


def area_exact_small(pres: Presentation, w: Word, k_max: int, conj_cap: int) -> int | None:
    """Brute-force area oracle, independent of the splice search.

    Enumerates all products of k <= k_max conjugated relators whose
    conjugators have length <= conj_cap and returns the smallest k that
    produces ``w``, or None.  Membership for a fixed word is decided by
    splitting k = ka + kb and meeting in the middle, which enumerates
    exactly the same product set without materialising the largest one.
    """
    if not pres.relators:
        raise ValueError("presentation has no relators; area is undefined")
    if w.ngens != pres.ngens:
        raise ValueError("word marking does not match the presentation")
    if k_max < 0 or conj_cap < 0:
        raise ValueError("k_max and conj_cap must be nonnegative")
    target = w.letters
    if not target:
        return 0
    for k in range(1, k_max + 1):
        kb = k // 2
        ka = k - kb
        left = _products(pres, conj_cap, ka)
        if kb == 0:
            if target in left:
                return k
            continue
        right = _products(pres, conj_cap, kb)
        for y in right:
            if _cat_reduce(target, invert_letters(y)) in left:
                return k
    return None
