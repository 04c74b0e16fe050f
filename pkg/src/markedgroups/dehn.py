"""Dehn-function tables and the convergence inequality harness.

delta(n) is the maximum area over all trivial words of length <= n; the
identity contributes area 0, so a group with no short relations has
delta(n) = 0 rather than an undefined value.

For a family (G_i) converging to a finitely presented limit G with
relator set R and L = max relator length, the harness checks, member by
member, the finite inequalities behind the limit statement

    limsup_i delta_i(n) / delta_i(L) <= delta(n):

(a) delta_i(n) <= K_i * delta(n) whenever the relation balls of G_i and
    G agree up to n, where K_i = max over r in R of the area of r in the
    member presentation;
(b) K_i <= delta_i(L);
(c) delta_i(n) / delta_i(L) <= delta(n).

The limsup itself is not finitely observable, so the reports state only
what was computed, for the tested members, with exactness flags.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .area import AreaNotFound, Caps, area_search
from .oracles import Oracle, UnknownVerdictError
from .presentations import Presentation, max_relator_length
from .space import distance
from .words import Word, shell

__all__ = [
    "DehnValue",
    "DehnComputationError",
    "TheoremReport",
    "CorollaryReport",
    "dehn",
    "quotient_check",
    "compute_K",
    "theorem_check",
    "corollary_check",
]


class DehnComputationError(RuntimeError):
    """A trivial word's area search ran out of caps."""

    def __init__(self, word: Word, pres: Presentation, caps: Caps):
        super().__init__(
            f"area search exhausted caps {caps} on the trivial word "
            f"{pres.word_str(word)!r}; raise --length-cap/--node-cap"
        )
        self.word = word


@dataclass(frozen=True)
class DehnValue:
    """One table entry: the maximum area over trivial words of length <= n."""

    n: int
    value: int
    exact: bool
    witnesses: tuple[Word, ...]

    def to_json(self, pres: Presentation) -> dict:
        return {
            "n": self.n,
            "value": self.value,
            "exact": self.exact,
            "witnesses": [pres.word_str(w) for w in self.witnesses],
        }


def _area_value(pres: Presentation, caps: Caps, letters: tuple[int, ...]) -> int:
    try:
        return area_search(pres, Word(pres.ngens, letters), caps.length_cap, caps.node_cap).value
    except AreaNotFound:
        return -1


def dehn(
    pres: Presentation,
    oracle: Oracle,
    n: int,
    caps: Caps,
    workers: int = 1,
    max_witnesses: int = 8,
) -> DehnValue:
    """Enumerate the ball, filter trivial words, maximise their areas.

    The per-word searches are independent, so they can fan out across
    processes; results are reduced in enumeration order, which keeps the
    outcome identical for any worker count.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    trivial: list[tuple[int, ...]] = []
    for length in range(n + 1):
        for letters in shell(pres.ngens, length):
            w = Word(pres.ngens, letters)
            verdict = oracle.decide(w)
            if verdict.is_unknown:
                raise UnknownVerdictError(w, oracle)
            if verdict.is_trivial and letters:
                trivial.append(letters)
    if not trivial:
        return DehnValue(n, 0, True, ())
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(
                pool.map(_area_value, [pres] * len(trivial), [caps] * len(trivial), trivial,
                         chunksize=max(1, len(trivial) // (4 * workers)))
            )
    else:
        values = [_area_value(pres, caps, letters) for letters in trivial]
    for letters, value in zip(trivial, values):
        if value < 0:
            raise DehnComputationError(Word(pres.ngens, letters), pres, caps)
    vmax = max(values)
    witnesses = tuple(
        Word(pres.ngens, letters) for letters, value in zip(trivial, values) if value == vmax
    )[:max_witnesses]
    return DehnValue(n, vmax, True, witnesses)


def quotient_check(limit_pres: Presentation, member_oracle: Oracle) -> bool:
    """True iff every limit relator is trivial in the member group."""
    for r in limit_pres.relators:
        verdict = member_oracle.decide(r)
        if verdict.is_unknown:
            raise UnknownVerdictError(r, member_oracle)
        if not verdict.is_trivial:
            return False
    return True


def compute_K(limit_pres: Presentation, member_pres: Presentation, caps: Caps) -> tuple[int, bool]:
    """Max area of the limit's relators in the member presentation.

    Callers must have passed quotient_check first; a relator that is not
    trivial in the member makes the search fail its caps.
    """
    if not limit_pres.relators:
        raise ValueError("the limit presentation has no relators")
    best = 0
    exact = True
    for r in limit_pres.relators:
        result = area_search(member_pres, r, caps.length_cap, caps.node_cap)
        best = max(best, result.value)
        exact = exact and result.exact
    return best, exact


@dataclass(frozen=True)
class TheoremReport:
    """All quantities of the member-vs-limit inequality for one (i, n).

    Verdicts are booleans when every contributing value is exact and
    None when a quantity is unavailable (for example the ratio when
    delta_i(L) = 0).  Verdict (a) is asserted only while the relation
    balls agree up to n; reports with ball_agreement < n are
    informational, since nothing constrains early members.
    """

    i: int
    n: int
    ball_agreement: int
    delta_i_n: tuple[int, bool]
    delta_n: tuple[int, bool]
    K_i: tuple[int, bool]
    delta_i_L: tuple[int, bool]
    L: int
    ratio: Fraction | None
    inequality_star_ok: bool | None
    k_le_delta_L_ok: bool | None
    ratio_le_delta_ok: bool | None

    @property
    def applicable(self) -> bool:
        return self.ball_agreement >= self.n

    @property
    def all_pass(self) -> bool:
        """Release gate: (b) always; (a) and (c) when applicable."""
        if self.k_le_delta_L_ok is False:
            return False
        if self.applicable and (self.inequality_star_ok is False or self.ratio_le_delta_ok is False):
            return False
        return True

    def to_json(self) -> dict:
        def val(pair):
            return {"value": pair[0], "exact": pair[1]}

        return {
            "i": self.i,
            "n": self.n,
            "ball_agreement": self.ball_agreement,
            "delta_i_n": val(self.delta_i_n),
            "delta_n": val(self.delta_n),
            "K_i": val(self.K_i),
            "delta_i_L": val(self.delta_i_L),
            "L": self.L,
            "ratio": None if self.ratio is None else f"{self.ratio.numerator}/{self.ratio.denominator}",
            "inequality_star_ok": self.inequality_star_ok,
            "k_le_delta_L_ok": self.k_le_delta_L_ok,
            "ratio_le_delta_ok": self.ratio_le_delta_ok,
        }


def theorem_check(family, i: int, n: int, caps: Caps, workers: int = 1) -> TheoremReport:
    """Compute every quantity of the inequality for one member and radius."""
    limit_pres, limit_oracle = family.limit()
    L = max_relator_length(limit_pres)
    if L is None:
        raise ValueError(
            f"family {family.name!r}: the limit has no relators, so L is undefined "
            "and the inequality cannot be formed"
        )
    member_pres, member_oracle = family.member(i)
    if not quotient_check(limit_pres, member_oracle):
        raise ValueError(
            f"family {family.name!r}: member {i} is not a quotient of the limit; "
            "K_i does not exist"
        )
    agreement = distance(member_pres, member_oracle, limit_pres, limit_oracle, n).agreement_radius()
    d_i_n = dehn(member_pres, member_oracle, n, caps, workers=workers)
    d_n = dehn(limit_pres, limit_oracle, n, caps, workers=workers)
    d_i_L = dehn(member_pres, member_oracle, L, caps, workers=workers)
    k_value, k_exact = compute_K(limit_pres, member_pres, caps)

    all_exact = d_i_n.exact and d_n.exact and d_i_L.exact and k_exact
    ratio = Fraction(d_i_n.value, d_i_L.value) if d_i_L.value > 0 else None
    star = d_i_n.value <= k_value * d_n.value if all_exact else None
    k_le = k_value <= d_i_L.value if all_exact else None
    ratio_le = (ratio <= d_n.value) if (all_exact and ratio is not None) else None
    return TheoremReport(
        i=i,
        n=n,
        ball_agreement=agreement,
        delta_i_n=(d_i_n.value, d_i_n.exact),
        delta_n=(d_n.value, d_n.exact),
        K_i=(k_value, k_exact),
        delta_i_L=(d_i_L.value, d_i_L.exact),
        L=L,
        ratio=ratio,
        inequality_star_ok=star,
        k_le_delta_L_ok=k_le,
        ratio_le_delta_ok=ratio_le,
    )


@dataclass(frozen=True)
class CorollaryReport:
    """Uniform bound check: delta_i(n) <= M * delta(n) with M = max_i delta_i(L)."""

    family: str
    n: int
    L: int
    M: int
    delta_n: tuple[int, bool]
    rows: tuple[dict, ...]

    @property
    def all_pass(self) -> bool:
        return all(row["bound_ok"] is not False for row in self.rows)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "L": self.L,
            "M": self.M,
            "delta_n": {"value": self.delta_n[0], "exact": self.delta_n[1]},
            "rows": list(self.rows),
            "all_pass": self.all_pass,
        }


def corollary_check(family, i_values, n: int, caps: Caps, workers: int = 1) -> CorollaryReport:
    """Check the uniform bound across the tested members.

    Members whose relation balls disagree with the limit before n are
    excluded from the bound (nothing constrains them) and marked so.
    """
    limit_pres, limit_oracle = family.limit()
    L = max_relator_length(limit_pres)
    if L is None:
        raise ValueError(f"family {family.name!r}: the limit has no relators, so L is undefined")
    d_n = dehn(limit_pres, limit_oracle, n, caps, workers=workers)
    measurements = []
    for i in i_values:
        member_pres, member_oracle = family.member(i)
        agreement = distance(member_pres, member_oracle, limit_pres, limit_oracle, n).agreement_radius()
        d_i_L = dehn(member_pres, member_oracle, L, caps, workers=workers)
        d_i_n = dehn(member_pres, member_oracle, n, caps, workers=workers)
        measurements.append((i, agreement, d_i_L, d_i_n))
    M = max((d_i_L.value for _, _, d_i_L, _ in measurements), default=0)
    rows = []
    for i, agreement, d_i_L, d_i_n in measurements:
        included = agreement >= n
        bound_ok = (d_i_n.value <= M * d_n.value) if included else None
        rows.append(
            {
                "i": i,
                "ball_agreement": agreement,
                "delta_i_L": {"value": d_i_L.value, "exact": d_i_L.exact},
                "delta_i_n": {"value": d_i_n.value, "exact": d_i_n.exact},
                "included": included,
                "bound_ok": bound_ok,
            }
        )
    return CorollaryReport(family.name, n, L, M, (d_n.value, d_n.exact), tuple(rows))
