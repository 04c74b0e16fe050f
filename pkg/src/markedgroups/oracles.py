"""Word-problem deciders for marked presentations.

Triviality of a word in a group is only semidecidable in general, so
every decider here carries an explicit soundness domain: the class of
presentations on which its verdicts are exact.  Using an oracle outside
its domain is a caller error, not a silent wrong answer.  The generic
fallback (bounded derivation search) is sound everywhere but may answer
``unknown``; downstream consumers treat that as an error rather than
guessing.

Oracle spec strings (used by family registries, manifests and the CLI):

    abelian:0,5              exponent sums, 0 meaning infinite order
    coset[:max_cosets]       complete coset table (finite groups)
    rewriting:involutions    squares-to-identity rules (free products of Z/2)
    derivation[:len,nodes]   bounded derivation search, semidecider
    free                     no relators: only the empty word is trivial
    product:x=SPEC;y=SPEC    componentwise over a generator partition
"""

from __future__ import annotations

from dataclasses import dataclass

from .area import AreaNotFound, Caps, Certificate, area_search
from .coset import CayleyTable, coset_enumerate
from .presentations import Presentation
from .words import Word, free_reduce

__all__ = [
    "Verdict",
    "Oracle",
    "AbelianOracle",
    "CosetTableOracle",
    "RewritingOracle",
    "BoundedDerivationOracle",
    "FreeOracle",
    "ProductOracle",
    "UnknownVerdictError",
    "CosetLimitExceeded",
    "involution_rules",
    "build_oracle",
    "abelian_decide",
    "table_decide",
    "rewriting_decide",
    "bounded_derivation_decide",
    "decide",
]


@dataclass(frozen=True, eq=False)
class Verdict:
    """Trivial, nontrivial, or unknown with the exhausted budget."""

    kind: str  # "trivial" | "nontrivial" | "unknown"
    certificate: Certificate | None = None
    spent: Caps | None = None

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"


TRIVIAL = Verdict("trivial")
NONTRIVIAL = Verdict("nontrivial")


class UnknownVerdictError(RuntimeError):
    """An exact answer was required but the oracle ran out of budget."""

    def __init__(self, word: Word, oracle: "Oracle"):
        super().__init__(
            f"oracle {oracle.spec!r} returned unknown for a word of length {len(word)}; "
            "raise the caps or use an exact oracle"
        )
        self.word = word
        self.oracle = oracle


class CosetLimitExceeded(RuntimeError):
    """Enumeration hit max_cosets; the group may be infinite."""


class Oracle:
    """Base decider; immutable after construction, decide() is pure."""

    spec: str
    soundness: str
    exact: bool

    def decide(self, w: Word) -> Verdict:
        raise NotImplementedError


class AbelianOracle(Oracle):
    """Exact for abelian groups with the given generator orders.

    ``orders[j]`` is the order of the j-th generator, 0 meaning infinite;
    a word is trivial iff every exponent sum vanishes modulo its order.
    """

    def __init__(self, orders: tuple[int, ...]):
        if not orders:
            raise ValueError("orders vector must be nonempty")
        for o in orders:
            if o < 0 or o == 1:
                raise ValueError(f"invalid generator order {o}; use 0 or >= 2")
        self.orders = tuple(orders)
        self.spec = "abelian:" + ",".join(str(o) for o in orders)
        self.soundness = (
            "abelian groups presented by all pairwise commutators plus "
            f"generator power relators with orders {orders}"
        )
        self.exact = True

    def decide(self, w: Word) -> Verdict:
        if w.ngens != len(self.orders):
            raise ValueError("orders vector length does not match the word's marking")
        for j, order in enumerate(self.orders, start=1):
            total = w.exponent_sum(j)
            if (total != 0) if order == 0 else (total % order != 0):
                return NONTRIVIAL
        return TRIVIAL


class CosetTableOracle(Oracle):
    """Exact for finite groups: trace words through the regular action."""

    def __init__(self, table: CayleyTable, spec: str | None = None):
        if not table.complete:
            raise CosetLimitExceeded(
                "coset table is incomplete; raise max_cosets (the group may be infinite)"
            )
        self.table = table
        self.spec = spec or "coset"
        self.soundness = f"the finite group with {table.cosets} elements given by its presentation"
        self.exact = True

    @classmethod
    def build(cls, pres: Presentation, max_cosets: int = 10000) -> "CosetTableOracle":
        table = coset_enumerate(pres, max_cosets)
        return cls(table, spec=f"coset:{max_cosets}")

    def decide(self, w: Word) -> Verdict:
        if w.ngens != self.table.ngens:
            raise ValueError("word marking does not match the table")
        return TRIVIAL if self.table.trace(w.letters) == 0 else NONTRIVIAL


class RewritingOracle(Oracle):
    """Normal forms under a confluent, terminating rule set.

    Rules are (lhs, rhs) letter tuples applied leftmost-first until none
    match.  The constructor refuses rule sets not marked confluent; the
    registered systems are spot-checked for local confluence in the test
    suite.
    """

    def __init__(self, rules, confluent: bool, label: str, soundness: str):
        if not confluent:
            raise ValueError("rule set is not marked confluent")
        self.rules = tuple((tuple(l), tuple(r)) for l, r in rules)
        for lhs, rhs in self.rules:
            if len(rhs) > len(lhs):
                raise ValueError("rules must not increase length")
        self.spec = f"rewriting:{label}"
        self.soundness = soundness
        self.exact = True

    def normal_form(self, letters: tuple[int, ...]) -> tuple[int, ...]:
        s = tuple(letters)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self.rules:
                n = len(lhs)
                for i in range(len(s) - n + 1):
                    if s[i : i + n] == lhs:
                        s = s[:i] + rhs + s[i + n :]
                        changed = True
                        break
                if changed:
                    break
        return s

    def decide(self, w: Word) -> Verdict:
        return TRIVIAL if not self.normal_form(w.letters) else NONTRIVIAL


def involution_rules(ngens: int):
    """x^-1 -> x and xx -> 1 for every generator.

    Confluent and terminating (negatives strictly decrease, then length);
    exact for free products of order-2 groups, e.g. the infinite dihedral
    group for ngens = 2.
    """
    rules = []
    for j in range(1, ngens + 1):
        rules.append(((-j,), (j,)))
    for j in range(1, ngens + 1):
        rules.append(((j, j), ()))
    return rules


class FreeOracle(Oracle):
    """Exact for presentations with no relators: trivial means empty."""

    def __init__(self) -> None:
        self.spec = "free"
        self.soundness = "free groups (presentations with an empty relator list)"
        self.exact = True

    def decide(self, w: Word) -> Verdict:
        return TRIVIAL if not w.letters else NONTRIVIAL


class BoundedDerivationOracle(Oracle):
    """Semidecider: search for a derivation within caps.

    Sound for every presentation; never answers nontrivial, because the
    search can only exhaust its budget.
    """

    def __init__(self, pres: Presentation, caps: Caps):
        self.pres = pres
        self.caps = caps
        self.spec = f"derivation:{caps.length_cap},{caps.node_cap}"
        self.soundness = "any presentation; trivial verdicts carry a verified certificate"
        self.exact = False

    def decide(self, w: Word) -> Verdict:
        if not w.letters:
            return TRIVIAL
        if not self.pres.relators or len(w) > self.caps.length_cap:
            return Verdict("unknown", spent=self.caps)
        try:
            result = area_search(self.pres, w, self.caps.length_cap, self.caps.node_cap)
        except AreaNotFound:
            return Verdict("unknown", spent=self.caps)
        return Verdict("trivial", certificate=result.certificate)


class ProductOracle(Oracle):
    """Componentwise decision over a generator partition.

    Valid only when the group is the direct product of the subgroups
    generated by each part; each component word is the projection of the
    input onto that part's generators.
    """

    def __init__(self, components: tuple[tuple[Oracle, tuple[int, ...]], ...], ngens: int):
        seen: set[int] = set()
        for _, part in components:
            for g in part:
                if not 1 <= g <= ngens or g in seen:
                    raise ValueError("parts must partition the generators")
                seen.add(g)
        if len(seen) != ngens:
            raise ValueError("parts must cover every generator")
        self.components = components
        self.ngens = ngens
        self.spec = "product:" + ";".join(
            f"{','.join(str(g) for g in part)}={oracle.spec}" for oracle, part in components
        )
        self.soundness = "direct products split along the declared generator partition"
        self.exact = all(oracle.exact for oracle, _ in components)

    def decide(self, w: Word) -> Verdict:
        if w.ngens != self.ngens:
            raise ValueError("word marking does not match the partition")
        unknown: Verdict | None = None
        for oracle, part in self.components:
            index = {g: k + 1 for k, g in enumerate(part)}
            projected = free_reduce(
                tuple(
                    index[abs(x)] * (1 if x > 0 else -1)
                    for x in w.letters
                    if abs(x) in index
                )
            )
            verdict = oracle.decide(Word(len(part), projected))
            if verdict.kind == "nontrivial":
                return NONTRIVIAL
            if verdict.is_unknown:
                unknown = verdict
        return unknown if unknown is not None else TRIVIAL


def build_oracle(spec: str, pres: Presentation) -> Oracle:
    """Construct an oracle from its spec string, against a presentation."""
    spec = spec.strip()
    head, _, rest = spec.partition(":")
    if head == "abelian":
        orders = tuple(int(part) for part in rest.split(","))
        if len(orders) != pres.ngens:
            raise ValueError("abelian orders vector must have one entry per generator")
        return AbelianOracle(orders)
    if head == "coset":
        max_cosets = int(rest) if rest else 10000
        return CosetTableOracle.build(pres, max_cosets)
    if head == "rewriting":
        if rest != "involutions":
            raise ValueError(f"unknown rewriting system {rest!r}")
        return RewritingOracle(
            involution_rules(pres.ngens),
            confluent=True,
            label="involutions",
            soundness="free products of order-2 groups (every relator a generator square)",
        )
    if head == "derivation":
        if rest:
            length_cap, node_cap = (int(part) for part in rest.split(","))
        else:
            length_cap, node_cap = 16, 50000
        return BoundedDerivationOracle(pres, Caps(length_cap, node_cap))
    if head == "free":
        if pres.relators:
            raise ValueError("'free' oracle requires an empty relator list")
        return FreeOracle()
    if head == "product":
        components = []
        for item in rest.split(";"):
            names, _, sub = item.partition("=")
            part = tuple(pres.gen_names.index(n.strip()) + 1 for n in names.split(","))
            sub_names = tuple(pres.gen_names[g - 1] for g in part)
            sub_pres = Presentation(sub_names, ())
            components.append((build_oracle(sub, sub_pres), part))
        return ProductOracle(tuple(components), pres.ngens)
    raise ValueError(f"unknown oracle spec {spec!r}")


# Thin functional forms of the individual deciders.

def abelian_decide(orders: tuple[int, ...], w: Word) -> Verdict:
    return AbelianOracle(orders).decide(w)


def table_decide(table: CayleyTable, w: Word) -> Verdict:
    if not table.complete:
        raise ValueError("cannot decide against an incomplete coset table")
    return CosetTableOracle(table).decide(w)


def rewriting_decide(rules, w: Word, confluent: bool = True) -> Verdict:
    oracle = RewritingOracle(rules, confluent, "custom", "as declared by the caller")
    return oracle.decide(w)


def bounded_derivation_decide(pres: Presentation, w: Word, length_cap: int, node_cap: int) -> Verdict:
    return BoundedDerivationOracle(pres, Caps(length_cap, node_cap)).decide(w)


def decide(oracle: Oracle, w: Word) -> Verdict:
    return oracle.decide(w)
