"""Stabilizing sequences (u_n, I_n) labelling fine Deligne-Lusztig strata.

Starting from a type I_0 = I and a Frobenius action F on the generator
set, a sequence picks u_n among the minimal double-coset representatives
for (I_n, F(I_n)), subject to

    I_{n+1} = I_n  intersect  u_n F(I_n) u_n^{-1}
    u_{n+1}  in  W_{I_{n+1}} u_n W_{F(I_n)}

and stabilizes once the pair (u, I) repeats.  Forward enumeration of all
such sequences hits each minimal left coset representative exactly once
as the stabilized u; that bijection is asserted here and doubles as the
correctness oracle for the whole module.

For Sp the Frobenius acts trivially on the generators; the action is
kept as a parameter so the twisted variants remain expressible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import weyl
from .weyl import WeylElement


def _coxeter_order(i: int, j: int, n: int) -> int:
    """Order of s_i s_j in the rank-n group (type C diagram)."""
    if i == j:
        return 1
    a, b = min(i, j), max(i, j)
    if b - a > 1:
        return 2
    return 4 if b == n else 3


@dataclass(frozen=True)
class FrobeniusAction:
    """A Coxeter-system automorphism of the generator set S_n."""

    n: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError("image is not a permutation of the generators")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if _coxeter_order(self(i), self(j), n) != _coxeter_order(i, j, n):
                    raise ValueError("map does not preserve the Coxeter matrix")

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def apply_subset(self, subset: frozenset[int]) -> frozenset[int]:
        return frozenset(self(i) for i in subset)

    def is_stable(self, subset: frozenset[int]) -> bool:
        return self.apply_subset(subset) == subset

    @staticmethod
    def trivial(n: int) -> "FrobeniusAction":
        return FrobeniusAction(n, tuple(range(1, n + 1)))


def conjugate_type(w: WeylElement, subset: frozenset[int]) -> frozenset[int]:
    """Generator indices i with s_i = w s_j w^{-1} for some j in the subset."""
    n = w.n
    simples = {weyl.simple_reflection(i, n).perm: i for i in range(1, n + 1)}
    w_inv = w.inverse()
    out = set()
    for j in subset:
        conj = weyl.compose(weyl.compose(w, weyl.simple_reflection(j, n)), w_inv)
        i = simples.get(conj.perm)
        if i is not None:
            out.add(i)
    return frozenset(out)


@dataclass(frozen=True)
class BedardSequence:
    """One stabilizing sequence; steps[k] = (u_k, I_k)."""

    I0: frozenset[int]
    steps: tuple[tuple[WeylElement, frozenset[int]], ...]

    @property
    def u_inf(self) -> WeylElement:
        return self.steps[-1][0]

    @property
    def I_inf(self) -> frozenset[int]:
        return self.steps[-1][1]

    def u_at(self, k: int) -> WeylElement:
        """u_k, reading the stabilized tail beyond the stored steps."""
        return self.steps[min(k, len(self.steps) - 1)][0]

    def type_at(self, k: int) -> frozenset[int]:
        return self.steps[min(k, len(self.steps) - 1)][1]


@lru_cache(maxsize=None)
def _IW_for(n: int, subset: frozenset[int]) -> tuple[WeylElement, ...]:
    """Minimal left coset representatives for an arbitrary type."""
    return tuple(
        w for w in weyl.enumerate_group(n) if weyl.is_min_left_rep(w, subset)
    )


@lru_cache(maxsize=None)
def enumerate_sequences(
    n: int, I: frozenset[int], F: FrobeniusAction
) -> tuple[BedardSequence, ...]:
    """All stabilizing sequences for (I, F), by forward depth-first search.

    Raises RuntimeError if the stabilized values fail to hit each minimal
    left coset representative exactly once.
    """
    sequences: list[BedardSequence] = []

    def coset_members(
        left: frozenset[int], u: WeylElement, right: frozenset[int]
    ) -> set[tuple[int, ...]]:
        return {
            weyl.compose(weyl.compose(a, u), b).perm
            for a in weyl.parabolic_subgroup(n, left)
            for b in weyl.parabolic_subgroup(n, right)
        }

    def extend(
        steps: list[tuple[WeylElement, frozenset[int]]],
        u: WeylElement,
        cur_type: frozenset[int],
    ) -> None:
        next_type = cur_type & conjugate_type(u, F.apply_subset(cur_type))
        if next_type == cur_type:
            # u is the unique minimal representative of its own double
            # coset, so the sequence is forced constant from here on.
            sequences.append(BedardSequence(I, tuple(steps) + ((u, next_type),)))
            return
        members = coset_members(next_type, u, F.apply_subset(cur_type))
        candidates = [
            x
            for x in weyl.min_double_reps(n, next_type, F.apply_subset(next_type))
            if x.perm in members
        ]
        for cand in candidates:
            if cand.perm == u.perm and next_type == cur_type:
                sequences.append(
                    BedardSequence(I, tuple(steps) + ((cand, next_type),))
                )
            else:
                extend(steps + [(cand, next_type)], cand, next_type)

    for u0 in weyl.min_double_reps(n, I, F.apply_subset(I)):
        extend([(u0, I)], u0, I)

    found = sorted(s.u_inf.perm for s in sequences)
    expected = sorted(w.perm for w in _IW_for(n, I))
    if found != expected:
        raise RuntimeError(
            f"sequence enumeration is not a bijection onto the coset "
            f"representatives for I={sorted(I)} (got {len(found)}, "
            f"expected {len(expected)})"
        )
    return tuple(
        sorted(sequences, key=lambda s: s.u_inf.sort_key())
    )


def sequence_for(
    w: WeylElement, I: frozenset[int], F: FrobeniusAction
) -> BedardSequence:
    """The unique sequence stabilizing at w."""
    table = {s.u_inf.perm: s for s in enumerate_sequences(w.n, I, F)}
    seq = table.get(w.perm)
    if seq is None:
        raise ValueError("element is not a minimal coset representative for I")
    return seq


def flag_variety_dim(n: int, subset: frozenset[int]) -> int:
    """Dimension of the variety of parabolics of the given type."""
    full = weyl.length(weyl.longest_element(n))
    return full - weyl.length(weyl.longest_parabolic_element(n, subset))


def stratum_dimension(
    w: WeylElement, I: frozenset[int], F: FrobeniusAction
) -> int:
    """l(u_inf) + dim P_{I_inf cap F(I_inf)} - dim P_{I_inf}."""
    seq = sequence_for(w, I, F)
    meet = seq.I_inf & F.apply_subset(seq.I_inf)
    return (
        weyl.length(seq.u_inf)
        + flag_variety_dim(w.n, meet)
        - flag_variety_dim(w.n, seq.I_inf)
    )


def is_irreducible(
    w: WeylElement, I: frozenset[int], F: FrobeniusAction
) -> bool:
    """Irreducibility of the fine stratum labelled by w.

    The stratum is reducible exactly when W_{I_inf} u_inf sits inside a
    proper F-stable standard parabolic subgroup; the smallest candidate
    is generated by I_inf together with the support of u_inf, closed
    under F.
    """
    seq = sequence_for(w, I, F)
    closure = set(seq.I_inf | weyl.support(seq.u_inf))
    while True:
        grown = closure | {F(i) for i in closure}
        if grown == closure:
            break
        closure = grown
    return frozenset(closure) == frozenset(range(1, w.n + 1))


def stratum_table(c: int, g: int | None = None) -> list[dict]:
    """One row per fine stratum label of the rank-c Lagrangian space."""
    I = weyl.siegel_type(c)
    F = FrobeniusAction.trivial(c)
    rows = []
    for w in weyl.enumerate_IW(c):
        seq = sequence_for(w, I, F)
        coarse = weyl.min_double_coset_rep(w, I, F.apply_subset(I))
        row = {
            "word": list(weyl.reduced_word(w)),
            "one_line": list(w.perm),
            "length": weyl.length(w),
            "I_inf": sorted(seq.I_inf),
            "u_sequence": [
                {"u": list(u.perm), "I": sorted(t)} for u, t in seq.steps
            ],
            "dimension": stratum_dimension(w, I, F),
            "irreducible": is_irreducible(w, I, F),
            "coarse_class": list(coarse.perm),
        }
        if g is not None:
            lifted = weyl.r_map_inv(w, g)
            row["lifted_one_line"] = list(lifted.perm)
            row["lifted_length"] = weyl.length(lifted)
            row["lifted_class"] = weyl.class_c(lifted)
            # the label needs the full rank c: it is not a lift from c-1
            row["lifted_class_is_exact"] = bool(w.perm[0] != 1) if c > 0 else False
        rows.append(row)
    return rows
