"""Signed six-term vanishing sums of roots of unity.

A six-component vector of signed roots vanishes in exactly three ways: a
partition into three antipodal pairs (type1), a partition into two rotated
cube-root triples (type2), or the irreducible shape
x*(five special fifth roots) plus -x*(two primitive cube roots) (type3).
The interaction enumerations bound how many residue classes of a candidate
spectrum can pairwise differ by type2/type3 vectors, via an exact clique
computation on explicitly laid-out candidate vectors.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .cyclotomic import CycloSum, RootOfUnity, as_fraction, cyclotomic_poly
from .errors import ClassificationError
from .intervals import IntervalUnion
from .jsonio import fraction_to_str

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)
_FIFTH = Fraction(1, 5)

def _pair_partitions() -> tuple[tuple[tuple[int, int], ...], ...]:
    """The 15 partitions of {0..5} into three pairs."""
    out = []
    items = list(range(6))

    def rec(rest: list[int], acc: list[tuple[int, int]]) -> None:
        if not rest:
            out.append(tuple(acc))
            return
        first = rest[0]
        for other in rest[1:]:
            nxt = [x for x in rest if x not in (first, other)]
            rec(nxt, acc + [(first, other)])

    rec(items, [])
    return tuple(out)


_PAIR_PARTITIONS = _pair_partitions()

# splits of {0..5} into two triples, first one containing 0
_TRIPLE_SPLITS: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = tuple(
    (
        (0,) + rest,
        tuple(x for x in range(1, 6) if x not in rest),
    )
    for rest in itertools.combinations(range(1, 6), 2)
)


@dataclass(frozen=True)
class SignedRootVector:
    """Six (sign, root) components; the value of component i is sign_i*root_i."""

    terms: tuple[tuple[int, RootOfUnity], ...]

    def __post_init__(self) -> None:
        if len(self.terms) != 6:
            raise ValueError("exactly six components required")
        norm = []
        for sign, root in self.terms:
            if sign not in (1, -1):
                raise ValueError("signs must be +1 or -1")
            norm.append((sign, root))
        object.__setattr__(self, "terms", tuple(norm))

    @staticmethod
    def from_frequency(omega: IntervalUnion, lam: object) -> "SignedRootVector":
        """(e(lam*(a1+r1)), -e(lam*a1), ..., -e(lam*a3)) for a three-piece set."""
        lam = as_fraction(lam)
        if len(omega.pieces) != 3:
            raise ValueError("need exactly three pieces")
        terms = []
        for a, r in omega.pieces:
            terms.append((1, RootOfUnity(lam * (a + r))))
            terms.append((-1, RootOfUnity(lam * a)))
        return SignedRootVector(tuple(terms))

    @staticmethod
    def zero_frequency() -> "SignedRootVector":
        one = RootOfUnity(Fraction(0))
        return SignedRootVector(tuple((1 if i % 2 == 0 else -1, one) for i in range(6)))

    @staticmethod
    def from_value_exponents(exponents: Sequence[object]) -> "SignedRootVector":
        """All-plus vector whose component values have the given exponents."""
        return SignedRootVector(
            tuple((1, RootOfUnity(as_fraction(e))) for e in exponents)
        )

    def value_exponents(self) -> tuple[Fraction, ...]:
        """Exponents of the component values, signs absorbed as half turns."""
        return tuple(
            (root.exponent + (0 if sign == 1 else _HALF)) % 1
            for sign, root in self.terms
        )

    def value(self) -> CycloSum:
        return CycloSum.from_exponents(self.value_exponents())

    def rotated(self, root: RootOfUnity) -> "SignedRootVector":
        return SignedRootVector(tuple((s, r * root) for s, r in self.terms))


@dataclass(frozen=True)
class TypeTag:
    """Classification tag plus the structural witness.

    type1 witness: three index pairs with cancelling values;
    type2 witness: two index triples, each a rotated cube-root triple;
    type3 witness: (x root, quad indices, pair indices) in the normal form
    x*(fifth roots 1..4) plus -x*(omega, omega^2);
    not-vanishing carries no witness.
    """

    tag: str
    witness: object = None


def _is_zero_pair(e1: Fraction, e2: Fraction) -> bool:
    return (e1 - e2) % 1 == _HALF


def _is_zero_triple(e1: Fraction, e2: Fraction, e3: Fraction) -> bool:
    d1 = (e2 - e1) % 1
    d2 = (e3 - e1) % 1
    return {d1, d2} == {_THIRD, 2 * _THIRD}


def _type3_normal_form(
    exps: Sequence[Fraction],
) -> Optional[tuple[RootOfUnity, tuple[int, ...], tuple[int, ...]]]:
    for pair in itertools.combinations(range(6), 2):
        quad = tuple(i for i in range(6) if i not in pair)
        e0 = exps[quad[0]]
        for j in range(1, 5):
            x = (e0 - Fraction(j, 5)) % 1
            want = {(x + Fraction(i, 5)) % 1 for i in range(1, 5)}
            if {exps[i] for i in quad} != want:
                continue
            pair_want = {(x + Fraction(5, 6)) % 1, (x + Fraction(1, 6)) % 1}
            if {exps[i] for i in pair} == pair_want:
                return RootOfUnity(x), quad, pair
    return None


def classify(v: SignedRootVector) -> TypeTag:
    """Trichotomy tag for the vector's total, with structural witness.

    A vanishing total is tested by the exact kernel; the pair partition is
    preferred over the triple split when both exist.
    """
    exps = v.value_exponents()
    if not v.value().is_zero():
        return TypeTag("not-vanishing")
    for partition in _PAIR_PARTITIONS:
        if all(_is_zero_pair(exps[i], exps[j]) for i, j in partition):
            return TypeTag("type1", partition)
    for left, right in _TRIPLE_SPLITS:
        if _is_zero_triple(*(exps[i] for i in left)) and _is_zero_triple(
            *(exps[i] for i in right)
        ):
            return TypeTag("type2", (left, right))
    normal = _type3_normal_form(exps)
    if normal is None:
        raise ClassificationError(
            "vanishing six-term sum outside the three known shapes"
        )
    return TypeTag("type3", normal)


@dataclass(frozen=True)
class SdpResult:
    value: CycloSum
    terms: SignedRootVector


def g_product(v: SignedRootVector, w: SignedRootVector) -> SignedRootVector:
    """Componentwise conjugate product with alternating position signs.

    For vectors built from frequencies over one set this realizes frequency
    subtraction: g_product(v_a, v_b) = v_(a-b).
    """
    out = []
    for i, ((sv, rv), (sw, rw)) in enumerate(zip(v.terms, w.terms)):
        pos_sign = 1 if i % 2 == 0 else -1
        out.append((pos_sign * sv * sw, rv * rw.conjugate()))
    return SignedRootVector(tuple(out))


def sdp(v: SignedRootVector, w: SignedRootVector) -> SdpResult:
    """Skew dot product: alternating-sign sum of componentwise v_i * conj(w_i).

    The value equals the total of the g_product term vector; it vanishes
    exactly when the two underlying frequencies differ by a zero-set member.
    """
    terms = g_product(v, w)
    return SdpResult(terms.value(), terms)


# ---------------------------------------------------------------------------
# interaction enumerations
# ---------------------------------------------------------------------------


def _root_numerators(order: int, scale: int) -> list[int]:
    step = scale // order
    return [k * step for k in range(order)]


class _TagCache:
    """Rotation-invariant classification of integer exponent 6-tuples mod L."""

    def __init__(self, scale: int) -> None:
        self.scale = scale
        self.half = scale // 2
        self.third = scale // 3
        self._cache: dict[tuple[int, ...], str] = {}

    def _canonical(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        L = self.scale
        return min(
            tuple(sorted((e - r) % L for e in exps)) for r in set(exps)
        )

    def tag(self, exps: tuple[int, ...]) -> str:
        key = self._canonical(exps)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = self._tag_of(key)
        self._cache[key] = result
        return result

    def _tag_of(self, exps: tuple[int, ...]) -> str:
        L = self.scale
        total = CycloSum.from_exponents(Fraction(e, L) for e in exps)
        if not total.is_zero():
            result = "none"
        else:
            half, third = self.half, self.third
            if any(
                all((exps[i] - exps[j]) % L == half for i, j in part)
                for part in _PAIR_PARTITIONS
            ):
                result = "type1"
            elif any(
                self._zero_triple(exps, left) and self._zero_triple(exps, right)
                for left, right in _TRIPLE_SPLITS
            ):
                result = "type2"
            else:
                result = "type3"
        return result

    def _zero_triple(self, exps: tuple[int, ...], idx: tuple[int, ...]) -> bool:
        L, third = self.scale, self.third
        a, b, c = (exps[i] for i in idx)
        d1 = (b - a) % L
        d2 = (c - a) % L
        return {d1, d2} == {third, 2 * third}


def _distinct_layouts(multiset: tuple[int, ...], half: int) -> list[tuple[int, ...]]:
    """All position assignments with one half-turn value pinned at index 1."""
    rest = list(multiset)
    rest.remove(half)
    seen = set()
    for perm in itertools.permutations(rest):
        seen.add((perm[0], half, perm[1], perm[2], perm[3], perm[4]))
    return sorted(seen)


def _type2_candidates(order: int, scale: int, cache: _TagCache) -> list[tuple[int, ...]]:
    half, third = scale // 2, scale // 3
    out: set[tuple[int, ...]] = set()
    for s in _root_numerators(order, scale):
        multiset = tuple(
            sorted(
                [
                    half,
                    (half + third) % scale,
                    (half + 2 * third) % scale,
                    s,
                    (s + third) % scale,
                    (s + 2 * third) % scale,
                ]
            )
        )
        if cache.tag(multiset) != "type2":
            continue
        out.update(_distinct_layouts(multiset, half))
    return sorted(out)


def _type3_candidates(order: int, scale: int, cache: _TagCache) -> list[tuple[int, ...]]:
    half, third, fifth = scale // 2, scale // 3, scale // 5
    out: set[tuple[int, ...]] = set()
    for x in _root_numerators(order, scale):
        multiset = tuple(
            sorted(
                [
                    (x + fifth) % scale,
                    (x + 2 * fifth) % scale,
                    (x + 3 * fifth) % scale,
                    (x + 4 * fifth) % scale,
                    (x + half + third) % scale,
                    (x + half + 2 * third) % scale,
                ]
            )
        )
        if half not in multiset:
            continue
        if cache.tag(multiset) != "type3":
            continue
        out.update(_distinct_layouts(multiset, half))
    return sorted(out)


def _difference_exponents(
    u: tuple[int, ...], v: tuple[int, ...], scale: int, half: int
) -> tuple[int, ...]:
    return (
        (u[0] - v[0]) % scale,
        (u[1] - v[1] + half) % scale,
        (u[2] - v[2]) % scale,
        (u[3] - v[3] + half) % scale,
        (u[4] - v[4]) % scale,
        (u[5] - v[5] + half) % scale,
    )


def _max_clique(adj: list[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique on a bitset adjacency list."""
    if n == 0:
        return 0, ()
    if not any(adj):
        return 1, (0,)
    best_size = 1
    best: tuple[int, ...] = (0,)

    # quick triangle scan first; most of our graphs have clique number 2
    tri: Optional[tuple[int, int, int]] = None
    for u in range(n):
        mask = adj[u] & ~((1 << (u + 1)) - 1)
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                tri = (u, v, w)
                break
        if tri:
            break
    if tri is None:
        for u in range(n):
            if adj[u]:
                v = (adj[u] & -adj[u]).bit_length() - 1
                return 2, tuple(sorted((u, v)))
        return 1, (0,)

    best_size = 3
    best = tri

    # full branch and bound for the (rare) deeper case
    def expand(r: list[int], p: int) -> None:
        nonlocal best_size, best
        if not p:
            if len(r) > best_size:
                best_size = len(r)
                best = tuple(r)
            return
        if len(r) + bin(p).count("1") <= best_size:
            return
        pivot = (p & -p).bit_length() - 1
        cand = p & ~adj[pivot]
        cand |= 1 << pivot
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(r + [v], p & adj[v] & ~((1 << (v + 1)) - 1))
            p &= ~(1 << v)

    expand([], (1 << n) - 1)
    return best_size, tuple(sorted(best))


@dataclass(frozen=True)
class InteractionReport:
    kind: str
    order_bound: int
    assumption_filter: bool
    vertex_count: int
    edge_count: int
    max_family: int
    family_witness: tuple[tuple[str, ...], ...]
    pair_configuration_count: Optional[int] = None
    pair_configuration_witness: Optional[tuple[str, str]] = None
    types_can_mix: Optional[bool] = None
    at_most_one_per_type: Optional[bool] = None

    def to_json_dict(self) -> dict:
        data: dict = {
            "orderBound": self.order_bound,
            "assumptionFilter": self.assumption_filter,
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "maxFamily": self.max_family,
            "witnesses": [list(w) for w in self.family_witness],
        }
        if self.pair_configuration_count is not None:
            data["arrayPairCount"] = self.pair_configuration_count
            if self.pair_configuration_witness is not None:
                data["arrayPairWitness"] = list(self.pair_configuration_witness)
        if self.types_can_mix is not None:
            data["typesCanMix"] = self.types_can_mix
            data["atMostOneCosetPerType"] = self.at_most_one_per_type
        return data


def _serialize_vertex(exps: tuple[int, ...], scale: int) -> tuple[str, ...]:
    return tuple(fraction_to_str(Fraction(e, scale)) for e in exps)


def _interaction(
    kind: str, order_bound: int, assumption_filter: bool
) -> InteractionReport:
    if kind == "type2-type2":
        if order_bound % 6 != 0:
            raise ValueError("order bound must be a multiple of 6")
        scale = math.lcm(order_bound, 6)
    else:
        if order_bound % 30 != 0:
            raise ValueError("order bound must be a multiple of 30")
        scale = math.lcm(order_bound, 30)
    half = scale // 2
    cache = _TagCache(scale)

    kinds: list[str] = []
    vertices: list[tuple[int, ...]] = []
    if kind in ("type2-type2", "type3-type2"):
        t2 = _type2_candidates(order_bound, scale, cache)
        vertices.extend(t2)
        kinds.extend(["type2"] * len(t2))
    if kind in ("type3-type3", "type3-type2"):
        t3 = _type3_candidates(order_bound, scale, cache)
        vertices.extend(t3)
        kinds.extend(["type3"] * len(t3))

    order = sorted(range(len(vertices)), key=lambda i: (vertices[i], kinds[i]))
    vertices = [vertices[i] for i in order]
    kinds = [kinds[i] for i in order]
    n = len(vertices)

    # A difference of distinct residue classes must vanish; under the
    # type1-iff-zero-class assumption it must avoid type1.  The kind only
    # restricts the class vectors themselves, not their differences.
    allowed = {"type2", "type3"}
    if not assumption_filter:
        allowed = allowed | {"type1"}

    adj = [0] * n
    edge_count = 0
    for i in range(n):
        vi = vertices[i]
        for j in range(i + 1, n):
            d = _difference_exponents(vi, vertices[j], scale, half)
            if cache.tag(d) in allowed:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                edge_count += 1

    clique_size, clique = _max_clique(adj, n)
    max_family = clique_size + 1  # the zero residue class always joins

    zero_vec = (0, half, 0, half, 0, half)
    witness = tuple(
        [_serialize_vertex(zero_vec, scale)]
        + [_serialize_vertex(vertices[i], scale) for i in clique]
    )

    report = InteractionReport(
        kind=kind,
        order_bound=order_bound,
        assumption_filter=assumption_filter,
        vertex_count=n,
        edge_count=edge_count,
        max_family=max_family,
        family_witness=witness,
    )
    if kind == "type3-type2":
        mixed_edge = False
        one_each = True
        for i in range(n):
            mask = adj[i]
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if j <= i:
                    continue
                if kinds[i] != kinds[j]:
                    mixed_edge = True
                    common = adj[i] & adj[j]
                    if common:
                        one_each = False
        report = InteractionReport(
            **{
                **report.__dict__,
                "types_can_mix": mixed_edge,
                "at_most_one_per_type": one_each,
            }
        )
    return report


def _canonical_array_pairs(order_bound: int) -> tuple[int, Optional[tuple[str, str]]]:
    """Block-form pair scan: count (x, y) admitting a type2 difference.

    Both vectors are taken in the two-triple normal form; the second one is
    permuted within its triples and may have its triples swapped, and the
    signs are allocated per triple.  A pair counts when some configuration
    has vanishing alternating products forming a type2 vector.
    """
    scale = math.lcm(order_bound, 6)
    half, third = scale // 2, scale // 3
    cache = _TagCache(scale)
    excluded = {half, (half + third) % scale, (half + 2 * third) % scale}
    xs = [x for x in _root_numerators(order_bound, scale) if x not in excluded]
    perms = list(itertools.permutations(range(3)))
    count = 0
    witness: Optional[tuple[str, str]] = None
    base = (0, third, 2 * third)
    for x in xs:
        row_x = base + tuple((x + t) % scale for t in base)
        for y in xs:
            row_y_first = base
            row_y_second = tuple((y + t) % scale for t in base)
            ok = False
            for swap_blocks in (False, True):
                b1, b2 = (
                    (row_y_second, row_y_first)
                    if swap_blocks
                    else (row_y_first, row_y_second)
                )
                for sg, mu in itertools.product(perms, perms):
                    arranged = tuple(b1[p] for p in sg) + tuple(b2[p] for p in mu)
                    for flip in (0, half):
                        terms = tuple(
                            (row_x[i] - arranged[i] + (flip if i < 3 else half - flip))
                            % scale
                            for i in range(6)
                        )
                        if cache.tag(terms) == "type2":
                            ok = True
                            break
                    if ok:
                        break
                if ok:
                    break
            if ok:
                count += 1
                if witness is None:
                    witness = (
                        fraction_to_str(Fraction(x, scale)),
                        fraction_to_str(Fraction(y, scale)),
                    )
    return count, witness


def enumerate_type2_type2(
    order_bound: int = 60, assumption_filter: bool = True
) -> InteractionReport:
    """Interaction of two-triple residue-class vectors.

    Reports the block-form pair count and the maximum mutually compatible
    family of explicit candidate vectors (zero class included).
    """
    report = _interaction("type2-type2", order_bound, assumption_filter)
    count, witness = _canonical_array_pairs(order_bound)
    return InteractionReport(
        **{
            **report.__dict__,
            "pair_configuration_count": count,
            "pair_configuration_witness": witness,
        }
    )


def enumerate_type3_type3(
    order_bound: int = 60, assumption_filter: bool = True
) -> InteractionReport:
    """Interaction of irreducible-shape residue-class vectors."""
    return _interaction("type3-type3", order_bound, assumption_filter)


def enumerate_type3_type2(
    order_bound: int = 60, assumption_filter: bool = True
) -> InteractionReport:
    """Mixed interaction; also reports whether the two shapes can coexist."""
    return _interaction("type3-type2", order_bound, assumption_filter)


@dataclass(frozen=True)
class Weight6Report:
    ok: bool
    order_bound: int
    checked: int
    vanishing: int
    counterexample: Optional[tuple[str, ...]]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "orderBound": self.order_bound,
            "checked": self.checked,
            "vanishing": self.vanishing,
            "counterexample": None
            if self.counterexample is None
            else list(self.counterexample),
        }


def verify_weight6_classification(order_bound: int = 30, cap: int = 60) -> Weight6Report:
    """Every vanishing signed six-term sum with orders dividing the bound
    must fall into one of the three shapes.

    Signs are absorbed as half turns, so the search runs over exponent
    multisets mod M (M doubled for odd bounds), normalized by rotation to
    start at exponent 0.
    """
    if order_bound < 1:
        raise ValueError("order bound must be positive")
    if order_bound > cap:
        raise ValueError(f"order bound exceeds the cap {cap}")
    m = order_bound if order_bound % 2 == 0 else 2 * order_bound
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        carry = cur[deg - 1]
        cur = [0] + cur[:-1]
        if carry:
            for i in range(deg):
                cur[i] -= carry * phi[i]

    def add(vec: tuple[int, ...], row: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(vec, row))

    checked = 0
    vanishing = 0
    counterexample: Optional[tuple[str, ...]] = None
    base = rows[0]
    for e2 in range(m):
        p2 = add(base, rows[e2])
        for e3 in range(e2, m):
            p3 = add(p2, rows[e3])
            for e4 in range(e3, m):
                p4 = add(p3, rows[e4])
                for e5 in range(e4, m):
                    p5 = add(p4, rows[e5])
                    for e6 in range(e5, m):
                        checked += 1
                        if any(
                            a + b for a, b in zip(p5, rows[e6])
                        ):
                            continue
                        vanishing += 1
                        exps = (0, e2, e3, e4, e5, e6)
                        vec = SignedRootVector.from_value_exponents(
                            Fraction(e, m) for e in exps
                        )
                        try:
                            tag = classify(vec)
                        except ClassificationError:
                            tag = None
                        if tag is None or tag.tag not in (
                            "type1",
                            "type2",
                            "type3",
                        ):
                            counterexample = tuple(
                                fraction_to_str(Fraction(e, m)) for e in exps
                            )
                            return Weight6Report(
                                False, order_bound, checked, vanishing, counterexample
                            )
    return Weight6Report(True, order_bound, checked, vanishing, None)
