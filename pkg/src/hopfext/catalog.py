"""Canonical instances: group algebras, the four-dimensional
non-cocommutative Hopf algebra, the octonion sign loop, the standard
actions, and the pointwise integer evaluator for the non-associative
twisted monoid product.

Every builder verifies its output before returning it; constructing a
catalog entry is itself a test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Field, LinMap, RationalField, Space, base_space, invert
from .actions import ActionData, trivial_action as _trivial_action, verify_action
from .extensions import SplitExtensionData, verify_split_extension
from .structures import (
    BialgebraData,
    HopfData,
    linearize_magma,
    trivial_bialgebra,
    verify_structure,
)


class CatalogError(Exception):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # bialgebra | hopf | action | extension
    value: object


# ---------------------------------------------------------------------------
# group and loop tables


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3_table() -> tuple[list[list[int]], list[int], list[str]]:
    """S3 as permutations of {0,1,2}; element 0 is the identity,
    1 and 2 the 3-cycles, 3..5 the transpositions."""
    perms = [
        (0, 1, 2),
        (1, 2, 0),
        (2, 0, 1),
        (1, 0, 2),
        (0, 2, 1),
        (2, 1, 0),
    ]
    index = {p: i for i, p in enumerate(perms)}

    def mul(p, q):  # (p*q)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(3))

    table = [[index[mul(p, q)] for q in perms] for p in perms]
    inv = [index[tuple(sorted(range(3), key=lambda i: p[i]))] for p in perms]
    labels = ["e", "r", "r2", "s", "sr", "sr2"]
    return table, inv, labels


def dihedral4_table() -> tuple[list[list[int]], list[int]]:
    """D4 of order 8: elements r^i s^j, encoded i + 4*j."""
    def mul(a, b):
        i, j = a % 4, a // 4
        k, l = b % 4, b // 4
        # (r^i s^j)(r^k s^l) = r^(i + k*(-1)^j) s^(j+l)
        ii = (i + (k if j == 0 else -k)) % 4
        return ii + 4 * ((j + l) % 2)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    inv = [next(b for b in range(8) if table[a][b] == 0) for a in range(8)]
    return table, inv


def quaternion_table() -> tuple[list[list[int]], list[int]]:
    """Q8 = {+-1, +-i, +-j, +-k}, encoded unit + 4*sign."""
    def mul(a, b):
        sa, ua = a // 4, a % 4
        sb, ub = b // 4, b % 4
        # unit table for 1,i,j,k with sign
        tab = {
            (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
            (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
            (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
            (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
        }
        u, extra = tab[(ua, ub)]
        return u + 4 * ((sa + sb + extra) % 2)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    inv = [next(b for b in range(8) if table[a][b] == 0) for a in range(8)]
    return table, inv


def product_table(t1: list[list[int]], t2: list[list[int]]) -> list[list[int]]:
    n1, n2 = len(t1), len(t2)

    def mul(a, b):
        a1, a2 = divmod(a, n2)
        b1, b2 = divmod(b, n2)
        return t1[a1][b1] * n2 + t2[a2][b2]

    return [[mul(a, b) for b in range(n1 * n2)] for a in range(n1 * n2)]


def group_inverses(table: list[list[int]], unit: int = 0) -> list[int]:
    n = len(table)
    return [next(b for b in range(n) if table[a][b] == unit) for a in range(n)]


def small_group_tables() -> dict[str, list[list[int]]]:
    """A stock of group tables up to order 8 for quantified invariants."""
    tables: dict[str, list[list[int]]] = {f"C{n}": cyclic_table(n) for n in range(1, 9)}
    tables["C2xC2"] = product_table(cyclic_table(2), cyclic_table(2))
    tables["C2xC4"] = product_table(cyclic_table(2), cyclic_table(4))
    tables["C2xC2xC2"] = product_table(cyclic_table(2), product_table(cyclic_table(2), cyclic_table(2)))
    tables["S3"] = s3_table()[0]
    tables["D4"] = dihedral4_table()[0]
    tables["Q8"] = quaternion_table()[0]
    return tables


# Fano-plane cyclic triples fixing the octonion sign conventions:
# for each (i, j, k) here, e_i e_j = e_k (and cyclic), e_j e_i = -e_k.
FANO_TRIPLES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))


def octonion_loop_table() -> tuple[list[list[int]], list[int], list[int], list[str]]:
    """The 16-element loop {+-e_0 .. +-e_7}; index s*8 + i for sign s."""
    unit_mul: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(8):
        unit_mul[(0, i)] = (i, 0)
        unit_mul[(i, 0)] = (i, 0)
    for i in range(1, 8):
        unit_mul[(i, i)] = (0, 1)
    for i, j, k in FANO_TRIPLES:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            unit_mul[(a, b)] = (c, 0)
            unit_mul[(b, a)] = (c, 1)

    def mul(a, b):
        sa, ia = a // 8, a % 8
        sb, ib = b // 8, b % 8
        i, s = unit_mul[(ia, ib)]
        return i + 8 * ((sa + sb + s) % 2)

    table = [[mul(a, b) for b in range(16)] for a in range(16)]
    left_inv = [next(b for b in range(16) if table[b][a] == 0) for a in range(16)]
    right_inv = [next(b for b in range(16) if table[a][b] == 0) for a in range(16)]
    labels = [f"e{i}" for i in range(8)] + [f"-e{i}" for i in range(8)]
    return table, left_inv, right_inv, labels


# ---------------------------------------------------------------------------
# structure builders


def build_cyclic(n: int, field: Field) -> HopfData:
    table = cyclic_table(n)
    inv = group_inverses(table)
    labels = [f"g{i}" for i in range(n)]
    return linearize_magma(table, 0, field, inv, inv, name=f"kC{n}", labels=labels)


def build_s3(field: Field) -> HopfData:
    table, inv, labels = s3_table()
    return linearize_magma(table, 0, field, inv, inv, name="kS3", labels=labels)


def build_sweedler(field: Field) -> HopfData:
    """The four-dimensional Hopf algebra on 1, g, x, gx with g^2 = 1,
    x^2 = 0, xg = -gx; not cocommutative.  Needs characteristic != 2."""
    if field.from_int(2) == field.zero:
        raise CatalogError("the four-dimensional Hopf algebra needs characteristic != 2")
    one = field.one
    neg = field.neg(one)
    space = Space((base_space("H4", ("1", "g", "x", "gx")),))
    sq = space.tensor(space)
    I = Space(())

    def idx(i, j):
        return i * 4 + j

    m_entries = {}
    # structure constants: rows are products of basis pairs
    prods = {
        (0, 0): [(0, one)], (0, 1): [(1, one)], (0, 2): [(2, one)], (0, 3): [(3, one)],
        (1, 0): [(1, one)], (1, 1): [(0, one)], (1, 2): [(3, one)], (1, 3): [(2, one)],
        (2, 0): [(2, one)], (2, 1): [(3, neg)], (2, 2): [], (2, 3): [],
        (3, 0): [(3, one)], (3, 1): [(2, neg)], (3, 2): [], (3, 3): [],
    }
    for (i, j), terms in prods.items():
        for t, v in terms:
            m_entries[(t, idx(i, j))] = v
    m = LinMap(sq, space, field, m_entries)
    u = LinMap(I, space, field, {(0, 0): one})
    d_entries = {
        (idx(0, 0), 0): one,
        (idx(1, 1), 1): one,
        (idx(2, 0), 2): one,  # x (x) 1
        (idx(1, 2), 2): one,  # g (x) x
        (idx(3, 1), 3): one,  # gx (x) g
        (idx(0, 3), 3): one,  # 1 (x) gx
    }
    delta = LinMap(space, sq, field, d_entries)
    eps = LinMap(space, I, field, {(0, 0): one, (0, 1): one})
    s_entries = {(0, 0): one, (1, 1): one, (3, 2): neg, (2, 3): one}
    s = LinMap(space, space, field, s_entries)
    return HopfData(space, m, u, delta, eps, s, s)


def build_octonion_loop(field: Field) -> HopfData:
    table, left_inv, right_inv, labels = octonion_loop_table()
    return linearize_magma(table, 0, field, left_inv, right_inv, name="kO", labels=labels)


# ---------------------------------------------------------------------------
# action builders


def group_like_action(acting: BialgebraData, acted: BialgebraData, images: dict[tuple[int, int], int]) -> ActionData:
    """Action sending basis pair (b, x) to the basis element images[(b, x)]."""
    F = acting.field
    nb, nx = acting.dim, acted.dim
    entries = {(images[(b, x)], b * nx + x): F.one for b in range(nb) for x in range(nx)}
    act = LinMap(acting.space.tensor(acted.space), acted.space, F, entries)
    return ActionData(acting, acted, act)


def build_c2_inv_c3_action(field: Field) -> ActionData:
    """C2 acting on the cyclic group algebra of order 3 by inversion."""
    b = build_cyclic(2, field)
    x = build_cyclic(3, field)
    images = {(0, j): j for j in range(3)} | {(1, j): (-j) % 3 for j in range(3)}
    return group_like_action(b, x, images)


def build_c4_pow_c5_action(field: Field) -> ActionData:
    """The multiplicative group {1,2,3,4} mod 5 acting on additive C5 by
    exponentiation: (b, x) -> x**b mod 5.

    A valid bialgebra action between group algebras, but one whose
    module-associativity fails, e.g. ((2 then 3) vs 6=1 on x=2).
    """
    values = [1, 2, 3, 4]
    index = {v: i for i, v in enumerate(values)}
    table = [[index[(a * c) % 5] for c in values] for a in values]
    inv = group_inverses(table)
    b = linearize_magma(table, 0, field, inv, inv, name="kU5", labels=[str(v) for v in values])
    x = build_cyclic(5, field)
    images = {(bi, xj): pow(xj, values[bi], 5) for bi in range(4) for xj in range(5)}
    return group_like_action(b, x, images)


def _unit_order(u: int, n: int) -> int:
    m, acc = 1, u % n
    while acc != 1:
        acc = (acc * u) % n
        m += 1
    return m


def random_group_like_action(rng: random.Random, field: Field, max_dim: int = 21) -> ActionData:
    """A guaranteed-valid Hopf action: a cyclic group acting on a cyclic
    group algebra through a power automorphism of compatible order.

    Every draw is valid by construction; ``max_dim`` bounds the twisted
    product's dimension (acting order times acted order).
    """
    choices = []
    for n in range(3, 8):
        for u in range(1, n):
            if _gcd(u, n) == 1 and n * _unit_order(u, n) <= max_dim:
                choices.append((n, u))
    n, u = rng.choice(choices)
    m = _unit_order(u, n)
    b = build_cyclic(m, field)
    x = build_cyclic(n, field)
    images = {(i, j): (j * pow(u, i, n)) % n for i in range(m) for j in range(n)}
    return group_like_action(b, x, images)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# extension builders


def gamma_extension(a: BialgebraData, gamma: LinMap | None = None) -> SplitExtensionData:
    """The split extension I -> A <=> A determined by an isomorphism of A."""
    x = trivial_bialgebra(a.field)
    if gamma is None:
        gamma = a.identity()
    gamma_inv = invert(gamma)
    kappa = a.u.cast(x.space, a.space)
    lam = a.eps.cast(a.space, x.space)
    return SplitExtensionData(x, a, a, kappa=kappa, alpha=gamma, e=gamma_inv, lam=lam)


def sign_splitting(field: Field) -> tuple[HopfData, HopfData, LinMap, LinMap]:
    """The parity morphism from the S3 group algebra onto kC2, split by
    the transposition subgroup: returns (A, B, alpha, e)."""
    a = build_s3(field)
    b = build_cyclic(2, field)
    one = field.one
    # basis order: e, r, r2 even; s, sr, sr2 odd
    alpha = LinMap(a.space, b.space, field, {(0, 0): one, (0, 1): one, (0, 2): one,
                                             (1, 3): one, (1, 4): one, (1, 5): one})
    e = LinMap(b.space, a.space, field, {(0, 0): one, (3, 1): one})
    return a, b, alpha, e


def sweedler_projection(field: Field) -> tuple[HopfData, HopfData, LinMap, LinMap]:
    """The projection of the four-dimensional Hopf algebra onto kC2
    (g -> g, x -> 0), split by g -> g: returns (A, B, alpha, e)."""
    a = build_sweedler(field)
    b = build_cyclic(2, field)
    one = field.one
    alpha = LinMap(a.space, b.space, field, {(0, 0): one, (1, 1): one})
    e = LinMap(b.space, a.space, field, {(0, 0): one, (1, 1): one})
    return a, b, alpha, e


# ---------------------------------------------------------------------------
# the catalog front door


STRUCTURE_NAMES = ("kC2", "kC3", "kS3", "sweedler4", "octonion_loop")
ACTION_NAMES = ("trivial_action", "c2_inv_c3_action", "c4_pow_c5_action")
EXTENSION_NAMES = ("gamma_extension",)


def build(name: str, field: Field | None = None, **params) -> CatalogEntry:
    """Build and verify a named catalog entry.

    Structure names: kC<n>, kS3, sweedler4, octonion_loop.
    Action names: trivial_action (params acted=, acting=),
    c2_inv_c3_action, c4_pow_c5_action.
    Extension names: gamma_extension (params a=, gamma=).
    """
    if field is None:
        field = RationalField()

    value: object
    if name.startswith("kC") and name[2:].isdigit():
        n = int(name[2:])
        if n < 1:
            raise CatalogError("cyclic order must be >= 1")
        value = build_cyclic(n, field)
        kind = "hopf"
    elif name == "kS3":
        value = build_s3(field)
        kind = "hopf"
    elif name == "sweedler4":
        value = build_sweedler(field)
        kind = "hopf"
    elif name == "octonion_loop":
        value = build_octonion_loop(field)
        kind = "hopf"
    elif name == "trivial_action":
        acted = params.get("acted") or build_cyclic(3, field)
        acting = params.get("acting") or build_cyclic(2, field)
        value = _trivial_action(acted, acting)
        kind = "action"
    elif name == "c2_inv_c3_action":
        value = build_c2_inv_c3_action(field)
        kind = "action"
    elif name == "c4_pow_c5_action":
        value = build_c4_pow_c5_action(field)
        kind = "action"
    elif name == "gamma_extension":
        a = params.get("a") or build_cyclic(2, field)
        value = gamma_extension(a, params.get("gamma"))
        kind = "extension"
    else:
        raise CatalogError(f"unknown catalog name {name!r}")

    _verify_entry(name, kind, value)
    return CatalogEntry(name, kind, value)


def _verify_entry(name: str, kind: str, value: object):
    if kind == "hopf":
        assert isinstance(value, HopfData)
        rep = verify_structure(value, "hopf")
    elif kind == "action":
        assert isinstance(value, ActionData)
        rep = verify_action(value)
    elif kind == "extension":
        assert isinstance(value, SplitExtensionData)
        rep = verify_split_extension(value)
    else:
        raise CatalogError(f"unknown entry kind {kind!r}")
    if not rep.passed:
        bad = ", ".join(c.name for c in rep.failures())
        raise CatalogError(f"catalog entry {name!r} fails verification: {bad}")


# ---------------------------------------------------------------------------
# the pointwise monoid witness


def monoid_semidirect_eval(pair1: tuple[int, int], pair2: tuple[int, int]) -> tuple[int, int]:
    """The twisted product on (N, +) x (N>0, *): ((x,b),(y,c)) -> (x + y**b, b*c).

    Exact big-integer evaluation; this infinite-monoid product is
    non-associative, which is the pointwise shadow of the finite
    exponentiation action above.
    """
    x, b = pair1
    y, c = pair2
    if x < 0 or y < 0:
        raise CatalogError("first components must be nonnegative")
    if b < 1 or c < 1:
        raise CatalogError("second components must be >= 1")
    return (x + y**b, b * c)
