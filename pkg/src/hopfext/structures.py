"""Structure-constant (bi/Hopf)algebras and the axiom-verification engine.

A structure is a based space together with sparse maps m, u, delta, eps
(and optionally left/right antipodes).  Verification compares the two
sides of each axiom as exact sparse maps and reports the first
differing basis position as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Field,
    LinMap,
    Space,
    base_space,
    compose,
    compose_all,
    first_difference,
    symmetry,
    tensor,
    tensor_all,
)


class StructureError(Exception):
    """Raised when structure data is malformed (bad shapes, no unit, ...)."""


# ---------------------------------------------------------------------------
# verification reports


@dataclass(frozen=True)
class Witness:
    """First basis position where the two sides of a check differ."""

    row: int
    col: int
    row_label: str
    col_label: str
    left: str
    right: str

    def __str__(self):
        return (
            f"at output {self.row_label!r} (row {self.row}), input {self.col_label!r} "
            f"(col {self.col}): left={self.left} right={self.right}"
        )


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Witness | None = None

    def __str__(self):
        mark = "ok" if self.passed else "FAIL"
        tail = "" if self.witness is None else f"  [{self.witness}]"
        return f"{mark:4} {self.name}{tail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks)

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def make_check(name: str, lhs: LinMap, rhs: LinMap) -> Check:
    diff = first_difference(lhs, rhs)
    if diff is None:
        return Check(name, True, None)
    row, col, a, b = diff
    F = lhs.field
    return Check(
        name,
        False,
        Witness(row, col, lhs.codomain.label(row), lhs.domain.label(col), F.fmt(a), F.fmt(b)),
    )


def make_multi_check(name: str, pairs: Sequence[tuple[LinMap, LinMap]]) -> Check:
    """One named check over several required equalities (first failure wins)."""
    for lhs, rhs in pairs:
        c = make_check(name, lhs, rhs)
        if not c.passed:
            return c
    return Check(name, True, None)


def fact_check(name: str, passed: bool, left: str, right: str) -> Check:
    """A named check on a non-entrywise fact (a rank, an implication);
    the witness records the two compared quantities."""
    if passed:
        return Check(name, True, None)
    return Check(name, False, Witness(0, 0, "-", "-", left, right))


# ---------------------------------------------------------------------------
# structure data

LEVELS = ("coalgebra", "algebra", "bialgebra", "hopf")


class BialgebraData:
    """A (possibly non-associative) bialgebra given by structure constants.

    Maps: m : A(x)A -> A, u : I -> A, delta : A -> A(x)A, eps : A -> I.
    Multiplication need not be associative; comultiplication is expected
    coassociative (and is checked, never assumed).
    """

    def __init__(self, space: Space, m: LinMap, u: LinMap, delta: LinMap, eps: LinMap):
        if len(space.factors) != 1:
            raise StructureError("structure carrier must be a single base space")
        field = m.field
        sq = space.tensor(space)
        unit = Space(())
        for f, dom, cod, name in (
            (m, sq, space, "m"),
            (u, unit, space, "u"),
            (delta, space, sq, "delta"),
            (eps, space, unit, "eps"),
        ):
            if f.field != field:
                raise StructureError(f"map {name} uses a different ground field")
            if f.domain.dim != dom.dim or f.codomain.dim != cod.dim:
                raise StructureError(
                    f"map {name} has shape {f.codomain.dim}x{f.domain.dim}, expected {cod.dim}x{dom.dim}"
                )
        self.space = space
        self.field = field
        self.m = m.cast(sq, space)
        self.u = u.cast(unit, space)
        self.delta = delta.cast(space, sq)
        self.eps = eps.cast(space, unit)
        self._reports: dict[str, VerificationReport] = {}
        self._flags: tuple[bool, bool] | None = None

    # -- bookkeeping ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis_labels(self) -> tuple[str, ...]:
        return self.space.factors[0].labels

    @property
    def name(self) -> str:
        return self.space.factors[0].name

    def identity(self) -> LinMap:
        return LinMap.identity(self.space, self.field)

    def sym(self) -> LinMap:
        return symmetry(self.space, self.space, self.field)

    def is_hopf(self) -> bool:
        return isinstance(self, HopfData)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} dim={self.dim} over {self.field!r}>"


class HopfData(BialgebraData):
    """Bialgebra with left/right antipodes.

    In the associative case a single supplied antipode populates both
    slots (the antipode is unique there); in the non-associative case
    both must be given explicitly.
    """

    def __init__(
        self,
        space: Space,
        m: LinMap,
        u: LinMap,
        delta: LinMap,
        eps: LinMap,
        s_left: LinMap | None = None,
        s_right: LinMap | None = None,
    ):
        super().__init__(space, m, u, delta, eps)
        if s_left is None and s_right is None:
            raise StructureError("a Hopf structure needs at least one antipode")
        if s_left is None or s_right is None:
            assoc, _ = structural_flags(self)
            if not assoc:
                raise StructureError(
                    "non-associative multiplication: both antipodes must be supplied"
                )
            s_left = s_left if s_left is not None else s_right
            s_right = s_right if s_right is not None else s_left
        for s, name in ((s_left, "s_left"), (s_right, "s_right")):
            if s.field != self.field:
                raise StructureError(f"{name} uses a different ground field")
            if s.domain.dim != self.dim or s.codomain.dim != self.dim:
                raise StructureError(f"{name} must be a {self.dim}x{self.dim} map")
        self.s_left = s_left.cast(self.space, self.space)
        self.s_right = s_right.cast(self.space, self.space)


def structural_flags(a: BialgebraData) -> tuple[bool, bool]:
    """(associative, cocommutative) as exact map equalities."""
    if a._flags is not None:
        return a._flags
    one = a.identity()
    left = compose(a.m, tensor(a.m, one))
    right = compose(a.m, tensor(one, a.m))
    associative = left == right
    cocommutative = compose(a.sym(), a.delta) == a.delta
    a._flags = (associative, cocommutative)
    return a._flags


# ---------------------------------------------------------------------------
# the axiom engine


def verify_structure(a: BialgebraData, level: str = "bialgebra") -> VerificationReport:
    """Check every axiom at or below the requested level.

    Levels are ordered coalgebra < algebra < bialgebra < hopf; the
    report lists one named check per axiom, in that order.  At hopf
    level the input must carry antipodes.
    """
    if level not in LEVELS:
        raise StructureError(f"unknown level {level!r}")
    cached = a._reports.get(level)
    if cached is not None:
        return cached
    if level == "hopf" and not isinstance(a, HopfData):
        raise StructureError("hopf level requires antipodes")

    F = a.field
    one = a.identity()
    m, u, delta, eps = a.m, a.u, a.delta, a.eps
    sym = a.sym()
    checks: list[Check] = []

    # coalgebra axioms
    checks.append(
        make_check("coassociativity", compose(tensor(delta, one), delta), compose(tensor(one, delta), delta))
    )
    checks.append(make_check("counit_left", compose(tensor(eps, one), delta), one))
    checks.append(make_check("counit_right", compose(tensor(one, eps), delta), one))

    if LEVELS.index(level) >= LEVELS.index("algebra"):
        checks.append(make_check("unit_left", compose(m, tensor(u, one)), one))
        checks.append(make_check("unit_right", compose(m, tensor(one, u)), one))

    if LEVELS.index(level) >= LEVELS.index("bialgebra"):
        lhs = compose(delta, m)
        rhs = compose_all(tensor(delta, delta), tensor_all(one, sym, one), tensor(m, m))
        checks.append(make_check("comultiplication_multiplicative", lhs, rhs))
        checks.append(make_check("comultiplication_unital", compose(delta, u), tensor(u, u)))
        checks.append(make_check("counit_multiplicative", compose(eps, m), tensor(eps, eps)))
        checks.append(
            make_check("counit_unital", compose(eps, u), LinMap.identity(Space(()), F))
        )

    if level == "hopf":
        assert isinstance(a, HopfData)
        sl, sr = a.s_left, a.s_right
        target = compose(u, eps)
        checks.append(
            make_multi_check(
                "antipode",
                [
                    (compose_all(delta, tensor(sl, one), m), target),
                    (compose_all(delta, tensor(one, sr), m), target),
                ],
            )
        )
        for s, tag in ((sl, "left"), (sr, "right")):
            checks.append(
                make_multi_check(
                    f"{tag}_antipode_antimultiplicative",
                    [
                        (compose(s, m), compose_all(sym, tensor(s, s), m)),
                        (compose(s, u), u),
                    ],
                )
            )
            checks.append(
                make_multi_check(
                    f"{tag}_antipode_anticomultiplicative",
                    [
                        (compose(delta, s), compose_all(delta, sym, tensor(s, s))),
                        (compose(eps, s), eps),
                    ],
                )
            )

    report = VerificationReport(tuple(checks))
    a._reports[level] = report
    return report


# ---------------------------------------------------------------------------
# morphism checks (used by actions/extensions)


def morphism_checks(prefix: str, f: LinMap, src: BialgebraData, dst: BialgebraData, hopf: bool) -> list[Check]:
    """Named checks that ``f : src -> dst`` is a (bi/Hopf)algebra morphism."""
    checks = [
        make_check(f"{prefix}_multiplicative", compose(f, src.m), compose(dst.m, tensor(f, f))),
        make_check(f"{prefix}_unital", compose(f, src.u), dst.u),
        make_check(f"{prefix}_comultiplicative", compose(dst.delta, f), compose(tensor(f, f), src.delta)),
        make_check(f"{prefix}_counital", compose(dst.eps, f), src.eps),
    ]
    if hopf:
        if not (isinstance(src, HopfData) and isinstance(dst, HopfData)):
            raise StructureError(f"{prefix}: hopf morphism check needs antipodes on both sides")
        checks.append(
            make_check(f"{prefix}_left_antipode", compose(f, src.s_left), compose(dst.s_left, f))
        )
        checks.append(
            make_check(f"{prefix}_right_antipode", compose(f, src.s_right), compose(dst.s_right, f))
        )
    return checks


def is_morphism(f: LinMap, src: BialgebraData, dst: BialgebraData, hopf: bool = False) -> bool:
    return all(c.passed for c in morphism_checks("f", f, src, dst, hopf))


# ---------------------------------------------------------------------------
# builders


def linearize_magma(
    table: Sequence[Sequence[int]],
    unit: int,
    field: Field,
    left_inv: Sequence[int] | None = None,
    right_inv: Sequence[int] | None = None,
    name: str = "magma",
    labels: Sequence[str] | None = None,
) -> BialgebraData | HopfData:
    """Linearize a unital magma (or loop) multiplication table.

    Basis elements are the magma elements; each is group-like.  When
    inverse sequences are supplied the loop identities
    ``left_inv[g] * g = unit = g * right_inv[g]`` are validated and the
    antipodes permute the basis accordingly.
    """
    n = len(table)
    if n == 0:
        raise StructureError("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise StructureError(f"table row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise StructureError(f"table entry ({i},{j}) = {v} outside [0,{n})")
    if not (0 <= unit < n):
        raise StructureError(f"unit index {unit} outside [0,{n})")
    for j in range(n):
        if table[unit][j] != j or table[j][unit] != j:
            raise StructureError(f"element {unit} is not a two-sided unit (fails at {j})")

    if labels is None:
        labels = [f"e{i}" for i in range(n)]
    space = Space((base_space(name, labels),))
    one = field.one
    sq = space.tensor(space)
    m = LinMap(sq, space, field, {(table[i][j], i * n + j): one for i in range(n) for j in range(n)})
    u = LinMap(Space(()), space, field, {(unit, 0): one})
    delta = LinMap(space, sq, field, {(i * n + i, i): one for i in range(n)})
    eps = LinMap(space, Space(()), field, {(0, i): one for i in range(n)})

    if left_inv is None and right_inv is None:
        return BialgebraData(space, m, u, delta, eps)

    def inverse_map(seq: Sequence[int], side: str) -> LinMap:
        if len(seq) != n:
            raise StructureError(f"{side} inverse sequence has length {len(seq)}, expected {n}")
        for g, h in enumerate(seq):
            prod = table[h][g] if side == "left" else table[g][h]
            if prod != unit:
                raise StructureError(f"{side} inverse identity fails at element {g} (got {prod})")
        return LinMap(space, space, field, {(seq[g], g): one for g in range(n)})

    s_left = inverse_map(left_inv, "left") if left_inv is not None else None
    s_right = inverse_map(right_inv, "right") if right_inv is not None else None
    return HopfData(space, m, u, delta, eps, s_left, s_right)


def trivial_bialgebra(field: Field, name: str = "I") -> HopfData:
    """The one-dimensional structure; zero object among (Hopf) bialgebras."""
    return linearize_magma([[0]], 0, field, [0], [0], name=name, labels=["1"])
