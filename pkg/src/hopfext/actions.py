"""Actions of bialgebras and Hopf algebras, the braiding-like map built
from an action, and the associativity criteria for twisted products."""

from __future__ import annotations

from dataclasses import dataclass

from .core import LinMap, compose, compose_all, symmetry, tensor, tensor_all
from .structures import (
    BialgebraData,
    Check,
    HopfData,
    VerificationReport,
    make_check,
    structural_flags,
    verify_structure,
)


class ActionError(Exception):
    """Raised when action data is malformed or fails a required precondition."""


@dataclass(frozen=True)
class ActionData:
    """An action of ``acting`` on ``acted``: a map B (x) X -> X."""

    acting: BialgebraData
    acted: BialgebraData
    act: LinMap

    def __post_init__(self):
        b, x = self.acting, self.acted
        if b.field != x.field or self.act.field != b.field:
            raise ActionError("action components use different ground fields")
        dom = b.space.tensor(x.space)
        if self.act.domain.dim != dom.dim or self.act.codomain.dim != x.dim:
            raise ActionError(
                f"action map has shape {self.act.codomain.dim}x{self.act.domain.dim}, "
                f"expected {x.dim}x{dom.dim}"
            )
        object.__setattr__(self, "act", self.act.cast(dom, x.space))

    def is_hopf(self) -> bool:
        return self.acting.is_hopf() and self.acted.is_hopf()


@dataclass(frozen=True)
class ThetaMap:
    """The composite (act (x) 1) . (1 (x) sym) . (delta (x) 1) : B(x)X -> X(x)B."""

    map: LinMap
    source: ActionData


def _action_checks(a: ActionData) -> list[Check]:
    B, X, act = a.acting, a.acted, a.act
    F = act.field
    ib = B.identity()
    ix = X.identity()
    sym_bb = B.sym()
    sym_bx = symmetry(B.space, X.space, F)

    checks = [
        make_check("unit_of_acting", compose(act, tensor(B.u, ix)), ix),
        make_check("unit_of_acted", compose(act, tensor(ib, X.u)), compose(X.u, B.eps)),
    ]
    # acting twice along the two comultiplication legs must not depend on
    # their order
    straight = compose(tensor(ib, act), tensor(B.delta, ix))
    twisted = compose_all(tensor(B.delta, ix), tensor(sym_bb, ix), tensor(ib, act))
    checks.append(make_check("swap_invariance", straight, twisted))
    checks.append(make_check("counit_compatibility", compose(X.eps, act), tensor(B.eps, X.eps)))
    lhs = compose(X.delta, act)
    rhs = compose_all(tensor(B.delta, X.delta), tensor_all(ib, sym_bx, ix), tensor(act, act))
    checks.append(make_check("comultiplication_compatibility", lhs, rhs))
    return checks


def verify_action(a: ActionData) -> VerificationReport:
    """Check the five defining conditions of a bialgebra action.

    Both structures must already pass bialgebra verification; their
    failures, if any, are prepended to the report.
    """
    checks: list[Check] = []
    for tag, s in (("acting", a.acting), ("acted", a.acted)):
        sub = verify_structure(s, "bialgebra")
        if not sub.passed:
            checks.extend(Check(f"{tag}.{c.name}", c.passed, c.witness) for c in sub.failures())
    checks.extend(_action_checks(a))
    return VerificationReport(tuple(checks))


def _hopf_action_checks(a: ActionData) -> list[Check]:
    B, X, act = a.acting, a.acted, a.act
    assert isinstance(B, HopfData) and isinstance(X, HopfData)
    F = act.field
    ib = B.identity()
    ix = X.identity()
    sym_bx = symmetry(B.space, X.space, F)

    checks = [
        make_check(
            "module_associativity",
            compose(act, tensor(ib, act)),
            compose(act, tensor(B.m, ix)),
        ),
        make_check(
            "module_algebra",
            compose(act, tensor(ib, X.m)),
            compose_all(
                tensor_all(B.delta, ix, ix),
                tensor_all(ib, sym_bx, ix),
                tensor(act, act),
                X.m,
            ),
        ),
        make_check(
            "left_antipode_equivariance",
            compose(act, tensor(ib, X.s_left)),
            compose(X.s_left, act),
        ),
        make_check(
            "right_antipode_condition",
            compose_all(tensor(B.delta, ix), tensor(ib, act), tensor(B.s_right, X.s_right), act),
            tensor(B.eps, X.s_right),
        ),
    ]
    return checks


def verify_hopf_action(a: ActionData) -> VerificationReport:
    """Bialgebra-action checks plus the four Hopf-action conditions.

    The report is layered: structure failures, then the five bialgebra
    conditions, then the Hopf conditions, so the lowest violated layer
    is visible at a glance.
    """
    if not a.is_hopf():
        raise ActionError("hopf action verification needs antipodes on both structures")
    checks: list[Check] = []
    for tag, s in (("acting", a.acting), ("acted", a.acted)):
        sub = verify_structure(s, "hopf")
        if not sub.passed:
            checks.extend(Check(f"{tag}.{c.name}", c.passed, c.witness) for c in sub.failures())
    checks.extend(_action_checks(a))
    checks.extend(_hopf_action_checks(a))
    return VerificationReport(tuple(checks))


def trivial_action(acted: BialgebraData, acting: BialgebraData) -> ActionData:
    """The action through the counit: act = eps_B (x) 1_X."""
    return ActionData(acting, acted, tensor(acting.eps, acted.identity()))


def build_theta(a: ActionData) -> ThetaMap:
    """Assemble the braiding-like map; requires a verified action."""
    if not verify_action(a).passed:
        raise ActionError("theta requires a verified action")
    return theta_of(a)


def theta_of(a: ActionData) -> ThetaMap:
    B, X, act = a.acting, a.acted, a.act
    sym_bx = symmetry(B.space, X.space, act.field)
    mp = compose_all(tensor(B.delta, X.identity()), tensor(B.identity(), sym_bx), tensor(act, B.identity()))
    return ThetaMap(mp, a)


def verify_theta_identities(t: ThetaMap) -> VerificationReport:
    """The four compatibility identities of the braiding-like map."""
    a = t.source
    B, X = a.acting, a.acted
    th = t.map
    ib = B.identity()
    ix = X.identity()
    checks = [
        make_check(
            "braids_acted_multiplication",
            compose_all(tensor(th, ix), tensor(ix, th), tensor(X.m, ib)),
            compose(th, tensor(ib, X.m)),
        ),
        make_check("preserves_acting_unit", compose(th, tensor(B.u, ix)), tensor(ix, B.u)),
        make_check(
            "braids_acting_multiplication",
            compose_all(tensor(ib, th), tensor(th, ib), tensor(ix, B.m)),
            compose(th, tensor(B.m, ix)),
        ),
        make_check("preserves_acted_unit", compose(th, tensor(ib, X.u)), tensor(X.u, ib)),
    ]
    return VerificationReport(tuple(checks))


def twisted_multiplication(a: ActionData) -> LinMap:
    """The twisted product on X (x) B induced by the action."""
    B, X = a.acting, a.acted
    th = theta_of(a).map
    ib = B.identity()
    ix = X.identity()
    return compose(tensor(X.m, B.m), tensor_all(ix, th, ib))


def verify_assoc_conditions(a: ActionData) -> VerificationReport:
    """The two conditions governing associativity of the twisted product.

    Both structures must be associative bialgebras.  The report also
    records whether the twisted multiplication itself is associative,
    so the two directions of the equivalence can be tested against
    each other.
    """
    if not structural_flags(a.acting)[0] or not structural_flags(a.acted)[0]:
        raise ActionError("associativity criteria need associative acting and acted structures")
    B, X, act = a.acting, a.acted, a.act
    ib = B.identity()
    ix = X.identity()
    sym_bx = symmetry(B.space, X.space, act.field)

    checks = [
        make_check(
            "module_associativity",
            compose(act, tensor(B.m, ix)),
            compose(act, tensor(ib, act)),
        ),
        make_check(
            "module_algebra",
            compose(act, tensor(ib, X.m)),
            compose_all(
                tensor_all(B.delta, ix, ix),
                tensor_all(ib, sym_bx, ix),
                tensor(act, act),
                X.m,
            ),
        ),
    ]
    mt = twisted_multiplication(a)
    carrier_id = LinMap.identity(X.space.tensor(B.space), act.field)
    checks.append(
        make_check(
            "semidirect_associativity",
            compose(mt, tensor(mt, carrier_id)),
            compose(mt, tensor(carrier_id, mt)),
        )
    )
    return VerificationReport(tuple(checks))
