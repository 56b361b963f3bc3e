"""Acceptance suite: one test per criterion, all checks exact (no
tolerances anywhere).  A summary table is printed at the end of the run."""

import json
import random

from hopfext.core import LinMap, RationalField, compose, tensor
from hopfext.actions import (
    build_theta,
    trivial_action,
    verify_action,
    verify_assoc_conditions,
    verify_hopf_action,
    verify_theta_identities,
)
from hopfext.catalog import (
    build,
    build_cyclic,
    monoid_semidirect_eval,
    random_group_like_action,
    sign_splitting,
    sweedler_projection,
)
from hopfext.cli import dumps_canonical, main, structure_to_json
from hopfext.extensions import (
    CleftData,
    HypothesisError,
    MorphismTriple,
    check_reexpressed_action,
    induce_action,
    kernel,
    lambda_from_antipode,
    reconstruct_lambda,
    semidirect,
    split_short_five,
    verify_cleft_exact,
    verify_morphism_triple,
    verify_split_extension,
)
from hopfext.structures import structural_flags, verify_structure

from conftest import record_acceptance

Q = RationalField()


def _catalog_structures():
    return [build(n, Q).value for n in ("kC2", "kC3", "kS3", "sweedler4", "octonion_loop")]


def _catalog_actions():
    return [build(n, Q).value for n in ("trivial_action", "c2_inv_c3_action", "c4_pow_c5_action")]


def _catalog_extensions(sign_extension):
    exts = [build("gamma_extension", Q).value, sign_extension]
    for a in _catalog_actions():
        _, ext = semidirect(a)
        exts.append(ext)
    return exts


def _hopf_actions():
    acting = build_cyclic(2, Q)
    acted = build_cyclic(3, Q)
    return [trivial_action(acted, acting), build("c2_inv_c3_action", Q).value]


def test_criterion_01_paper_monoid_witness():
    left = monoid_semidirect_eval(monoid_semidirect_eval((0, 2), (1, 1)), (1, 1))
    right = monoid_semidirect_eval((0, 2), monoid_semidirect_eval((1, 1), (1, 1)))
    ok = left == (2, 2) and right == (4, 2)
    record_acceptance("1. twisted-monoid witness (2,2) vs (4,2)", ok)
    assert ok


def test_criterion_02_axiom_engine(kc2):
    ok = all(verify_structure(s, "hopf").passed for s in _catalog_structures())
    # a single mutated structure constant must trip a named check with witness
    from test_structures import _mutate, kc2_mutations
    from hopfext.structures import HopfData

    for name, pos, value in kc2_mutations(kc2):
        maps = {
            "m": kc2.m, "u": kc2.u, "delta": kc2.delta, "eps": kc2.eps,
            "s_left": kc2.s_left, "s_right": kc2.s_right,
        }
        maps[name] = _mutate(maps[name], pos, value)
        mutant = HopfData(kc2.space, maps["m"], maps["u"], maps["delta"], maps["eps"],
                          maps["s_left"], maps["s_right"])
        rep = verify_structure(mutant, "hopf")
        ok = ok and not rep.passed and all(c.witness is not None for c in rep.failures())
    record_acceptance("2. axiom engine: catalog passes, every kC2 mutation caught", ok)
    assert ok


def test_criterion_03_functor_round_trips(sign_extension):
    ok = True
    for a in _catalog_actions():
        _, ext = semidirect(a)
        ok = ok and verify_split_extension(ext).passed
        ok = ok and induce_action(ext).act == a.act
    for s in _catalog_extensions(sign_extension):
        from hopfext.extensions import build_iso_pair

        phi, psi = build_iso_pair(s)
        ok = ok and compose(phi, psi) == s.a.identity()
        xb = s.x.space.tensor(s.b.space)
        ok = ok and compose(psi, phi) == LinMap.identity(xb, Q)
        _, target = semidirect(induce_action(s))
        triple = MorphismTriple(
            s, target, g=s.b.identity(), v=s.x.identity(), p=psi.cast(codomain=target.a.space)
        )
        ok = ok and verify_morphism_triple(triple).passed
    record_acceptance("3. functor round trips on all catalog actions and extensions", ok)
    assert ok


def test_criterion_04_associativity_iff():
    inv = build("c2_inv_c3_action", Q).value
    rep = verify_assoc_conditions(inv)
    ok = rep.passed
    pow_a = build("c4_pow_c5_action", Q).value
    rep2 = verify_assoc_conditions(pow_a)
    ok = ok and not rep2.check("module_associativity").passed
    ok = ok and not rep2.check("module_algebra").passed
    semi = rep2.check("semidirect_associativity")
    ok = ok and not semi.passed and semi.witness is not None
    _, ext = semidirect(pow_a)
    ok = ok and ext.a.dim == 20
    record_acceptance("4. associativity criteria, both directions, with witness triple", ok)
    assert ok


def test_criterion_05_lambda_uniqueness(sign_extension):
    ok = True
    exts = _catalog_extensions(sign_extension)
    rng = random.Random(20260809)
    for _ in range(25):
        _, ext = semidirect(random_group_like_action(rng, Q, max_dim=42))
        exts.append(ext)
    for s in exts:
        lam = reconstruct_lambda(s.x, s.a, s.b, s.kappa, s.alpha, s.e)
        ok = ok and lam == s.lam
    record_acceptance("5. retraction uniqueness on catalog + 25 randomized extensions", ok)
    assert ok


def test_criterion_06_hopf_kernel_hypothesis():
    a, b, alpha, e = sign_splitting(Q)
    ext = lambda_from_antipode(a, b, alpha, e)
    ok = verify_split_extension(ext, "hopf").passed
    a4, b4, alpha4, e4 = sweedler_projection(Q)
    try:
        lambda_from_antipode(a4, b4, alpha4, e4)
        ok = False
    except HypothesisError:
        pass
    lker = kernel(alpha4, a4, b4, "LKer")
    rker = kernel(alpha4, a4, b4, "RKer")
    ok = ok and lker.dim == 2 and rker.dim == 2 and lker != rker
    record_acceptance("6. antipode-built extension passes; kernel hypothesis error raised", ok)
    assert ok


def test_criterion_07_split_short_five(inv_extension):
    from fractions import Fraction

    X, B = inv_extension.x, inv_extension.b
    v = LinMap(X.space, X.space, Q, {(0, 0): Fraction(1), (2, 1): Fraction(1), (1, 2): Fraction(1)})
    triple = MorphismTriple(
        inv_extension, inv_extension,
        g=B.identity(), v=v, p=tensor(v, B.identity()).cast(inv_extension.a.space, inv_extension.a.space),
    )
    res = split_short_five(triple)
    ok = res.applicable and res.report.passed
    ok = ok and compose(triple.p, res.p_inverse) == inv_extension.a.identity()

    rng = random.Random(424242)
    done = 0
    while done < 10:
        _, ext = semidirect(random_group_like_action(rng, Q, max_dim=15))
        n = ext.x.dim
        units = [t for t in range(1, n) if _coprime(t, n)]
        t_val = rng.choice(units)
        v = LinMap(ext.x.space, ext.x.space, Q, {((i * t_val) % n, i): Q.one for i in range(n)})
        p = tensor(v, ext.b.identity()).cast(ext.a.space, ext.a.space)
        trip = MorphismTriple(ext, ext, g=ext.b.identity(), v=v, p=p)
        res = split_short_five(trip)
        ok = ok and res.applicable and res.report.passed
        ok = ok and compose(res.p_inverse, p) == ext.a.identity()
        ok = ok and compose(p, res.p_inverse) == ext.a.identity()
        done += 1
    record_acceptance("7. Split Short Five Lemma on inversion triple + 10 randomized", ok)
    assert ok


def _coprime(a, b):
    while b:
        a, b = b, a % b
    return a == 1


def test_criterion_08_exact_and_cleft(sign_extension):
    s = sign_extension
    c = CleftData(a_prime=s.x, c_prime=s.a, b_prime=s.b, iota=s.kappa, pi=s.alpha, xi=s.lam, chi=s.e)
    rep = verify_cleft_exact(c)
    ok = rep.passed
    names = set(rep.names())
    ok = ok and {"kernel_is_product_span", "iota_image_is_left_kernel", "cleft_inverse", "cleft_decomposition"} <= names
    record_acceptance("8. order-6 sequence is exact and cleft (xi = retraction, chi = section)", ok)
    assert ok


def test_criterion_09_theta_and_reformulations(sign_extension, inv_extension):
    ok = True
    for a in _hopf_actions():
        ok = ok and verify_hopf_action(a).passed
        ok = ok and verify_theta_identities(build_theta(a)).passed
    hopf_exts = [build("gamma_extension", Q).value, sign_extension, inv_extension]
    _, triv_ext = semidirect(_hopf_actions()[0])
    hopf_exts.append(triv_ext)
    for s in hopf_exts:
        ok = ok and s.level == "hopf"
        ok = ok and check_reexpressed_action(s).passed
        ok = ok and verify_theta_identities(build_theta(induce_action(s))).passed
    record_acceptance("9. braiding-map identities and retraction-free forms on all Hopf instances", ok)
    assert ok


def test_criterion_10_octonion_loop(octonion):
    ok = octonion.dim == 16
    ok = ok and verify_structure(octonion, "hopf").passed
    ok = ok and structural_flags(octonion) == (False, True)
    record_acceptance("10. octonion loop: dim 16, all Hopf checks, non-assoc, cocommutative", ok)
    assert ok


def test_criterion_11_cocommutative_simplification(sign_extension, inv_extension):
    ok = True
    for a in _catalog_actions():
        if not (structural_flags(a.acting)[1] and structural_flags(a.acted)[1]):
            continue
        rep = verify_action(a)
        others = [c for c in rep.checks if c.name != "swap_invariance"]
        if all(c.passed for c in others):
            ok = ok and rep.check("swap_invariance").passed
    for s in [sign_extension, inv_extension, build("gamma_extension", Q).value]:
        if not structural_flags(s.a)[1]:
            continue
        rep = verify_split_extension(s)
        others = [c for c in rep.checks if c.name != "swap_invariance"]
        if all(c.passed for c in others):
            ok = ok and rep.check("swap_invariance").passed
    record_acceptance("11. cocommutative instances: swap-invariance conditions come for free", ok)
    assert ok


def test_criterion_12_cli_contract(tmp_path, capsys):
    path = tmp_path / "kc2.json"
    ok = main(["catalog", "kC2", "-o", str(path)]) == 0
    ok = ok and main(["verify", str(path)]) == 0
    # single-constant mutation: exit 1
    doc = json.loads(path.read_text())
    doc["counit"] = ["1", "0"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    ok = ok and main(["verify", str(bad)]) == 1
    # truncated JSON: exit 2
    trunc = tmp_path / "trunc.json"
    trunc.write_text(path.read_text()[:40])
    ok = ok and main(["verify", str(trunc)]) == 2
    # canonical serialization is byte-stable
    from hopfext.cli import structure_from_json

    text = path.read_text()
    again = dumps_canonical(structure_to_json(structure_from_json(json.loads(text))))
    ok = ok and again == text
    capsys.readouterr()
    record_acceptance("12. CLI exit codes 0/1/2 and byte-exact canonical serialization", ok)
    assert ok
