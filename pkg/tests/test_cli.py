"""CLI contract: subcommands, exit codes, canonical serialization."""

import json

import pytest

from hopfext.cli import (
    action_to_json,
    document_from_json,
    document_to_json,
    dumps_canonical,
    extension_to_json,
    loads_document,
    main,
    structure_from_json,
    structure_to_json,
)
from hopfext.core import PrimeField, RationalField
from hopfext.catalog import build

Q = RationalField()


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# serialization


def test_structure_roundtrip_byte_stable(ks3, sweedler, octonion):
    for s in (ks3, sweedler, octonion):
        doc = structure_to_json(s)
        text = dumps_canonical(doc)
        again = structure_to_json(structure_from_json(json.loads(text)))
        assert dumps_canonical(again) == text


def test_structure_roundtrip_prime_field():
    s = build("kC3", PrimeField(5)).value
    text = dumps_canonical(structure_to_json(s))
    again = structure_from_json(json.loads(text))
    assert dumps_canonical(structure_to_json(again)) == text
    assert again.field == PrimeField(5)


def test_action_and_extension_roundtrip(inv_action, inv_extension):
    for value, encode in ((inv_action, action_to_json), (inv_extension, extension_to_json)):
        text = dumps_canonical(encode(value))
        again = document_from_json(json.loads(text))
        assert dumps_canonical(document_to_json(again)) == text


def test_malformed_inputs_raise_format_error():
    from hopfext.cli import FormatError

    with pytest.raises(FormatError):
        loads_document("{ not json")
    with pytest.raises(FormatError):
        loads_document(json.dumps({"kind": "structure"}))
    with pytest.raises(FormatError):
        loads_document(json.dumps({"kind": "widget"}))


# ---------------------------------------------------------------------------
# commands and exit codes


def test_catalog_verify_all_entries(capsys, tmp_path):
    for name in ("kC2", "kC3", "kC7", "kS3", "sweedler4", "octonion_loop",
                 "trivial_action", "c2_inv_c3_action", "c4_pow_c5_action", "gamma_extension"):
        path = tmp_path / f"{name}.json"
        code, _, _ = run(["catalog", name, "-o", str(path)], capsys)
        assert code == 0
        code, out, _ = run(["verify", str(path)], capsys)
        assert code == 0, f"{name}: {out}"


def test_verify_ks3_hopf_has_14_checks(capsys, tmp_path):
    path = tmp_path / "ks3.json"
    run(["catalog", "kS3", "-o", str(path)], capsys)
    code, out, _ = run(["verify", str(path), "--level", "hopf"], capsys)
    assert code == 0
    assert "14/14 checks pass" in out


def test_verify_structure_at_lower_levels(capsys, tmp_path):
    path = tmp_path / "ks3.json"
    run(["catalog", "kS3", "-o", str(path)], capsys)
    code, out, _ = run(["verify", str(path), "--level", "coalgebra"], capsys)
    assert code == 0 and "3/3 checks pass" in out
    code, out, _ = run(["verify", str(path), "--level", "algebra"], capsys)
    assert code == 0 and "5/5 checks pass" in out
    code, out, _ = run(["verify", str(path), "--level", "bialgebra"], capsys)
    assert code == 0 and "9/9 checks pass" in out


def test_verify_mutated_structure_exits_1_with_witness(capsys, tmp_path):
    path = tmp_path / "kc2.json"
    run(["catalog", "kC2", "-o", str(path)], capsys)
    doc = json.loads(path.read_text())
    doc["counit"] = ["1", "0"]
    path.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1
    assert "FAIL" in out and "counit" in out
    assert "left=" in out  # witness scalars printed


def test_verify_truncated_json_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    run(["catalog", "kC2", "-o", str(path)], capsys)
    text = path.read_text()
    path.write_text(text[: len(text) // 2])
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 2
    assert "line" in err


def test_verify_missing_key_exits_2(capsys, tmp_path):
    path = tmp_path / "partial.json"
    run(["catalog", "kC2", "-o", str(path)], capsys)
    doc = json.loads(path.read_text())
    del doc["mul"]
    path.write_text(json.dumps(doc))
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 2
    assert "mul" in err


def test_unknown_subcommand_exits_2():
    assert main(["frobnicate"]) == 2


def test_semidirect_of_invalid_action_exits_1(capsys, tmp_path):
    path = tmp_path / "act.json"
    run(["catalog", "c2_inv_c3_action", "-o", str(path)], capsys)
    doc = json.loads(path.read_text())
    doc["act"] = doc["act"][1:]  # drop one image: no longer unital
    path.write_text(json.dumps(doc))
    code, _, err = run(["semidirect", str(path)], capsys)
    assert code == 1
    assert "verification failure" in err


def test_verify_action_rejects_sub_bialgebra_levels(capsys, tmp_path):
    path = tmp_path / "act.json"
    run(["catalog", "c2_inv_c3_action", "-o", str(path)], capsys)
    assert run(["verify", str(path), "--level", "algebra"], capsys)[0] == 2


def test_unknown_catalog_name_exits_2(capsys):
    code, _, err = run(["catalog", "kD4"], capsys)
    assert code == 2


def test_semidirect_induce_roundtrip_files(capsys, tmp_path):
    act_path = tmp_path / "act.json"
    ext_path = tmp_path / "ext.json"
    back_path = tmp_path / "back.json"
    assert run(["catalog", "c2_inv_c3_action", "-o", str(act_path)], capsys)[0] == 0
    assert run(["semidirect", str(act_path), "-o", str(ext_path)], capsys)[0] == 0
    assert run(["verify", str(ext_path)], capsys)[0] == 0
    assert run(["induce", str(ext_path), "-o", str(back_path)], capsys)[0] == 0
    assert act_path.read_bytes() == back_path.read_bytes()
    code, out, _ = run(["roundtrip", str(act_path)], capsys)
    assert code == 0 and "byte-for-byte" in out


def test_kernels_command(capsys, tmp_path):
    ext_path = tmp_path / "ext.json"
    act_path = tmp_path / "act.json"
    run(["catalog", "c2_inv_c3_action", "-o", str(act_path)], capsys)
    run(["semidirect", str(act_path), "-o", str(ext_path)], capsys)
    code, out, _ = run(["kernels", str(ext_path)], capsys)
    assert code == 0
    assert "HKer: dim 3" in out and "LKer: dim 3" in out
    assert "equal" in out
    code, out, _ = run(["kernels", str(ext_path), "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["dims"] == {"HKer": 3, "LKer": 3, "RKer": 3}
    assert all(doc["equal"].values())


def test_eval_monoid_command(capsys):
    code, out, _ = run(["eval-monoid", "0", "2", "1", "1"], capsys)
    assert code == 0 and out.strip() == "(1, 2)"
    code, out, _ = run(["eval-monoid", "1", "2", "1", "1"], capsys)
    assert code == 0 and out.strip() == "(2, 2)"
    code, out, _ = run(["eval-monoid", "0", "2", "2", "1", "--json"], capsys)
    assert code == 0 and json.loads(out) == [4, 2]


def test_verify_json_report(capsys, tmp_path):
    path = tmp_path / "kc2.json"
    run(["catalog", "kC2", "-o", str(path)], capsys)
    code, out, _ = run(["verify", str(path), "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert len(doc["checks"]) == 14


def test_verify_field_flag(capsys, tmp_path):
    path = tmp_path / "kc3f5.json"
    assert run(["catalog", "kC3", "--field", "Fp:5", "-o", str(path)], capsys)[0] == 0
    assert run(["verify", str(path)], capsys)[0] == 0
    assert run(["catalog", "kC3", "--field", "Fp:6", "-o", str(path)], capsys)[0] == 2


def test_verify_reads_stdin(capsys, monkeypatch, tmp_path):
    import io

    path = tmp_path / "ks3.json"
    run(["catalog", "kS3", "-o", str(path)], capsys)
    monkeypatch.setattr("sys.stdin", io.StringIO(path.read_text()))
    code, out, _ = run(["verify", "--level", "hopf"], capsys)
    assert code == 0
    assert "14/14 checks pass" in out


def test_verify_action_levels(capsys, tmp_path):
    path = tmp_path / "pow.json"
    run(["catalog", "c4_pow_c5_action", "-o", str(path)], capsys)
    # bialgebra level passes, hopf level fails (module associativity)
    assert run(["verify", str(path), "--level", "bialgebra"], capsys)[0] == 0
    code, out, _ = run(["verify", str(path), "--level", "hopf"], capsys)
    assert code == 1
    assert "module_associativity" in out
