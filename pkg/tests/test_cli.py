import json
from fractions import Fraction

import pytest

from heckemod import Weight, partition_shape, shape_from_json, shape_to_json, tableau_from_json, weight_to_json
from heckemod.cli import console_main, main


@pytest.fixture
def shape_file(tmp_path):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps(shape_to_json(partition_shape(1, [[2, 1]]))))
    return str(path)


def write_weight(tmp_path, a, b, ell):
    path = tmp_path / "weight.json"
    path.write_text(json.dumps(weight_to_json(Weight(tuple(a), tuple(b)), ell)))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_shapes(capsys):
    code, out = run(capsys, ["shapes", "--ell", "1", "--n", "3", "--window", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 8 and len(data["shapes"]) == 8
    assert all(shape_from_json(s).n == 3 for s in data["shapes"])


def test_syt(capsys, shape_file):
    code, out = run(capsys, ["syt", "--shape", shape_file])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2
    assert data["hook_dimension"] == 2
    tabs = [tableau_from_json(t) for t in data["tableaux"]]
    assert len(set(tabs)) == 2


def test_syt_skew_has_no_hook_number(capsys, tmp_path):
    path = tmp_path / "skew.json"
    path.write_text(json.dumps({
        "ell": 1,
        "components": [{"beta": 0, "offset": "0",
                        "cells": [[1, 1], [2, 0], [2, -1]]}]}))
    code, out = run(capsys, ["syt", "--shape", str(path)])
    assert code == 0
    data = json.loads(out)
    assert "hook_dimension" not in data
    assert data["count"] == 2


def test_build(capsys, shape_file):
    code, out = run(capsys, ["build", "--shape", shape_file])
    assert code == 0
    data = json.loads(out)
    assert (data["ell"], data["n"], data["dim"]) == (1, 3, 2)
    assert "mat_s" not in data
    code, out = run(capsys, ["build", "--shape", shape_file, "--dump-matrices"])
    data = json.loads(out)
    assert len(data["mat_s"]) == 2
    code, out = run(capsys, ["build", "--shape", shape_file, "--dense"])
    data = json.loads(out)
    assert data["mat_s"][1][0][1] == {"ell": 1, "coeffs": ["3/4"]}


def test_verify(capsys, shape_file):
    code, out = run(capsys, ["verify", "--shape", shape_file])
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["relations"]["ok"] is True
    assert "commutant_dimension" not in data
    code, out = run(capsys, ["verify", "--shape", shape_file,
                             "--intertwiners", "--jm", "--commutant"])
    data = json.loads(out)
    assert data["commutant_dimension"] == 1
    assert data["irreducible"] is True
    assert data["intertwiners"]["ok"] and data["jucys_murphy"]["ok"]


def test_classify_accept(capsys, tmp_path):
    weight_file = write_weight(tmp_path, [0, 1, -1], [0, 0, 0], 1)
    code, out = run(capsys, ["classify", "--weight", weight_file])
    assert code == 0
    data = json.loads(out)
    assert shape_from_json(data["shape"]) == partition_shape(1, [[2, 1]])
    assert tableau_from_json(data["tableau"]).labels == ((1, 2, 3),)


def test_classify_reject(capsys, tmp_path):
    weight_file = write_weight(tmp_path, [0, -1, 0], [0, 0, 0], 1)
    code, out = run(capsys, ["classify", "--weight", weight_file])
    assert code == 2
    data = json.loads(out)
    assert data["rejected"]["kind"] == "MissingUpStep"
    assert data["rejected"]["i"] == 1 and data["rejected"]["j"] == 3
    assert data["rejected"]["required_a"] == "1"


def test_twist(capsys, shape_file):
    code, out = run(capsys, ["twist", "--shape", shape_file, "--t", "1/2"])
    assert code == 0
    data = json.loads(out)
    twisted = shape_from_json(data["twisted_shape"])
    assert twisted.components[0].offset == Fraction(1, 2)
    code, out = run(capsys, ["twist", "--shape", shape_file, "--rho"])
    assert code == 0
    data = json.loads(out)
    assert data["automorphism"] == {"kind": "rho"}
    # [2,1] is self-conjugate under rho up to canonical form
    assert shape_from_json(data["twisted_shape"]).n == 3


def test_twist_requires_exactly_one_automorphism(capsys, shape_file):
    assert main(["twist", "--shape", shape_file]) == 1
    assert main(["twist", "--shape", shape_file, "--t", "1", "--rho"]) == 1
    capsys.readouterr()


def test_jm_check(capsys, shape_file, tmp_path):
    code, out = run(capsys, ["jm-check", "--shape", shape_file])
    assert code == 0
    assert json.loads(out)["ok"] is True
    skew = tmp_path / "skew.json"
    skew.write_text(json.dumps({
        "ell": 1,
        "components": [{"beta": 0, "offset": "0",
                        "cells": [[1, 1], [2, 0], [2, -1]]}]}))
    assert main(["jm-check", "--shape", str(skew)]) == 2
    capsys.readouterr()


def test_suite(capsys):
    code, out = run(capsys, ["suite", "--ell", "1", "--max-n", "2"])
    assert code == 0
    assert "relations" in out and "fail" not in out
    assert out.count("pass") >= 10


def test_exit_codes_for_bad_input(capsys, tmp_path):
    # missing file
    assert main(["syt", "--shape", str(tmp_path / "missing.json")]) == 1
    # malformed json
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    assert main(["syt", "--shape", str(garbled)]) == 1
    # json that is not a shape
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"ell": 1, "components": []}))
    assert main(["syt", "--shape", str(empty)]) == 2
    # mathematically invalid shape
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({
        "ell": 1,
        "components": [{"beta": 0, "offset": "0", "cells": [[1, 0], [1, 2]]}]}))
    assert main(["syt", "--shape", str(broken)]) == 2
    assert main(["build", "--shape", str(broken)]) == 2
    # usage problems
    assert main(["shapes", "--ell", "1", "--n", "3"]) == 1
    assert main(["no-such-command"]) == 1
    assert main([]) == 1
    capsys.readouterr()


def test_degenerate_shape_is_rejected(capsys, tmp_path):
    path = tmp_path / "degenerate.json"
    path.write_text(json.dumps({
        "ell": 1,
        "components": [
            {"beta": 0, "offset": "0", "cells": [[1, 0]]},
            {"beta": 0, "offset": "0", "cells": [[1, 1]]}]}))
    assert main(["build", "--shape", str(path)]) == 2
    capsys.readouterr()


def test_console_main_raises_system_exit(capsys, shape_file):
    with pytest.raises(SystemExit) as exc:
        console_main(["syt", "--shape", shape_file])
    assert exc.value.code == 0
    capsys.readouterr()
