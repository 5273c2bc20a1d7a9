import json

from hedgehog.cli import main


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_command(tmp_path, capsys):
    path = write(
        tmp_path,
        "set.json",
        {"universe": "inf", "apex": True, "default": [["0/1", "1/3", "oo"]]},
    )
    code, out, _ = run(capsys, ["classify", path])
    assert code == 0
    assert json.loads(out) == {"quotient": True, "metric": True, "compact": False}


def test_closure_command(tmp_path, capsys):
    path = write(
        tmp_path,
        "set.json",
        {"universe": "inf", "exceptions": {"1": [["1/2", "1/1", "oc"]]}},
    )
    code, out, _ = run(capsys, ["closure", path, "--topology", "metric"])
    assert code == 0
    assert json.loads(out)["exceptions"]["1"] == [["1/2", "1/1", "cc"]]


def test_embed_real_flag(capsys):
    code, out, _ = run(capsys, ["embed-real", "--x", "1/2"])
    assert code == 0
    pair = json.loads(out)
    assert pair["first"] == {"height": "1/2", "spine": 1}


def test_fan_flags(capsys):
    code, out, _ = run(capsys, ["fan", "--height", "1/1", "--label", "0/1"])
    assert code == 0
    assert json.loads(out) == {"x": "1/1", "y": "0/1"}


def test_stone_command(tmp_path, capsys):
    path = write(
        tmp_path,
        "stone.json",
        {
            "space": {
                "labels": ["a", "b", "c"],
                "dist": [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]],
            },
            "cover": {"sets": [["a", "b"], ["b", "c"]]},
        },
    )
    code, out, _ = run(capsys, ["stone", path])
    assert code == 0
    assert len(json.loads(out)["levels"]) == 2


def test_basis_and_kowalsky_commands(tmp_path, capsys):
    space = {
        "labels": ["a", "b"],
        "dist": [["0", "1/2"], ["1/2", "0"]],
    }
    path = write(tmp_path, "basis.json", {"space": space})
    code, out, _ = run(capsys, ["basis", path])
    assert code == 0
    assert json.loads(out)["basis_check"]["passed"] is True

    code, out, _ = run(capsys, ["kowalsky", path])
    assert code == 0
    assert json.loads(out)["separation"]["separates_points"] is True


def test_ball_command(tmp_path, capsys):
    path = write(
        tmp_path,
        "ball.json",
        {"universe": "inf", "center": {"apex": True}, "radius": "1/3", "kind": "open"},
    )
    code, out, _ = run(capsys, ["ball", path])
    assert code == 0
    assert json.loads(out)["default"] == [["0/1", "1/3", "oo"]]


def test_invert_real_command(tmp_path, capsys):
    path = write(
        tmp_path,
        "pair.json",
        {"first": {"height": "1/2", "spine": 1}, "second": {"height": "1/2", "spine": 1}},
    )
    code, out, _ = run(capsys, ["invert-real", path])
    assert code == 0
    assert json.loads(out) == {"x": "1/2"}


def test_malformed_input_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, ["classify", str(path)])
    assert code == 1
    assert "line 1" in json.loads(err)["message"]

    missing = write(tmp_path, "missing.json", {"universe": "inf", "default": [["0", "1/2"]]})
    code, _, err = run(capsys, ["classify", missing])
    assert code == 1


def test_domain_error_exits_2(tmp_path, capsys):
    path = write(
        tmp_path,
        "pair.json",
        {
            "first": {"height": "1/2", "spine": 1},
            "second": {"height": "1/4", "spine": 1},
        },
    )
    code, _, err = run(capsys, ["invert-real", path])
    assert code == 2
    assert json.loads(err)["error"] == "NotInImage"


def test_subcover_command(tmp_path, capsys):
    almost = {
        "universe": "inf",
        "apex": True,
        "default": [["0/1", "1/1", "oc"]],
        "exceptions": {"1": [["0/1", "1/2", "oo"]]},
    }
    tail = {
        "universe": "inf",
        "exceptions": {"1": [["1/4", "1/1", "oc"]]},
    }
    path = write(tmp_path, "stream.json", {"stream": [almost, tail], "bound": 10})
    code, out, _ = run(capsys, ["subcover", path])
    assert code == 0
    assert json.loads(out)["indices"] == [0, 1]


def test_extend_command(tmp_path, capsys):
    path = write(
        tmp_path,
        "extend.json",
        {
            "space": {
                "labels": ["a", "b", "c"],
                "dist": [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]],
            },
            "domain": ["a", "b"],
            "map": {
                "a": {"height": "1/1", "spine": 1},
                "b": {"height": "1/1", "spine": 2},
            },
            "universe": 2,
        },
    )
    code, out, _ = run(capsys, ["extend", path])
    assert code == 0
    assert json.loads(out)["verification"]["all_passed"] is True


def test_report_json_mode(capsys):
    code, out, _ = run(capsys, ["report", "--kappa", "2", "--json"])
    assert code == 0
    cells = json.loads(out)
    assert any(
        c["property"] == "compact" and c["evidence"] == "executable-witness"
        for c in cells
    )


def test_report_self_test_fails(capsys):
    code, _, err = run(capsys, ["report", "--kappa", "2", "--self-test-fail"])
    assert code == 2
    assert "metrizable" in err
