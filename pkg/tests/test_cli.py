import json

import pytest

from monodromy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_text(capsys):
    code, out, _ = run(capsys, "rank", "--groups", "C2,C6")
    assert code == 0
    assert out.strip() == "5"


def test_rank_json(capsys):
    code, out, _ = run(capsys, "rank", "--groups", "C2,C2,C2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"orders": [2, 2, 2], "rank": 5, "schema": 1}


def test_graph_counts_and_dot(capsys):
    code, out, _ = run(capsys, "graph", "--groups", "C2,C3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["vertices"] == 6 and payload["edges"] == 7
    assert payload["betti_one"] == 2

    code, out, _ = run(capsys, "graph", "--groups", "C2,C2", "--emit", "dot")
    assert code == 0
    assert out.startswith("graph fibre {")


def test_basis_listing(capsys):
    code, out, _ = run(capsys, "basis", "--groups", "C2,C3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "algebraic-n2"
    assert payload["symbols"] == ["w[1,1]", "w[1,2]"]
    assert len(payload["witnesses"]) == 2

    code, out, _ = run(capsys, "basis", "--groups", "C2,C2,C2")
    assert code == 0
    assert len(out.strip().splitlines()) == 5


def test_act_images(capsys):
    code, out, _ = run(capsys, "act", "--groups", "C2,C3",
                       "--element", "x1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload["images"]) == {"w[1,1]", "w[1,2]"}
    for img in payload["images"].values():
        assert "w[" in img


def test_matrix_negative_identity(capsys):
    code, out, _ = run(capsys, "matrix", "--groups", "C2,S3",
                       "--element", "s1:x", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    neg_id5 = [[-1 if i == j else 0 for j in range(5)] for i in range(5)]
    assert payload["entries"] == neg_id5
    assert payload["convention"] == "columns-as-images"


def test_matrix_c2_c3_generators(capsys):
    code, out, _ = run(capsys, "matrix", "--groups", "C2,C3",
                       "--element", "x2", "--format", "json")
    assert code == 0
    assert json.loads(out)["entries"] == [[-1, -1], [1, 0]]


def test_report_good_pair(capsys):
    code, out, _ = run(capsys, "report", "--groups", "C2,C3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["faithful"] and payload["schema"] == 1


def test_report_degenerate_pair_fails(capsys):
    code, out, _ = run(capsys, "report", "--groups", "C2,C2", "--format", "json")
    assert code == 1
    assert json.loads(out)["faithful"] is False


def test_report_wrong_arity(capsys):
    code, _, err = run(capsys, "report", "--groups", "C2,C2,C2")
    assert code == 2
    assert "two groups" in err


def test_lemma_check(capsys):
    code, out, _ = run(capsys, "lemma-check", "--groups", "C3,C4",
                       "--trials", "50", "--seed", "9")
    assert code == 0
    assert "delta-identity: 50/50" in out
    assert "product-expansion: 50/50" in out


def test_homology_inline_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "homology", "--groups", "C2,C2,C2",
                       "--complex", "K={1,2;3}", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["betti"] == 3 and payload["torsion"] == []

    p = tmp_path / "k.txt"
    p.write_text("1,2\n2,3\n1,3\n")
    code, out, _ = run(capsys, "homology", "--groups", "C2,C2,C2",
                       "--complex", f"@{p}")
    assert code == 0
    assert "betti=0" in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "rank", "--groups", "C2,Q8")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "act", "--groups", "C2,C3", "--element", "x9")
    assert code == 2
    code, _, err = run(capsys, "homology", "--groups", "C2,C3",
                       "--complex", "K={1,2,3}")
    assert code == 2


def test_seed_determinism(capsys):
    _, out1, _ = run(capsys, "report", "--groups", "C3,C4",
                     "--seed", "7", "--format", "json")
    _, out2, _ = run(capsys, "report", "--groups", "C3,C4",
                     "--seed", "7", "--format", "json")
    assert out1 == out2
