import pytest

from gaplab import complete_graph, parse_graph, parse_labelling, serialize_graph
from gaplab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_label_verify_flow(tmp_path, capsys):
    graph_file = tmp_path / "c62.graph"
    labels_file = tmp_path / "c62.labels"
    code, _, _ = run(capsys, "gen", "--family", "cycle-power", "--n", "6", "--k", "2",
                     "-o", str(graph_file))
    assert code == 0
    code, _, _ = run(capsys, "label", "--family", "cycle-power", "--n", "6", "--k", "2",
                     "-o", str(labels_file))
    assert code == 0
    assert parse_labelling(labels_file.read_text()) == (1, 2, 4, 1, 2, 4)
    code, out, _ = run(capsys, "verify", "--graph", str(graph_file),
                       "--labels", str(labels_file))
    assert code == 0
    assert out.strip() == "VALID"


def test_verify_reports_conflicts_and_fails(tmp_path, capsys):
    graph_file = tmp_path / "k4.graph"
    labels_file = tmp_path / "k4.labels"
    graph_file.write_text(serialize_graph(complete_graph(4)))
    labels_file.write_text("0 1\n1 2\n2 3\n3 4\n")
    code, out, _ = run(capsys, "verify", "--graph", str(graph_file),
                       "--labels", str(labels_file))
    assert code == 1
    assert "INVALID" in out
    assert "conflict 0 3" in out and "conflict 1 2" in out


def test_decide_labelable_prints_witness(tmp_path, capsys):
    graph_file = tmp_path / "k3.graph"
    graph_file.write_text(serialize_graph(complete_graph(3)))
    code, out, _ = run(capsys, "decide", "--graph", str(graph_file))
    assert code == 0
    assert "labelable: yes" in out
    assert "assignments:" in out


def test_decide_refutation(tmp_path, capsys):
    graph_file = tmp_path / "k4.graph"
    graph_file.write_text(serialize_graph(complete_graph(4)))
    code, out, _ = run(capsys, "decide", "--graph", str(graph_file))
    assert code == 0
    assert "labelable: no" in out


def test_label_by_search_witness(tmp_path, capsys):
    graph_file = tmp_path / "k3.graph"
    graph_file.write_text(serialize_graph(complete_graph(3)))
    code, out, _ = run(capsys, "label", "--graph", str(graph_file))
    assert code == 0
    assert parse_labelling(out) == (31, 18, 25)


def test_label_fails_cleanly_on_unlabelable_graph(tmp_path, capsys):
    graph_file = tmp_path / "k4.graph"
    graph_file.write_text(serialize_graph(complete_graph(4)))
    code, _, err = run(capsys, "label", "--graph", str(graph_file))
    assert code == 1
    assert "not gap-vertex-labelable" in err


def test_label_requires_exactly_one_source(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["label"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_chi_reports_value_and_cap(tmp_path, capsys):
    graph_file = tmp_path / "k3.graph"
    graph_file.write_text(serialize_graph(complete_graph(3)))
    code, out, _ = run(capsys, "chi", "--graph", str(graph_file), "--kmax", "5")
    assert code == 0 and out.strip() == "4"
    graph_file.write_text(serialize_graph(complete_graph(4)))
    code, out, _ = run(capsys, "chi", "--graph", str(graph_file), "--kmax", "5")
    assert code == 0 and out.strip() == "none <= 5"


def test_budget_env_var_gives_exit_three(tmp_path, capsys, monkeypatch):
    graph_file = tmp_path / "k6.graph"
    graph_file.write_text(serialize_graph(complete_graph(6)))
    monkeypatch.setenv("GAPLAB_SEARCH_BUDGET", "2")
    code, _, err = run(capsys, "decide", "--graph", str(graph_file))
    assert code == 3
    assert "budget" in err


def test_chi_respects_budget_env(tmp_path, capsys, monkeypatch):
    graph_file = tmp_path / "k3.graph"
    graph_file.write_text(serialize_graph(complete_graph(3)))
    monkeypatch.setenv("GAPLAB_SEARCH_BUDGET", "5")
    code, _, err = run(capsys, "chi", "--graph", str(graph_file), "--kmax", "5")
    assert code == 3 and "budget" in err


def test_decide_with_workers_flag(tmp_path, capsys):
    from gaplab import path_power

    graph_file = tmp_path / "p62.graph"
    graph_file.write_text(serialize_graph(path_power(6, 2)))
    code_seq, out_seq, _ = run(capsys, "decide", "--graph", str(graph_file))
    code_par, out_par, _ = run(capsys, "decide", "--graph", str(graph_file),
                               "--workers", "2")
    assert code_seq == code_par == 0
    assert out_seq == out_par


def test_strength_lb_rejects_unknown_format(capsys):
    code, _, err = run(capsys, "strength-lb", "--nmax", "6", "--format", "tsv")
    assert code == 1 and "format" in err


def test_strength_lb_emits_csv(capsys):
    code, out, _ = run(capsys, "strength-lb", "--nmax", "6")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,lprime,general,omega"
    assert lines[1].startswith("4,1,1,")


def test_strength_ub_writes_prefix_files(tmp_path, capsys):
    prefix = tmp_path / "k15"
    code, out, _ = run(capsys, "strength-ub", "--n", "15", "-o", str(prefix))
    assert code == 0
    assert "removed: 27" in out
    assert "iteration: n=15 i=3 x=10" in out
    ledger_text = (tmp_path / "k15.removed").read_text()
    assert ledger_text.startswith("# removed from K_15")
    assert parse_graph(ledger_text).edge_count == 27
    labels = parse_labelling((tmp_path / "k15.labels").read_text())
    assert labels[0] == 1 << 14


def test_strength_exact_value(capsys):
    code, out, _ = run(capsys, "strength-exact", "--n", "4")
    assert code == 0 and out.strip() == "1"


def test_strength_exact_out_of_range(capsys):
    code, _, err = run(capsys, "strength-exact", "--n", "9")
    assert code == 1 and "error:" in err


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--family", "complete"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_parse_error_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("3 1\n1 1\n")
    code, _, err = run(capsys, "decide", "--graph", str(bad))
    assert code == 1
    assert "line 2" in err
