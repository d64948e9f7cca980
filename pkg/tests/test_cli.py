"""Command-line behavior: formats, exit codes, budgets, determinism."""

import json

import csfkit.cli as cli
from csfkit.graphs import EExpansion
from csfkit.compositions import Composition


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_path_csv(capsys):
    code, out, _ = run(capsys, "expand", "--family", "path", "--n", "3",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["partition,coefficient", "3,3", "21,1"]


def test_expand_clock_csv_matches_library(capsys):
    import csv as csv_mod
    import io

    from csfkit.graphs import closed_form_clock
    from csfkit.compositions import format_parts

    code, out, _ = run(capsys, "expand", "--family", "clock", "--a", "6",
                       "--b", "4", "--format", "csv")
    assert code == 0
    rows = list(csv_mod.reader(io.StringIO(out)))
    assert rows[0] == ["partition", "coefficient"]
    grouped = closed_form_clock(6, 4).grouped_by_rho()
    expected = [
        [format_parts(lam), str(coef)] for lam, coef in grouped.items_sorted()
    ]
    assert rows[1:] == expected
    # a partition with a two-digit part stays one quoted field
    ten_one = next(row for row in rows if row[0] == "10,1")
    assert len(ten_one) == 2


def test_expand_json_is_valid_and_exact(capsys):
    code, out, _ = run(capsys, "expand", "--family", "cycle", "--n", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "e" and data["degree"] == 3
    assert data["terms"] == [{"partition": [3], "num": "6", "den": "1"}]


def test_expand_text_has_header_and_rows(capsys):
    code, out, _ = run(capsys, "expand", "--family", "path", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["partition", "coefficient"]
    assert lines[1].split() == ["3", "3"]


def test_expand_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "expand", "--family", "cycle", "--n", "2")
    assert code == 2
    assert "cycle" in err


def test_expand_respects_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("CSFKIT_MAX_N", "8")
    code, _, err = run(capsys, "expand", "--family", "path", "--n", "10")
    assert code == 3
    assert "budget" in err
    monkeypatch.setenv("CSFKIT_MAX_N", "not-a-number")
    code, _, err = run(capsys, "expand", "--family", "path", "--n", "3")
    assert code == 2


def test_oracle_check_passes_for_known_families(capsys):
    assert run(capsys, "oracle-check", "--family", "clock",
               "--a", "2", "--b", "2")[0] == 0
    assert run(capsys, "oracle-check", "--family", "theta",
               "--a", "3", "--b", "3", "--c", "3")[0] == 0
    assert run(capsys, "oracle-check", "--family", "tadpole",
               "--a", "4", "--l", "2")[0] == 0


def test_oracle_check_reports_first_differing_partition(capsys, monkeypatch):
    def corrupted(family, **params):
        expansion = EExpansion(3)
        expansion.add_term(Composition((3,)), 1)  # should be 1 per unit weight
        expansion.add_term(Composition((1, 2)), 5)  # corrupted coefficient
        return expansion

    monkeypatch.setattr(cli, "expansion_closed_form", corrupted)
    code, out, _ = run(capsys, "oracle-check", "--family", "path", "--n", "3")
    assert code == 1
    assert out.startswith("MISMATCH")
    assert "21" in out


def test_verify_fiber_fixture_pair(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fiber", "--n", "11",
                       "--a", "6", "--b", "4")
    assert code == 0
    last = out.splitlines()[-1]
    fields = last.split()
    assert fields[:2] == ["SUITE", "fiber"]
    assert fields[2] == "CHECKED" and int(fields[3]) > 0
    assert fields[4] == "VIOLATIONS" and fields[5] == "0"


def test_verify_c_doubleprime_small_range(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "c-doubleprime",
                       "--a-max", "5", "--b-max", "5")
    assert code == 0
    assert out.splitlines()[-1].startswith("SUITE c-doubleprime CHECKED")


def test_verify_lemma_bounds_reports_branch_counts(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma-bounds", "--n", "9")
    assert code == 0
    assert "W> q=p" in out
    assert out.splitlines()[-1].endswith("VIOLATIONS 0")


def test_verify_json_format_keeps_summary_last(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theta-duality",
                       "--n-max", "6", "--format", "json")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].startswith("SUITE theta-duality")
    payload = json.loads("\n".join(lines[:-1]))
    assert payload["violations"] == []


def test_verify_triple_deletion_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "triple-deletion",
                       "--count", "3", "--seed", "7")
    assert code == 0
    assert out.splitlines()[-1].endswith("VIOLATIONS 0")


def test_verify_budget_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("CSFKIT_MAX_N", "10")
    code, _, err = run(capsys, "verify", "--suite", "positivity",
                       "--n-max", "12")
    assert code == 3


def test_fibers_known_example(capsys):
    code, out, _ = run(capsys, "fibers", "--I", "7,2,2", "--a", "6", "--b", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("I = 722")
    assert "class = W>" in lines[1]
    assert "q - p = 2" in lines[2]
    assert "H_1 = 272   w = 12   D = 2" in out
    assert "H_2 = 227   w = 12   D = -2" in out
    assert lines[-1] == "c'' = 147"


def test_fibers_reports_c_doubleprime_for_exact_suffix_example(capsys):
    code, out, _ = run(capsys, "fibers", "--I", "5,2,2,2", "--a", "6", "--b", "4")
    assert code == 0
    assert "in_A = yes" in out
    assert out.splitlines()[-1] == "c'' = 23"


def test_fibers_low_class_prints_psi_image(capsys):
    code, out, _ = run(capsys, "fibers", "--I", "2,5,2,2", "--a", "6", "--b", "4")
    assert code == 0
    assert "class = W<=" in out
    assert "psi(I) = 5222" in out


def test_fibers_wrong_modulus_is_usage_error(capsys):
    code, _, err = run(capsys, "fibers", "--I", "7,2,2", "--a", "6", "--b", "5")
    assert code == 2
    assert "modulus" in err
