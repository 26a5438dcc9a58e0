import json

import pytest

import christoffel
from christoffel.cli import VERB_OPERATIONS, main


LIBRARY_OPERATIONS = {
    # words
    "make_word", "count_letter", "is_balanced", "is_circularly_balanced",
    "reverse", "conjugate", "is_primitive", "projection", "decimate",
    # construction
    "modular_complement", "christoffel_word", "letter_positions",
    "cayley_graph", "christoffel_path",
    # superimposition
    "perfectly_superimposable", "solve_bezout", "is_superimposable",
    "count_superimpositions", "canonical_shift", "reversal_superimposition_criterion",
    "interval_offset", "merge_superimposition", "collapse_merge",
    # money
    "frobenius_number", "nonrepresentable_count", "representable",
    "boundary_word", "shifted_cayley",
    # fraenkel / beatty
    "fraenkel_word", "beatty_slice", "beatty_disjoint_exists", "letter_frequencies",
    # oracle
    "oracle_superimposable", "oracle_frobenius", "oracle_beatty_disjoint",
}


def run_cli(capsys, *args):
    status = main(list(args))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_every_operation_is_reachable():
    reachable = set()
    for ops in VERB_OPERATIONS.values():
        reachable.update(ops)
    missing = LIBRARY_OPERATIONS - reachable
    assert not missing, f"operations with no verb: {sorted(missing)}"
    for name in LIBRARY_OPERATIONS:
        assert hasattr(christoffel, name)


def test_gen(capsys):
    status, out, _ = run_cli(capsys, "gen", "--n", "8", "--alpha", "5", "--letters", "a,x")
    assert status == 0
    assert out == "aaxaaxax\n"


def test_gen_cayley_and_path(capsys):
    status, out, _ = run_cli(capsys, "gen", "--n", "8", "--alpha", "5", "--cayley", "--path")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "aaxaaxax"
    assert lines[1] == "cayley: 0 -> 3 -> 6 -> 1 -> 4 -> 7 -> 2 -> 5 -> 0"
    assert lines[2] == "path: RRURRURU"


def test_gen_json_round_trip(capsys):
    status, out, _ = run_cli(capsys, "gen", "--n", "13", "--alpha", "4", "--letters", "a,z", "--json")
    assert status == 0
    payload = json.loads(out)
    assert payload["word"] == "azzazzazzazzz"
    assert json.dumps(payload, sort_keys=True) + "\n" == out


def test_gen_precondition_violation(capsys):
    status, _, err = run_cli(capsys, "gen", "--n", "8", "--alpha", "0")
    assert status == 3
    assert "alpha" in err


def test_unknown_verb_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_missing_argument_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--n", "8"])
    assert exc.value.code == 2


def test_positions(capsys):
    status, out, _ = run_cli(capsys, "positions", "--n", "8", "--alpha", "5")
    assert status == 0
    assert out == "0 1 3 4 6\n"
    status, out, _ = run_cli(capsys, "positions", "--n", "13", "--alpha", "4", "--json")
    payload = json.loads(out)
    assert payload["residues"] == [0, 3, 6, 9]
    assert payload["complement"] == 3


def test_balance(capsys):
    status, out, _ = run_cli(capsys, "balance", "--word", "112121")
    assert status == 0
    lines = out.splitlines()
    assert "balanced: yes" in lines
    assert "circularly balanced: no" in lines
    status, out, _ = run_cli(capsys, "balance", "--word", "112", "--json")
    payload = json.loads(out)
    assert payload["balanced"] and payload["circularly_balanced"]
    assert payload["counts"] == {"1": 2, "2": 1}
    assert payload["primitive"] is True


def test_superimpose_json_example(capsys):
    status, out, _ = run_cli(
        capsys, "superimpose", "--n", "13", "--a", "4", "--m", "13", "--b", "3",
        "--q", "1", "--count", "--shift", "--json",
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["superimposable"] is True
    assert payload["x"] == 1 and payload["y"] == 3
    assert payload["count"] == 3
    assert payload["canonical_shift"] == 0
    assert payload["reversed"] is True


def test_superimpose_text_with_oracle(capsys):
    status, out, _ = run_cli(
        capsys, "superimpose", "--n", "4", "--a", "1", "--m", "6", "--b", "1",
        "--count", "--shift", "--oracle",
    )
    assert status == 0
    assert "superimposable: yes" in out
    assert "count: 3" in out
    assert "oracle: agree (count 3)" in out


def test_superimpose_offsets_and_mirror(capsys):
    status, out, _ = run_cli(
        capsys, "superimpose", "--n", "13", "--a", "4", "--m", "13", "--b", "3",
        "--offsets", "--mirror", "--json",
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["offsets"] == [0, 4, 8, 12]
    assert payload["mirror"] is True


def test_superimpose_mirror_requires_equal_lengths(capsys):
    status, _, err = run_cli(
        capsys, "superimpose", "--n", "4", "--a", "1", "--m", "6", "--b", "1", "--mirror",
    )
    assert status == 3
    assert "mirror" in err


def test_superimpose_invalid_problem(capsys):
    status, _, err = run_cli(capsys, "superimpose", "--n", "8", "--a", "2", "--m", "8", "--b", "3")
    assert status == 3
    assert "coprime" in err


def test_decimate(capsys):
    status, out, _ = run_cli(
        capsys, "decimate", "--word", "aabaabababa", "--letter", "a",
        "--p", "1", "--q", "3", "--direction", "right-to-left",
    )
    assert status == 0
    assert out == "abababab\n"
    status, out, _ = run_cli(
        capsys, "decimate", "--word", "abababab", "--letter", "b",
        "--p", "1", "--q", "2", "--direction", "left-to-right",
    )
    assert out == "aabaab\n"


def test_merge_pipeline(capsys):
    status, out, _ = run_cli(capsys, "merge", "--n", "13", "--a", "4", "--b", "3", "--letters", "a,b,z")
    assert status == 0
    assert out.splitlines() == [
        "u: azzazzazzazzz",
        "v: bzzzbzzzbzzzz",
        "witness: zzzzbzzzbzzzb",
        "merged: azzabzazbazzb",
        "collapsed: aababab",
    ]


def test_merge_word_mode(capsys):
    status, out, _ = run_cli(
        capsys, "merge", "--u", "azzazzazzazzz", "--v", "zzzzbzzzbzzzb",
    )
    assert status == 0
    assert "merged: azzabzazbazzb" in out
    assert "collapsed: aababab" in out


def test_merge_word_mode_conflict(capsys):
    status, _, err = run_cli(capsys, "merge", "--u", "az", "--v", "bz")
    assert status == 3
    assert "collide" in err


def test_merge_not_superimposable(capsys):
    status, _, err = run_cli(capsys, "merge", "--n", "7", "--a", "3", "--b", "5")
    assert status == 3
    assert "not superimposable" in err


def test_frobenius(capsys):
    status, out, _ = run_cli(capsys, "frobenius", "--a", "8", "--b", "5")
    assert status == 0
    assert out == "g(8,5) = 27; non-representable: 14\n"
    status, out, _ = run_cli(capsys, "frobenius", "--a", "8", "--b", "5",
                             "--amount", "27", "--oracle")
    assert status == 0
    assert "representable(27): no" in out
    assert "oracle: agree" in out


def test_boundary(capsys):
    status, out, _ = run_cli(capsys, "boundary", "--a", "8", "--b", "5")
    assert status == 0
    assert out == "ααβααβαβααβαβ\n"
    status, out, _ = run_cli(capsys, "boundary", "--a", "8", "--b", "5", "--values")
    lines = out.splitlines()
    assert lines[1] == "27, 32, 37, 29, 34, 39, 31, 36, 28, 33, 38, 30, 35, 27"


def test_fraenkel(capsys):
    status, out, _ = run_cli(capsys, "fraenkel", "--k", "3")
    assert status == 0
    assert out == "1213121\n"
    status, out, _ = run_cli(capsys, "fraenkel", "--k", "3", "--project", "1", "--json")
    payload = json.loads(out)
    assert payload["frequencies"] == {"1": 4, "2": 2, "3": 1}
    assert payload["projection"] == "1x1x1x1"
    assert payload["projection_circularly_balanced"] is True


def test_beatty_slice(capsys):
    status, out, _ = run_cli(capsys, "beatty", "--p", "3", "--q", "2", "--lo", "1", "--hi", "4")
    assert status == 0
    assert out == "1, 3, 4, 6\n"
    status, out, _ = run_cli(capsys, "beatty", "--p", "7", "--q", "3",
                             "--offset=-1/2", "--lo", "0", "--hi", "3", "--json")
    payload = json.loads(out)
    assert payload["values"] == [-1, 1, 4, 6]


def test_beatty_disjoint(capsys):
    status, out, _ = run_cli(capsys, "beatty", "--p1", "13", "--q1", "4",
                             "--p2", "13", "--q2", "3", "--oracle")
    assert status == 0
    assert "disjoint offsets exist: yes" in out
    assert "oracle: agree" in out
    status, out, _ = run_cli(capsys, "beatty", "--p1", "3", "--q1", "1",
                             "--p2", "4", "--q2", "1")
    assert status == 0
    assert "disjoint offsets exist: no" in out


def test_beatty_mode_confusion(capsys):
    status, _, err = run_cli(capsys, "beatty", "--p", "3", "--q", "2",
                             "--lo", "1", "--hi", "4", "--p1", "3")
    assert status == 3


def test_oracle_check(capsys):
    status, out, _ = run_cli(capsys, "oracle-check", "--max-n", "12")
    assert status == 0
    assert "0 disagreements" in out


def test_oracle_check_unequal(capsys):
    status, out, _ = run_cli(capsys, "oracle-check", "--max-n", "8", "--unequal-max", "8", "--json")
    assert status == 0
    payload = json.loads(out)
    assert payload["disagreements"] == []
    assert payload["instances"] > 200


def test_determinism(capsys):
    first = run_cli(capsys, "superimpose", "--n", "13", "--a", "4", "--m", "13",
                    "--b", "3", "--count", "--shift", "--json")
    second = run_cli(capsys, "superimpose", "--n", "13", "--a", "4", "--m", "13",
                     "--b", "3", "--count", "--shift", "--json")
    assert first == second


def test_boolean_false_still_exits_zero(capsys):
    status, out, _ = run_cli(capsys, "superimpose", "--n", "3", "--a", "1", "--m", "4", "--b", "1")
    assert status == 0
    assert "superimposable: no" in out


def test_oracle_disagreement_exits_four(capsys, monkeypatch):
    import christoffel.cli as cli_module

    monkeypatch.setattr(cli_module, "count_superimpositions", lambda problem: 999)
    status, out, _ = run_cli(capsys, "superimpose", "--n", "13", "--a", "4",
                             "--m", "13", "--b", "3", "--oracle")
    assert status == 4
    assert "DISAGREE" in out
