import json

import pytest

from quiver_rpp.cli import main

GOLDEN = dict(
    quiver="A5:1<2<3<4<5",
    rep="11100:4,01100:3,00110:1,01110:1,00111:1,11111:2",
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_to_rpp_golden_grid(capsys):
    code, out, _ = run(
        capsys, "to-rpp", "--quiver", GOLDEN["quiver"], "--m", "3", "--rep", GOLDEN["rep"]
    )
    assert code == 0
    assert " 0  2  3" in out and " 6  8 10" in out
    assert "weight 36" in out


def test_to_rpp_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "to-rpp", "--quiver", GOLDEN["quiver"], "--m", "3",
        "--rep", GOLDEN["rep"], "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["grid"] == [[0, 2, 3], [2, 2, 3], [6, 8, 10]]
    assert payload["weight"] == 36
    # feed the grid back through from-rpp
    grid_text = "/".join(" ".join(map(str, row)) for row in payload["grid"])
    code, out, _ = run(
        capsys, "from-rpp", "--quiver", GOLDEN["quiver"], "--m", "3",
        "--grid", grid_text, "--json",
    )
    assert code == 0
    rep = json.loads(out)["rep"]
    assert rep == {"11100": 4, "01100": 3, "00110": 1, "01110": 1,
                   "00111": 1, "11111": 2}


def test_from_rpp_zero_grid(capsys):
    code, out, _ = run(
        capsys, "from-rpp", "--quiver", "A3:1<2<3", "--m", "2",
        "--grid", "0 0/0 0",
    )
    assert code == 0
    assert "(zero representation)" in out


def test_trace_emits_steps(capsys):
    code, out, _ = run(
        capsys, "to-rpp", "--quiver", GOLDEN["quiver"], "--m", "3",
        "--rep", GOLDEN["rep"], "--trace",
    )
    assert code == 0
    assert "step " in out


def test_roots_command(capsys):
    code, out, _ = run(capsys, "roots", "--diagram", "A4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 10
    assert payload["coxeter_number"] == 5
    assert payload["minuscule_vertices"] == [1, 2, 3, 4]


def test_ar_quiver_and_poset(capsys):
    code, out, _ = run(capsys, "ar-quiver", "--quiver", "A4:1>2>3<4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["nodes"]) == 10
    assert payload["tau"]["0111"] == "0010"
    code, out, _ = run(capsys, "poset", "--quiver", "A4:1>2>3<4", "--m", "3", "--json")
    payload = json.loads(out)
    assert len(payload["elements"]) == 6


def test_jordan_command(capsys):
    code, out, _ = run(
        capsys, "jordan", "--quiver", "A3:1>2<3", "--m", "2",
        "--rep", "010:1,011:2,110:1", "--check-bijection", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["jordan_data"]["2"] == [3, 1]
    assert payload["agrees_with_bijection"] is True


def test_hg_and_pak_commands(capsys):
    code, out, _ = run(capsys, "hg", "--grid", "0 2 3/2 2 3/6 8 10")
    assert code == 0
    assert out.strip() == "00110:1,00111:1,01100:3,01110:1,11100:4,11111:2"
    code, out, _ = run(
        capsys, "hg", "--rep", "00110:1,00111:1,01100:3,01110:1,11100:4,11111:2",
        "--n", "5", "--m", "3",
    )
    assert code == 0
    assert [r.split() for r in out.strip().splitlines()] == [
        ["0", "2", "3"], ["2", "2", "3"], ["6", "8", "10"]
    ]
    code, out, _ = run(
        capsys, "pak", "--rep", "11100:4,01100:3,00110:1,01110:1,11111:1,00111:2",
        "--n", "5", "--m", "3",
    )
    assert code == 0
    assert "5 8 8" in out


def test_promotion_known_trajectory(capsys):
    code, out, _ = run(
        capsys, "promotion", "--quiver", "A3:1>2<3", "--m", "2", "--bound", "8",
        "--rpp", "010=5,110=5,011=4,111=1", "--steps", "4", "--json",
    )
    assert code == 0
    traj = json.loads(out)["trajectory"]
    assert traj[1] == {"010": 8, "110": 6, "011": 7, "111": 3}
    assert traj[4] == traj[0]


def test_promotion_random_start_stays_bounded(capsys):
    code, out, _ = run(
        capsys, "promotion", "--quiver", "D4:2>1,3>2,4>2", "--m", "1",
        "--bound", "3", "--steps", "6", "--seed", "7", "--json",
    )
    assert code == 0
    traj = json.loads(out)["trajectory"]
    assert len(traj) == 7
    assert traj[6] == traj[0]  # h(D4) = 6
    assert all(0 <= v <= 3 for frame in traj for v in frame.values())


def test_promotion_check_period(capsys):
    code, out, _ = run(
        capsys, "promotion", "--quiver", "A3:1>2<3", "--m", "2", "--bound", "4",
        "--check-period", "--trials", "20",
    )
    assert code == 0
    assert "PASS" in out


def test_verify_genfun_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify-genfun", "--poset", "A3,2", "--bound", "3")
    assert code == 0
    assert "1, 1, 3, 4" in out.replace("[", "").replace("]", "") or "[1, 1, 3, 4]" in out
    code, _, err = run(capsys, "verify-genfun", "--poset", "A3", "--bound", "3")
    assert code == 2
    assert "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["to-rpp", "--quiver", "A3:1<2<3"])  # missing required flags
    assert exc.value.code == 2


def test_data_error_exit_code(capsys):
    code, _, err = run(
        capsys, "to-rpp", "--quiver", "A3:1<2<3", "--m", "2", "--rep", "100:1"
    )
    assert code == 2
    assert "error" in err
