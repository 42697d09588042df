import json

import pytest

from epirules.cli import BENCH_HEADER, parse_conf, parse_episode, run
from epirules.model import MiningConfigError


def _mine_args(fig_file, out, **extra):
    args = [
        "mine",
        "--input", str(fig_file),
        "--query", "3 6",
        "--min-sup", "1",
        "--min-conf", "1/2",
        "--delta", "4",
        "--epsilon", "4",
        "--output", str(out),
    ]
    for key, value in extra.items():
        args.extend([f"--{key.replace('_', '-')}", str(value)])
    return args


class TestParseHelpers:
    def test_episode_separators(self):
        assert parse_episode("3 6") == (3, 6)
        assert parse_episode("3,6") == (3, 6)
        assert parse_episode(" 3 , 6 ") == (3, 6)

    def test_episode_rejects_garbage(self):
        with pytest.raises(MiningConfigError):
            parse_episode("3 x")
        with pytest.raises(MiningConfigError):
            parse_episode("")
        with pytest.raises(MiningConfigError):
            parse_episode("-1 2")

    def test_conf_forms(self):
        assert parse_conf("0.5") == parse_conf("1/2")
        with pytest.raises(MiningConfigError):
            parse_conf("half")


class TestMineCommand:
    def test_writes_expected_rule(self, fig_file, tmp_path, capsys):
        out = tmp_path / "rules.txt"
        assert run(_mine_args(fig_file, out)) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert "<1,4,1> -1-> (<3,5,6>,<1,2>) #SUP: 1 #CONF: 1.0000" in lines
        assert "rules ->" in capsys.readouterr().out

    def test_stats_file(self, fig_file, tmp_path):
        out = tmp_path / "rules.txt"
        stats_path = tmp_path / "stats.json"
        assert run(_mine_args(fig_file, out, stats=stats_path)) == 0
        data = json.loads(stats_path.read_text(encoding="utf-8"))
        assert data["strategy_mask"] == 4
        assert data["rules"] == len(out.read_text(encoding="utf-8").splitlines())

    def test_epsilon_constraint_exit_code(self, fig_file, tmp_path, capsys):
        args = _mine_args(fig_file, tmp_path / "r.txt")
        args[args.index("--query") + 1] = "3 5 6"
        args[args.index("--epsilon") + 1] = "2"
        assert run(args) == 2
        assert "epsilon" in capsys.readouterr().err

    def test_missing_input_exit_code(self, tmp_path):
        assert run(_mine_args(tmp_path / "nope.txt", tmp_path / "r.txt")) == 1

    def test_bad_flag_exit_code(self):
        assert run(["mine", "--nonsense"]) == 2


class TestVerifyCommand:
    def test_fixture_passes(self, fig_file, capsys):
        args = [
            "verify",
            "--input", str(fig_file),
            "--query", "3 6",
            "--min-sup", "1",
            "--min-conf", "0.01",
            "--delta", "3",
            "--epsilon", "4",
        ]
        assert run(args) == 0
        assert "agree" in capsys.readouterr().out

    def test_scale_refusal(self, fig_file):
        args = [
            "verify",
            "--input", str(fig_file),
            "--query", "3 6",
            "--min-sup", "1",
            "--min-conf", "0.5",
            "--delta", "3",
            "--epsilon", "4",
            "--max-timestamps", "5",
        ]
        assert run(args) == 2


class TestGenCommand:
    def test_deterministic(self, tmp_path):
        args = lambda p: [
            "gen",
            "--output", str(p),
            "--timestamps", "40",
            "--alphabet", "6",
            "--avg-items", "2",
            "--max-items", "4",
            "--seed", "11",
        ]
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        assert run(args(a)) == 0
        assert run(args(b)) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_invalid_spec(self, tmp_path):
        args = [
            "gen",
            "--output", str(tmp_path / "x.txt"),
            "--timestamps", "10",
            "--alphabet", "3",
            "--avg-items", "4",
            "--max-items", "2",
        ]
        assert run(args) == 2


class TestBenchCommand:
    def _run(self, fig_file, tmp_path, extra=()):
        out = tmp_path / "bench.csv"
        args = [
            "bench",
            "--input", str(fig_file),
            "--query", "3 6",
            "--min-sup", "1",
            "--delta", "4",
            "--epsilon", "4",
            "--min-confs", "0.01", "0.5",
            "--output", str(out),
            *extra,
        ]
        assert run(args) == 0
        return out.read_text(encoding="utf-8").splitlines()

    def test_csv_shape(self, fig_file, tmp_path):
        lines = self._run(fig_file, tmp_path)
        assert lines[0] == BENCH_HEADER
        assert len(lines) == 1 + 2 * 5

    def test_candidates_monotone_per_conf(self, fig_file, tmp_path):
        rows = [line.split(",") for line in self._run(fig_file, tmp_path)[1:]]
        for conf in ("0.01", "0.5"):
            cands = [int(r[3]) for r in rows if r[1] == conf]
            rules = {int(r[4]) for r in rows if r[1] == conf}
            assert all(a >= b for a, b in zip(cands, cands[1:]))
            assert len(rules) == 1

    def test_figures(self, fig_file, tmp_path):
        fig_dir = tmp_path / "figs"
        self._run(fig_file, tmp_path, extra=["--figures", str(fig_dir)])
        names = {p.name for p in fig_dir.iterdir()}
        assert names == {
            "candidates_by_mask.png",
            "runtime_by_mask.png",
            "rules_by_minconf.png",
        }
