import json

import numpy as np
import pytest

from htec import generate_sunflower
from htec.cli import entrypoint


def run(*argv):
    return entrypoint(list(argv))


@pytest.fixture()
def sunflower_file(tmp_path):
    path = tmp_path / "sunflower.txt"
    path.write_text(generate_sunflower([2, 3, 4, 5, 6, 7]).to_edgelist_text())
    return path


@pytest.fixture()
def disconnected_file(tmp_path):
    path = tmp_path / "two_blocks.txt"
    path.write_text("a b\nc d e\n")
    return path


class TestSunflowerCommand:
    def test_edgelist_output(self, tmp_path):
        out = tmp_path / "sun.txt"
        assert run("sunflower", "2", "3", "4", "5", "6", "7", "--output", str(out)) == 0
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 6
        assert lines[0] == "v1 v2"
        assert lines[5].split() == ["v1"] + [f"v{i}" for i in range(17, 23)]

    def test_stdout(self, capsys):
        assert run("sunflower", "2") == 0
        assert capsys.readouterr().out == "v1 v2\n"

    def test_bad_size(self, capsys):
        assert run("sunflower", "1") == 1


class TestComputeCommand:
    def test_json_result(self, sunflower_file, tmp_path):
        out = tmp_path / "result.json"
        assert run("compute", str(sunflower_file), "--output", str(out)) == 0
        payload = json.loads(out.read_text())
        assert payload["method"] == "htec"
        assert payload["rho"] == pytest.approx(10.9581, abs=5e-4)
        assert payload["nodes"][0]["label"] == "v1"
        assert payload["nodes"][0]["score"] == pytest.approx(0.3489, abs=5e-4)
        assert len(payload["edges"]) == 6
        assert payload["residual_inf"] <= 1e-8

    def test_csv_result(self, sunflower_file, tmp_path):
        out = tmp_path / "result.csv"
        assert run(
            "compute", str(sunflower_file), "--out-format", "csv", "--output", str(out)
        ) == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "kind,id,label,score"
        assert len(lines) == 1 + 22 + 6
        kind, vid, label, score = lines[1].split(",")
        assert (kind, vid, label) == ("node", "0", "v1")
        assert float(score) == pytest.approx(0.3489, abs=5e-4)

    def test_byte_deterministic(self, sunflower_file, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        run("compute", str(sunflower_file), "--output", str(a))
        run("compute", str(sunflower_file), "--output", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_loose_tolerance_converges_faster(self, sunflower_file, tmp_path):
        fast = tmp_path / "fast.json"
        slow = tmp_path / "slow.json"
        run("compute", str(sunflower_file), "--tol", "1e-4", "--output", str(fast))
        run("compute", str(sunflower_file), "--tol", "1e-12", "--output", str(slow))
        assert (
            json.loads(fast.read_text())["iterations"]
            < json.loads(slow.read_text())["iterations"]
        )

    def test_disconnected_exits_3(self, disconnected_file):
        assert run("compute", str(disconnected_file)) == 3

    def test_largest_component_rescues(self, disconnected_file, tmp_path):
        out = tmp_path / "result.json"
        assert run(
            "compute", str(disconnected_file), "--largest-component", "--output", str(out)
        ) == 0
        payload = json.loads(out.read_text())
        assert [n["label"] for n in payload["nodes"]] == ["c", "d", "e"]

    def test_no_convergence_exits_4(self, sunflower_file):
        assert run("compute", str(sunflower_file), "--max-iter", "2") == 4

    def test_missing_file_exits_2(self, tmp_path):
        assert run("compute", str(tmp_path / "absent.txt")) == 2

    def test_malformed_file_exits_2(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text(",,,\n")
        assert run("compute", str(bad)) == 2

    def test_bad_tol_is_usage_error(self, sunflower_file):
        assert run("compute", str(sunflower_file), "--tol", "-1") == 1

    def test_unknown_flag_is_usage_error(self, sunflower_file):
        assert run("compute", str(sunflower_file), "--frobnicate") == 1

    def test_simplex_format(self, tmp_path):
        (tmp_path / "nverts.txt").write_text("2\n3\n")
        (tmp_path / "simplices.txt").write_text("1\n2\n2\n3\n4\n")
        out = tmp_path / "result.json"
        assert run(
            "compute",
            str(tmp_path / "nverts.txt"),
            "--format", "simplex",
            "--simplices", str(tmp_path / "simplices.txt"),
            "--output", str(out),
        ) == 0
        assert len(json.loads(out.read_text())["nodes"]) == 4

    def test_simplex_requires_simplices_flag(self, tmp_path):
        (tmp_path / "nverts.txt").write_text("2\n")
        assert run("compute", str(tmp_path / "nverts.txt"), "--format", "simplex") == 1


class TestBaselineCommand:
    def test_linear_hub_first(self, sunflower_file, tmp_path):
        out = tmp_path / "linear.json"
        assert run(
            "baseline", str(sunflower_file), "--model", "linear", "--output", str(out)
        ) == 0
        payload = json.loads(out.read_text())
        assert payload["method"] == "linear"
        scores = [n["score"] for n in payload["nodes"]]
        assert max(range(len(scores)), key=scores.__getitem__) == 0

    def test_default_p(self, sunflower_file, tmp_path):
        out = tmp_path / "max.json"
        assert run(
            "baseline", str(sunflower_file), "--model", "max", "--output", str(out)
        ) == 0
        assert json.loads(out.read_text())["converged"] is True

    def test_unknown_model_is_usage_error(self, sunflower_file):
        assert run("baseline", str(sunflower_file), "--model", "median") == 1


class TestCompareCommand:
    def _results(self, sunflower_file, tmp_path):
        htec_out = tmp_path / "htec.json"
        linear_out = tmp_path / "linear.json"
        run("compute", str(sunflower_file), "--output", str(htec_out))
        run("baseline", str(sunflower_file), "--model", "linear", "--output", str(linear_out))
        return htec_out, linear_out

    def test_identical_rankings_give_flat_one(self, sunflower_file, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        htec_out, linear_out = self._results(sunflower_file, tmp_path)
        assert run("compare", str(htec_out), str(linear_out)) == 0
        for side in ("nodes", "edges"):
            lines = (tmp_path / f"compare_linear_{side}_curve.csv").read_text().strip().splitlines()
            assert lines[0] == "k,kendall,spearman"
            for line in lines[1:]:
                _, kendall, spearman = line.split(",")
                assert kendall == "1.0"
                assert spearman == "1.0"

    def test_self_comparison_flat_one(self, sunflower_file, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        htec_out, _ = self._results(sunflower_file, tmp_path)
        assert run("compare", str(htec_out), str(htec_out)) == 0
        lines = (tmp_path / "compare_htec+_nodes_curve.csv").read_text().strip().splitlines()
        assert all(line.split(",")[1] == "1.0" for line in lines[1:])

    def test_scatter_written(self, sunflower_file, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        htec_out, linear_out = self._results(sunflower_file, tmp_path)
        run("compare", str(htec_out), str(linear_out))
        lines = (tmp_path / "compare_linear_nodes_scatter.csv").read_text().strip().splitlines()
        assert lines[0] == "id,label,x,y"
        assert len(lines) == 23

    def test_custom_ks_and_union_mode(self, sunflower_file, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        htec_out, linear_out = self._results(sunflower_file, tmp_path)
        assert run(
            "compare", str(htec_out), str(linear_out),
            "--ks", "3,9,22", "--topk-mode", "union",
        ) == 0
        lines = (tmp_path / "compare_linear_nodes_curve.csv").read_text().strip().splitlines()
        assert [line.split(",")[0] for line in lines[1:]] == ["3", "9", "22"]

    def test_degenerate_slices_do_not_abort(self, sunflower_file, tmp_path, monkeypatch):
        # logexp floors most sunflower edge scores into one tie, so
        # some top-k slices have no defined correlation; those cells
        # come out as nan and the remaining files are still written
        monkeypatch.chdir(tmp_path)
        htec_out, _ = self._results(sunflower_file, tmp_path)
        log_out = tmp_path / "logexp.json"
        run("baseline", str(sunflower_file), "--model", "logexp", "--output", str(log_out))
        assert run("compare", str(htec_out), str(log_out)) == 0
        lines = (tmp_path / "compare_logexp_edges_curve.csv").read_text().strip().splitlines()
        cells = [line.split(",")[1] for line in lines[1:]]
        assert "nan" in cells
        nodes = (tmp_path / "compare_logexp_nodes_curve.csv").read_text().strip().splitlines()
        assert all(c.split(",")[1] != "nan" for c in nodes[1:])

    def test_mismatched_results_exit_2(self, sunflower_file, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        htec_out, _ = self._results(sunflower_file, tmp_path)
        other = tmp_path / "other.json"
        run("sunflower", "2", "3", "--output", str(tmp_path / "small.txt"))
        run("compute", str(tmp_path / "small.txt"), "--output", str(other))
        assert run("compare", str(htec_out), str(other)) == 2

    def test_single_file_is_usage_error(self, sunflower_file, tmp_path):
        htec_out, _ = self._results(sunflower_file, tmp_path)
        assert run("compare", str(htec_out)) == 1

    def test_invalid_json_exits_2(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        good = tmp_path / "good.json"
        good.write_text(json.dumps({"method": "x", "nodes": [], "edges": []}))
        assert run("compare", str(good), str(bad)) == 2


class TestStatsCommand:
    def test_sunflower_stats(self, sunflower_file, capsys):
        assert run("stats", str(sunflower_file)) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "num_nodes": 22,
            "num_hyperedges": 6,
            "avg_cardinality": 4.5,
            "max_cardinality": 7,
        }

    def test_dedupe_changes_counts(self, tmp_path, capsys):
        path = tmp_path / "dup.txt"
        path.write_text("a b\nb a\n")
        run("stats", str(path))
        assert json.loads(capsys.readouterr().out)["num_hyperedges"] == 2
        run("stats", str(path), "--dedupe-edges")
        assert json.loads(capsys.readouterr().out)["num_hyperedges"] == 1


class TestCheckCommand:
    def test_connected_sunflower(self, sunflower_file, capsys):
        assert run("check", str(sunflower_file)) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "weakly_irreducible": True,
            "positive_diagonal": True,
            "weakly_primitive": True,
        }

    def test_disconnected_report(self, disconnected_file, capsys):
        assert run("check", str(disconnected_file)) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["weakly_irreducible"] is False


class TestCapacityCommand:
    def test_gap_csv(self, sunflower_file, tmp_path):
        out = tmp_path / "gaps.csv"
        assert run(
            "capacity", str(sunflower_file), "--t-max", "50", "--output", str(out)
        ) == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "t,gap"
        assert len(lines) == 52
        final = float(lines[-1].split(",")[1])
        assert final <= 1e-8

    def test_disconnected_exits_3(self, disconnected_file):
        assert run("capacity", str(disconnected_file)) == 3


class TestUsage:
    def test_no_subcommand(self):
        assert run() == 1

    def test_unknown_subcommand(self):
        assert run("frobnicate") == 1
