import json
import math
import random

import numpy as np
import pytest

from accs.algorithm import optimize
from accs.cli import main
from accs.core import ConfigurationError, RngStream, RunRecord
from accs.benchmarks import get_function
from accs.harness import (
    Cell,
    ExperimentConfig,
    MissingDataError,
    SummaryTable,
    compare_to_fixture,
    competition_ranks,
    convergence_trace,
    derive_seed,
    load_config,
    load_fixture,
    rank_algorithms,
    read_runs,
    read_trace,
    run_experiment,
    runs_csv,
    summarize,
    trace_csv,
    write_experiment,
)
from accs.harness.fixtures import default_policy, printed_accs_ranks
from accs.harness.io import format_float


def _rec(fn, algo, final, run=0):
    return RunRecord(algo, fn, 0, [final], np.zeros(1), final, 1, run=run)


def _tiny(**kw):
    base = dict(algorithms=["accs"], functions=["F1"], runs=3, iterations=5, pop_size=6)
    base.update(kw)
    return ExperimentConfig(**base)


# seeds and execution


def test_derive_seed_is_stable_and_distinct():
    seeds = {derive_seed(42, "accs", "F1", k) for k in range(30)}
    assert len(seeds) == 30
    assert derive_seed(42, "accs", "F1", 0) == derive_seed(42, "accs", "F1", 0)
    assert derive_seed(42, "accs", "F1", 0) != derive_seed(43, "accs", "F1", 0)
    assert all(0 <= s < 2**64 for s in seeds)


def test_thirty_runs_thirty_seeds():
    records = run_experiment(_tiny(runs=30, iterations=1))
    assert len(records) == 30
    assert len({r.seed for r in records}) == 30
    assert [r.run for r in records] == list(range(30))


def test_single_run_equals_direct_call():
    cfg = _tiny(runs=1)
    (rec,) = run_experiment(cfg)
    direct = optimize(get_function("F1"), params=cfg.accs_params(), rng=RngStream(derive_seed(42, "accs", "F1", 0)))
    assert rec.final_best_fitness == direct.final_best_fitness
    assert rec.best_per_iteration.tobytes() == direct.best_per_iteration.tobytes()


def test_workers_do_not_change_results():
    cfg = _tiny(algorithms=["accs", "pso", "random"], functions=["F1", "F16"], runs=3)
    assert runs_csv(run_experiment(cfg, workers=1)) == runs_csv(run_experiment(cfg, workers=8))


def test_wall_time_nan_unless_requested():
    assert math.isnan(run_experiment(_tiny(runs=1))[0].wall_time)
    assert run_experiment(_tiny(runs=1, record_wall_time=True))[0].wall_time > 0


def test_random_search_gets_matched_budget():
    (rec,) = run_experiment(_tiny(algorithms=["random"], runs=1))
    assert rec.evaluations == 6 * (1 + 4 * 5)


@pytest.mark.parametrize(
    "kw", [dict(runs=0), dict(algorithms=["ga"]), dict(functions=["F99"]), dict(root_seed=-1)]
)
def test_config_validation(kw):
    with pytest.raises(ConfigurationError):
        _tiny(**kw)


def test_load_config_with_overrides(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"algorithms": "accs,pso", "functions": "F1", "runs": 4}))
    cfg = load_config(path, runs=2, iterations=None)
    assert cfg.algorithms == ["accs", "pso"] and cfg.runs == 2 and cfg.iterations is None
    path.write_text(json.dumps({"bogus": 1}))
    with pytest.raises(ConfigurationError):
        load_config(path)


# statistics


def test_summarize_examples():
    t = summarize([_rec("F1", "a", v) for v in (1.0, 1.0, 1.0)] + [_rec("F2", "a", v) for v in (0.0, 2.0)])
    assert t["F1", "a"].mean == 1 and t["F1", "a"].std == 0
    assert t["F2", "a"].mean == 1 and t["F2", "a"].std == math.sqrt(2)
    assert (t["F2", "a"].best, t["F2", "a"].worst, t["F2", "a"].n) == (0.0, 2.0, 2)


def test_summarize_single_run_std_nan_and_missing():
    assert math.isnan(summarize([_rec("F1", "a", 3.0)])["F1", "a"].std)
    with pytest.raises(MissingDataError):
        summarize([])
    with pytest.raises(MissingDataError):
        summarize([_rec("F1", "a", 3.0)])["F2", "a"]


def test_summary_round_trips_through_files(tmp_path):
    records = run_experiment(_tiny(functions=["F1", "F9"], runs=4))
    write_experiment(records, tmp_path)
    from_disk = summarize(read_runs(tmp_path))
    assert from_disk == summarize(records)
    assert SummaryTable.from_csv(from_disk.to_csv()) == from_disk
    assert [r.final_best for r in read_runs(tmp_path / "runs.csv")] == [r.final_best_fitness for r in records]


def test_format_float_round_trips():
    rng = random.Random(0)
    for _ in range(1000):
        v = rng.uniform(-1, 1) * 10 ** rng.randint(-300, 300)
        assert float(format_float(v)) == v
    assert format_float(float("nan")) == "nan"


# ranking


def test_competition_ranks_ties_and_nan():
    assert competition_ranks({"a": 0.0, "b": 0.0, "c": 1.0, "d": float("nan")}) == {"a": 1, "b": 1, "c": 3, "d": 4}


def test_single_algorithm_ranks_first_everywhere():
    t = summarize([_rec(f"F{i}", "accs", float(i)) for i in range(1, 20)])
    table = rank_algorithms(t)
    assert all(table.ranks[f]["accs"] == 1 for f in table.functions)
    assert table.average_rank("accs") == 1.0


def test_fixture_f7_ordering():
    table = rank_algorithms(load_fixture("classical"))
    assert table.flat_order("F7") == ["ACCS", "WOA", "DE", "GSA", "PSO", "FEP"]
    assert table.categories["unimodal"] == [f"F{i}" for i in range(1, 8)]


def test_printed_rank_arithmetic():
    printed = printed_accs_ranks()
    assert len(printed) == 19
    assert sum(printed.values()) == 63
    # the printed average "3.158" is 60/19; the printed total 63 gives 3.316
    assert round(63 / 19, 3) == 3.316 and round(60 / 19, 3) == 3.158
    counts = {k: list(printed.values()).count(k) for k in (1, 4, 5, 6)}
    assert counts == {1: 9, 4: 1, 5: 4, 6: 5}
    groups = ([f"F{i}" for i in range(1, 8)], [f"F{i}" for i in range(8, 14)], [f"F{i}" for i in range(14, 20)])
    assert [sum(printed[f] for f in g) for g in groups] == [15, 14, 34]
    assert [round(sum(printed[f] for f in g) / len(g), 3) for g in groups] == [2.143, 2.333, 5.667]


def test_rank_missing_cell():
    t = SummaryTable({("F1", "a"): Cell(1.0, 0.0, 1), ("F1", "b"): Cell(2.0, 0.0, 1), ("F2", "a"): Cell(1.0, 0.0, 1)})
    with pytest.raises(MissingDataError):
        rank_algorithms(t)


# fixture comparison


def _measured(**means):
    return SummaryTable({(f, "accs"): Cell(m, 0.0, 30) for f, m in means.items()})


def test_compare_examples():
    fixture = load_fixture("classical")
    report = compare_to_fixture(_measured(F1=1e-12, F5=29.1, F9=4.2), fixture)
    assert report.row("F1").passed
    assert report.row("F5").passed and report.row("F5").fixture == 28.9653
    bad = report.row("F9")
    assert not bad.passed and bad.delta == 4.2
    assert not report.passed and report.required_passed
    assert "F9,4.2000000000000002e+00" in report.render()


def test_compare_skips_missing_cells():
    report = compare_to_fixture(_measured(F1=0.0), load_fixture("classical"))
    assert [r.function for r in report.rows] == ["F1"]
    assert set(default_policy()["required"]) == {"F1", "F5", "F10"}


# traces


def test_convergence_trace_rows():
    rec = optimize(get_function("F1"), params=_tiny().accs_params().with_overrides(max_iterations=500), rng=RngStream(0))
    rows = convergence_trace(rec)
    assert len(rows) == 500 and rows[0][0] == 1
    assert all(a[1] >= b[1] for a, b in zip(rows, rows[1:]))
    const = RunRecord("accs", "F1", 0, [2.0] * 4, np.zeros(1), 2.0, 1)
    assert {v for _, v in convergence_trace(const)} == {2.0}
    assert trace_csv(const).splitlines()[0] == "iteration,best"


def test_trace_files_round_trip(tmp_path):
    records = run_experiment(_tiny(runs=2))
    write_experiment(records, tmp_path)
    assert read_trace(tmp_path, "accs", "F1", 1) == convergence_trace(records[1])
    with pytest.raises(ConfigurationError):
        read_trace(tmp_path, "accs", "F1", 7)


# command line


def test_cli_end_to_end(tmp_path, capsys):
    out = tmp_path / "res"
    assert main(["run", "--algo", "accs", "--fn", "F1,F5", "--runs", "2", "--iters", "20", "--out", str(out)]) == 0
    assert (out / "runs.csv").exists() and (out / "config.json").exists()
    capsys.readouterr()
    assert main(["summarize", "--in", str(out)]) == 0
    assert capsys.readouterr().out.startswith("function,algorithm,mean,std")
    assert main(["summarize", "--in", str(out), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)[0]["function"] == "F1"
    assert main(["rank", "--in", str(out)]) == 0
    assert main(["trace", "--in", str(out), "--run", "accs:F1:1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) > 20
    assert main(["compare", "--in", str(out)]) == 0
    # the best of a random initial population misses the F1 band
    raw = tmp_path / "raw"
    assert main(["run", "--algo", "accs", "--fn", "F1", "--runs", "2", "--iters", "0", "--out", str(raw)]) == 0
    capsys.readouterr()
    assert main(["compare", "--in", str(raw)]) == 2
    assert "FAIL" in capsys.readouterr().out


def test_cli_list_and_fixture_rank(capsys):
    assert main(["list", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 29
    assert main(["list"]) == 0
    assert "CEC10" in capsys.readouterr().out
    assert main(["rank", "--fixture", "classical", "--functions", "F7"]) == 0
    assert "ACCS\tWOA\tDE\tGSA\tPSO\tFEP" in capsys.readouterr().out


def test_cli_configuration_errors(tmp_path, capsys):
    assert main(["run", "--algo", "ga", "--fn", "F1", "--out", str(tmp_path)]) == 1
    assert main(["run", "--algo", "accs", "--fn", "F1"]) == 1
    assert main(["summarize", "--in", str(tmp_path / "missing")]) == 1
    assert main(["trace", "--in", str(tmp_path), "--run", "accs-F1"]) == 1
    assert "error:" in capsys.readouterr().err
