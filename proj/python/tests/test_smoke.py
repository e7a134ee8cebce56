import json

import pytest

import mak

SAMPLE = {
    "items": [{"id": "a", "cost": 2}, {"id": "b", "cost": 3}, {"id": "c", "cost": 1}],
    "voters": [{"id": "x", "utils": [1, 4, 0]}, {"id": "y", "utils": [5, 0, 2]}],
    "budget": 4,
    "rule": "diverse",
    "lambda": 1,
}


def test_round_trip():
    inst = mak.Instance.from_json(json.dumps(SAMPLE))
    assert inst.num_items == 3
    assert inst.num_voters == 2
    assert inst.rule == "diverse"
    assert mak.Instance.from_json(inst.to_json()) == inst


def test_solve_matches_oracle():
    inst = mak.Instance.from_json(json.dumps(SAMPLE))
    expected = mak.brute_force(inst)["value"]
    for algo in ["auto", "kpcover", "xp", "matching", "oracle"]:
        report = mak.solve(inst, algorithm=algo)
        assert report["value"] == expected
        assert report["cost"] <= inst.budget
    assert mak.solve(inst, algorithm="polymul")["bundle"] is None


def test_generated_classes():
    for seed in range(1, 6):
        inst = mak.generate("sc", num_voters=4, num_items=6, seed=seed)
        info = mak.analyze(inst)
        assert info["sc_order_verified"]
        opt = mak.brute_force(inst)["value"]
        assert mak.solve(inst, algorithm="sc")["value"] == opt
        approx = mak.solve(inst, algorithm="fptas", epsilon="1/2")
        assert approx["value"] <= opt
        assert approx["value"] * 3 >= opt * 2
        assert approx["epsilon"] == "1/2"


def test_median_and_best():
    for rule in ["median", "best"]:
        inst = mak.generate(num_voters=3, num_items=5, rule=rule, lambda_=2, seed=9)
        opt = mak.brute_force(inst)["value"]
        assert mak.solve(inst, algorithm="matching")["value"] == opt


def test_errors():
    with pytest.raises(mak.InputError):
        mak.Instance.from_json("{")
    inst = mak.Instance.from_json(json.dumps(SAMPLE))
    with pytest.raises(mak.InputError):
        mak.solve(inst, algorithm="simplex")
    with pytest.raises(mak.SizeError):
        mak.solve(inst, algorithm="oracle", caps={"oracle_max_items": 1})


def test_bench_is_deterministic(tmp_path):
    first, bad = mak.bench_csv(seed=5, counterexample_dir=str(tmp_path))
    second, _ = mak.bench_csv(seed=5, counterexample_dir=str(tmp_path))
    assert not bad
    assert first == second
    assert first.startswith("instance_id,n,m,b,lambda,rule,algo,value,millis,states")
