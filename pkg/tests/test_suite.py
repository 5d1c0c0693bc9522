import json

import pytest

from paratopo import topology as tp
from paratopo.formula import Mode
from paratopo.generate import GenConfig, random_model, random_topology, sample_topology
from paratopo.suite import CHECKS, replay, report_json, report_table, run_check, run_property_suite, CHECKS_BY_NAME

SMALL = GenConfig(seed=3, runs=8)


def test_config_validation():
    with pytest.raises(ValueError):
        GenConfig(runs=0)
    with pytest.raises(ValueError):
        GenConfig(min_points=3, max_points=2)


def test_generation_is_deterministic():
    cfg = GenConfig(seed=11)
    assert random_topology(cfg, n=3) == random_topology(cfg, n=3)
    assert random_model(cfg, "paraconsistent") == random_model(cfg, "paraconsistent")


def test_relation_density_extremes():
    import random
    assert sample_topology(random.Random(0), 4, density=0.0) == tp.discrete(4)
    assert sample_topology(random.Random(0), 4, density=1.0) == tp.indiscrete(4)


@pytest.mark.parametrize("mode, kind", [("paraconsistent", "is_closed"), ("paracomplete", "is_open")])
def test_random_valuations_fit_the_mode(mode, kind):
    cfg = GenConfig(seed=5, max_points=5)
    rng = cfg.rng("valuations")
    for _ in range(30):
        m = random_model(cfg, mode, rng)
        assert all(getattr(m.space, kind)(v) for v in m.valuation.values())


def test_check_registry():
    names = [c.name for c in CHECKS]
    assert len(names) == 18 == len(set(names))
    assert {c.name for c in CHECKS if c.report_only} == {"connected_formula_subspace", "connected_theory_subspace"}


def test_reports_are_reproducible():
    a = run_property_suite(SMALL)
    b = run_property_suite(SMALL)
    assert report_json(a, SMALL) == report_json(b, SMALL)
    assert report_table(a, SMALL) == report_table(b, SMALL)
    assert [r.name for r in a] == sorted(r.name for r in a)
    assert all(r.verdict in ("pass", "fail", "vacuous", "report-only") for r in a)


def test_failures_replay_to_the_same_verdict():
    for r in run_property_suite(GenConfig(seed=7, runs=20)):
        if r.verdict == "fail":
            assert r.counterexample is not None
            record = json.loads(json.dumps(r.counterexample))
            assert replay(record).status == "fail"
        if r.probe_example is not None and CHECKS_BY_NAME[r.name].report_only:
            assert replay(json.loads(json.dumps(r.probe_example))).status == "report"


@pytest.mark.parametrize("name", ["glut_boundary_identity", "gap_boundary_identity", "homeomorphism_truth_preservation",
                                  "finite_hennessy_milner", "topo_to_kripke_truth", "kripke_to_topo_truth",
                                  "discrete_homeomorphism_transfer", "continuous_bisimulation_invariance",
                                  "complement_boundary"])
def test_sound_checks_pass(name):
    assert run_check(CHECKS_BY_NAME[name], SMALL).verdict == "pass"


def test_unsound_fragments_are_reported():
    cfg = GenConfig(seed=7, runs=30)
    for name in ("continuous_forward_preservation", "open_backward_preservation"):
        r = run_check(CHECKS_BY_NAME[name], cfg)
        assert r.verdict == "fail" and r.counterexample["detail"]["formula"]
