"""Enumerator, generators and the claim-checking harness."""
import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from bergelab.graphcore import cycle, is_isomorphic
from bergelab.graphio import emit_graph6
from bergelab.lemmalab import (
    LEMMA_CLAIMS,
    REGISTRY,
    SKEW_CLAIMS,
    Claim,
    EnumerationTooLarge,
    Exhaustive,
    FileSource,
    GeneratorSpec,
    Sampled,
    check_graph,
    enumerate_all_graphs,
    generate,
    get_claim,
    register,
    run_suite,
    run_suites,
    sample_seed,
    unregister,
    validate,
)
from bergelab.lemmalab.claims import BindingOverflow, anticonnected_candidates
from bergelab.recognizers import (
    BudgetExceeded,
    is_berge,
    recognize_bicograph,
    recognize_bipartite,
    recognize_line_of_bipartite,
)
from bergelab.validators import check_basic

from oracles import permutation_classes, polya_count


def test_enumeration_examples():
    assert len(enumerate_all_graphs(1)) == 1
    assert len(enumerate_all_graphs(4)) == 11
    assert len(enumerate_all_graphs(5)) == 34
    with pytest.raises(EnumerationTooLarge):
        enumerate_all_graphs(9)


@pytest.mark.parametrize("n", range(0, 6))
def test_enumeration_matches_permutation_oracle(n):
    ours = enumerate_all_graphs(n)
    assert len(ours) == len(permutation_classes(n))
    for g, h in itertools.combinations(ours, 2):
        assert is_isomorphic(g, h) is None


@pytest.mark.parametrize("n", range(0, 8))
def test_enumeration_matches_polya_count(n):
    assert len(enumerate_all_graphs(n)) == polya_count(n)


def test_polya_counts():
    assert [polya_count(n) for n in range(1, 9)] == [1, 2, 4, 11, 34, 156, 1044, 12346]


def test_enumeration_is_deterministic():
    a = [emit_graph6(g) for g in enumerate_all_graphs(6)]
    b = [emit_graph6(g) for g in enumerate_all_graphs(6)]
    assert a == b


def test_generator_examples():
    for seed in range(10):
        g = generate(GeneratorSpec("bicograph", (2, 2), seed))
        assert g.n == 8
        cert = recognize_bicograph(g)
        assert cert is not None and check_basic(g, cert) == []
    g = generate(GeneratorSpec("berge_rejection", (9, 0.5), 42))
    assert is_berge(g)
    spec = GeneratorSpec("uniform", (9, 0.5), 5)
    assert generate(spec) == generate(spec)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 64 - 1))
def test_family_recognizers_agree(seed):
    g = generate(GeneratorSpec("bipartite", (4, 5, 0.5), seed))
    assert recognize_bipartite(g) is not None
    g = generate(GeneratorSpec("line_of_bipartite", (3, 4, 0.5), seed))
    assert recognize_line_of_bipartite(g) is not None
    g = generate(GeneratorSpec("bicograph", (2, 3), seed))
    assert recognize_bicograph(g) is not None
    g = generate(GeneratorSpec("berge_rejection", (8, 0.5), seed))
    assert is_berge(g)


def test_complement_of_generator():
    inner = GeneratorSpec("uniform", (7, 0.3), 0)
    outer = GeneratorSpec("complement_of", (inner,), 99)
    assert generate(outer) == generate(inner.with_seed(99)).complement()
    assert outer.describe()["params"][0]["family"] == "uniform"


def test_invalid_generator_params():
    with pytest.raises(ValueError):
        GeneratorSpec("nope", (1,), 0)
    with pytest.raises(ValueError):
        GeneratorSpec("uniform", (5, 0.5), -1)
    for bad in [("uniform", (5,)), ("uniform", (5, 1.5)), ("bicograph", (1, 2)),
                ("bipartite", (0, 2, 0.5)), ("complement_of", (3,))]:
        with pytest.raises(ValueError):
            validate(GeneratorSpec(bad[0], bad[1], 0))


def test_rejection_budget(monkeypatch):
    import bergelab.lemmalab.generators as gen

    monkeypatch.setattr(gen, "REJECTION_RETRIES", 3)
    # dense-ish 12-vertex graphs are almost never Berge
    with pytest.raises(BudgetExceeded):
        for seed in range(5):
            generate(GeneratorSpec("berge_rejection", (14, 0.5), seed))


def test_sample_seed():
    assert sample_seed(7, 0) == 7
    assert sample_seed(7, 3) == 4
    assert sample_seed(2 ** 64 - 1, 1) == 2 ** 64 - 2


def test_registry_contents():
    expected = {"spgt", "decomp", "lovasz", "evenprism", "endgame", *LEMMA_CLAIMS, *SKEW_CLAIMS}
    assert expected <= set(REGISTRY)
    with pytest.raises(KeyError):
        get_claim("nonexistent")


def test_suite_examples():
    rep = run_suite("spgt", Exhaustive(6))
    assert rep.graphs_checked == 156 and rep.counterexamples == [] and rep.passed
    rep = run_suite("trianglev", Sampled(GeneratorSpec("uniform", (8, 0.4)), 1000), seed=7)
    assert rep.passed
    assert rep.graphs_checked + rep.skipped == 1000
    assert rep.overflows == [] and rep.budget_failures == []
    rep = run_suite("evengap", Exhaustive(7))
    assert rep.passed and rep.graphs_checked + rep.skipped == 1044


def test_suite_is_deterministic_and_parallel_safe():
    src = Sampled(GeneratorSpec("uniform", (7, 0.5)), 120)
    a = run_suite("rr", src, seed=3).to_json()
    b = run_suite("rr", src, seed=3).to_json()
    c = run_suite("rr", src, seed=3, jobs=2).to_json()
    assert a == b == c


def _falsified_search(g, budget):
    # negated conclusion of the hole parity statement: report any even hole
    from bergelab.graphcore import enumerate_holes

    hole = next(enumerate_holes(g, 4, "even"), None)
    return None if hole is None else {"hole": hole}


def _falsified_confirm(g, b):
    from bergelab.graphcore import is_hole

    return is_hole(g, b["hole"]) and len(b["hole"]) % 2 == 0


@pytest.fixture
def falsified_claim():
    claim = register(Claim("test_falsified", "Berge graphs have no even holes", True,
                           _falsified_search, _falsified_confirm))
    yield claim
    unregister(claim.id)


def test_falsified_claim_yields_counterexamples(falsified_claim):
    rep = run_suite(falsified_claim.id, Exhaustive(4))
    assert not rep.passed
    # C4 is the only 4-vertex graph with a hole
    (c,) = rep.counterexamples
    assert is_isomorphic(c.graph, cycle(4)) is not None
    rep = run_suite(falsified_claim.id, Exhaustive(5))
    assert len(rep.counterexamples) > 1
    doc = rep.to_json()
    assert doc["counterexample_count"] == len(rep.counterexamples)
    json.dumps(doc)


def test_unconfirmed_counterexample_is_an_error():
    claim = register(Claim("test_liar", "reports every graph", False,
                           lambda g, budget: {"x": 1}, lambda g, b: False))
    try:
        with pytest.raises(AssertionError):
            check_graph("test_liar", 0, cycle(4))
    finally:
        unregister(claim.id)


def test_overflow_is_reported_not_dropped():
    # in C4 each nonadjacent pair has three anticonnected common-neighbour sets
    c4 = cycle(4)
    assert len(anticonnected_candidates(c4, "nonadjacent", 100)) == 6
    with pytest.raises(BindingOverflow):
        anticonnected_candidates(c4, "nonadjacent", 5)
    assert check_graph("rr", 0, c4, budget=5)[0] == "overflow"
    rep = run_suite("rr", Exhaustive(4), budget=5)
    assert rep.overflows and rep.to_json()["overflows"] == len(rep.overflows)
    assert rep.graphs_checked + rep.skipped + len(rep.overflows) == 11
    assert 0 < rep.overflow_rate < 1


def test_non_berge_members_are_counted_as_skipped():
    rep = run_suite("rr", Exhaustive(5))
    assert rep.skipped == 1  # the 5-hole
    assert rep.graphs_checked == 33


def test_file_source_and_merge(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("\n".join(emit_graph6(g) for g in enumerate_all_graphs(4)) + "\n")
    rep = run_suite("lovasz", FileSource(str(path)))
    assert rep.graphs_checked == 11 and rep.passed
    merged = run_suites("lovasz", [FileSource(str(path)), Exhaustive(3)])
    assert merged.graphs_checked == 15 and merged.passed
