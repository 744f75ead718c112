import json

import pytest

from walkpowers.campaign import CampaignConfig, build_corpus, check_graph, parse_config, run_campaign
from walkpowers.graph import Graph

SMALL = """
# quick sweep
families = path, cycle, star, random_connected, random_regular
n_min = 2
n_max = 6
p = 0.5
seeds = 0..2
degrees = 2
regular_seeds = 0, 1
kmax = 6
chain_kmax = 4
matrix_count = 20
matrix_kmax = 4
lemma_count = 200
"""


def test_parse_config():
    cfg = parse_config(SMALL)
    assert cfg.families == ("path", "cycle", "star", "random_connected", "random_regular")
    assert cfg.seeds == (0, 1, 2)
    assert cfg.regular_seeds == (0, 1)
    assert cfg.p == (0.5,)
    assert cfg.kmax == 6
    assert cfg.tol == 1e-12


@pytest.mark.parametrize("text", ["bogus = 1", "kmax 3", "kmax = three", "families = path, torus"])
def test_parse_config_errors(text):
    with pytest.raises(ValueError):
        parse_config(text)


def test_default_corpus_covers_requirements():
    corpus = build_corpus(CampaignConfig())
    assert len(corpus) >= 500
    assert max(g.n for _, g in corpus) == 12
    assert len({label for label, _ in corpus}) == len(corpus)


def test_corpus_is_deterministic():
    cfg = parse_config(SMALL)
    assert build_corpus(cfg) == build_corpus(cfg)


def test_small_campaign_passes():
    summary = run_campaign(parse_config(SMALL))
    assert summary["ok"]
    assert summary["total_failed"] == 0
    assert summary["failures"] == []
    for name in ("inequality", "equality", "k3_identity", "oracle", "chain", "sandwich", "matrix_inequality",
                 "lemma_identity", "crossover"):
        assert summary["checks"][name]["passed"] > 0
    json.loads(json.dumps(summary))


def test_parallel_matches_serial():
    cfg = parse_config(SMALL)
    assert run_campaign(cfg, workers=2) == run_campaign(cfg, workers=1)


def test_input_files(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("4\n0 1\n2 3\n")
    cfg = parse_config(f"families = path\nn_max = 2\ninputs = {path}\nmatrix_count = 0\nlemma_count = 0")
    summary = run_campaign(cfg)
    assert summary["graphs"] == 3
    assert summary["checks"]["equality_extrapolated"]["passed"] > 0


def test_missing_input_file(tmp_path):
    cfg = parse_config(f"inputs = {tmp_path / 'nope.txt'}")
    with pytest.raises(OSError):
        run_campaign(cfg)


def test_check_graph_records_failures(monkeypatch):
    import walkpowers.campaign as campaign

    monkeypatch.setattr(campaign, "albertson_irregularity", lambda g: 1)
    t = check_graph("cycle", Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), CampaignConfig(chain_kmax=3))
    assert not t.ok
    assert t.failed["chain_equality"] == 1
    assert t.failures[0].startswith("chain_equality: cycle")
