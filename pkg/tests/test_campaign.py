import csv
import io
import json

import pytest

from specfac import campaign
from specfac.campaign import CampaignConfig, bucket_of, classify, sharpness_table
from specfac.families import extremal_graph
from specfac.generate import SplitMix64, connected_gnp, stream_output, trial_rng
from specfac.graph import complete, graph6_decode, graph6_encode, is_connected


def test_splitmix_reference_values():
    # Reference outputs of SplitMix64 seeded with 0.
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_stream_output_is_random_access():
    rng = SplitMix64(1234)
    seq = [rng.next() for _ in range(20)]
    assert [stream_output(1234, k) for k in range(20)] == seq


def test_below_is_in_range():
    rng = SplitMix64(5)
    assert all(0 <= rng.below(7) < 7 for _ in range(200))
    with pytest.raises(ValueError):
        rng.below(0)


def test_connected_gnp_reproducible():
    a = connected_gnp(12, 0.3, trial_rng(9, 4))
    b = connected_gnp(12, 0.3, trial_rng(9, 4))
    assert a == b and is_connected(a)


def test_buckets():
    assert bucket_of(1.0, 0.5) == "ABOVE"
    assert bucket_of(0.5, 1.0) == "BELOW"
    assert bucket_of(1.0 + 5e-8, 1.0) == "BOUNDARY"


def test_extremal_lands_on_boundary():
    rec = classify(extremal_graph(14).graph, 0.0, 0)
    assert rec.bucket == "BOUNDARY"
    assert not rec.covered and not rec.counterexample


def test_complete_graph_record():
    rec = classify(complete(14), 0.0, 3, direct_oracle=True)
    assert rec.bucket == "ABOVE" and rec.covered and rec.oracle_agrees
    assert rec.as_dict()["status"] == "OK"


def test_config_validation():
    for bad in (
        CampaignConfig(mode="nope"),
        CampaignConfig(trials=0),
        CampaignConfig(n_min=5, n_max=4),
        CampaignConfig(alphas=(1.0,)),
        CampaignConfig(p=1.5),
        CampaignConfig(mode="exhaustive", n_min=1, n_max=10),
        CampaignConfig(mode="random", n_max=27),
    ):
        with pytest.raises(ValueError):
            bad.validate()


def _small_random(**kw):
    base = dict(mode="random", n_min=10, n_max=10, alphas=(0.0, 0.5), trials=25, seed=17, p=0.6)
    base.update(kw)
    return CampaignConfig(**base)


def test_report_is_deterministic_and_worker_independent():
    a = campaign.run(_small_random())
    b = campaign.run(_small_random(workers=3))
    # Everything outside the timing header is byte-identical.
    ja, jb = json.loads(a.to_json()), json.loads(b.to_json())
    ja.pop("header"), jb.pop("header")
    assert json.dumps(ja, sort_keys=True) == json.dumps(jb, sort_keys=True)
    assert a.to_csv() == b.to_csv()
    assert ja["schema"] == 1


def test_report_records_roundtrip_graph6():
    rep = campaign.run(_small_random())
    for rec in rep.records:
        g = graph6_decode(rec.graph6)
        assert g.n == rec.n and graph6_encode(g) == rec.graph6
    assert rep.summary["oracle_disagreements"] == 0


def test_csv_layout():
    rep = campaign.run(_small_random(fmt="csv"))
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert tuple(rows[0]) == campaign.CSV_COLUMNS
    assert len(rows) == 1 + len(rep.records)


def test_write_to_file(tmp_path):
    out = tmp_path / "r.json"
    rep = campaign.run(_small_random(out=str(out)))
    rep.write()
    doc = json.loads(out.read_text())
    assert doc["summary"] == json.loads(json.dumps(rep.summary))
    assert len(doc["records"]) == len(rep.records)


def test_exhaustive_small_orders_agree():
    rep = campaign.run(CampaignConfig(mode="exhaustive", n_min=1, n_max=6, alphas=(0.0, 0.8)))
    assert rep.summary["oracle_disagreements"] == 0
    assert rep.summary["counterexamples"] == 0
    assert rep.summary["records"] == 2 * (1 + 1 + 2 + 6 + 21 + 112)


def test_families_mode():
    rep = campaign.run(CampaignConfig(mode="families", n_min=14, n_max=16, alphas=(0.0, 0.75)))
    assert rep.ok and rep.summary["checked"] > 0
    assert rep.summary["max_quotient_gap"] < 1e-9


def test_sharpness_table_rows():
    rows = sharpness_table(range(14, 21), (0.0, 0.7))
    assert all(r.passed for r in rows)
    assert {(r.n, r.alpha) for r in rows} == {(n, 0.0) for n in range(14, 21)} | {(20, 0.7)}


def test_audit_mode():
    rep = campaign.run(CampaignConfig(mode="audit", n_min=14, n_max=18, alphas=(0.0, 0.5)))
    assert rep.ok
    assert json.loads(rep.to_json())["audit"]
