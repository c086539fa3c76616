import json
import pathlib

import jsonschema
import pytest

import hermorb

SCHEMA = json.loads((pathlib.Path(__file__).resolve().parents[2] / "docs" / "report.schema.json").read_text())


@pytest.mark.parametrize(
    "make",
    [
        lambda: hermorb.pairs("D", 5),
        lambda: hermorb.orbits("C:3"),
        lambda: hermorb.triple("A:5:p=3/1.6/r=1,s=0"),
        lambda: hermorb.semigroup("1.6", p=5, q=5, r=1, s=1),
        lambda: hermorb.normality("1.4", p=5),
        lambda: hermorb.normality("all", max_rank=5),
        lambda: hermorb.cg_verify(2),
    ],
)
def test_reports_match_schema(make):
    jsonschema.validate(make(), SCHEMA)


def test_report_all_matches_schema():
    rep = hermorb.report_all(max_params=2, max_degree=3, max_entry=2)
    jsonschema.validate(rep, SCHEMA)
    assert rep["ok"] is True


def test_schema_rejects_a_broken_header():
    rep = hermorb.pairs("B", 4)
    rep["header"]["tool"] = "other"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(rep, SCHEMA)
