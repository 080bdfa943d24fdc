import json
from pathlib import Path

import pytest

from satotwist.groups import candidate_table
from satotwist.tables import FORMATTERS

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("fmt,ext", [("json", "json"), ("csv", "csv"), ("text", "txt")])
def test_golden(d, fmt, ext):
    assert FORMATTERS[fmt](candidate_table(d)) == (GOLDEN / f"table_d{d}.{ext}").read_text()


@pytest.mark.parametrize("d", [2, 3])
def test_json_round_trip(d):
    body = json.loads(FORMATTERS["json"](candidate_table(d)))
    assert body["conjugacy_classes"] == {2: 27, 3: 38}[d]
    assert len(body["records"]) == 23
    assert all(len(r["z"]) == 14 for r in body["records"])
    assert FORMATTERS["json"](candidate_table(d)) == json.dumps(body, indent=2) + "\n"
