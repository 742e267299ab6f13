import json

import pytest

from src import data_loader
from src.errors import NOT_NORMALIZED, OUT_OF_RANGE, SCHEMA, InvalidInputError
from src.types import CountTable, JointDistribution


def write_json(path, data) -> str:
    with open(path, "w") as f:
        json.dump(data, f)
    return str(path)


def test_collections():
    assert data_loader.collections["distribution"] is data_loader.DistributionLoader
    assert data_loader.collections["counts"] is data_loader.CountTableLoader


def test_load_distribution(distribution_file):
    joint = data_loader.DistributionLoader().load(distribution_file("uniform_triple"))
    assert isinstance(joint, JointDistribution)
    assert joint.variables == ("A", "B", "C")
    assert joint.probability([1, -1, 1]) == 0.125


def test_load_pair(distribution_file):
    joint = data_loader.DistributionLoader().load(distribution_file("singlet_pair"))
    assert joint.arity == 2
    assert joint.probability([1, -1]) == 0.375


def test_resolve_relative_to_datasets():
    loader = data_loader.DistributionLoader()
    joint = loader.load("distributions/xor_triple.json")
    assert joint.probability([1, 1, 1]) == 0.25


def test_resolve_custom_root(tmp_path):
    pair = {"++": 0.5, "+-": 0.0, "-+": 0.0, "--": 0.5}
    write_json(tmp_path / "pair.json", {"variables": ["X", "Y"], "probabilities": pair})
    joint = data_loader.DistributionLoader({"root": str(tmp_path)}).load("pair.json")
    assert joint.variables == ("X", "Y")


def test_load_counts():
    table = data_loader.CountTableLoader().load("counts/population.json")
    assert isinstance(table, CountTable)
    assert table.total == 500
    assert table.count(a=True, b=False) == 71


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        data_loader.DistributionLoader().load(str(tmp_path / "absent.json"))


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(InvalidInputError) as err:
        data_loader.DistributionLoader().load(str(path))
    assert err.value.code == SCHEMA


@pytest.mark.parametrize(
    "data",
    [
        [0.5, 0.5],
        {"variables": ["A"]},
        {"variables": "AB", "probabilities": {}},
        {"variables": ["A"], "probabilities": [0.5, 0.5]},
        {"variables": ["A"], "probabilities": {"+": "half", "-": 0.5}},
        {"variables": ["A"], "probabilities": {"+": True, "-": 0.5}},
    ],
)
def test_distribution_schema(tmp_path, data):
    path = write_json(tmp_path / "dist.json", data)
    with pytest.raises(InvalidInputError) as err:
        data_loader.DistributionLoader().load(path)
    assert err.value.code == SCHEMA


def test_distribution_not_normalized(tmp_path):
    data = {"variables": ["A"], "probabilities": {"+": 0.5, "-": 0.6}}
    path = write_json(tmp_path / "dist.json", data)
    with pytest.raises(InvalidInputError) as err:
        data_loader.DistributionLoader().load(path)
    assert err.value.code == NOT_NORMALIZED


@pytest.mark.parametrize("value", [1.5, True, "3"])
def test_counts_schema(tmp_path, value):
    counts = {k: 1 for k in ("abc", "abC", "aBc", "aBC", "Abc", "AbC", "ABc", "ABC")}
    counts["aBc"] = value
    path = write_json(tmp_path / "counts.json", {"counts": counts})
    with pytest.raises(InvalidInputError) as err:
        data_loader.CountTableLoader().load(path)
    assert err.value.code == SCHEMA


def test_counts_missing_key(tmp_path):
    path = write_json(tmp_path / "counts.json", {"counts": {"abc": 1}})
    with pytest.raises(InvalidInputError) as err:
        data_loader.CountTableLoader().load(path)
    assert err.value.code == SCHEMA


def test_counts_too_large(tmp_path):
    counts = {k: 1 for k in ("abc", "abC", "aBc", "aBC", "Abc", "AbC", "ABc", "ABC")}
    counts["abc"] = 2**70
    path = write_json(tmp_path / "counts.json", {"counts": counts})
    with pytest.raises(InvalidInputError) as err:
        data_loader.CountTableLoader().load(path)
    assert err.value.code == OUT_OF_RANGE


def test_probability_too_large(tmp_path):
    data = {"variables": ["A"], "probabilities": {"+": 10**400, "-": 0}}
    path = write_json(tmp_path / "dist.json", data)
    with pytest.raises(InvalidInputError) as err:
        data_loader.DistributionLoader().load(path)
    assert err.value.code == OUT_OF_RANGE
