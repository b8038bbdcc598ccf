import json

from fqcluster import cache
from fqcluster.series import Polynomial


def test_store_and_load(tmp_path):
    key = cache.cell_key("123", 5, "A_ides", 0, "brute")
    assert cache.load(tmp_path, key) is None
    p = Polynomial.parse("4*t^2 + 39*t^3 + 26*t^4 + t^5")
    cache.store(tmp_path, key, p)
    assert cache.load(tmp_path, key) == p
    assert cache.load(tmp_path, cache.cell_key("123", 5, "A_ides", None, "brute")) is None


def test_version_stamp_invalidates(tmp_path, monkeypatch):
    key = cache.cell_key("321", 3, "P_ipk", 0, "spec")
    cache.store(tmp_path, key, Polynomial.parse("t"))
    monkeypatch.setattr(cache, "CACHE_VERSION", cache.CACHE_VERSION + 1)
    assert cache.load(tmp_path, key) is None


def test_corrupt_file_is_a_miss(tmp_path):
    key = cache.cell_key("12", 2, "F_plain", 0, "brute")
    cache.store(tmp_path, key, Polynomial.const(1))
    (f,) = tmp_path.glob("*.json")
    f.write_text("{not json")
    assert cache.load(tmp_path, key) is None


def test_key_is_canonical_in_pattern_order(tmp_path):
    a = cache.cell_key("132,231", 4, "A_ides", 0, "brute")
    b = cache.cell_key("231,132", 4, "A_ides", 0, "brute")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_env_var(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.cache_dir() == tmp_path
    assert cache.cache_dir("/elsewhere").as_posix() == "/elsewhere"
    monkeypatch.delenv(cache.ENV_VAR)
    assert cache.cache_dir() is None
