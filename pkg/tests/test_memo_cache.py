from concurrent.futures import ThreadPoolExecutor

from integrations.memo_cache import MemoCache


class TestMemoCache:

    def test_get_and_set(self):
        cache = MemoCache()
        assert cache.get("k") is None
        cache.set("k", {"x": 1})
        assert cache.get("k") == {"x": 1}
        assert cache.stats() == {"entries": 1, "hits": 1, "misses": 1}

    def test_evicts_oldest(self):
        cache = MemoCache(max_entries=2)
        for key in ("a", "b", "c"):
            cache.set(key, key)
        assert cache.get("a") is None
        assert cache.get("c") == "c"

    def test_clear(self):
        cache = MemoCache()
        cache.set(1, 1)
        cache.clear()
        assert cache.stats()["entries"] == 0

    def test_concurrent_writers(self):
        cache = MemoCache(max_entries=50)
        with ThreadPoolExecutor(max_workers=4) as pool:
            list(pool.map(lambda i: cache.set(i % 80, i % 80), range(1000)))
        assert cache.stats()["entries"] <= 50
