import threading
from typing import Any, Hashable, Optional
from core.config import get_settings

settings = get_settings()

_MISSING = object()

class MemoCache:
    """
    Process-wide memo table for the rewriters.

    Writes for one key always carry equal values, so concurrent writers
    simply race and the last one wins.
    """

    def __init__(self, max_entries: int = 0):
        self._store = {}
        self._lock = threading.Lock()
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable, default: Optional[Any] = None) -> Any:
        value = self._store.get(key, _MISSING)
        if value is _MISSING:
            self.misses += 1
            return default
        self.hits += 1
        return value

    def set(self, key: Hashable, value: Any):
        with self._lock:
            if self.max_entries and len(self._store) >= self.max_entries and key not in self._store:
                # dicts keep insertion order: drop the oldest entry
                self._store.pop(next(iter(self._store)))
            self._store[key] = value

    def clear(self):
        with self._lock:
            self._store.clear()
            self.hits = 0
            self.misses = 0

    def stats(self) -> dict:
        return {"entries": len(self._store), "hits": self.hits, "misses": self.misses}

# Singleton Instance
memo = MemoCache(settings.MEMO_MAX_ENTRIES)
