import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "MOBIUS_XFORM_THREADS"


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return max(1, n)


def map_ordered(fn, items, workers=None):
    """``list(map(fn, items))``, optionally on a thread pool; order is preserved."""
    items = list(items)
    workers = default_workers() if workers is None else max(1, workers)
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
