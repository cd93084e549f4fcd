import os
from concurrent.futures import ThreadPoolExecutor


def max_threads() -> int:
    try:
        return max(1, int(os.environ.get("STRATHOM_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn, items):
    """Ordered map; uses a thread pool when ``STRATHOM_THREADS`` > 1."""
    items = list(items)
    k = min(max_threads(), len(items))
    if k <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))
