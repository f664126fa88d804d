"""Collects one verdict line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = limit is None or elapsed < limit
        verdict = "PASS" if ok and within else "FAIL"
        bound = f" (limit {limit:g} s)" if limit is not None else ""
        RESULTS[number] = f"criterion {number:2d} {verdict}: {title} [{elapsed:.2f} s{bound}]"
        print(RESULTS[number])
    assert within, f"criterion {number} took {elapsed:.2f} s, limit {limit} s"
