import time

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60,
                          derandomize=True)
settings.load_profile("suite")

_SESSION_START = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _SESSION_START
    print(f"\nsuite wall time: {elapsed:.1f} s")
