"""Compare the numba kernels against the pure-numpy fallback.

The backend is fixed at import time by the UDC_BACKEND environment
variable, so each measurement runs in a fresh subprocess.  Numba
timings exclude JIT compilation (one warm-up pass per kernel).

Run:  python3 benchmarks/bench_backends.py
"""

import json
import os
import subprocess
import sys
import time


def _workload() -> dict[str, float]:
    import numpy as np

    import udc
    from udc import linalg, oracle

    field = udc.make_field(257)
    scheme = udc.fourier_scheme(field, 256)
    code = udc.derive_code(scheme, udc.RowSelection(0, 1, 224))
    rng = np.random.default_rng(7)

    messages = rng.integers(0, 257, size=(400, 224))
    words = code.encode(messages[:2])  # warm-up
    t0 = time.perf_counter()
    words = code.encode(messages)
    t_encode = time.perf_counter() - t0

    received = words[:200].copy()
    for i in range(received.shape[0]):
        pos = rng.choice(256, size=16, replace=False)
        received[i, pos] = (received[i, pos] + rng.integers(1, 257, size=16)) % 257
    udc.decode(code, received[0])  # warm-up
    t0 = time.perf_counter()
    for i in range(received.shape[0]):
        out = udc.decode(code, received[i])
        assert out.ok
    t_decode = time.perf_counter() - t0

    big = udc.make_field(10007)
    M = rng.integers(0, 10007, size=(300, 300))
    linalg.invert(big, M[:20, :20])  # warm-up
    t0 = time.perf_counter()
    Minv = linalg.invert(big, M)
    t_invert = time.perf_counter() - t0
    assert np.array_equal(big.matmul(M, Minv), np.eye(300, dtype=np.int64) % 10007)

    small_field = udc.make_field(29)
    small = udc.derive_code(udc.fourier_scheme(small_field, 7), udc.RowSelection(0, 1, 3))
    book = oracle.codebook(small)
    queries = rng.integers(0, 29, size=(2000, 7))
    oracle.nearest_codewords(book, queries[:5])  # warm-up
    t0 = time.perf_counter()
    oracle.nearest_codewords(book, queries)
    t_nearest = time.perf_counter() - t0

    return {
        "backend": udc.backend_name(),
        "encode_400_blocks": t_encode,
        "decode_200_words": t_decode,
        "invert_300x300": t_invert,
        "nearest_2000_queries": t_nearest,
    }


def main() -> int:
    if "--worker" in sys.argv:
        print(json.dumps(_workload()))
        return 0
    results = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, UDC_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker"],
            env=env,
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            print(f"{backend} worker failed:\n{proc.stderr}", file=sys.stderr)
            return 1
        results[backend] = json.loads(proc.stdout.strip().splitlines()[-1])
    names = [k for k in results["numba"] if k != "backend"]
    print(f"{'workload':<24} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name in names:
        a, b = results["numba"][name], results["numpy"][name]
        print(f"{name:<24} {a:>9.4f}s {b:>9.4f}s {b / a:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
