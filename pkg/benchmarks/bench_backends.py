#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Runs each workload in a subprocess with JONQ_PURE toggled, so the import
-time backend selection is exercised exactly as users see it.

    python benchmarks/bench_backends.py [--quick]
"""

import argparse
import os
import subprocess
import sys
import textwrap

WORKLOADS = {
    "groebner_elimination": """
        from jonq.ring import VariableSet, Polynomial, random_form
        from jonq.groebner import IdealHandle, eliminate
        ring = VariableSet([f"x{i}" for i in range(4)])
        f = random_form(ring, 3, 11)
        g = random_form(ring, 4, 12)
        yr = VariableSet([f"y{i}" for i in range(5)])
        big = ring.union(yr)
        xs = Polynomial.gens(ring)
        coords = [f * x for x in xs] + [g]
        gens = [Polynomial.variable(big, f"y{i}") - c.map_ring(big)
                for i, c in enumerate(coords)]
        E = eliminate(IdealHandle(big, gens), ring.names)
        assert len(E.gens) >= 1
    """,
    "plane_rees_saturation": """
        from jonq.fixtures import load_fixture
        from jonq.implicitize import implicitize
        from jonq.rees import monoid_association, saturation_identities
        P = load_fixture("plane").jonquieres()
        mon = implicitize(P)
        M, _ = monoid_association(P, mon, check_oracle=False)
        rep = saturation_identities(P, M, mon)
        assert rep.status == "holds"
    """,
    "space_downgraded_rees": """
        from jonq.fixtures import load_fixture
        from jonq.implicitize import implicitize
        from jonq.rees import downgraded_rees_ideal
        P = load_fixture("space").jonquieres()
        mon = implicitize(P)
        _, rep = downgraded_rees_ideal(P, mon)
        assert rep.codim_matches
    """,
    "polynomial_products": """
        from jonq.ring import VariableSet, random_form
        ring = VariableSet([f"x{i}" for i in range(5)])
        a = random_form(ring, 4, 3)
        b = random_form(ring, 4, 4)
        for _ in range(6):
            c = a * b
            a = a + c * 0 + a  # keep sizes stable, force traffic
        assert not c.is_zero()
    """,
}

DRIVER = """
import time, sys
from jonq.kernel import BACKEND
t0 = time.perf_counter()
{body}
print(f"{{BACKEND}} {{time.perf_counter() - t0:.3f}}")
"""


def run(workload, pure, repeats):
    body = textwrap.dedent(WORKLOADS[workload])
    code = DRIVER.format(body=body)
    env = dict(os.environ)
    env["JONQ_PURE"] = "1" if pure else "0"
    best = None
    backend = None
    for _ in range(repeats):
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        if out.returncode != 0:
            raise RuntimeError(out.stderr)
        backend, secs = out.stdout.split()
        secs = float(secs)
        best = secs if best is None else min(best, secs)
    return backend, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="single repetition")
    args = ap.parse_args()
    repeats = 1 if args.quick else 3
    print(f"{'workload':<28} {'compiled':>10} {'pure':>10} {'speedup':>9}")
    for name in WORKLOADS:
        cb, ct = run(name, pure=False, repeats=repeats)
        pb, pt = run(name, pure=True, repeats=repeats)
        note = "" if cb == "cython" else "  (no compiled kernel: same backend)"
        ratio = pt / ct if ct else float("inf")
        print(f"{name:<28} {ct:>9.3f}s {pt:>9.3f}s {ratio:>8.2f}x{note}")


if __name__ == "__main__":
    main()
