"""Smoke test for the catalan_hankel extension module.

Build and install it first, for example:

    maturin build --release -m crates/py/Cargo.toml
    pip install target/wheels/catalan_hankel-*.whl

then run `python python/smoke_test.py`.
"""

import json
import sys
from fractions import Fraction
from math import comb

import catalan_hankel as ch


def check(label, got, want):
    if got != want:
        print(f"FAIL {label}: {got!r} != {want!r}")
        sys.exit(1)
    print(f"ok   {label}")


def main():
    check("M_2 terms", ch.sequence_terms("Mb", 6, b=2), [comb(2 * n + 1, n) for n in range(6)])
    check("Fine numbers", ch.sequence_terms("Mb", 8, b=-1), [1, 0, 1, 2, 6, 18, 57, 186])
    check("rational b", ch.sequence_terms("Mb", 3, b="-3/2")[2], Fraction(5, 4))

    h1 = ch.poly("Hb", 1)
    check("H_1(b, x)", str(h1), "b*x + 1")
    check("Poly round trip", ch.Poly(str(ch.poly("Hb", 2))), ch.poly("Hb", 2))
    check("H_3 at k=2", ch.poly("H", 3).eval(0, 2), 14)

    for n in range(4):
        for k in range(4):
            want = ch.poly("H", n).eval(0, k)
            check(f"catalan det n={n} k={k}", ch.hankel_det("catalan", n, k), want)

    check("count_pp(4, 2)", ch.count_pp(4, 2), 84)
    check("lgv dyck", ch.lgv_count("dyck", 4, 2), 84)
    check("lgv hv", ch.lgv_count("hv", 4, 2), 84)

    parts = ch.enumerate_pp(3, 2)
    check("enumerate_pp(3, 2)", len(parts), 14)
    for p in parts:
        for model in ("dyck", "hv"):
            paths = ch.pp_to_paths(p, 2, model)
            check(f"{model} round trip {p}", ch.paths_to_pp(paths, 3, model), p)

    report = json.loads(ch.verify("th1", n_max=4, k_max=4))
    check("th1 report", (report["suite"], report["summary"]["fail"]), ("th1", 0))

    try:
        ch.hankel_det("Mb", 0, 1, b=0.5)
    except TypeError:
        print("ok   float b refused")
    else:
        print("FAIL float b accepted")
        sys.exit(1)

    print("all smoke checks passed")


if __name__ == "__main__":
    main()
