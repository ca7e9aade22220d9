"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from nail import _pykernels

try:
    from nail import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng):
    words = ["forest", "trees", "path", "north", "light", "dim", "large", "house", "white", "door"]
    rooms = [" ".join(rng.choice(words) for _ in range(rng.randint(8, 30))) for _ in range(40)]
    pairs = [(rng.choice(rooms), rng.choice(rooms)) for _ in range(200)]
    feats = [" ".join(rng.choice(words) for _ in range(2)) for _ in range(5000)]
    return pairs, feats


def run(mod, pairs, feats):
    return {
        "levenshtein": lambda: [mod.levenshtein(a, b) for a, b in pairs],
        "hash_buckets": lambda: mod.hash_buckets(feats, 1 << 16, 1337),
        "fnv1a64": lambda: [mod.fnv1a64(f.encode()) for f in feats],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    pairs, feats = workloads(random.Random(args.seed))
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    else:
        print("compiled extension not built; timing the fallback only")
    timings = {name: {k: min(timeit.repeat(fn, number=1, repeat=args.repeat))
                      for k, fn in run(mod, pairs, feats).items()} for name, mod in backends.items()}
    print(f"{'kernel':<14}" + "".join(f"{b:>12}" for b in backends) + ("    speedup" if len(backends) > 1 else ""))
    for k in timings["python"]:
        row = f"{k:<14}" + "".join(f"{timings[b][k] * 1e3:>10.2f}ms" for b in backends)
        if "cython" in timings:
            row += f"{timings['python'][k] / timings['cython'][k]:>10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
