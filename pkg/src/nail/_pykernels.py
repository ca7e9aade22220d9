"""Pure-Python versions of the hot kernels. Used when the compiled module is absent."""

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
MASK64 = 0xFFFFFFFFFFFFFFFF


def levenshtein(a, b):
    """Unit-cost edit distance between two strings."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cost = 0 if ca == cb else 1
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost))
        prev = cur
    return prev[-1]


def fnv1a64(data, seed=0):
    h = (FNV_OFFSET ^ seed) & MASK64
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME) & MASK64
    return h


def hash_buckets(features, dim, seed):
    """Map each feature string to a bucket in [0, dim)."""
    return [fnv1a64(f.encode("utf-8"), seed) % dim for f in features]
