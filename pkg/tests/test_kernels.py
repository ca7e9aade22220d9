import pytest

from nail import _pykernels, kernels

try:
    from nail import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


def full_matrix_levenshtein(a, b):
    # Textbook (len(a)+1) x (len(b)+1) table, independent of the kernels' two-row form.
    d = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a) + 1):
        d[i][0] = i
    for j in range(len(b) + 1):
        d[0][j] = j
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] != b[j - 1]))
    return d[len(a)][len(b)]


@pytest.mark.parametrize("mod", BACKENDS)
@pytest.mark.parametrize("a,b,expected", [
    ("kitten", "sitting", 3), ("", "", 0), ("", "abc", 3), ("flaw", "lawn", 2),
    ("forest", "forest", 0), ("gumbo", "gambol", 2), ("né", "ne", 1),
])
def test_levenshtein_known_pairs(mod, a, b, expected):
    assert mod.levenshtein(a, b) == expected
    assert mod.levenshtein(b, a) == expected
    assert full_matrix_levenshtein(a, b) == expected


# Published FNV-1a 64-bit test vectors.
@pytest.mark.parametrize("mod", BACKENDS)
@pytest.mark.parametrize("data,expected", [
    (b"", 0xCBF29CE484222325), (b"a", 0xAF63DC4C8601EC8C), (b"foobar", 0x85944171F73967E8),
])
def test_fnv1a64_vectors(mod, data, expected):
    assert mod.fnv1a64(data, 0) == expected


@pytest.mark.parametrize("mod", BACKENDS)
def test_hash_buckets_in_range(mod):
    buckets = mod.hash_buckets(["open", "the", "open the", "door"], 4096, 1337)
    assert len(buckets) == 4
    assert all(0 <= b < 4096 for b in buckets)


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_agree():
    words = ["", "a", "forest", "west of house", "the chirping of a song bird", "naïve café"]
    for a in words:
        for b in words:
            assert _ckernels.levenshtein(a, b) == _pykernels.levenshtein(a, b)
        raw = a.encode("utf-8")
        for seed in (0, 1337, 2**63):
            assert _ckernels.fnv1a64(raw, seed) == _pykernels.fnv1a64(raw, seed)
    assert _ckernels.hash_buckets(words, 65536, 7) == _pykernels.hash_buckets(words, 65536, 7)


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")
