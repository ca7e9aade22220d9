"""Kernel selection: the compiled extension when it was built, else pure Python.

Set ``NAIL_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("NAIL_PURE_PYTHON"):
    from nail._pykernels import fnv1a64, hash_buckets, levenshtein
    BACKEND = "python"
else:
    try:
        from nail._ckernels import fnv1a64, hash_buckets, levenshtein
        BACKEND = "cython"
    except ImportError:  # extension not built
        from nail._pykernels import fnv1a64, hash_buckets, levenshtein
        BACKEND = "python"

__all__ = ["BACKEND", "fnv1a64", "hash_buckets", "levenshtein"]
