# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""Hash utilities.

MD5 digests of matrix bits are stored in instance fingerprints so that a
replayed instance can be checked for bit-identical regeneration. They are not
used for cryptographic security.
"""

import hashlib

import numpy as np

from loewner_lab.spectra import HermitianMatrix


def md5_bytes(data: bytes) -> str:
    """Compute an MD5 hash for in-memory bytes.

    Args:
        data:
            Raw bytes.

    Returns:
        Lowercase hex MD5 digest.
    """

    # Some environments run in FIPS mode. Python's hashlib supports
    # `usedforsecurity=False` for legacy hashes on OpenSSL-backed builds.
    try:
        hasher = hashlib.md5(usedforsecurity=False)  # type: ignore[call-arg]
    except TypeError:
        hasher = hashlib.md5()

    hasher.update(data)
    return hasher.hexdigest()


def matrix_digest(*matrices: HermitianMatrix) -> str:
    """Digest of the little-endian float64 entries of one or more matrices, shape included."""

    chunks: list[bytes] = []
    for h in matrices:
        chunks.append(f"{h.dim}:".encode("ascii"))
        chunks.append(np.ascontiguousarray(h.entries, dtype="<f8").tobytes())
    return md5_bytes(b"".join(chunks))
