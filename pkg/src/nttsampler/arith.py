"""Modular/fixed-width integer arithmetic and the parameter-set catalog.

All residues are kept in canonical form [0, q).  Barrett constants use
k = 2*ceil(log2 q) + 1, which guarantees at most two correction
subtractions for inputs below q^2.

The BLISS catalog entry uses q = 12289 (the value also appearing in the
BLISS literature); a q of 11289 circulates in one description of the same
parameter set and is presumed a typo.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

from sympy import isprime


class UnknownParameterSet(KeyError):
    """Requested parameter set is not in the catalog and is not a file."""


class InvalidRoot(ValueError):
    """No primitive 2n-th root of unity could be found/verified."""


# Direct smallest-root scans only make sense for small moduli, where
# order-2n elements are dense; larger moduli derive a root instead.
_DIRECT_SCAN_LIMIT = 1 << 20


@dataclass(frozen=True)
class RingParams:
    """Ring R_q = Z_q[x]/(x^n + 1) plus NTT and Barrett constants.

    psi and omega are roots of unity modulo ``transform_modulus``.  For an
    NTT-friendly q (q prime, q = 1 mod 2n) the transform modulus is q
    itself.  Otherwise negacyclic multiplication is carried out exactly
    over the smallest prime M = 1 mod 2n with M > 2*n*(q-1)^2 and reduced
    back to q afterwards; q = 4093 needs this because 4092 = 2^2 * 3 * 11 * 31
    contains no usable power of two.
    """

    n: int
    q: int
    psi: int
    omega: int
    barrett_k: int
    barrett_mu: int
    transform_modulus: int

    @property
    def ntt_native(self) -> bool:
        return self.transform_modulus == self.q

    @property
    def width(self) -> int:
        """Operand bit-width of a datapath unit for this modulus."""
        return (self.q - 1).bit_length()


@dataclass(frozen=True)
class GaussianParams:
    """Discrete Gaussian parameters: mass(x) proportional to exp(-x^2 / 2 sigma^2)."""

    sigma: float
    tail_factor: int = 9
    lam: int = 64

    def __post_init__(self) -> None:
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if not 8 <= self.lam <= 128:
            raise ValueError("lam must be in [8, 128]")

    @property
    def max_value(self) -> int:
        return math.floor(self.tail_factor * self.sigma)


@dataclass(frozen=True)
class ParameterSet:
    name: str
    ring: RingParams
    gauss: GaussianParams


_CATALOG = {
    "LP": {"n": 256, "q": 4093, "sigma": 3.33},
    "BLISS": {"n": 512, "q": 12289, "sigma": 215.73},
}


def mod_add(a: int, b: int, q: int) -> int:
    """(a + b) mod q for canonical residues."""
    s = a + b
    return s - q if s >= q else s


def mod_sub(a: int, b: int, q: int) -> int:
    """(a - b) mod q for canonical residues."""
    d = a - b
    return d + q if d < 0 else d


def barrett_reduce(x: int, params: RingParams) -> int:
    """Reduce x in [0, q^2) modulo q via the Barrett estimate.

    t = x - q * floor(x * mu / 2^k), then at most two conditional
    subtractions.
    """
    q = params.q
    t = x - q * ((x * params.barrett_mu) >> params.barrett_k)
    if t >= q:
        t -= q
    if t >= q:
        t -= q
    return t


def mod_mul(a: int, b: int, params: RingParams) -> int:
    """(a * b) mod q via barrett_reduce."""
    return barrett_reduce(a * b, params)


def barrett_constants(q: int) -> tuple[int, int]:
    k = 2 * (q - 1).bit_length() + 1
    return k, (1 << k) // q


def find_psi(n: int, modulus: int) -> int:
    """Deterministic primitive 2n-th root of unity modulo `modulus`.

    An element g has order exactly 2n iff g^n = -1 (given 2n divides
    modulus - 1).  Small moduli get the smallest such g by exhaustive
    scan; for large (auxiliary) moduli, where order-2n elements are
    sparse, the root is derived from the smallest base c whose
    (modulus-1)/2n-th power is primitive.  Both searches are
    deterministic, so tables are reproducible.
    """
    if (modulus - 1) % (2 * n) != 0:
        raise InvalidRoot(f"2n={2 * n} does not divide {modulus}-1")
    if modulus <= _DIRECT_SCAN_LIMIT:
        for g in range(2, modulus):
            if pow(g, n, modulus) == modulus - 1:
                return g
        raise InvalidRoot(f"no primitive {2 * n}-th root mod {modulus}")
    exp = (modulus - 1) // (2 * n)
    for c in range(2, _DIRECT_SCAN_LIMIT):
        e = pow(c, exp, modulus)
        if pow(e, n, modulus) == modulus - 1:
            return e
    raise InvalidRoot(f"no primitive {2 * n}-th root found mod {modulus}")


def _transform_modulus(n: int, q: int) -> int:
    """q itself when NTT-friendly, else the smallest prime M = 1 (mod 2n)
    with M > 2*n*(q-1)^2 (large enough to recover the exact negacyclic
    product over the integers)."""
    if isprime(q) and (q - 1) % (2 * n) == 0:
        return q
    bound = 2 * n * (q - 1) ** 2
    m = (bound // (2 * n) + 1) * (2 * n) + 1
    while not isprime(m):
        m += 2 * n
    return m


def make_ring(n: int, q: int) -> RingParams:
    if n < 4 or n & (n - 1):
        raise ValueError("n must be a power of two, n >= 4")
    modulus = _transform_modulus(n, q)
    psi = find_psi(n, modulus)
    omega = (psi * psi) % modulus
    # primitivity check on the derived pair
    if pow(psi, n, modulus) != modulus - 1 or pow(psi, 2 * n, modulus) != 1:
        raise InvalidRoot(f"psi={psi} fails the primitivity check mod {modulus}")
    k, mu = barrett_constants(q)
    return RingParams(n=n, q=q, psi=psi, omega=omega,
                      barrett_k=k, barrett_mu=mu, transform_modulus=modulus)


def _from_descriptor(desc: dict) -> ParameterSet:
    gauss = GaussianParams(sigma=float(desc["sigma"]),
                           tail_factor=int(desc.get("tail_factor", 9)),
                           lam=int(desc.get("lambda", 64)))
    ring = make_ring(int(desc["n"]), int(desc["q"]))
    return ParameterSet(name=str(desc["name"]), ring=ring, gauss=gauss)


def load_parameter_set(name: str) -> ParameterSet:
    """Load a catalog entry ("LP", "BLISS") or a JSON descriptor path.

    Descriptor schema:
    {"name": str, "n": int, "q": int, "sigma": float,
     "tail_factor": int, "lambda": int}
    psi/omega/Barrett constants are always derived, never read from file.
    """
    if name in _CATALOG:
        entry = _CATALOG[name]
        return _from_descriptor({"name": name, **entry})
    if os.path.exists(name):
        with open(name) as fh:
            return _from_descriptor(json.load(fh))
    raise UnknownParameterSet(name)


def catalog_names() -> list[str]:
    return sorted(_CATALOG)
