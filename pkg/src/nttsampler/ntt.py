"""Negacyclic polynomial multiplication over R_q = Z_q[x]/(x^n + 1).

Forward transform: Cooley-Tukey butterflies (multiply before add/sub),
natural-order input, bit-reversed output.  Inverse: Gentleman-Sande
butterflies, bit-reversed input, natural output, so no explicit
bit-reversal permutation is ever applied between multiplication stages.
The stage twiddles merge the negative-wrapped-convolution factors: the
forward output at index i equals

    sum_j a[j] * psi^j * omega^(j * brv(i))   (mod transform modulus)

i.e. the plain omega-NTT of the psi-prescaled coefficients.  The inverse
walks the same table backwards, using zeta(k) * zeta(mirror(k)) = -1,
and applies the n^-1 scaling at the end.

Transforms run modulo params.transform_modulus.  For NTT-friendly q this
is q itself; otherwise the product is computed exactly over the larger
prime and reduced to q on the way out (see arith.RingParams).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import RingParams, mod_add, mod_sub


@dataclass
class Polynomial:
    """Coefficient vector over Z_q, length n, canonical residues."""

    coeffs: list[int]
    params: RingParams

    def __post_init__(self) -> None:
        n, q = self.params.n, self.params.q
        if len(self.coeffs) != n:
            raise ValueError(f"expected {n} coefficients, got {len(self.coeffs)}")
        if any(c < 0 or c >= q for c in self.coeffs):
            raise ValueError("coefficients out of canonical range [0, q)")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Polynomial)
                and self.coeffs == other.coeffs
                and self.params.q == other.params.q
                and self.params.n == other.params.n)


def bit_reverse(x: int, bits: int) -> int:
    y = 0
    for _ in range(bits):
        y = (y << 1) | (x & 1)
        x >>= 1
    return y


@dataclass(frozen=True)
class NttPlan:
    """Precomputed tables for one ring; immutable and shareable."""

    params: RingParams
    stages: int
    twiddles: tuple[int, ...]       # psi^brv(k), k = 1 .. n-1 (n-1 entries)
    psi_powers: tuple[int, ...]     # psi^i, i < n (prescale view of the transform)
    inv_psi_powers: tuple[int, ...]
    n_inv: int                      # n^-1 mod transform modulus


def make_plan(params: RingParams) -> NttPlan:
    n, m, psi = params.n, params.transform_modulus, params.psi
    stages = n.bit_length() - 1
    twiddles = tuple(pow(psi, bit_reverse(k, stages), m) for k in range(1, n))
    psi_powers = tuple(pow(psi, i, m) for i in range(n))
    psi_inv = pow(psi, m - 2, m)
    inv_psi_powers = tuple(pow(psi_inv, i, m) for i in range(n))
    return NttPlan(params=params, stages=stages, twiddles=twiddles,
                   psi_powers=psi_powers, inv_psi_powers=inv_psi_powers,
                   n_inv=pow(n, m - 2, m))


def butterfly(u: int, v: int, w: int, params: RingParams) -> tuple[int, int]:
    """Cooley-Tukey butterfly (u + w*v, u - w*v) mod q."""
    t = (w * v) % params.q
    return mod_add(u, t, params.q), mod_sub(u, t, params.q)


def forward_ntt(p: Polynomial, plan: NttPlan) -> list[int]:
    """NTT-domain vector (bit-reversed index order) of p."""
    m = plan.params.transform_modulus
    a = list(p.coeffs)
    tw = plan.twiddles
    n = len(a)
    k = 0
    length = n >> 1
    while length >= 1:
        for start in range(0, n, length << 1):
            zeta = tw[k]
            k += 1
            for j in range(start, start + length):
                t = (zeta * a[j + length]) % m
                a[j + length] = (a[j] - t) % m
                a[j] = (a[j] + t) % m
        length >>= 1
    return a


def inverse_ntt(v: list[int], plan: NttPlan) -> Polynomial:
    """Inverse transform back to a canonical polynomial over Z_q."""
    params = plan.params
    m, q = params.transform_modulus, params.q
    a = list(v)
    tw = plan.twiddles
    n = len(a)
    k = n - 2
    length = 1
    while length < n:
        for start in range(0, n, length << 1):
            # tw[k] here equals -zeta^-1 of the matching forward block
            zeta = tw[k]
            k -= 1
            for j in range(start, start + length):
                t = a[j]
                a[j] = (t + a[j + length]) % m
                a[j + length] = ((a[j + length] - t) * zeta) % m
        length <<= 1
    n_inv = plan.n_inv
    if m == q:
        return Polynomial([(c * n_inv) % m for c in a], params)
    half = m >> 1
    out = []
    for c in a:
        c = (c * n_inv) % m
        out.append((c - m) % q if c > half else c % q)
    return Polynomial(out, params)


def pointwise_mul(u: list[int], v: list[int], plan: NttPlan) -> list[int]:
    m = plan.params.transform_modulus
    return [(a * b) % m for a, b in zip(u, v)]


def poly_mul(a: Polynomial, b: Polynomial, plan: NttPlan) -> Polynomial:
    """a * b mod (x^n + 1, q) via forward/pointwise/inverse."""
    return inverse_ntt(pointwise_mul(forward_ntt(a, plan), forward_ntt(b, plan), plan), plan)


def schoolbook_negacyclic(a: Polynomial, b: Polynomial) -> Polynomial:
    """O(n^2) reference multiplier: wrapped indices pick up a sign flip."""
    n, q = a.params.n, a.params.q
    ac, bc = a.coeffs, b.coeffs
    out = [0] * n
    for i in range(n):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n):
            k = i + j
            if k < n:
                out[k] = (out[k] + ai * bc[j]) % q
            else:
                out[k - n] = (out[k - n] - ai * bc[j]) % q
    return Polynomial(out, a.params)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    q = a.params.q
    return Polynomial([mod_add(x, y, q) for x, y in zip(a.coeffs, b.coeffs)], a.params)


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    q = a.params.q
    return Polynomial([mod_sub(x, y, q) for x, y in zip(a.coeffs, b.coeffs)], a.params)


def zero_polynomial(params: RingParams) -> Polynomial:
    return Polynomial([0] * params.n, params)


def random_polynomial(params: RingParams, src) -> Polynomial:
    """Uniform polynomial; coefficients drawn by rejection below q."""
    bound = params.q - 1
    return Polynomial([src.uniform_below(bound) for _ in range(params.n)], params)


# -- text serialization (one coefficient per line, decimal) ------------------

def poly_to_text(p: Polynomial) -> str:
    head = f"n={p.params.n} q={p.params.q}"
    return "\n".join([head] + [str(c) for c in p.coeffs]) + "\n"


def poly_from_text(text: str, params: RingParams) -> Polynomial:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    n = int(head[0].split("=")[1])
    q = int(head[1].split("=")[1])
    if n != params.n or q != params.q:
        raise ValueError(f"header n={n} q={q} does not match params "
                         f"n={params.n} q={params.q}")
    return Polynomial([int(ln) for ln in lines[1:]], params)
