"""Numerical kernel and cokernel of ``f -> f' + (a x + z) f``.

Multiplying by the unimodular chirp ``exp(-i Im(a) x**2/2 - i Im(z) x)`` is
an automorphism of Schwartz space and turns the operator into
``h' + (Re(a) x + Re(z)) h``; the substitution ``x = y / sqrt(|Re a|)``
then gives ``g' + (s y + z') g`` with ``s = sign(Re a)`` and real
``z' = Re(z) / sqrt(|Re a|)``.

In the Hermite function basis
``y h_n = (sqrt(n) h_{n-1} + sqrt(n+1) h_{n+1}) / sqrt(2)`` and
``h_n' = (sqrt(n) h_{n-1} - sqrt(n+1) h_{n+1}) / sqrt(2)``, so the
operator truncated to ``span(h_0..h_{N-1}) -> span(h_0..h_N)`` is a banded
``(N+1) x N`` matrix. Kernel dimensions are counted from its singular
values; the cokernel is the kernel of the formal adjoint
``-g' + (s y + z') g``.
"""

import logging
import math

import numpy as np

from nctorus.exceptions import DomainError, IndeterminateRankError

logger = logging.getLogger(__name__)

__all__ = [
    "MAX_HERMITE_DIM",
    "MIN_HERMITE_DIM",
    "hermite_operator",
    "kernel_cokernel_dims",
    "required_dim",
]

MIN_HERMITE_DIM = 64
MAX_HERMITE_DIM = 4096


def hermite_operator(d_coef: complex, x_coef: complex, shift: complex, N: int) -> np.ndarray:
    """Matrix of ``d_coef d/dy + x_coef y + shift`` from ``V_N`` to ``V_{N+1}``."""
    T = np.zeros((N + 1, N), dtype=complex)
    root2 = math.sqrt(2.0)
    for n in range(N):
        T[n, n] = shift
        if n > 0:
            T[n - 1, n] = (x_coef + d_coef) * math.sqrt(n) / root2
        T[n + 1, n] = (x_coef - d_coef) * math.sqrt(n + 1) / root2
    return T


def required_dim(shift: float, hermite_dim: int) -> int:
    """
    Truncation size that resolves a Gaussian centred at ``-shift``.

    Its Hermite coefficients follow a Poisson law of mean ``shift**2 / 2``,
    so the size grows by that mean plus ten standard deviations.
    """
    mean = shift * shift / 2.0
    return max(hermite_dim, math.ceil(mean + 10.0 * math.sqrt(mean)) + MIN_HERMITE_DIM)


def _null_count(T: np.ndarray, threshold: float) -> int:
    singular = np.linalg.svd(T, compute_uv=False)
    top = float(singular[0]) if singular.size else 0.0
    if top == 0.0:
        return T.shape[1]
    relative = singular / top
    ambiguous = relative[(relative > threshold / 100) & (relative < threshold * 100)]
    if ambiguous.size:
        raise IndeterminateRankError(
            f"singular values {ambiguous.tolist()} cluster at threshold {threshold}"
        )
    return int(np.count_nonzero(relative < threshold))


def kernel_cokernel_dims(
    a_coeff: complex,
    z: complex,
    hermite_dim: int = 256,
    threshold: float = 1e-6,
) -> tuple[int, int]:
    """
    ``(dim ker, dim coker)`` of ``f -> f' + (a x + z) f`` on Schwartz space.

    Parameters
    ----------
    a_coeff : complex
        Coefficient ``a``; ``Re(a)`` must be nonzero.
    z : complex
        Shift.
    hermite_dim : int, optional
        Smallest truncation size ``N >= 64``; it grows with ``|Re z|``.
    threshold : float, optional
        Singular values below ``threshold * s_max`` count as zero.

    Returns
    -------
    tuple[int, int]
        ``(1, 0)`` for ``Re(a) > 0`` and ``(0, 1)`` for ``Re(a) < 0``.

    Raises
    ------
    DomainError
        If ``Re(a) = 0`` or ``hermite_dim < 64``.
    IndeterminateRankError
        If singular values fall within two decades of the threshold, the
        truncation would exceed ``MAX_HERMITE_DIM``, or the counts break
        ``dim ker - dim coker = sign(Re a)``.

    Examples
    --------
    >>> kernel_cokernel_dims(-0.867 + 7.10j, 2.17 + 2.26j)
    (0, 1)
    """
    a_coeff = complex(a_coeff)
    if a_coeff.real == 0:
        raise DomainError("Re(a) must be nonzero")
    if hermite_dim < MIN_HERMITE_DIM:
        raise DomainError(f"hermite_dim must be at least {MIN_HERMITE_DIM}")
    sign = 1.0 if a_coeff.real > 0 else -1.0
    shift = complex(z).real / math.sqrt(abs(a_coeff.real))
    N = required_dim(shift, hermite_dim)
    if N > MAX_HERMITE_DIM:
        raise IndeterminateRankError(
            f"shift {shift:.3e} needs {N} Hermite functions (limit {MAX_HERMITE_DIM})"
        )
    T = hermite_operator(1.0, sign, shift, N)
    T_adj = hermite_operator(-1.0, sign, shift, N)
    dims = (_null_count(T, threshold), _null_count(T_adj, threshold))
    if dims[0] - dims[1] != int(sign):
        raise IndeterminateRankError(
            f"(ker, coker) = {dims} for a={a_coeff} violates the index {int(sign)}"
        )
    logger.debug(f"a={a_coeff}, z={z}: (ker, coker) = {dims} with N={N}")
    return dims
