"""Jitted statevector gate kernels.

Each kernel is a single pass over the flat amplitude array with bit-mask
index tests.  Every affected amplitude pair is read and written by exactly
one loop iteration, so the loops parallelize with no cross-iteration data
flow and the results are bit-for-bit independent of scheduling.
"""

import warnings

import numba

# Environment noise about the optional TBB threading layer; the workqueue
# layer numba falls back to is fine for these kernels.
warnings.filterwarnings(
    "ignore", message="The TBB threading layer requires", category=Warning
)


@numba.njit(parallel=True, cache=True)
def hadamard(a, tbit, inv):
    for i in numba.prange(a.size):
        if (i & tbit) == 0:
            j = i | tbit
            x = a[i]
            y = a[j]
            a[i] = (x + y) * inv
            a[j] = (x - y) * inv


@numba.njit(parallel=True, cache=True)
def mcx(a, cmask, tbit):
    full = cmask | tbit
    for i in numba.prange(a.size):
        if (i & full) == cmask:
            j = i | tbit
            t = a[i]
            a[i] = a[j]
            a[j] = t


@numba.njit(parallel=True, cache=True)
def mcz(a, mask):
    for i in numba.prange(a.size):
        if (i & mask) == mask:
            a[i] = -a[i]
