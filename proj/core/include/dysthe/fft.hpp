#pragma once

// Thin deterministic wrapper over FFTW complex transforms with plan caching.
// Plans are created with FFTW_ESTIMATE (measurement-free, so repeated runs
// pick identical algorithms and produce byte-identical results) and
// FFTW_UNALIGNED (safe new-array execution on std::vector storage).

#include <complex>

namespace dysthe::detail {

// Unitary 2D DFT of an nx-by-ny row-major array (ny = 1 gives the 1D case).
// sign = -1: forward (physical -> spectral); sign = +1: inverse.  in == out
// is allowed (a scratch copy is made); partially overlapping buffers are not.
void dft2(const std::complex<double>* in, std::complex<double>* out, int nx,
          int ny, int sign);

// Unitary 3D DFT of an nt-by-nx-by-ny row-major array.
void dft3(const std::complex<double>* in, std::complex<double>* out, int nt,
          int nx, int ny, int sign);

}  // namespace dysthe::detail
