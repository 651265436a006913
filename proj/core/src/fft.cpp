#include "dysthe/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

// Plans are cached per (rank, shape, sign) and reused via new-array
// execution.  FFTW_ESTIMATE keeps plan selection deterministic across runs
// (FFTW_MEASURE would time candidate algorithms and could pick different
// ones run to run); FFTW_UNALIGNED makes new-array execution valid for any
// std::vector buffer regardless of SIMD alignment.

namespace dysthe::detail {

namespace {

using PlanKey = std::tuple<int, int, int, int>;  // nt, nx, ny, sign

class PlanCache {
 public:
  fftw_plan get(int nt, int nx, int ny, int sign, fftw_complex* in,
                fftw_complex* out) {
    std::lock_guard<std::mutex> lock(mutex_);
    const PlanKey key{nt, nx, ny, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) {
      return it->second;
    }
    int rank = 0;
    int dims[3] = {0, 0, 0};
    if (nt > 1) {
      dims[rank++] = nt;
    }
    dims[rank++] = nx;
    if (ny > 1) {
      dims[rank++] = ny;
    }
    fftw_plan plan =
        fftw_plan_dft(rank, dims, in, out,
                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) {
      throw std::runtime_error("fft: plan creation failed");
    }
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void run(const std::complex<double>* in, std::complex<double>* out, int nt,
         int nx, int ny, int sign) {
  if (nt < 1 || nx < 1 || ny < 1) {
    throw std::invalid_argument("fft: shape must be positive");
  }
  const std::size_t n =
      static_cast<std::size_t>(nt) * static_cast<std::size_t>(nx) * ny;
  // Plans are created (and reused) strictly out-of-place, so an aliased
  // call goes through a scratch buffer.
  if (in == out) {
    std::vector<std::complex<double>> scratch(in, in + n);
    run(scratch.data(), out, nt, nx, ny, sign);
    return;
  }
  auto* src =
      reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in));
  auto* dst = reinterpret_cast<fftw_complex*>(out);
  fftw_plan plan = cache().get(nt, nx, ny, sign, src, dst);
  fftw_execute_dft(plan, src, dst);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out[i] *= scale;
  }
}

}  // namespace

void dft2(const std::complex<double>* in, std::complex<double>* out, int nx,
          int ny, int sign) {
  run(in, out, 1, nx, ny, sign);
}

void dft3(const std::complex<double>* in, std::complex<double>* out, int nt,
          int nx, int ny, int sign) {
  run(in, out, nt, nx, ny, sign);
}

}  // namespace dysthe::detail
