#include "howe/kernels.hpp"

namespace howe::kernels {

void convolve_i64_scalar(const std::int64_t* a, std::size_t na,
                         const std::int64_t* b, std::size_t nb,
                         std::int64_t* c) {
  for (std::size_t i = 0; i < na; ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    std::int64_t* ci = c + i;
    for (std::size_t j = 0; j < nb; ++j) ci[j] += ai * b[j];
  }
}

}  // namespace howe::kernels
