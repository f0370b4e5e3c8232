#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Dense integer convolution kernels used as the small-coefficient fast path of
// polynomial multiplication.  c must hold na + nb - 1 zero-initialised slots.
// Preconditions (checked by the caller): every |a[i]|, |b[j]| < 2^31 and every
// partial sum of products fits in int64.
namespace howe::kernels {

enum class Isa { Scalar, Avx2 };

void convolve_i64_scalar(const std::int64_t* a, std::size_t na,
                         const std::int64_t* b, std::size_t nb,
                         std::int64_t* c);
void convolve_i64_avx2(const std::int64_t* a, std::size_t na,
                       const std::int64_t* b, std::size_t nb,
                       std::int64_t* c);

// Runtime-selected variant. HOWE_KERNEL=scalar|avx2 overrides detection.
void convolve_i64(const std::int64_t* a, std::size_t na,
                  const std::int64_t* b, std::size_t nb, std::int64_t* c);

bool avx2_supported();
Isa active_isa();
void set_isa(Isa isa);  // throws DomainError if unsupported on this CPU
std::string_view isa_name(Isa isa);

}  // namespace howe::kernels
