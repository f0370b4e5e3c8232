#include <atomic>
#include <cstdlib>
#include <cstring>

#include "howe/errors.hpp"
#include "howe/kernels.hpp"

namespace howe::kernels {
namespace {

Isa detect() {
  if (const char* env = std::getenv("HOWE_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Isa::Avx2;
  }
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_supported())
    throw DomainError("AVX2 kernel requested but not supported by this CPU");
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void convolve_i64(const std::int64_t* a, std::size_t na,
                  const std::int64_t* b, std::size_t nb, std::int64_t* c) {
  if (active_isa() == Isa::Avx2)
    convolve_i64_avx2(a, na, b, nb, c);
  else
    convolve_i64_scalar(a, na, b, nb, c);
}

}  // namespace howe::kernels
