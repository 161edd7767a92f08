#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "lipkit/simd/ops.hpp"

namespace lipkit::simd {

#if defined(LIPKIT_BUILD_AVX2)
const Ops* avx2_ops_impl();
#endif
#if defined(LIPKIT_BUILD_NEON)
const Ops* neon_ops_impl();
#endif

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

const Ops* avx2_ops() {
#if defined(LIPKIT_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return avx2_ops_impl();
#endif
  return nullptr;
}

const Ops* neon_ops() {
#if defined(LIPKIT_BUILD_NEON)
  // NEON is mandatory on aarch64.
  return neon_ops_impl();
#else
  return nullptr;
#endif
}

namespace {

struct Selection {
  Isa isa;
  const Ops* table;
};

Selection select() {
  const char* want = std::getenv("LIPKIT_ISA");
  if (want != nullptr && *want != '\0') {
    std::string w(want);
    if (w == "scalar") return {Isa::scalar, &scalar_ops()};
    if (w == "avx2") {
      if (const Ops* t = avx2_ops()) return {Isa::avx2, t};
      throw std::runtime_error("LIPKIT_ISA=avx2 requested but avx2 is unavailable");
    }
    if (w == "neon") {
      if (const Ops* t = neon_ops()) return {Isa::neon, t};
      throw std::runtime_error("LIPKIT_ISA=neon requested but neon is unavailable");
    }
    throw std::runtime_error("unknown LIPKIT_ISA value: " + w);
  }
  if (const Ops* t = avx2_ops()) return {Isa::avx2, t};
  if (const Ops* t = neon_ops()) return {Isa::neon, t};
  return {Isa::scalar, &scalar_ops()};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Ops& ops() { return *selection().table; }

Isa active_isa() { return selection().isa; }

}  // namespace lipkit::simd
