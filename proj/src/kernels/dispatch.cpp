#include "shadowham/kernels.hpp"

#include "shadowham/error.hpp"

namespace shadowham::kernels {

std::string to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SHADOWHAM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa isa = isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

void advance(SchemeId scheme, const Batch& batch, std::size_t n_steps, Isa isa) {
  const std::size_t n = batch.p.size();
  if (batch.q.size() != n || batch.x.size() != n || batch.max_radius_sq.size() != n)
    throw UsageError("batch spans differ in length");
  if (!isa_available(isa)) throw UsageError("ISA " + to_string(isa) + " is not available on this machine");
  if (isa == Isa::Avx2) {
    advance_avx2(scheme, batch, n_steps);
  } else {
    advance_scalar(scheme, batch, n_steps);
  }
}

}  // namespace shadowham::kernels
