#include "shadowham/kernels.hpp"

namespace shadowham::kernels {

namespace {

template <SchemeId kScheme>
void advance_lane(double& p_io, double& q_io, double x, double& max_io, std::size_t n_steps) {
  double p = p_io, q = q_io, m = max_io;
  const double h = x * 0.5;
  double r2 = p * p + q * q;
  m = r2 > m ? r2 : m;
  for (std::size_t i = 0; i < n_steps; ++i) {
    if constexpr (kScheme == SchemeId::FirstOrder) {
      p = p - x * q;
      q = q + x * p;
    } else {
      p = p - h * q;
      q = q + x * p;
      p = p - h * q;
    }
    r2 = p * p + q * q;
    m = r2 > m ? r2 : m;
  }
  p_io = p;
  q_io = q;
  max_io = m;
}

}  // namespace

void advance_scalar(SchemeId scheme, const Batch& batch, std::size_t n_steps) {
  for (std::size_t i = 0; i < batch.p.size(); ++i) {
    if (scheme == SchemeId::FirstOrder) {
      advance_lane<SchemeId::FirstOrder>(batch.p[i], batch.q[i], batch.x[i], batch.max_radius_sq[i], n_steps);
    } else {
      advance_lane<SchemeId::SecondOrder>(batch.p[i], batch.q[i], batch.x[i], batch.max_radius_sq[i], n_steps);
    }
  }
}

}  // namespace shadowham::kernels
