#include "shadowham/kernels.hpp"

#if defined(SHADOWHAM_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace shadowham::kernels {

#if defined(SHADOWHAM_HAVE_AVX2)

namespace {

template <SchemeId kScheme>
void advance_block(double* p_io, double* q_io, const double* x_in, double* max_io, std::size_t n_steps) {
  __m256d p = _mm256_loadu_pd(p_io);
  __m256d q = _mm256_loadu_pd(q_io);
  const __m256d x = _mm256_loadu_pd(x_in);
  const __m256d h = _mm256_mul_pd(x, _mm256_set1_pd(0.5));
  __m256d m = _mm256_loadu_pd(max_io);
  __m256d r2 = _mm256_add_pd(_mm256_mul_pd(p, p), _mm256_mul_pd(q, q));
  m = _mm256_max_pd(r2, m);
  for (std::size_t i = 0; i < n_steps; ++i) {
    if constexpr (kScheme == SchemeId::FirstOrder) {
      p = _mm256_sub_pd(p, _mm256_mul_pd(x, q));
      q = _mm256_add_pd(q, _mm256_mul_pd(x, p));
    } else {
      p = _mm256_sub_pd(p, _mm256_mul_pd(h, q));
      q = _mm256_add_pd(q, _mm256_mul_pd(x, p));
      p = _mm256_sub_pd(p, _mm256_mul_pd(h, q));
    }
    r2 = _mm256_add_pd(_mm256_mul_pd(p, p), _mm256_mul_pd(q, q));
    m = _mm256_max_pd(r2, m);
  }
  _mm256_storeu_pd(p_io, p);
  _mm256_storeu_pd(q_io, q);
  _mm256_storeu_pd(max_io, m);
}

}  // namespace

void advance_avx2(SchemeId scheme, const Batch& batch, std::size_t n_steps) {
  constexpr std::size_t kWidth = 4;
  const std::size_t n = batch.p.size();
  const std::size_t body = n - n % kWidth;
  for (std::size_t i = 0; i < body; i += kWidth) {
    if (scheme == SchemeId::FirstOrder) {
      advance_block<SchemeId::FirstOrder>(&batch.p[i], &batch.q[i], &batch.x[i], &batch.max_radius_sq[i], n_steps);
    } else {
      advance_block<SchemeId::SecondOrder>(&batch.p[i], &batch.q[i], &batch.x[i], &batch.max_radius_sq[i], n_steps);
    }
  }
  if (body < n) {
    advance_scalar(scheme,
                   Batch{batch.p.subspan(body), batch.q.subspan(body), batch.x.subspan(body),
                         batch.max_radius_sq.subspan(body)},
                   n_steps);
  }
}

#else

void advance_avx2(SchemeId scheme, const Batch& batch, std::size_t n_steps) { advance_scalar(scheme, batch, n_steps); }

#endif

}  // namespace shadowham::kernels
