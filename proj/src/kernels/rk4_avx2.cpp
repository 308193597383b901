#include <immintrin.h>

#include "qqpt/kernels.hpp"

namespace qqpt::kernels {

namespace {

// Four lanes per register. Operation order matches rk4_scalar.cpp.
inline void rhs(const __m256d* mr, const __m256d* mi, const double* hr_s, const double* hi_s,
                const RateTable& rates, __m256d* out_r, __m256d* out_i) {
  __m256d hr[9], hi[9];
  for (int e = 0; e < 9; ++e) {
    hr[e] = _mm256_set1_pd(hr_s[e]);
    hi[e] = _mm256_set1_pd(hi_s[e]);
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      __m256d xr = _mm256_setzero_pd();
      __m256d xi = _mm256_setzero_pd();
      for (int c = 0; c < 3; ++c) {
        const int ac = 3 * a + c;
        const int cb = 3 * c + b;
        xr = _mm256_add_pd(xr, _mm256_sub_pd(_mm256_mul_pd(hr[ac], mr[cb]), _mm256_mul_pd(hi[ac], mi[cb])));
        xi = _mm256_add_pd(xi, _mm256_add_pd(_mm256_mul_pd(hr[ac], mi[cb]), _mm256_mul_pd(hi[ac], mr[cb])));
      }
      for (int c = 0; c < 3; ++c) {
        const int ac = 3 * a + c;
        const int cb = 3 * c + b;
        xr = _mm256_sub_pd(xr, _mm256_sub_pd(_mm256_mul_pd(mr[ac], hr[cb]), _mm256_mul_pd(mi[ac], hi[cb])));
        xi = _mm256_sub_pd(xi, _mm256_add_pd(_mm256_mul_pd(mr[ac], hi[cb]), _mm256_mul_pd(mi[ac], hr[cb])));
      }
      out_r[3 * a + b] = xi;
      out_i[3 * a + b] = _mm256_sub_pd(_mm256_setzero_pd(), xr);
    }
  }
  for (int e = 0; e < 9; ++e) {
    if (e % 4 == 0) continue;
    const __m256d g = _mm256_set1_pd(rates.dephase[e]);
    out_r[e] = _mm256_sub_pd(out_r[e], _mm256_mul_pd(g, mr[e]));
    out_i[e] = _mm256_sub_pd(out_i[e], _mm256_mul_pd(g, mi[e]));
  }
  const __m256d g10 = _mm256_set1_pd(rates.relax_10);
  const __m256d g21 = _mm256_set1_pd(rates.relax_21);
  out_r[0] = _mm256_add_pd(out_r[0], _mm256_mul_pd(g10, mr[4]));
  out_i[0] = _mm256_add_pd(out_i[0], _mm256_mul_pd(g10, mi[4]));
  out_r[4] = _mm256_sub_pd(_mm256_add_pd(out_r[4], _mm256_mul_pd(g21, mr[8])), _mm256_mul_pd(g10, mr[4]));
  out_i[4] = _mm256_sub_pd(_mm256_add_pd(out_i[4], _mm256_mul_pd(g21, mi[8])), _mm256_mul_pd(g10, mi[4]));
  out_r[8] = _mm256_sub_pd(out_r[8], _mm256_mul_pd(g21, mr[8]));
  out_i[8] = _mm256_sub_pd(out_i[8], _mm256_mul_pd(g21, mi[8]));
}

inline __m256d axpy(__m256d y, __m256d a, __m256d x) { return _mm256_add_pd(y, _mm256_mul_pd(a, x)); }

}  // namespace

void rk4_step_avx2(BatchState& state, const StageHamiltonians& h, const RateTable& rates, double dt) {
  const __m256d half = _mm256_set1_pd(0.5 * dt);
  const __m256d full = _mm256_set1_pd(dt);
  const __m256d sixth = _mm256_set1_pd(dt / 6.0);
  const __m256d two = _mm256_set1_pd(2.0);
  for (std::size_t l = 0; l < state.lanes; l += kLaneBlock) {
    __m256d yr[9], yi[9], tr[9], ti[9];
    __m256d k1r[9], k1i[9], k2r[9], k2i[9], k3r[9], k3i[9], k4r[9], k4i[9];
    for (int e = 0; e < 9; ++e) {
      yr[e] = _mm256_loadu_pd(&state.re[e * state.lanes + l]);
      yi[e] = _mm256_loadu_pd(&state.im[e * state.lanes + l]);
    }
    rhs(yr, yi, h.re[0].data(), h.im[0].data(), rates, k1r, k1i);
    for (int e = 0; e < 9; ++e) {
      tr[e] = axpy(yr[e], half, k1r[e]);
      ti[e] = axpy(yi[e], half, k1i[e]);
    }
    rhs(tr, ti, h.re[1].data(), h.im[1].data(), rates, k2r, k2i);
    for (int e = 0; e < 9; ++e) {
      tr[e] = axpy(yr[e], half, k2r[e]);
      ti[e] = axpy(yi[e], half, k2i[e]);
    }
    rhs(tr, ti, h.re[1].data(), h.im[1].data(), rates, k3r, k3i);
    for (int e = 0; e < 9; ++e) {
      tr[e] = axpy(yr[e], full, k3r[e]);
      ti[e] = axpy(yi[e], full, k3i[e]);
    }
    rhs(tr, ti, h.re[2].data(), h.im[2].data(), rates, k4r, k4i);
    for (int e = 0; e < 9; ++e) {
      __m256d sr = _mm256_add_pd(k1r[e], _mm256_mul_pd(two, k2r[e]));
      sr = _mm256_add_pd(sr, _mm256_mul_pd(two, k3r[e]));
      sr = _mm256_add_pd(sr, k4r[e]);
      __m256d si = _mm256_add_pd(k1i[e], _mm256_mul_pd(two, k2i[e]));
      si = _mm256_add_pd(si, _mm256_mul_pd(two, k3i[e]));
      si = _mm256_add_pd(si, k4i[e]);
      _mm256_storeu_pd(&state.re[e * state.lanes + l], axpy(yr[e], sixth, sr));
      _mm256_storeu_pd(&state.im[e * state.lanes + l], axpy(yi[e], sixth, si));
    }
  }
}

}  // namespace qqpt::kernels
