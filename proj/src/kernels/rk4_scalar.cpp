#include "qqpt/kernels.hpp"

namespace qqpt::kernels {

BatchState::BatchState(std::size_t logical_lanes)
    : lanes((logical_lanes + kLaneBlock - 1) / kLaneBlock * kLaneBlock),
      re(9 * lanes, 0.0),
      im(9 * lanes, 0.0) {}

namespace {

// Reference right-hand side for one lane. The SIMD variants mirror this
// operation order exactly.
void rhs(const double* mr, const double* mi, const double* hr, const double* hi, const RateTable& rates,
         double* out_r, double* out_i) {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      double xr = 0.0;
      double xi = 0.0;
      for (int c = 0; c < 3; ++c) {
        const int ac = 3 * a + c;
        const int cb = 3 * c + b;
        xr = xr + (hr[ac] * mr[cb] - hi[ac] * mi[cb]);
        xi = xi + (hr[ac] * mi[cb] + hi[ac] * mr[cb]);
      }
      for (int c = 0; c < 3; ++c) {
        const int ac = 3 * a + c;
        const int cb = 3 * c + b;
        xr = xr - (mr[ac] * hr[cb] - mi[ac] * hi[cb]);
        xi = xi - (mr[ac] * hi[cb] + mi[ac] * hr[cb]);
      }
      // -i [H, M]
      out_r[3 * a + b] = xi;
      out_i[3 * a + b] = -xr;
    }
  }
  for (int e = 0; e < 9; ++e) {
    if (e % 4 == 0) continue;  // diagonal entries 0, 4, 8
    const double g = rates.dephase[e];
    out_r[e] = out_r[e] - g * mr[e];
    out_i[e] = out_i[e] - g * mi[e];
  }
  out_r[0] = out_r[0] + rates.relax_10 * mr[4];
  out_i[0] = out_i[0] + rates.relax_10 * mi[4];
  out_r[4] = out_r[4] + rates.relax_21 * mr[8] - rates.relax_10 * mr[4];
  out_i[4] = out_i[4] + rates.relax_21 * mi[8] - rates.relax_10 * mi[4];
  out_r[8] = out_r[8] - rates.relax_21 * mr[8];
  out_i[8] = out_i[8] - rates.relax_21 * mi[8];
}

}  // namespace

void rk4_step_scalar(BatchState& state, const StageHamiltonians& h, const RateTable& rates, double dt) {
  const double half = 0.5 * dt;
  const double sixth = dt / 6.0;
  for (std::size_t l = 0; l < state.lanes; ++l) {
    double yr[9], yi[9], tr[9], ti[9];
    double k1r[9], k1i[9], k2r[9], k2i[9], k3r[9], k3i[9], k4r[9], k4i[9];
    for (int e = 0; e < 9; ++e) {
      yr[e] = state.re_at(e, l);
      yi[e] = state.im_at(e, l);
    }
    rhs(yr, yi, h.re[0].data(), h.im[0].data(), rates, k1r, k1i);
    for (int e = 0; e < 9; ++e) {
      tr[e] = yr[e] + half * k1r[e];
      ti[e] = yi[e] + half * k1i[e];
    }
    rhs(tr, ti, h.re[1].data(), h.im[1].data(), rates, k2r, k2i);
    for (int e = 0; e < 9; ++e) {
      tr[e] = yr[e] + half * k2r[e];
      ti[e] = yi[e] + half * k2i[e];
    }
    rhs(tr, ti, h.re[1].data(), h.im[1].data(), rates, k3r, k3i);
    for (int e = 0; e < 9; ++e) {
      tr[e] = yr[e] + dt * k3r[e];
      ti[e] = yi[e] + dt * k3i[e];
    }
    rhs(tr, ti, h.re[2].data(), h.im[2].data(), rates, k4r, k4i);
    for (int e = 0; e < 9; ++e) {
      const double sr = k1r[e] + 2.0 * k2r[e] + 2.0 * k3r[e] + k4r[e];
      const double si = k1i[e] + 2.0 * k2i[e] + 2.0 * k3i[e] + k4i[e];
      state.re_at(e, l) = yr[e] + sixth * sr;
      state.im_at(e, l) = yi[e] + sixth * si;
    }
  }
}

}  // namespace qqpt::kernels
