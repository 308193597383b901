#pragma once
// Batched RK4 step of the qutrit master equation.
//
// A batch holds K independent 3x3 complex matrices in structure-of-arrays
// layout: entry e = 3a + b of lane l lives at re[e * lanes + l] and
// im[e * lanes + l]. All lanes share the Hamiltonian samples and rates, which
// is exactly the situation of the nine tomography inputs. Lanes are padded to
// a multiple of kLaneBlock with zeros.
//
// Every variant performs the same IEEE operations in the same order (no FMA),
// so results are bit-identical across variants.

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qqpt::kernels {

inline constexpr std::size_t kLaneBlock = 4;

struct BatchState {
  std::size_t lanes = 0;  // padded lane count, multiple of kLaneBlock
  std::vector<double> re;
  std::vector<double> im;

  explicit BatchState(std::size_t logical_lanes = 0);
  double& re_at(int entry, std::size_t lane) { return re[entry * lanes + lane]; }
  double& im_at(int entry, std::size_t lane) { return im[entry * lanes + lane]; }
  double re_at(int entry, std::size_t lane) const { return re[entry * lanes + lane]; }
  double im_at(int entry, std::size_t lane) const { return im[entry * lanes + lane]; }
};

/// Hamiltonian at the RK4 stage times t, t + dt/2, t + dt; row-major entries.
struct StageHamiltonians {
  std::array<std::array<double, 9>, 3> re{};
  std::array<std::array<double, 9>, 3> im{};
};

/// Dissipator coefficients, all in 1/ns.
struct RateTable {
  double relax_10 = 0.0;               // Gamma_10: |1> -> |0>
  double relax_21 = 0.0;               // Gamma_21: |2> -> |1>
  std::array<double, 9> dephase{};     // gamma_jk per entry, zero on the diagonal
};

using Rk4StepFn = void (*)(BatchState& state, const StageHamiltonians& h, const RateTable& rates, double dt);

enum class KernelVariant { Auto, Scalar, Avx2 };

std::string_view to_string(KernelVariant v);
KernelVariant parse_kernel_variant(std::string_view name);

/// Compiled in and supported by the running CPU.
bool kernel_available(KernelVariant v);

/// Resolves Auto to the fastest available variant. The environment variable
/// QQPT_KERNEL=scalar|avx2 overrides the automatic choice.
KernelVariant resolve_kernel(KernelVariant requested);

Rk4StepFn rk4_step_kernel(KernelVariant v);

void rk4_step_scalar(BatchState& state, const StageHamiltonians& h, const RateTable& rates, double dt);
#if defined(QQPT_HAVE_AVX2_KERNEL)
void rk4_step_avx2(BatchState& state, const StageHamiltonians& h, const RateTable& rates, double dt);
#endif

}  // namespace qqpt::kernels
