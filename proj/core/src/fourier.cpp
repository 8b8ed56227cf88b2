#include "nscale/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "nscale/error.hpp"

namespace nscale {

namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

// FFTW_ESTIMATE picks the same algorithm on every run, which keeps the
// output bit-reproducible.
Amplitudes transform(const Grid& g, const Amplitudes& in, int sign) {
  std::array<int, kMaxDim> dims{};
  const int d = g.dim();
  // FFTW is row-major (last index fastest); our flat layout has axis 0 fastest.
  for (int a = 0; a < d; ++a) dims[static_cast<std::size_t>(a)] = g.n(d - 1 - a);

  Amplitudes src = in;
  Amplitudes out(in.size());
  auto* src_ptr = reinterpret_cast<fftw_complex*>(src.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan(
      fftw_plan_dft(d, dims.data(), src_ptr, out_ptr, sign, FFTW_ESTIMATE));
  if (!plan) throw UsageError("FFTW could not create a plan for this grid");
  fftw_execute(plan.get());

  const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace

MomentumAmplitudes::MomentumAmplitudes(Grid grid, Amplitudes amp)
    : grid_(std::move(grid)), amp_(std::move(amp)) {
  if (amp_.size() != grid_.size()) throw UsageError("momentum amplitudes do not match the grid");
}

double MomentumAmplitudes::spacing(int axis) const {
  return 2.0 * std::numbers::pi / grid_.length(axis);
}

Point MomentumAmplitudes::wave_vector(std::size_t flat) const {
  const Index3 idx = grid_.index(flat);
  Point k(grid_.dim());
  for (int a = 0; a < grid_.dim(); ++a) {
    const int n = grid_.n(a);
    int m = idx[static_cast<std::size_t>(a)];
    if (m >= (n + 1) / 2) m -= n;
    k[a] = spacing(a) * m;
  }
  return k;
}

std::size_t MomentumAmplitudes::negated(std::size_t flat) const {
  Index3 idx = grid_.index(flat);
  for (int a = 0; a < grid_.dim(); ++a) {
    const int n = grid_.n(a);
    int& m = idx[static_cast<std::size_t>(a)];
    m = (n - m) % n;
  }
  return grid_.flat(idx);
}

MomentumAmplitudes momentum_amplitudes(const WavePacket& psi) {
  return MomentumAmplitudes(psi.grid(), transform(psi.grid(), psi.amplitudes(), FFTW_FORWARD));
}

WavePacket position_amplitudes(const MomentumAmplitudes& phi) {
  return WavePacket(phi.grid(), transform(phi.grid(), phi.amplitudes(), FFTW_BACKWARD));
}

}  // namespace nscale
