#include "tcs/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace tcs::detail {

namespace {
// fftw_plan_dft_1d / fftw_destroy_plan are not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct Fft::Impl {
  std::size_t n = 0;
  fftw_complex* buf = nullptr;
  fftw_plan fwd{};
  fftw_plan inv{};
};

Fft::Fft(std::size_t n) : impl_(std::make_unique<Impl>()) {
  if (n == 0) throw std::invalid_argument("Fft: size must be positive");
  impl_->n = n;
  impl_->buf = fftw_alloc_complex(n);
  std::lock_guard<std::mutex> lock(planner_mutex());
  impl_->fwd = fftw_plan_dft_1d(static_cast<int>(n), impl_->buf, impl_->buf,
                                FFTW_FORWARD, FFTW_ESTIMATE);
  impl_->inv = fftw_plan_dft_1d(static_cast<int>(n), impl_->buf, impl_->buf,
                                FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(impl_->fwd);
  fftw_destroy_plan(impl_->inv);
  fftw_free(impl_->buf);
}

std::size_t Fft::size() const { return impl_->n; }

void Fft::forward(std::vector<Complex>& data) const {
  if (data.size() != impl_->n) throw std::invalid_argument("Fft: size mismatch");
  for (std::size_t j = 0; j < impl_->n; ++j) {
    impl_->buf[j][0] = data[j].real();
    impl_->buf[j][1] = data[j].imag();
  }
  fftw_execute(impl_->fwd);
  for (std::size_t j = 0; j < impl_->n; ++j) {
    data[j] = Complex(impl_->buf[j][0], impl_->buf[j][1]);
  }
}

void Fft::inverse(std::vector<Complex>& data) const {
  if (data.size() != impl_->n) throw std::invalid_argument("Fft: size mismatch");
  for (std::size_t j = 0; j < impl_->n; ++j) {
    impl_->buf[j][0] = data[j].real();
    impl_->buf[j][1] = data[j].imag();
  }
  fftw_execute(impl_->inv);
  const double scale = 1.0 / static_cast<double>(impl_->n);
  for (std::size_t j = 0; j < impl_->n; ++j) {
    data[j] = Complex(impl_->buf[j][0], impl_->buf[j][1]) * scale;
  }
}

}  // namespace tcs::detail
