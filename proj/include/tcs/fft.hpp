#ifndef TCS_FFT_HPP
#define TCS_FFT_HPP

#include <memory>
#include <vector>

#include "tcs/hamiltonian.hpp"

namespace tcs::detail {

// In-place 1-D complex FFT of fixed length, backed by FFTW (ESTIMATE plans,
// so repeated runs are bit-reproducible). Plan creation is serialized
// internally; one instance must not be shared across threads.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const;
  void forward(std::vector<Complex>& data) const;  // unnormalized
  void inverse(std::vector<Complex>& data) const;  // scaled by 1/n

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tcs::detail

#endif  // TCS_FFT_HPP
