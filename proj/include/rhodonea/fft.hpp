#pragma once

// Thin FFTW wrapper. Planning is serialized (the FFTW planner is not
// thread-safe); execution runs on caller-owned buffers.

#include <fftw3.h>

#include <complex>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>

namespace rhodonea::fft {

enum class Direction : int { forward = FFTW_FORWARD, backward = FFTW_BACKWARD };

namespace detail {

inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (!plan_) throw std::runtime_error("FFTW failed to create a plan");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

inline fftw_complex* as_fftw(std::span<std::complex<double>> data) {
  return reinterpret_cast<fftw_complex*>(data.data());
}

}  // namespace detail

/// In-place unnormalized 2D DFT of a row-major rows x cols array:
/// X[k0,k1] = sum_{j0,j1} x[j0,j1] exp(sign 2 pi i (j0 k0 / rows + j1 k1 / cols)),
/// sign = -1 for forward, +1 for backward.
inline void dft2d(std::span<std::complex<double>> data, int rows, int cols, Direction dir) {
  if (data.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("dft2d: buffer size does not match dimensions");
  fftw_plan raw;
  {
    std::lock_guard lock(detail::planner_mutex());
    raw = fftw_plan_dft_2d(rows, cols, detail::as_fftw(data), detail::as_fftw(data),
                           static_cast<int>(dir), FFTW_ESTIMATE);
  }
  detail::Plan(raw).execute();
}

/// In-place unnormalized 1D DFTs over `howmany` contiguous rows of length n.
class BatchedDft {
 public:
  BatchedDft(std::span<std::complex<double>> data, int howmany, int n, Direction dir) {
    if (data.size() != static_cast<std::size_t>(howmany) * n)
      throw std::invalid_argument("BatchedDft: buffer size does not match dimensions");
    fftw_plan raw;
    {
      std::lock_guard lock(detail::planner_mutex());
      raw = fftw_plan_many_dft(1, &n, howmany, detail::as_fftw(data), nullptr, 1, n,
                               detail::as_fftw(data), nullptr, 1, n, static_cast<int>(dir),
                               FFTW_ESTIMATE);
    }
    plan_.emplace(raw);
  }

  /// Runs on the buffer given at construction.
  void execute() const { plan_->execute(); }

 private:
  std::optional<detail::Plan> plan_;
};

}  // namespace rhodonea::fft
