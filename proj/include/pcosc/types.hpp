#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace pcosc {

using Complex = std::complex<double>;
using Mat2d = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;
using MatXc = Eigen::MatrixXcd;
using VecXc = Eigen::VectorXcd;
using VecXd = Eigen::VectorXd;

// Malformed arguments: wrong frame tag, basis mismatch, bad dimensions.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerically meaningless request: singular forms, defective matrices,
// eigensolver failure.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic sample generator. Draws are mapped from raw engine output
// (not std::uniform_real_distribution, whose stream is implementation
// defined), so identical seeds give identical samples on every platform.
// Components are uniform in [-1, 1]; complex draws fill real and imaginary
// parts independently.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return 2.0 * unit01() - 1.0; }
  Complex cuniform() {
    const double re = uniform();
    return {re, uniform()};
  }
  Vec2c cvec2() {
    const Complex a = cuniform();
    return Vec2c(a, cuniform());
  }
  VecXc cvec(Eigen::Index n) {
    VecXc v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cuniform();
    return v;
  }
  MatXc cmat(Eigen::Index n) {
    MatXc m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cuniform();
    return m;
  }

 private:
  double unit01() { return (engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
};

inline double max_abs(const MatXc& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace pcosc
