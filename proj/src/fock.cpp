#include "pcosc/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace pcosc {

namespace {

constexpr Complex kI{0.0, 1.0};

using MatXd = Eigen::MatrixXd;

MatXd single_mode_lowering(int dim) {
  MatXd a = MatXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

}  // namespace

void validate(const ModeBasis& basis) {
  if (basis.dim < 1) throw InputError("ModeBasis: dim must be at least 1");
}

int ModeBasis::index(int n1, int n2) const {
  if (n1 < 0 || n1 >= dim || n2 < 0 || n2 >= dim) {
    throw InputError("ModeBasis: occupation out of range");
  }
  return n1 * dim + n2;
}

std::pair<int, int> ModeBasis::occupations(int idx) const {
  if (idx < 0 || idx >= size()) {
    throw InputError("ModeBasis: index out of range");
  }
  return {idx / dim, idx % dim};
}

OperatorMatrix::OperatorMatrix(ModeBasis b, MatXc mat)
    : basis(b), m(std::move(mat)) {
  if (m.rows() != basis.size() || m.cols() != basis.size()) {
    throw InputError("OperatorMatrix: matrix size does not match basis");
  }
}

OperatorMatrix OperatorMatrix::identity(const ModeBasis& b) {
  return {b, MatXc::Identity(b.size(), b.size())};
}

OperatorMatrix OperatorMatrix::zero(const ModeBasis& b) {
  return {b, MatXc::Zero(b.size(), b.size())};
}

void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!(a.basis == b.basis)) {
    throw InputError("OperatorMatrix: basis mismatch");
  }
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b);
  return {a.basis, a.m + b.m};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b);
  return {a.basis, a.m - b.m};
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b);
  return {a.basis, a.m * b.m};
}

OperatorMatrix operator*(Complex c, const OperatorMatrix& a) {
  return {a.basis, c * a.m};
}

OperatorMatrix operator-(const OperatorMatrix& a) { return {a.basis, -a.m}; }

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b);
  return {a.basis, a.m * b.m - b.m * a.m};
}

OperatorMatrix mode_lowering(const ModeBasis& basis, int mode) {
  validate(basis);
  if (mode != 0 && mode != 1) {
    throw InputError("mode_lowering: mode index must be 0 or 1");
  }
  const MatXd low = single_mode_lowering(basis.dim);
  const MatXd id = MatXd::Identity(basis.dim, basis.dim);
  const MatXd full = mode == 0 ? Eigen::kroneckerProduct(low, id).eval()
                               : Eigen::kroneckerProduct(id, low).eval();
  return {basis, full.cast<Complex>()};
}

QuadraturePair quadratures(const ModeBasis& basis, int mode, double omega) {
  if (!(omega > 0.0)) throw InputError("quadratures: omega must be positive");
  const OperatorMatrix a = mode_lowering(basis, mode);
  const OperatorMatrix ad = a.adjoint();
  QuadraturePair q;
  q.x = Complex(1.0 / std::sqrt(2.0 * omega)) * (a + ad);
  q.p = -kI * std::sqrt(omega / 2.0) * (a - ad);
  return q;
}

PseudoChiralQuadratures build_pm(const ModeBasis& basis, double omega) {
  const QuadraturePair q1 = quadratures(basis, 0, omega);
  const QuadraturePair q2 = quadratures(basis, 1, omega);
  const Complex s = 1.0 / std::sqrt(2.0);
  PseudoChiralQuadratures pm;
  pm.p_p = s * (q1.p + kI * omega * q2.x);
  pm.p_m = s * (q1.p - kI * omega * q2.x);
  pm.x_p = s * (q1.x + (kI / omega) * q2.p);
  pm.x_m = s * (q1.x - (kI / omega) * q2.p);
  return pm;
}

LadderSet build_ab(const ModeBasis& basis, double omega, Representation rep) {
  validate(basis);
  LadderSet set;
  set.rep = rep;
  set.basis = basis;
  if (rep == Representation::R1) {
    if (!(omega > 0.0)) throw InputError("build_ab: omega must be positive");
    const PseudoChiralQuadratures pm = build_pm(basis, omega);
    const Complex c = std::sqrt(omega / 2.0);
    set.a = c * (pm.x_p + (kI / omega) * pm.p_p);
    set.a_tilde = c * (pm.x_p - (kI / omega) * pm.p_p);
    set.b = c * (pm.x_m + (kI / omega) * pm.p_m);
    set.b_tilde = c * (pm.x_m - (kI / omega) * pm.p_m);
  } else {
    // Abstract (n_+, n_-) occupation basis: a, b lower; the tildes raise.
    set.a = mode_lowering(basis, 0);
    set.a_tilde = {basis, set.a.m.transpose()};
    set.b = mode_lowering(basis, 1);
    set.b_tilde = {basis, set.b.m.transpose()};
  }
  return set;
}

HamiltonianSet build_hamiltonians(const ModeBasis& basis, double omega,
                                  Representation rep,
                                  bool subtract_zero_point) {
  if (!(omega > 0.0)) {
    throw InputError("build_hamiltonians: omega must be positive");
  }
  const LadderSet ladders = build_ab(basis, omega, rep);
  HamiltonianSet h;
  h.rep = rep;
  h.N_p = ladders.a_tilde * ladders.a;
  h.N_m = ladders.b_tilde * ladders.b;
  const OperatorMatrix id = OperatorMatrix::identity(basis);
  if (rep == Representation::R1) {
    const PseudoChiralQuadratures pm = build_pm(basis, omega);
    const QuadraturePair q1 = quadratures(basis, 0, omega);
    const QuadraturePair q2 = quadratures(basis, 1, omega);
    const Complex w2{omega * omega, 0.0};
    h.H_I = Complex(0.5) *
            (q1.p * q1.p - q2.p * q2.p + w2 * (q1.x * q1.x - q2.x * q2.x));
    h.H_p = Complex(0.5) * (pm.p_p * pm.p_p + w2 * (pm.x_p * pm.x_p));
    h.H_m = Complex(0.5) * (pm.p_m * pm.p_m + w2 * (pm.x_m * pm.x_m));
  } else {
    h.H_p = Complex(omega) * h.N_p + Complex(0.5 * omega) * id;
    h.H_m = Complex(omega) * h.N_m + Complex(0.5 * omega) * id;
    h.H_I = h.H_p + h.H_m;
  }
  if (subtract_zero_point) {
    h.H_p = h.H_p - Complex(0.5 * omega) * id;
    h.H_m = h.H_m - Complex(0.5 * omega) * id;
    h.H_I = h.H_I - Complex(omega) * id;
  }
  return h;
}

std::vector<Complex> spectrum(const OperatorMatrix& A) {
  Eigen::ComplexEigenSolver<MatXc> solver(A.m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "spectrum: eigensolver failed to converge on a " << A.m.rows()
        << "x" << A.m.cols() << " matrix with max |entry| " << max_abs(A.m);
    throw NumericError(msg.str());
  }
  std::vector<Complex> evals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() +
                                 solver.eigenvalues().size());
  std::sort(evals.begin(), evals.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return evals;
}

int InteriorProjector::rank() const {
  return static_cast<int>((diag.array() > 0.5).count());
}

OperatorMatrix InteriorProjector::matrix() const {
  return {basis, diag.cast<Complex>().asDiagonal()};
}

InteriorProjector interior(const ModeBasis& basis, int margin) {
  validate(basis);
  if (margin < 0 || basis.dim - margin < 1) {
    throw InputError("interior: margin must satisfy 0 <= margin <= dim - 1");
  }
  InteriorProjector proj;
  proj.basis = basis;
  proj.margin = margin;
  proj.diag = VecXd::Zero(basis.size());
  const int cutoff = basis.dim - margin;
  for (int idx = 0; idx < basis.size(); ++idx) {
    const auto [n1, n2] = basis.occupations(idx);
    if (n1 < cutoff && n2 < cutoff) proj.diag(idx) = 1.0;
  }
  return proj;
}

double interior_residual(const OperatorMatrix& A,
                         const InteriorProjector& proj) {
  return max_abs(compress(A, proj));
}

MatXc compress(const OperatorMatrix& A, const InteriorProjector& proj) {
  if (!(A.basis == proj.basis)) {
    throw InputError("compress: basis mismatch");
  }
  std::vector<int> keep;
  keep.reserve(proj.rank());
  for (int idx = 0; idx < A.basis.size(); ++idx) {
    if (proj.diag(idx) > 0.5) keep.push_back(idx);
  }
  MatXc out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c)
      out(r, c) = A.m(keep[r], keep[c]);
  return out;
}

}  // namespace pcosc
