#include "pcosc/pseudoherm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pcosc {

namespace {

MatXc sign_matrix(const EtaOperator& eta) {
  return eta.signs.cast<Complex>().asDiagonal();
}

void require_basis(const EtaOperator& eta, const OperatorMatrix& A) {
  if (!(eta.basis == A.basis)) {
    throw InputError("eta operation: basis mismatch");
  }
}

// Connected components under |lambda_i - lambda_j| <= tol; deterministic
// and order-independent, unlike a greedy sweep over a sorted list.
std::vector<std::vector<int>> cluster_eigenvalues(const VecXc& evals,
                                                  double tol) {
  const int n = static_cast<int>(evals.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(evals(i) - evals(j)) <= tol) parent[find(i)] = find(j);
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  // Order clusters by their smallest eigenvalue for reproducible output.
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const Complex va = evals(a.front()), vb = evals(b.front());
    if (va.real() != vb.real()) return va.real() < vb.real();
    return va.imag() < vb.imag();
  });
  return out;
}

Complex centroid(const VecXc& evals, const std::vector<int>& idx) {
  Complex s = 0.0;
  for (int i : idx) s += evals(i);
  return s / double(idx.size());
}

}  // namespace

EtaOperator EtaOperator::mode2_parity(const ModeBasis& basis) {
  validate(basis);
  EtaOperator eta;
  eta.basis = basis;
  eta.signs = VecXd::Ones(basis.size());
  for (int idx = 0; idx < basis.size(); ++idx) {
    if (basis.occupations(idx).second % 2 != 0) eta.signs(idx) = -1.0;
  }
  return eta;
}

VecXc eta_apply(const EtaOperator& eta, const VecXc& v) {
  if (v.size() != eta.basis.size()) {
    throw InputError("eta_apply: dimension mismatch");
  }
  return eta.signs.cast<Complex>().array() * v.conjugate().array();
}

OperatorMatrix eta_conjugate(const EtaOperator& eta, const OperatorMatrix& A) {
  require_basis(eta, A);
  const MatXc s = sign_matrix(eta);
  return {A.basis, s * A.m.conjugate() * s};
}

OperatorMatrix eta_adjoint(const EtaOperator& eta, const OperatorMatrix& A) {
  require_basis(eta, A);
  const MatXc s = sign_matrix(eta);
  return {A.basis, s * A.m.transpose() * s};
}

OperatorMatrix eta_adjoint_definitional(const EtaOperator& eta,
                                        const OperatorMatrix& A) {
  require_basis(eta, A);
  const int n = eta.basis.size();
  const MatXc adag = A.m.adjoint();
  MatXc out(n, n);
  for (int j = 0; j < n; ++j) {
    VecXc e = VecXc::Zero(n);
    e(j) = 1.0;
    out.col(j) = eta_apply(eta, VecXc(adag * eta_apply(eta, e)));
  }
  return {A.basis, out};
}

EtaVerdict is_eta_hermitian(const EtaOperator& eta, const OperatorMatrix& A,
                            double tol) {
  EtaVerdict v;
  v.residual = max_abs(eta_adjoint(eta, A).m - A.m);
  v.pass = v.residual < tol;
  return v;
}

Complex eta_inner(const EtaOperator& eta, const VecXc& beta,
                  const VecXc& alpha) {
  if (beta.size() != alpha.size()) {
    throw InputError("eta_inner: dimension mismatch");
  }
  return eta_apply(eta, beta).dot(alpha);
}

BiorthogonalSystem biorthogonal_decompose(const MatXc& A,
                                          const BiorthOptions& opts) {
  if (A.rows() != A.cols()) {
    throw InputError("biorthogonal_decompose: matrix must be square");
  }
  const int n = static_cast<int>(A.rows());
  Eigen::ComplexEigenSolver<MatXc> right_solver(A, true);
  Eigen::ComplexEigenSolver<MatXc> left_solver(A.adjoint(), true);
  if (right_solver.info() != Eigen::Success ||
      left_solver.info() != Eigen::Success) {
    throw NumericError("biorthogonal_decompose: eigensolver failed to converge");
  }
  const VecXc right_evals = right_solver.eigenvalues();
  // Left eigenvectors of A belong to conj(eigenvalue) of A^dag; conjugate
  // so both lists live on the same plane.
  const VecXc left_evals = left_solver.eigenvalues().conjugate();

  const auto right_clusters = cluster_eigenvalues(right_evals, opts.cluster_tol);
  const auto left_clusters = cluster_eigenvalues(left_evals, opts.cluster_tol);
  if (right_clusters.size() != left_clusters.size()) {
    throw NumericError(
        "biorthogonal_decompose: left/right eigenvalue clusters do not match");
  }

  // Pair clusters by nearest centroid. Pairing by sorted position is
  // unstable when two eigenvalues differ only at rounding level (conjugate
  // pairs with noise-sized real parts sort differently on each side).
  std::vector<int> partner(right_clusters.size(), -1);
  std::vector<bool> taken(left_clusters.size(), false);
  for (std::size_t c = 0; c < right_clusters.size(); ++c) {
    const Complex center = centroid(right_evals, right_clusters[c]);
    double best = std::numeric_limits<double>::infinity();
    int pick = -1;
    for (std::size_t l = 0; l < left_clusters.size(); ++l) {
      if (taken[l]) continue;
      const double d = std::abs(center - centroid(left_evals, left_clusters[l]));
      if (d < best) {
        best = d;
        pick = static_cast<int>(l);
      }
    }
    if (pick < 0 ||
        right_clusters[c].size() != left_clusters[pick].size() ||
        best > 10.0 * opts.cluster_tol + 1e-12 * std::abs(center)) {
      std::ostringstream msg;
      msg << "biorthogonal_decompose: cluster mismatch near eigenvalue "
          << center << " (right size " << right_clusters[c].size()
          << ", left size "
          << (pick < 0 ? 0 : left_clusters[pick].size()) << ")";
      throw NumericError(msg.str());
    }
    taken[pick] = true;
    partner[c] = pick;
  }

  BiorthogonalSystem sys;
  sys.eigenvalues = VecXc(n);
  sys.right = MatXc(n, n);
  sys.left = MatXc(n, n);
  int next = 0;
  for (std::size_t c = 0; c < right_clusters.size(); ++c) {
    const auto& rc = right_clusters[c];
    const auto& lc = left_clusters[partner[c]];
    const Complex center = centroid(right_evals, rc);
    const int k = static_cast<int>(rc.size());
    MatXc R(n, k), L(n, k);
    for (int i = 0; i < k; ++i) {
      R.col(i) = right_solver.eigenvectors().col(rc[i]);
      L.col(i) = left_solver.eigenvectors().col(lc[i]);
    }
    // A defective cluster shows up in two ways: the right eigenvectors of
    // the cluster are (nearly) linearly dependent, or the k x k left/right
    // overlap is (nearly) singular. A nilpotent block can sneak past the
    // overlap test alone because near-parallel vectors still produce a
    // formally regular tiny overlap.
    Eigen::JacobiSVD<MatXc> rsvd(R);
    const double rmax = rsvd.singularValues()(0);
    const double rmin = rsvd.singularValues()(k - 1);
    if (!(rmin > rmax * opts.defect_tol)) {
      std::ostringstream msg;
      msg << "non-diagonalizable within tolerance: eigenvalue cluster at "
          << center << " of size " << k
          << " has linearly dependent eigenvectors (smin/smax = "
          << (rmax > 0.0 ? rmin / rmax : 0.0)
          << "); Jordan structure suspected";
      throw NumericError(msg.str());
    }
    const MatXc overlap = L.adjoint() * R;
    Eigen::JacobiSVD<MatXc> svd(overlap);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(k - 1);
    if (!(smin > smax * opts.defect_tol) || !(smax > 0.0)) {
      std::ostringstream msg;
      msg << "non-diagonalizable within tolerance: eigenvalue cluster at "
          << center << " of size " << k
          << " has singular left/right overlap (smin/smax = "
          << (smax > 0.0 ? smin / smax : 0.0)
          << "); Jordan structure suspected";
      throw NumericError(msg.str());
    }
    L = L * overlap.inverse().adjoint();
    std::vector<int> members;
    for (int i = 0; i < k; ++i) {
      sys.eigenvalues(next + i) = right_evals(rc[i]);
      sys.right.col(next + i) = R.col(i);
      sys.left.col(next + i) = L.col(i);
      members.push_back(next + i);
    }
    sys.clusters.push_back(std::move(members));
    next += k;
  }
  const MatXc gram = sys.left.adjoint() * sys.right;
  sys.orthonormality_residual = max_abs(gram - MatXc::Identity(n, n));
  sys.completeness_residual =
      max_abs(sys.right * sys.left.adjoint() - MatXc::Identity(n, n));
  return sys;
}

BiorthogonalSystem biorthogonal_decompose(const OperatorMatrix& A,
                                          const BiorthOptions& opts) {
  return biorthogonal_decompose(A.m, opts);
}

double eta_pairing_residual(const EtaOperator& eta,
                            const BiorthogonalSystem& sys) {
  if (sys.right.rows() != eta.basis.size()) {
    throw InputError("eta_pairing_residual: dimension mismatch");
  }
  const MatXc s = sign_matrix(eta);
  double worst = 0.0;
  for (const auto& cluster : sys.clusters) {
    const int k = static_cast<int>(cluster.size());
    const int n = static_cast<int>(sys.right.rows());
    MatXc proj = MatXc::Zero(n, n);
    for (int i = 0; i < k; ++i) {
      proj += sys.right.col(cluster[i]) * sys.left.col(cluster[i]).adjoint();
    }
    // eta P eta^{-1} = P^dag holds for every spectral projector of an
    // eta-hermitian operator; this is the projector-level form of the
    // dual-basis correspondence.
    worst = std::max(worst, max_abs(s * proj.conjugate() * s - proj.adjoint()));
  }
  return worst;
}

RealityReport reality_check(const OperatorMatrix& A,
                            const InteriorProjector& proj, double tol) {
  const MatXc block = compress(A, proj);
  Eigen::ComplexEigenSolver<MatXc> solver(block, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("reality_check: eigensolver failed to converge");
  }
  RealityReport report;
  report.eigenvalues.assign(
      solver.eigenvalues().data(),
      solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](Complex a, Complex b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  report.max_imag = 0.0;
  for (const Complex& ev : report.eigenvalues) {
    report.max_imag = std::max(report.max_imag, std::abs(ev.imag()));
  }
  report.pass = report.max_imag < tol;
  return report;
}

}  // namespace pcosc
