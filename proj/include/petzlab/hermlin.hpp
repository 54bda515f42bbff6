//------------------------------------------------------------------------------
//
//   Copyright 2026 The petzlab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

// Dense Hermitian linear algebra: spectral decompositions, matrix functions
// restricted to the support, norms and the Frechet derivative of exp.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace petzlab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolPsd = 1e-10;
inline constexpr double kTolTrace = 1e-10;
/// Relative eigenvalue floor below which a PSD eigenvalue counts as zero.
inline constexpr double kSupportThreshold = 1e-12;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_square(const Mat& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw DimensionError(os.str());
  }
}

inline void require_same_dim(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << what << ": dimension mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols();
    throw DimensionError(os.str());
  }
}

inline bool all_finite(const Mat& a) { return a.allFinite(); }

} // namespace detail

/// Square complex matrix that is Hermitian up to `kTolHerm` (relative to its
/// largest entry). The stored matrix is exactly symmetrized.
class HermitianMatrix {
public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(const Mat& a) {
    detail::require_square(a, "HermitianMatrix");
    if (!detail::all_finite(a))
      throw std::invalid_argument("HermitianMatrix: non-finite entries");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kTolHerm * scale) {
      std::ostringstream os;
      os << "HermitianMatrix: asymmetry " << asym << " exceeds tolerance";
      throw std::invalid_argument(os.str());
    }
    m_ = (a + a.adjoint()) / 2.0;
  }

  static HermitianMatrix identity(Eigen::Index n) { return HermitianMatrix(Mat::Identity(n, n)); }
  static HermitianMatrix diagonal(const RVec& d) {
    return HermitianMatrix(Mat(d.cast<cplx>().asDiagonal()));
  }

  const Mat& mat() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

private:
  Mat m_;
};

/// Eigenvalues ascending; eigenvectors as unitary columns.
struct SpectralDecomposition {
  RVec eigenvalues;
  Mat eigenvectors;

  Eigen::Index dim() const noexcept { return eigenvalues.size(); }

  Mat reconstruct() const {
    return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
  }
};

/// Hermitian eigendecomposition. Each eigenvector column is rotated so that
/// its largest-magnitude component (first one on ties) is real positive.
inline SpectralDecomposition eigh(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.mat());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigh: eigensolver failed to converge");
  SpectralDecomposition out{es.eigenvalues(), es.eigenvectors()};
  for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j) {
    auto col = out.eigenvectors.col(j);
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      const double a = std::abs(col(i));
      if (a > best_abs * (1.0 + 1e-12)) {
        best_abs = a;
        best = i;
      }
    }
    if (best_abs > 0.0) col *= std::conj(col(best)) / best_abs;
  }
  return out;
}

inline SpectralDecomposition eigh(const Mat& a) { return eigh(HermitianMatrix(a)); }

/// Index mask of eigenvalues counted as zero under the support convention
/// (`lambda <= kSupportThreshold * max|lambda|`).
inline double support_cutoff(const RVec& eigenvalues) {
  const double top = eigenvalues.cwiseAbs().maxCoeff();
  return kSupportThreshold * top;
}

/// U f(lambda) U*. With `on_support`, eigenvalues at or below the support
/// cutoff map to 0 and `f` is never evaluated there.
template <class F>
Mat apply_spectral(const SpectralDecomposition& sd, F&& f, bool on_support) {
  const double cut = support_cutoff(sd.eigenvalues);
  CVec vals(sd.dim());
  for (Eigen::Index i = 0; i < sd.dim(); ++i) {
    const double lam = sd.eigenvalues(i);
    if (on_support && lam <= cut) {
      vals(i) = 0.0;
      continue;
    }
    const cplx v = f(lam);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "matrix_function: function undefined at eigenvalue " << lam;
      throw std::domain_error(os.str());
    }
    vals(i) = v;
  }
  return sd.eigenvectors * vals.asDiagonal() * sd.eigenvectors.adjoint();
}

inline HermitianMatrix matrix_function(const HermitianMatrix& h, const std::function<double(double)>& f,
                                       bool on_support) {
  const auto sd = eigh(h);
  return HermitianMatrix(apply_spectral(sd, [&](double x) { return cplx(f(x), 0.0); }, on_support));
}

/// Complex power of a PSD matrix with the support convention: eigenvalues
/// below the cutoff map to 0 for every exponent, so z = 0 yields the support
/// projection and Re z < 0 acts as a pseudo-inverse power.
inline Mat psd_power(const SpectralDecomposition& sd, cplx z) {
  return apply_spectral(
      sd, [z](double lam) { return std::exp(z * std::log(lam)); }, true);
}

inline Mat psd_power(const HermitianMatrix& p, cplx z) { return psd_power(eigh(p), z); }

inline Mat support_projection(const SpectralDecomposition& sd) {
  return apply_spectral(sd, [](double) { return cplx(1.0, 0.0); }, true);
}

inline HermitianMatrix log_on_support(const HermitianMatrix& p) {
  return HermitianMatrix(apply_spectral(eigh(p), [](double lam) { return cplx(std::log(lam), 0.0); }, true));
}

inline HermitianMatrix expm(const HermitianMatrix& h) {
  return HermitianMatrix(apply_spectral(eigh(h), [](double lam) { return cplx(std::exp(lam), 0.0); }, false));
}

/// exp(z H) for Hermitian H and complex z.
inline Mat expm(const SpectralDecomposition& sd, cplx z) {
  return apply_spectral(sd, [z](double lam) { return std::exp(z * lam); }, false);
}

/// Directional derivative D exp(H)[X] through first divided differences of
/// exp in the eigenbasis of H.
inline HermitianMatrix frechet_exp(const HermitianMatrix& h, const HermitianMatrix& x) {
  detail::require_same_dim(h.mat(), x.mat(), "frechet_exp");
  const auto sd = eigh(h);
  const Eigen::Index n = sd.dim();
  const Mat xt = sd.eigenvectors.adjoint() * x.mat() * sd.eigenvectors;
  Mat g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double li = sd.eigenvalues(i);
      const double lj = sd.eigenvalues(j);
      const double d = li - lj;
      double dd;
      if (std::abs(d) < 1e-300) {
        dd = std::exp(li);
      } else {
        // e^{lj} (e^{d} - 1) / d stays accurate for small |d|
        const double lo = std::min(li, lj);
        dd = std::exp(lo) * std::expm1(std::abs(d)) / std::abs(d);
      }
      g(i, j) = dd * xt(i, j);
    }
  }
  return HermitianMatrix(sd.eigenvectors * g * sd.eigenvectors.adjoint());
}

inline double trace_norm(const Mat& a) {
  detail::require_square(a, "trace_norm");
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues().sum();
}

inline double operator_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

/// Tr(A* B)
inline cplx hs_inner(const Mat& a, const Mat& b) {
  detail::require_same_dim(a, b, "hs_inner");
  return (a.adjoint() * b).trace();
}

inline double hs_norm(const Mat& a) { return a.norm(); }

/// Throws unless every eigenvalue is >= -kTolPsd * lambda_max.
inline SpectralDecomposition require_psd(const HermitianMatrix& p, const char* what) {
  auto sd = eigh(p);
  const double top = std::max(0.0, sd.eigenvalues.maxCoeff());
  if (sd.eigenvalues.minCoeff() < -kTolPsd * std::max(top, 1e-300)) {
    std::ostringstream os;
    os << what << ": matrix is not positive semi-definite (min eigenvalue " << sd.eigenvalues.minCoeff()
       << ")";
    throw std::invalid_argument(os.str());
  }
  return sd;
}

/// Unit-trace positive semi-definite matrix.
class DensityMatrix {
public:
  DensityMatrix() = default;

  explicit DensityMatrix(const Mat& a) : h_(a) {
    require_psd(h_, "DensityMatrix");
    const cplx tr = h_.mat().trace();
    if (std::abs(tr - 1.0) > kTolTrace) {
      std::ostringstream os;
      os << "DensityMatrix: trace " << tr.real() << " differs from 1";
      throw std::invalid_argument(os.str());
    }
  }

  /// Rescales a PSD matrix to unit trace.
  static DensityMatrix normalized(const Mat& a) {
    const double tr = a.trace().real();
    if (!(tr > 0.0)) throw std::invalid_argument("DensityMatrix::normalized: non-positive trace");
    return DensityMatrix(a / tr);
  }

  static DensityMatrix maximally_mixed(Eigen::Index n) {
    return DensityMatrix(Mat::Identity(n, n) / static_cast<double>(n));
  }

  const Mat& mat() const noexcept { return h_.mat(); }
  const HermitianMatrix& herm() const noexcept { return h_; }
  Eigen::Index dim() const noexcept { return h_.dim(); }

  bool faithful() const {
    const auto sd = eigh(h_);
    return sd.eigenvalues.minCoeff() > support_cutoff(sd.eigenvalues);
  }

private:
  HermitianMatrix h_;
};

// Column-stacking vectorisation; vec(A X B) = (B^T kron A) vec(X).
inline CVec vec(const Mat& a) { return Eigen::Map<const CVec>(a.data(), a.size()); }

inline Mat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

inline Mat matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  Mat e = Mat::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

} // namespace petzlab
