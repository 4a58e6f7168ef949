// Copyright 2026 The zeroarea Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZEROAREA_TWO_TERM_HPP
#define ZEROAREA_TWO_TERM_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "zeroarea/errors.hpp"

namespace zeroarea {

/// H(E) = diag(h0) + E h1 with h1 real symmetric. The eigendecomposition of
/// h1 is computed once and reused by every field kick.
template <typename Scalar>
class TwoTermHamiltonian {
 public:
  using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  TwoTermHamiltonian(RealVector h0, RealMatrix h1) : h0_(std::move(h0)), h1_(std::move(h1)) {
    require(h1_.rows() == h0_.size() && h1_.cols() == h0_.size(), "two-term: dimension mismatch");
    require((h1_ - h1_.transpose()).cwiseAbs().maxCoeff() <= Scalar(1e-12) * (Scalar(1) + h1_.cwiseAbs().maxCoeff()),
            "two-term: h1 must be symmetric");
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(h1_);
    vectors_ = es.eigenvectors();
    values_ = es.eigenvalues();
  }

  Eigen::Index dim() const { return h0_.size(); }
  const RealVector& h0() const { return h0_; }
  const RealMatrix& h1() const { return h1_; }
  const RealMatrix& h1_vectors() const { return vectors_; }
  const RealVector& h1_values() const { return values_; }

 private:
  RealVector h0_;
  RealMatrix h1_;
  RealMatrix vectors_;
  RealVector values_;
};

/// Strang stepper for pure states: exp(-i h0 h/2) exp(-i E h1 h) exp(-i h0 h/2).
template <typename Scalar>
class PureStepper {
 public:
  using Complex = std::complex<Scalar>;
  using State = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  PureStepper(const TwoTermHamiltonian<Scalar>& ham, double h) : ham_(&ham), h_(h) {
    require(h > 0.0, "stepper: step must be positive");
    half_ = (ham.h0().template cast<Complex>() * Complex(0, -Scalar(0.5) * Scalar(h))).array().exp().matrix();
  }

  double step_size() const { return h_; }
  const TwoTermHamiltonian<Scalar>& hamiltonian() const { return *ham_; }

  void pre(State& x) const { x.array() *= half_.array(); }
  void post(State& x) const { x.array() *= half_.array(); }
  void pre_adjoint(State& x) const { x.array() *= half_.array().conjugate(); }
  void post_adjoint(State& x) const { x.array() *= half_.array().conjugate(); }
  void kick(State& x, double e) const { rotate(x, -Scalar(e) * Scalar(h_)); }
  void kick_adjoint(State& x, double e) const { rotate(x, Scalar(e) * Scalar(h_)); }

  double coupling(const State& chi, const State& psi) const {
    const State h1psi = ham_->h1().template cast<Complex>() * psi;
    return static_cast<double>(chi.dot(h1psi).imag());
  }

 private:
  void rotate(State& x, Scalar angle) const {
    if (angle == Scalar(0)) return;
    const auto& v = ham_->h1_vectors();
    State y = v.transpose().template cast<Complex>() * x;
    for (Eigen::Index i = 0; i < y.size(); ++i) y[i] *= std::polar(Scalar(1), angle * ham_->h1_values()[i]);
    x = v.template cast<Complex>() * y;
  }

  const TwoTermHamiltonian<Scalar>* ham_;
  double h_;
  State half_;
};

/// Density-matrix stepper over independent blocks: rho -> U rho U^dagger.
/// Adjoint members evolve the costate sigma -> U^dagger sigma U.
template <typename Scalar>
class DensityStepper {
 public:
  using Complex = std::complex<Scalar>;
  using Block = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using State = std::vector<Block>;

  DensityStepper(const std::vector<TwoTermHamiltonian<Scalar>>& blocks, double h) : h_(h) {
    require(h > 0.0, "stepper: step must be positive");
    for (const auto& b : blocks) steppers_.emplace_back(b, h);
    for (const auto& b : blocks) {
      Block ph = Block(b.dim(), b.dim());
      const auto half = (b.h0().template cast<Complex>() * Complex(0, -Scalar(0.5) * Scalar(h))).array().exp();
      for (Eigen::Index i = 0; i < b.dim(); ++i)
        for (Eigen::Index j = 0; j < b.dim(); ++j) ph(i, j) = half[i] * std::conj(half[j]);
      phases_.push_back(std::move(ph));
    }
  }

  double step_size() const { return h_; }
  size_t blocks() const { return steppers_.size(); }
  const TwoTermHamiltonian<Scalar>& hamiltonian(size_t b) const { return steppers_[b].hamiltonian(); }

  void pre(State& r) const { free_half(r, false); }
  void post(State& r) const { free_half(r, false); }
  void pre_adjoint(State& s) const { free_half(s, true); }
  void post_adjoint(State& s) const { free_half(s, true); }

  void kick(State& r, double e) const {
    if (e == 0.0) return;
    for (size_t b = 0; b < r.size(); ++b) {
      const Block k = kick_matrix(b, -Scalar(e) * Scalar(h_));
      r[b] = k * r[b] * k.adjoint();
    }
  }
  void kick_adjoint(State& s, double e) const {
    if (e == 0.0) return;
    for (size_t b = 0; b < s.size(); ++b) {
      const Block k = kick_matrix(b, -Scalar(e) * Scalar(h_));
      s[b] = k.adjoint() * s[b] * k;
    }
  }

  /// 1/2 Im Tr(sigma [H1, rho]) summed over blocks; reduces to Im<chi|H1|psi>
  /// for a pure state with sigma psi = chi.
  double coupling(const State& sigma, const State& rho) const {
    Scalar acc = 0;
    for (size_t b = 0; b < rho.size(); ++b) {
      const Block h1 = hamiltonian(b).h1().template cast<Complex>();
      const Block comm = h1 * rho[b] - rho[b] * h1;
      acc += (sigma[b].cwiseProduct(comm.transpose())).sum().imag();
    }
    return static_cast<double>(Scalar(0.5) * acc);
  }

 private:
  void free_half(State& r, bool adjoint) const {
    for (size_t b = 0; b < r.size(); ++b) {
      if (adjoint)
        r[b].array() *= phases_[b].array().conjugate();
      else
        r[b].array() *= phases_[b].array();
    }
  }

  Block kick_matrix(size_t b, Scalar angle) const {
    const auto& ham = hamiltonian(b);
    const auto& v = ham.h1_vectors();
    Eigen::Matrix<Complex, Eigen::Dynamic, 1> d(ham.dim());
    for (Eigen::Index i = 0; i < ham.dim(); ++i) d[i] = std::polar(Scalar(1), angle * ham.h1_values()[i]);
    return v.template cast<Complex>() * d.asDiagonal() * v.transpose().template cast<Complex>();
  }

  double h_;
  std::vector<PureStepper<Scalar>> steppers_;
  std::vector<Block> phases_;
};

/// <O> for a Hermitian operator on a pure state.
template <typename Scalar>
double expectation(const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>& o,
                   const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>& psi) {
  return static_cast<double>(psi.dot(o * psi).real());
}

}  // namespace zeroarea

#endif  // ZEROAREA_TWO_TERM_HPP
