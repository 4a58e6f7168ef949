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

#ifndef ZEROAREA_SPLIT_HPP
#define ZEROAREA_SPLIT_HPP

#include <concepts>
#include <utility>

#include "zeroarea/errors.hpp"
#include "zeroarea/pulse.hpp"

namespace zeroarea {

/// A split-step propagator for H = H0 + E(t) H1 bound to a fixed step h.
/// One step is post * kick(E) * pre, where kick = exp(-i E H1 h) and pre/post
/// carry the field-free part. The adjoint members apply the Hermitian adjoint
/// of each factor; coupling(chi, psi) is Im<chi|H1|psi> or its density
/// analogue, so that dJ/dE over one step is 2 h coupling at the kick point.
template <class B>
concept SplitBackend = requires(const B& b, typename B::State& x, const typename B::State& y, double e) {
  b.pre(x);
  b.kick(x, e);
  b.post(x);
  b.pre_adjoint(x);
  b.kick_adjoint(x, e);
  b.post_adjoint(x);
  { b.coupling(y, y) } -> std::convertible_to<double>;
  { b.step_size() } -> std::convertible_to<double>;
};

/// Objective <O> with its adjoint seed. apply(x, t) returns the costate
/// whose coupling with x gives the closed-loop drive (O(t) x for pure states),
/// and expectation(x, t) is <O(t)>.
template <class T, class State>
concept TargetFor = requires(const T& t, const State& x, double time) {
  { t.value(x) } -> std::convertible_to<double>;
  { t.terminal_adjoint(x) } -> std::convertible_to<State>;
  { t.apply(x, time) } -> std::convertible_to<State>;
  { t.expectation(x, time) } -> std::convertible_to<double>;
};

template <SplitBackend B>
void step(const B& b, typename B::State& x, double e) {
  b.pre(x);
  b.kick(x, e);
  b.post(x);
}

template <SplitBackend B>
void step_adjoint(const B& b, typename B::State& x, double e) {
  b.post_adjoint(x);
  b.kick_adjoint(x, e);
  b.pre_adjoint(x);
}

/// Field used in substep j of n_sub inside the cell [t_n, t_n+1]: the linear
/// interpolant at the substep midpoint. With n_sub = 1 this is the cell mean.
inline double substep_field(double e0, double e1, int j, int n_sub) {
  const double a = (static_cast<double>(j) + 0.5) / static_cast<double>(n_sub);
  return e0 + a * (e1 - e0);
}

/// Number of substeps per pulse cell for a backend step size.
inline int substeps_for(const Pulse& p, double h) {
  const double r = p.dt() / h;
  const int n = static_cast<int>(std::lround(r));
  require(n >= 1 && std::abs(r - n) <= 1e-9 * r, "propagation step must divide the pulse step");
  return n;
}

/// Propagates x over the full pulse grid. observer(n, state) is called at
/// every sample time t_n, including t_0.
template <SplitBackend B, class Observer>
typename B::State propagate(const B& b, typename B::State x, const Pulse& p, Observer&& observer) {
  const int n_sub = substeps_for(p, b.step_size());
  observer(Eigen::Index{0}, std::as_const(x));
  for (Eigen::Index n = 0; n + 1 < p.size(); ++n) {
    for (int j = 0; j < n_sub; ++j) step(b, x, substep_field(p[n], p[n + 1], j, n_sub));
    observer(n + 1, std::as_const(x));
  }
  return x;
}

template <SplitBackend B>
typename B::State propagate(const B& b, typename B::State x, const Pulse& p) {
  return propagate(b, std::move(x), p, [](Eigen::Index, const typename B::State&) {});
}

}  // namespace zeroarea

#endif  // ZEROAREA_SPLIT_HPP
