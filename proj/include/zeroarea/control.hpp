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

#ifndef ZEROAREA_CONTROL_HPP
#define ZEROAREA_CONTROL_HPP

#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zeroarea/errors.hpp"
#include "zeroarea/pulse.hpp"
#include "zeroarea/split.hpp"

namespace zeroarea {

/// How the area term enters the sequential field update.
///   stale:    -(mu/lambda) S A_k with A_k the area of the previous iterate
///   implicit: the stale term divided by 1 + (mu/lambda) int S dt, the exact
///             maximizer of the area penalty alone
///   running:  the area of the field being built (new samples behind the
///             sweep, old samples ahead), solved pointwise
enum class AreaScheme { stale, implicit, running };

struct ControlConfig {
  double lambda = 1.0;
  double mu = 0.0;
  double eta = 0.0;
  double mu_tilde = 0.0;
  double tf = 0.0;  ///< horizon; 0 means "duration of the guess"
  int max_iters = 500;
  double stop_tol = 1e-8;
  double target_fluence = 0.0;  ///< > 0 turns on per-iteration lambda adjustment
  int checkpoint_interval = 0;  ///< 0 stores the full adjoint trajectory
  AreaScheme area_scheme = AreaScheme::stale;
  bool enforce_monotonic = true;
  double monotonic_tol = 1e-10;
  bool predictor_corrector = false;
  double lct_tol = 1e-8;
  int lct_max_bisections = 6;

  void validate_oct() const;
  void validate_lct() const;
};

struct IterationRecord {
  int k = 0;
  double cost = 0.0;
  double objective = 0.0;
  double area = 0.0;
  double field_energy = 0.0;
  double lambda = 0.0;
};

struct ControlResult {
  Pulse pulse = Pulse::zeros(0.0, 1.0, 2);
  std::vector<IterationRecord> history;
  bool converged = false;
  /// Closed-loop traces on the pulse grid (empty for iterative runs).
  Eigen::VectorXd objective_trace;
  Eigen::VectorXd lyapunov_trace;
  int bisections = 0;
};

/// Envelope S(t - t0) sampled on the pulse grid with tf = pulse duration.
Eigen::VectorXd envelope_samples(const Pulse& p);

/// int (E - E_ref)^2 / S dt on interior samples (S vanishes at both ends).
double penalty_energy(const Pulse& p, const Pulse& ref);

/// J = objective - lambda int (E - E_ref)^2 / S dt - mu (int E dt)^2.
double evaluate_cost(double objective, const Pulse& p, const Pulse& ref, const ControlConfig& cfg);

/// Closed-loop law eta * drive - 2 mu_tilde * area, with drive = -i<[O, H1]>.
double lct_field(double drive, double area, const ControlConfig& cfg);

/// Solves fluence(lambda) = target within rel_tol by a secant iteration on
/// log(lambda) versus log(fluence). Returns lambda0 when it already satisfies
/// the target.
double solve_lambda(const std::function<double(double)>& fluence, double target, double lambda0,
                    int max_steps = 50, double rel_tol = 0.01);

/// Drive -i<[O(t), H1]> = 2 coupling(O(t) x, x).
template <SplitBackend B, class Target>
double lct_drive(const B& b, const Target& target, const typename B::State& x, double t) {
  return 2.0 * b.coupling(target.apply(x, t), x);
}

namespace detail {

/// Backward costate storage with optional checkpointing. at(n) returns the
/// costate at the kick point of cell n for the field the tape was built with.
template <SplitBackend B>
class AdjointTape {
 public:
  using State = typename B::State;

  AdjointTape(const B& b, State terminal, const Eigen::VectorXd& e, int interval)
      : b_(&b), e_(&e), cells_(e.size() - 1) {
    interval_ = (interval <= 0 || interval >= cells_) ? cells_ : static_cast<Eigen::Index>(interval);
    const Eigen::Index n_check = (cells_ + interval_ - 1) / interval_ + 1;
    checkpoints_.resize(static_cast<size_t>(n_check));
    checkpoints_.back() = terminal;
    State x = std::move(terminal);
    const bool full = interval_ == cells_;
    if (full) segment_.resize(static_cast<size_t>(cells_));
    for (Eigen::Index n = cells_ - 1; n >= 0; --n) {
      b_->post_adjoint(x);
      b_->kick_adjoint(x, cell_field(n));
      if (full) segment_[static_cast<size_t>(n)] = x;
      b_->pre_adjoint(x);
      if (n % interval_ == 0) checkpoints_[static_cast<size_t>(n / interval_)] = x;
    }
    seg_begin_ = full ? 0 : -1;
  }

  const State& at(Eigen::Index n) {
    const Eigen::Index s = (n / interval_) * interval_;
    if (s != seg_begin_) fill(s);
    return segment_[static_cast<size_t>(n - s)];
  }

 private:
  double cell_field(Eigen::Index n) const { return 0.5 * ((*e_)[n] + (*e_)[n + 1]); }

  void fill(Eigen::Index s) {
    const Eigen::Index e = std::min(s + interval_, cells_);
    State x = (e == cells_) ? checkpoints_.back() : checkpoints_[static_cast<size_t>(e / interval_)];
    segment_.resize(static_cast<size_t>(e - s));
    for (Eigen::Index n = e - 1; n >= s; --n) {
      b_->post_adjoint(x);
      b_->kick_adjoint(x, cell_field(n));
      segment_[static_cast<size_t>(n - s)] = x;
      b_->pre_adjoint(x);
    }
    seg_begin_ = s;
  }

  const B* b_;
  const Eigen::VectorXd* e_;
  Eigen::Index cells_;
  Eigen::Index interval_ = 1;
  std::vector<State> checkpoints_;
  std::vector<State> segment_;
  Eigen::Index seg_begin_ = -1;
};

inline double trapezoid_weight(Eigen::Index n, Eigen::Index size, double dt) {
  return (n == 0 || n == size - 1) ? 0.5 * dt : dt;
}

}  // namespace detail

/// Gradient of J (as in evaluate_cost) with respect to every field sample,
/// using the same discretization as the propagator (one kick per cell).
template <SplitBackend B, class Target>
Eigen::VectorXd cost_gradient(const B& b, const typename B::State& psi0, const Pulse& p, const Pulse& ref,
                              const Target& target, const ControlConfig& cfg) {
  require(substeps_for(p, b.step_size()) == 1, "cost_gradient: backend step must equal the pulse step");
  const Eigen::Index n_s = p.size();
  const double h = p.dt();
  std::vector<typename B::State> psi_b(static_cast<size_t>(n_s - 1));
  typename B::State x = psi0;
  for (Eigen::Index n = 0; n + 1 < n_s; ++n) {
    b.pre(x);
    psi_b[static_cast<size_t>(n)] = x;
    b.kick(x, 0.5 * (p[n] + p[n + 1]));
    b.post(x);
  }
  typename B::State chi = target.terminal_adjoint(x);
  Eigen::VectorXd g_cell(n_s - 1);
  for (Eigen::Index n = n_s - 2; n >= 0; --n) {
    b.post_adjoint(chi);
    b.kick_adjoint(chi, 0.5 * (p[n] + p[n + 1]));
    g_cell[n] = 2.0 * h * b.coupling(chi, psi_b[static_cast<size_t>(n)]);
    b.pre_adjoint(chi);
  }
  const Eigen::VectorXd s = envelope_samples(p);
  const double a = total_area(p);
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(n_s);
  for (Eigen::Index n = 0; n < n_s; ++n) {
    if (n > 0) grad[n] += 0.5 * g_cell[n - 1];
    if (n + 1 < n_s) grad[n] += 0.5 * g_cell[n];
    if (n > 0 && n + 1 < n_s) grad[n] -= 2.0 * cfg.lambda * h * (p[n] - ref[n]) / s[n];
    grad[n] -= 2.0 * cfg.mu * a * detail::trapezoid_weight(n, n_s, h);
  }
  return grad;
}

/// Sequential monotonic optimization of <O>(t_f) under the energy and area
/// penalties. The backend step must equal the pulse step. on_iteration is
/// called after every accepted iterate (k = 0 is the guess).
template <SplitBackend B, class Target>
ControlResult krotov_optimize(const B& b, const typename B::State& psi0, const Pulse& guess, const Target& target,
                              const ControlConfig& cfg,
                              const std::function<void(const IterationRecord&)>& on_iteration = {}) {
  using State = typename B::State;
  cfg.validate_oct();
  require(substeps_for(guess, b.step_size()) == 1, "krotov: backend step must equal the pulse step");
  if (cfg.tf > 0.0) {
    require(std::abs(guess.duration() - cfg.tf) <= 1e-9 * cfg.tf, "krotov: guess duration differs from tf");
  }
  const Eigen::Index n_s = guess.size();
  const double h = guess.dt();
  const Eigen::VectorXd s = envelope_samples(guess);
  const double int_s = h * s.sum();

  Eigen::VectorXd e = guess.samples();
  State psi_t = propagate(b, psi0, guess);
  double objective = target.value(psi_t);
  double area = total_area(guess);
  double lambda = cfg.lambda;
  double j_ref = objective - cfg.mu * area * area;

  ControlResult result;
  result.pulse = guess;
  result.history.push_back({0, j_ref, objective, area, field_energy(guess), lambda});
  if (on_iteration) on_iteration(result.history.back());

  struct Sweep {
    Eigen::VectorXd e;
    State psi_t;
  };

  for (int k = 1; k <= cfg.max_iters; ++k) {
    detail::AdjointTape<B> tape(b, target.terminal_adjoint(psi_t), e, cfg.checkpoint_interval);

    auto sweep = [&](double lam) {
      Sweep out{e, psi0};
      const double damp = cfg.area_scheme == AreaScheme::implicit ? 1.0 / (1.0 + cfg.mu * int_s / lam) : 1.0;
      double a_run = area;
      for (Eigen::Index n = 0; n + 1 < n_s; ++n) {
        b.pre(out.psi_t);
        const double g = b.coupling(tape.at(n), out.psi_t);
        const Eigen::Index m = n + 1;
        const double sm = s[m];
        double de = 0.0;
        if (sm > 0.0) {
          if (cfg.area_scheme == AreaScheme::running) {
            const double w = detail::trapezoid_weight(m, n_s, h);
            de = (sm * g / (2.0 * lam) - cfg.mu / lam * sm * a_run) / (1.0 + cfg.mu / lam * sm * w);
            a_run += w * de;
          } else {
            de = sm * g / (2.0 * lam) - damp * cfg.mu / lam * sm * area;
          }
        }
        out.e[m] = e[m] + de;
        b.kick(out.psi_t, 0.5 * (out.e[n] + out.e[m]));
        b.post(out.psi_t);
      }
      return out;
    };

    std::optional<Sweep> trial;
    double trial_lambda = 0.0;
    if (cfg.target_fluence > 0.0) {
      auto fluence = [&](double lam) {
        trial = sweep(lam);
        trial_lambda = lam;
        return field_energy(guess.with_samples(trial->e));
      };
      lambda = solve_lambda(fluence, cfg.target_fluence, lambda);
      if (trial_lambda != lambda) fluence(lambda);
    } else {
      trial = sweep(lambda);
    }

    const Pulse next = guess.with_samples(trial->e);
    const Pulse prev = guess.with_samples(e);
    const double obj_new = target.value(trial->psi_t);
    const double area_new = total_area(next);
    const double cost = obj_new - lambda * penalty_energy(next, prev) - cfg.mu * area_new * area_new;
    if (cfg.enforce_monotonic && cost < j_ref - cfg.monotonic_tol * std::max(std::abs(j_ref), 1e-300)) {
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "krotov: cost decreased at iteration %d (%.12g -> %.12g); reduce dt or increase lambda", k, j_ref,
                    cost);
      throw NumericalError(buf);
    }
    const double prev_cost = result.history.back().cost;
    e = trial->e;
    psi_t = std::move(trial->psi_t);
    objective = obj_new;
    area = area_new;
    j_ref = objective - cfg.mu * area * area;
    result.pulse = next;
    result.history.push_back({k, cost, objective, area, field_energy(next), lambda});
    if (on_iteration) on_iteration(result.history.back());
    if (std::abs(cost - prev_cost) <= cfg.stop_tol * std::max(std::abs(cost), 1e-300)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

/// Closed-loop (local) control on [t0, tf] with step dt. The field sample at
/// t_n+1 is computed from the state at t_n; each cell uses the mean of its two
/// samples. The Lyapunov function <O(t)> - (mu_tilde/eta) A(t)^2 is checked
/// after every step; a decrease beyond lct_tol halves dt and restarts.
/// make_backend(h) must return a backend with step h.
template <class Factory, class Target, class State>
ControlResult lct_run(Factory&& make_backend, const State& psi0, const Target& target, double t0, double tf,
                      double dt, const ControlConfig& cfg) {
  cfg.validate_lct();
  require(tf > t0 && dt > 0.0, "lct: empty horizon or non-positive dt");
  const double mu = cfg.mu_tilde / cfg.eta;
  double step_dt = dt;
  for (int bis = 0;; ++bis) {
    const double r = (tf - t0) / step_dt;
    const auto cells = static_cast<Eigen::Index>(std::lround(r));
    require(cells >= 1 && std::abs(r - cells) <= 1e-9 * r, "lct: dt must divide the horizon");
    const auto b = make_backend(step_dt);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(cells + 1);
    Eigen::VectorXd obj(cells + 1), lyap(cells + 1);
    State x = psi0;
    double a = 0.0;
    obj[0] = target.expectation(x, t0);
    lyap[0] = obj[0];
    bool violated = false;
    for (Eigen::Index n = 0; n < cells; ++n) {
      const double t = t0 + static_cast<double>(n) * step_dt;
      double e_next = lct_field(lct_drive(b, target, x, t), a, cfg);
      State y = x;
      step(b, y, 0.5 * (e[n] + e_next));
      if (cfg.predictor_corrector) {
        const double a_pred = a + 0.5 * step_dt * (e[n] + e_next);
        const double e_corr = lct_field(lct_drive(b, target, y, t + step_dt), a_pred, cfg);
        e_next = 0.5 * (e_next + e_corr);
        y = x;
        step(b, y, 0.5 * (e[n] + e_next));
      }
      e[n + 1] = e_next;
      a += 0.5 * step_dt * (e[n] + e_next);
      x = std::move(y);
      obj[n + 1] = target.expectation(x, t + step_dt);
      lyap[n + 1] = obj[n + 1] - mu * a * a;
      if (lyap[n + 1] < lyap[n] - cfg.lct_tol) {
        violated = true;
        break;
      }
    }
    if (violated) {
      if (bis >= cfg.lct_max_bisections) {
        throw NumericalError("lct: Lyapunov function decreased after the dt bisection floor");
      }
      step_dt *= 0.5;
      continue;
    }
    ControlResult result;
    result.pulse = Pulse(t0, step_dt, e);
    result.objective_trace = obj;
    result.lyapunov_trace = lyap;
    result.bisections = bis;
    result.converged = true;
    result.history.push_back({0, lyap[cells], obj[cells], a, field_energy(result.pulse), 0.0});
    return result;
  }
}

}  // namespace zeroarea

#endif  // ZEROAREA_CONTROL_HPP
