#include "psystem/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "psystem/error.hpp"

namespace psystem {

namespace {
// A step shortened more than 2^12 times signals a state drifting out of the
// admissible region rather than a stiff start.
constexpr int kMaxStepHalvings = 12;
} // namespace

void SimConfig::validate() const {
  model.validate();
  if (cells < 16) throw UsageError("simulate: cells must be at least 16");
  if (!(cfl > 0.0 && cfl <= 0.9)) throw UsageError("simulate: cfl must lie in (0, 0.9]");
  if (!(t_end > 0.0 && std::isfinite(t_end))) throw UsageError("simulate: t_end must be positive");
  if (!(domain_length > 0.0 && std::isfinite(domain_length))) {
    throw UsageError("simulate: domain_length must be positive");
  }
  if (!(v0 >= 0.0 && std::isfinite(v0))) throw UsageError("simulate: v0 must be >= 0");
  if (v0 > 0.0) {
    const auto sol = solve_rankine_hugoniot(model, v0);
    if (!(sol.sigma * t_end < domain_length)) {
      throw UsageError("simulate: the shock leaves the domain before t_end (sigma t_end = " +
                       std::to_string(sol.sigma * t_end) + ")");
    }
  }
}

FiniteVolumeSolver::FiniteVolumeSolver(SimConfig cfg)
    : cfg_((cfg.validate(), std::move(cfg))),
      dx_(cfg_.domain_length / cfg_.cells),
      v_(cfg_.cells, -cfg_.v0),
      g_(cfg_.cells, 0.0),
      p_(cfg_.cells + 2),
      c_(cfg_.cells + 2),
      flux_v_(cfg_.cells + 1),
      flux_g_(cfg_.cells + 1),
      next_v_(cfg_.cells),
      next_g_(cfg_.cells) {}

void FiniteVolumeSolver::check_state(std::size_t i) const {
  if (!(g_[i] > -1.0)) {
    std::ostringstream msg;
    msg << "simulate: interpenetration in cell " << i << " at t = " << t_ << " (gamma = " << g_[i]
        << ")";
    throw SimulationError(msg.str());
  }
}

double FiniteVolumeSolver::step(double max_dt) {
  const std::size_t n = v_.size();
  // Index k in p_/c_ is cell k - 1; 0 and n + 1 are the ghosts.
  for (std::size_t i = 0; i < n; ++i) {
    check_state(i);
    const auto e = stress(cfg_.model, g_[i]);
    if (!(e.dp > 0.0)) {
      std::ostringstream msg;
      msg << "simulate: loss of hyperbolicity in cell " << i << " at t = " << t_
          << " (V = " << v_[i] << ", gamma = " << g_[i] << ", P' = " << e.dp << ")";
      throw SimulationError(msg.str());
    }
    p_[i + 1] = e.p;
    c_[i + 1] = std::sqrt(e.dp);
  }
  p_[0] = p_[1];
  c_[0] = c_[1];
  p_[n + 1] = p_[n];
  c_[n + 1] = c_[n];

  auto v_at = [&](std::size_t k) { return k == 0 ? -v_[0] : k == n + 1 ? v_[n - 1] : v_[k - 1]; };
  auto g_at = [&](std::size_t k) { return k == 0 ? g_[0] : k == n + 1 ? g_[n - 1] : g_[k - 1]; };

  double speed = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double a = std::max(c_[k], c_[k + 1]);
    speed = std::max(speed, a);
    const double vl = v_at(k), vr = v_at(k + 1);
    const double gl = g_at(k), gr = g_at(k + 1);
    flux_v_[k] = -0.5 * (p_[k] + p_[k + 1]) - 0.5 * a * (vr - vl);
    flux_g_[k] = -0.5 * (vl + vr) - 0.5 * a * (gr - gl);
  }

  double dt = speed > 0.0 ? cfg_.cfl * dx_ / speed : max_dt;
  dt = std::min(dt, max_dt);

  // The wave speed estimate comes from the current states. After an
  // impulsive start the new states can be much stiffer, so a step is
  // rejected and shortened when it produces an invalid state or violates
  // the CFL bound measured on the updated states.
  std::string failure;
  for (int attempt = 0; attempt < kMaxStepHalvings; ++attempt) {
    const double r = dt / dx_;
    double new_speed = 0.0;
    failure.clear();
    for (std::size_t i = 0; i < n && failure.empty(); ++i) {
      next_v_[i] = v_[i] - r * (flux_v_[i + 1] - flux_v_[i]);
      next_g_[i] = g_[i] - r * (flux_g_[i + 1] - flux_g_[i]);
      std::ostringstream msg;
      if (!(next_g_[i] > -1.0)) {
        msg << "simulate: interpenetration in cell " << i << " at t = " << t_ + dt
            << " (gamma = " << next_g_[i] << ")";
        failure = msg.str();
        break;
      }
      const double dp = stress(cfg_.model, next_g_[i]).dp;
      if (!(dp > 0.0)) {
        msg << "simulate: loss of hyperbolicity in cell " << i << " at t = " << t_ + dt
            << " (V = " << next_v_[i] << ", gamma = " << next_g_[i] << ", P' = " << dp << ")";
        failure = msg.str();
        break;
      }
      new_speed = std::max(new_speed, std::sqrt(dp));
    }
    if (failure.empty() && new_speed * dt <= dx_) break;
    dt = failure.empty() ? std::min(0.5 * dt, cfg_.cfl * dx_ / new_speed) : 0.5 * dt;
  }
  if (!failure.empty()) throw SimulationError(failure);

  v_.swap(next_v_);
  g_.swap(next_g_);
  left_flux_ = {flux_v_[0], flux_g_[0]};
  right_flux_ = {flux_v_[n], flux_g_[n]};
  t_ += dt;
  return dt;
}

void FiniteVolumeSolver::run() {
  while (t_ < cfg_.t_end) {
    const double remaining = cfg_.t_end - t_;
    if (remaining <= 1e-14 * cfg_.t_end) break;
    step(remaining);
  }
}

SimField FiniteVolumeSolver::field() const {
  SimField f;
  f.x.resize(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) f.x[i] = (i + 0.5) * dx_;
  f.v = v_;
  f.gamma = g_;
  f.t = t_;
  return f;
}

SimField simulate(const SimConfig& cfg) {
  FiniteVolumeSolver solver(cfg);
  solver.run();
  return solver.field();
}

ShockEstimate extract_shock(const SimField& field, const ShockSolution& hint) {
  const std::size_t n = field.x.size();
  if (n < 2 || field.gamma.size() != n) throw UsageError("extract_shock: malformed field");
  if (!(field.t > 0.0)) throw SimulationError("extract_shock: field time must be positive");
  const double level = 0.5 * hint.gamma_l;
  for (std::size_t i = n - 1; i-- > 0;) {
    const double a = field.gamma[i] - level;
    const double b = field.gamma[i + 1] - level;
    if ((a <= 0.0) != (b <= 0.0)) {
      const double w = a / (a - b);
      const double pos = field.x[i] + w * (field.x[i + 1] - field.x[i]);
      double sum = 0.0;
      int count = 0;
      for (std::size_t j = 0; j < n && field.x[j] < 0.5 * pos; ++j) {
        sum += field.gamma[j];
        ++count;
      }
      if (count == 0) throw SimulationError("extract_shock: no plateau cells behind the shock");
      return {pos / field.t, sum / count, pos};
    }
  }
  throw SimulationError("extract_shock: gamma never crosses gamma_l / 2");
}

SimField sample_solution(const ShockSolution& sol, const std::vector<double>& x, double t) {
  SimField f;
  f.x = x;
  f.t = t;
  for (double xi : x) {
    const auto u = evaluate(sol, xi, t);
    f.v.push_back(u.v);
    f.gamma.push_back(u.gamma);
  }
  return f;
}

void write_field_csv(std::ostream& os, const SimField& field) {
  const auto old_precision = os.precision(17);
  os << "x,V,Gamma\n";
  for (std::size_t i = 0; i < field.x.size(); ++i) {
    os << field.x[i] << ',' << field.v[i] << ',' << field.gamma[i] << '\n';
  }
  os.precision(old_precision);
}

} // namespace psystem
