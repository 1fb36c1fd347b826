#include "gdmcf/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gdmcf {

void TransitionMatrix2::validate() const {
  for (int i = 0; i < 2; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 2; ++j) {
      if (q[i][j] < 0.0 || q[i][j] > 1.0)
        throw std::invalid_argument("transition entry outside [0,1]");
      sum += q[i][j];
    }
    if (std::fabs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("transition row does not sum to 1");
  }
}

TransitionMatrix2 matmul2(const TransitionMatrix2& a, const TransitionMatrix2& b) {
  TransitionMatrix2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c.q[i][j] = a.q[i][0] * b.q[0][j] + a.q[i][1] * b.q[1][j];
  return c;
}

DiscreteSchedule DiscreteSchedule::from_alphas(std::vector<double> alphas,
                                               std::array<double, 2> marginal) {
  DiscreteSchedule s;
  s.steps = static_cast<int>(alphas.size());
  s.alpha = std::move(alphas);
  s.marginal = marginal;
  s.alpha_bar.resize(s.alpha.size());
  double prod = 1.0;
  for (size_t t = 0; t < s.alpha.size(); ++t) {
    prod *= s.alpha[t];
    s.alpha_bar[t] = prod;
  }
  s.validate();
  return s;
}

void DiscreteSchedule::validate() const {
  if (steps < 1) throw std::invalid_argument("discrete schedule needs T >= 1");
  for (double a : alpha)
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("alpha outside (0,1]");
  if (marginal[0] < 0.0 || marginal[1] < 0.0 ||
      std::fabs(marginal[0] + marginal[1] - 1.0) > 1e-12)
    throw std::invalid_argument("marginal is not a probability row");
}

ContinuousSchedule ContinuousSchedule::from_betas(std::vector<double> betas) {
  ContinuousSchedule s;
  s.steps = static_cast<int>(betas.size());
  s.beta = std::move(betas);
  s.alpha_bar.resize(s.beta.size());
  double prod = 1.0;
  for (size_t t = 0; t < s.beta.size(); ++t) {
    prod *= 1.0 - s.beta[t];
    s.alpha_bar[t] = prod;
  }
  s.validate();
  return s;
}

void ContinuousSchedule::validate() const {
  if (steps < 1) throw std::invalid_argument("continuous schedule needs T >= 1");
  for (double b : beta)
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("beta outside (0,1)");
}

std::array<double, 2> marginal_from_graph(const InteractionMatrix& r) {
  if (r.num_users <= 0 || r.num_items <= 0)
    throw std::invalid_argument("marginal_from_graph: empty dimensions");
  double cells = static_cast<double>(r.num_users) * static_cast<double>(r.num_items);
  double present = static_cast<double>(r.nnz()) / cells;
  return {1.0 - present, present};
}

namespace {
TransitionMatrix2 convex_with_marginal(double a, const std::array<double, 2>& m) {
  TransitionMatrix2 q;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q.q[i][j] = a * (i == j ? 1.0 : 0.0) + (1.0 - a) * m[j];
  return q;
}

void check_step(const char* what, int t, int steps) {
  if (t < 1 || t > steps)
    throw std::out_of_range(std::string(what) + ": step " + std::to_string(t) +
                            " outside [1, " + std::to_string(steps) + "]");
}
}  // namespace

TransitionMatrix2 transition_matrix(const DiscreteSchedule& s, int t) {
  check_step("transition_matrix", t, s.steps);
  return convex_with_marginal(s.alpha[t - 1], s.marginal);
}

TransitionMatrix2 cumulative_transition(const DiscreteSchedule& s, int t) {
  check_step("cumulative_transition", t, s.steps);
  return convex_with_marginal(s.alpha_bar[t - 1], s.marginal);
}

std::pair<DiscreteSchedule, ContinuousSchedule> make_schedules(
    const NoiseConfig& cfg, std::array<double, 2> marginal) {
  if (cfg.steps < 1) throw std::invalid_argument("make_schedules: T >= 1 required");
  int T = cfg.steps;

  std::vector<double> betas(static_cast<size_t>(T));
  double beta_min = 1e-5 * cfg.scale_continuous;
  for (int t = 1; t <= T; ++t) {
    double b = T == 1 ? cfg.scale_continuous
                      : beta_min + (cfg.scale_continuous - beta_min) *
                                       (static_cast<double>(t - 1) / (T - 1));
    if (!(b > 0.0 && b < 1.0))
      throw std::invalid_argument("make_schedules: continuous scale yields beta outside (0,1)");
    betas[static_cast<size_t>(t - 1)] = b;
  }

  std::vector<double> alphas(static_cast<size_t>(T));
  for (int t = 1; t <= T; ++t) {
    double a = 1.0 - cfg.scale_discrete * static_cast<double>(t) / T;
    if (!(a > 0.0 && a <= 1.0))
      throw std::invalid_argument("make_schedules: discrete scale yields alpha outside (0,1]");
    alphas[static_cast<size_t>(t - 1)] = a;
  }

  return {DiscreteSchedule::from_alphas(std::move(alphas), marginal),
          ContinuousSchedule::from_betas(std::move(betas))};
}

}  // namespace gdmcf
