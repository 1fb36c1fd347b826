#pragma once

#include <array>
#include <vector>

#include "gdmcf/graph.hpp"

namespace gdmcf {

// 2x2 row-stochastic matrix over the edge states {absent, present}.
struct TransitionMatrix2 {
  std::array<std::array<double, 2>, 2> q{};  // q[from][to]

  double operator()(int from, int to) const { return q[from][to]; }
  void validate() const;  // rows sum to 1 within 1e-12, entries in [0,1]
};

TransitionMatrix2 matmul2(const TransitionMatrix2& a, const TransitionMatrix2& b);

// Per-step discrete noise weights and their cumulative products, anchored to
// the marginal edge-type distribution of the clean graph.
struct DiscreteSchedule {
  int steps = 0;                        // T
  std::vector<double> alpha;            // alpha[t-1], each in (0,1]
  std::vector<double> alpha_bar;        // cumulative products
  std::array<double, 2> marginal{1, 0}; // (p_absent, p_present)

  static DiscreteSchedule from_alphas(std::vector<double> alphas,
                                      std::array<double, 2> marginal);
  void validate() const;
};

// Gaussian noise scales for the feature level.
struct ContinuousSchedule {
  int steps = 0;
  std::vector<double> beta;       // beta[t-1], each in (0,1)
  std::vector<double> alpha_bar;  // cumulative products of 1-beta

  static ContinuousSchedule from_betas(std::vector<double> betas);
  void validate() const;
};

struct NoiseConfig {
  int steps = 5;
  double scale_continuous = 0.1;    // S_CC, top of the linear beta ramp
  double scale_discrete = 0.0008;   // S_DC, slope of the linear alpha decay
};

// Marginal edge-type distribution (1 - nnz/(M*N), nnz/(M*N)).
// Rejects empty dimensions.
std::array<double, 2> marginal_from_graph(const InteractionMatrix& r);

// Q^t = alpha^t I + (1 - alpha^t) 1 m. t is 1-based; rejects t out of range.
TransitionMatrix2 transition_matrix(const DiscreteSchedule& s, int t);

// Qbar^t = abar^t I + (1 - abar^t) 1 m; equals the literal product Q^1...Q^t.
TransitionMatrix2 cumulative_transition(const DiscreteSchedule& s, int t);

// Linear schedule shapes for both levels:
//   continuous: beta_t ramps linearly from 1e-5 * S_CC up to S_CC;
//   discrete:   alpha_t = 1 - S_DC * t / T.
// Rejects configurations producing beta outside (0,1) or alpha outside (0,1].
std::pair<DiscreteSchedule, ContinuousSchedule> make_schedules(
    const NoiseConfig& cfg, std::array<double, 2> marginal);

}  // namespace gdmcf
