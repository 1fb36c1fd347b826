#include "gdmcf/corruption.hpp"

#include <cmath>
#include <stdexcept>

#include "gdmcf/rng.hpp"

namespace gdmcf {

namespace {

// Row transition under a fixed 2x2 kernel: keep present cells with
// q[1][1], switch absent cells on with q[0][1]. Output stays sorted.
void transition_row(const InteractionMatrix& r, int u, const TransitionMatrix2& q,
                    Rng& rng, std::vector<int>& out) {
  out.clear();
  double p_keep = q(1, 1);
  double p_on = q(0, 1);

  std::vector<int> kept;
  kept.reserve(static_cast<size_t>(r.row_nnz(u)));
  for (const int* it = r.row_begin(u); it != r.row_end(u); ++it) {
    if (rng.next_double() < p_keep) kept.push_back(*it);
  }

  int64_t absent = r.num_items - r.row_nnz(u);
  std::vector<int64_t> switched_ranks = bernoulli_positions(rng, absent, p_on);

  // merge kept (item ids) with switched-on cells (ranks within the absent
  // complement, mapped to item ids against the original row)
  const int* pres = r.row_begin(u);
  int pres_n = r.row_nnz(u);
  size_t ki = 0;
  int pi = 0;  // complement-select cursor
  for (int64_t rank : switched_ranks) {
    while (pi < pres_n && pres[pi] <= rank + pi) ++pi;
    int item = static_cast<int>(rank) + pi;
    while (ki < kept.size() && kept[ki] < item) out.push_back(kept[ki++]);
    out.push_back(item);
  }
  while (ki < kept.size()) out.push_back(kept[ki++]);
}

}  // namespace

InteractionMatrix corrupt_structure(const InteractionMatrix& r0, const DiscreteSchedule& s,
                                    int t, uint64_t seed) {
  TransitionMatrix2 qbar = cumulative_transition(s, t);
  InteractionMatrix out(r0.num_users, r0.num_items);
  std::vector<int> row;
  for (int u = 0; u < r0.num_users; ++u) {
    Rng rng(derive_seed(seed, Stream::DiscreteCorruption, static_cast<uint64_t>(u),
                        static_cast<uint64_t>(t)));
    transition_row(r0, u, qbar, rng, row);
    out.indices.insert(out.indices.end(), row.begin(), row.end());
    out.indptr[u + 1] = static_cast<int>(out.indices.size());
  }
  return out;
}

InteractionMatrix transition_structure(const InteractionMatrix& r, const TransitionMatrix2& q,
                                       const std::vector<char>* touched, uint64_t seed) {
  if (touched && static_cast<int>(touched->size()) != r.num_users)
    throw std::invalid_argument("transition_structure: touched size mismatch");
  InteractionMatrix out(r.num_users, r.num_items);
  std::vector<int> row;
  for (int u = 0; u < r.num_users; ++u) {
    if (touched && !(*touched)[u]) {
      out.indices.insert(out.indices.end(), r.row_begin(u), r.row_end(u));
    } else {
      Rng rng(derive_seed(seed, Stream::GuidedUpdate, static_cast<uint64_t>(u)));
      transition_row(r, u, q, rng, row);
      out.indices.insert(out.indices.end(), row.begin(), row.end());
    }
    out.indptr[u + 1] = static_cast<int>(out.indices.size());
  }
  return out;
}

FeatureMatrix corrupt_features(const FeatureMatrix& x0, const ContinuousSchedule& s,
                               int t, uint64_t seed) {
  if (t < 1 || t > s.steps) throw std::out_of_range("corrupt_features: step out of range");
  double abar = s.alpha_bar[static_cast<size_t>(t - 1)];
  double signal = std::sqrt(abar);
  double noise = std::sqrt(1.0 - abar);
  FeatureMatrix x(x0.rows, x0.cols);
  for (int u = 0; u < x0.rows; ++u) {
    Rng rng(derive_seed(seed, Stream::ContinuousCorruption, static_cast<uint64_t>(u),
                        static_cast<uint64_t>(t)));
    const double* src = x0.row(u);
    double* dst = x.row(u);
    for (int c = 0; c < x0.cols; ++c) dst[c] = signal * src[c] + noise * rng.next_gaussian();
  }
  return x;
}

}  // namespace gdmcf
