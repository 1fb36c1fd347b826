#include "gdmcf/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace gdmcf {

double Rng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = next_double_open();
  double u2 = next_double();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

int64_t Rng::next_below(int64_t n) {
  if (n <= 0) throw std::invalid_argument("next_below: n must be positive");
  uint64_t un = static_cast<uint64_t>(n);
  uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return static_cast<int64_t>(x % un);
}

int64_t Rng::geometric_skip(double p) {
  double u = next_double_open();
  return static_cast<int64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

std::vector<int64_t> bernoulli_positions(Rng& rng, int64_t n, double p) {
  std::vector<int64_t> out;
  if (n <= 0 || p <= 0.0) return out;
  if (p >= 1.0) {
    out.resize(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) out[static_cast<size_t>(i)] = i;
    return out;
  }
  int64_t pos = -1;
  while (true) {
    pos += rng.geometric_skip(p) + 1;
    if (pos >= n) break;
    out.push_back(pos);
  }
  return out;
}

}  // namespace gdmcf
