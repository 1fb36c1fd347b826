#include "gdmcf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gdmcf {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(const std::vector<double>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance needs >= 2 samples");
  double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), valid for x >= a + 1 (modified Lentz).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi2_sf(double stat, int df) {
  if (df <= 0) throw std::invalid_argument("chi2_sf: df must be positive");
  if (stat <= 0.0) return 1.0;
  return gamma_q(0.5 * df, 0.5 * stat);
}

double chi2_two_sample_pvalue(const std::vector<long long>& xs,
                              const std::vector<long long>& ys) {
  if (xs.size() < 10 || ys.size() < 10)
    throw std::invalid_argument("chi2 two-sample: too few observations");
  std::vector<long long> pooled(xs);
  pooled.insert(pooled.end(), ys.begin(), ys.end());
  std::sort(pooled.begin(), pooled.end());

  // quantile bin edges over the pooled sample
  const int want_bins = 8;
  std::vector<long long> edges;  // bin b = (edges[b-1], edges[b]]
  for (int b = 1; b < want_bins; ++b) {
    long long e = pooled[pooled.size() * b / want_bins];
    if (edges.empty() || e > edges.back()) edges.push_back(e);
  }

  auto bin_of = [&](long long v) {
    size_t b = 0;
    while (b < edges.size() && v > edges[b]) ++b;
    return b;
  };
  size_t nbins = edges.size() + 1;
  std::vector<double> cx(nbins, 0.0), cy(nbins, 0.0);
  for (long long v : xs) cx[bin_of(v)] += 1.0;
  for (long long v : ys) cy[bin_of(v)] += 1.0;

  // merge adjacent bins until every expected count is >= 5
  double nx = static_cast<double>(xs.size());
  double ny = static_cast<double>(ys.size());
  double total = nx + ny;
  for (size_t b = 0; b + 1 < cx.size();) {
    double pool_b = cx[b] + cy[b];
    if (pool_b * nx / total < 5.0 || pool_b * ny / total < 5.0) {
      cx[b + 1] += cx[b];
      cy[b + 1] += cy[b];
      cx.erase(cx.begin() + b);
      cy.erase(cy.begin() + b);
    } else {
      ++b;
    }
  }
  while (cx.size() > 1) {
    size_t last = cx.size() - 1;
    double pool_b = cx[last] + cy[last];
    if (pool_b * nx / total >= 5.0 && pool_b * ny / total >= 5.0) break;
    cx[last - 1] += cx[last];
    cy[last - 1] += cy[last];
    cx.pop_back();
    cy.pop_back();
  }
  if (cx.size() < 2) return 1.0;  // samples indistinguishable at this resolution

  double stat = 0.0;
  for (size_t b = 0; b < cx.size(); ++b) {
    double pool_b = cx[b] + cy[b];
    double ex = pool_b * nx / total;
    double ey = pool_b * ny / total;
    stat += (cx[b] - ex) * (cx[b] - ex) / ex;
    stat += (cy[b] - ey) * (cy[b] - ey) / ey;
  }
  return chi2_sf(stat, static_cast<int>(cx.size()) - 1);
}

double chi2_uniform_pvalue(const std::vector<long long>& counts) {
  if (counts.size() < 2) throw std::invalid_argument("chi2 uniform: need >= 2 cells");
  long long total = 0;
  for (long long c : counts) total += c;
  double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  if (expected < 5.0) throw std::invalid_argument("chi2 uniform: expected count < 5");
  double stat = 0.0;
  for (long long c : counts) {
    double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return chi2_sf(stat, static_cast<int>(counts.size()) - 1);
}

}  // namespace gdmcf
