#pragma once

#include <vector>

namespace gdmcf {

double mean(const std::vector<double>& xs);
double variance(const std::vector<double>& xs);  // unbiased

// Upper regularized incomplete gamma Q(a, x).
double gamma_q(double a, double x);

// Survival function of the chi-squared distribution with df degrees of
// freedom: P(X >= stat).
double chi2_sf(double stat, int df);

// Two-sample chi-squared homogeneity test on integer-valued samples.
// Bins are pooled quantile bins (merged so every expected count is >= 5).
// Returns the p-value.
double chi2_two_sample_pvalue(const std::vector<long long>& xs,
                              const std::vector<long long>& ys);

// Goodness-of-fit p-value of observed counts against uniform cells.
double chi2_uniform_pvalue(const std::vector<long long>& counts);

}  // namespace gdmcf
