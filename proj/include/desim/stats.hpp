#pragma once

#include <string>
#include <vector>

namespace desim {

struct TestResult {
    double statistic = 0.0;
    double df = 0.0;
    double p = 1.0;
    std::string stars; // "", "*", "**", "***" at 0.05 / 0.01 / 0.001
};

std::string significance_stars(double p);

// Welch's unequal-variance t test, Satterthwaite degrees of freedom,
// two-sided p. Both samples need n >= 2; if both variances vanish the
// result degrades to an exact-equality check (p = 1 or 0) with a warning.
TestResult welch_t(const std::vector<double>& x, const std::vector<double>& y);

// Levene's variance-equality test, mean-centered by default
// (median-centered available by flag), F-distribution p-value.
TestResult levene(const std::vector<double>& x, const std::vector<double>& y,
                  bool median_center = false);

// Jensen-Shannon divergence in bits between two histograms of equal bin
// count. Inputs are renormalized; negative mass is an error. Result lies
// in [0, 1].
double jsd_bits(std::vector<double> p, std::vector<double> q);

// Mid-rank (average ties) vector, ranks starting at 1.
std::vector<double> midranks(const std::vector<double>& xs);

// Spearman rank correlation; NaN when either input is constant.
double spearman_rho(const std::vector<double>& x,
                    const std::vector<double>& y);

// Equal-width histogram over [lo, hi], mass-normalized. Values outside
// the range clamp into the end bins.
std::vector<double> histogram(const std::vector<double>& xs, double lo,
                              double hi, std::size_t bins);

// Adjusted Fisher-Pearson sample skewness.
double adjusted_skewness(const std::vector<double>& xs);

struct KdeDiag {
    bool computed = false;
    int peaks = 0;
    double skewness = 0.0;
    double bandwidth = 0.0;
};

// Gaussian kernel density diagnostics: 512-point grid over the data range
// padded by three bandwidths (Silverman's rule), peaks counted as strict
// local maxima. Skipped for fewer than 5 samples.
KdeDiag kde_diag(const std::vector<double>& samples);

struct MeanCI {
    double mean = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

// Two-sided t-based confidence interval for the mean.
MeanCI mean_ci(const std::vector<double>& xs, double level = 0.95);

} // namespace desim
