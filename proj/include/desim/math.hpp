#pragma once

#include <cstddef>
#include <vector>

namespace desim {

double mean(const std::vector<double>& xs);
// Unbiased (n-1) estimator. Requires n >= 2.
double sample_variance(const std::vector<double>& xs);
double sample_sd(const std::vector<double>& xs);

double normal_pdf(double x);
double normal_cdf(double x);
// Inverse standard normal CDF (Wichura's algorithm), |error| < 1e-13
// for p in (0,1). Throws outside the open interval.
double normal_quantile(double p);

double log_gamma(double x);
// Regularized incomplete beta I_x(a,b) via continued fraction.
double ibeta_reg(double a, double b, double x);

// Two-sided p-value for a Student-t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, double df);
// Upper-tail probability P(F > f) for an F statistic.
double f_upper_p(double f, double df1, double df2);
// Quantile of the central t distribution, bisection on the CDF.
double student_t_quantile(double p, double df);

} // namespace desim
