#pragma once

#include <cstdint>
#include <vector>

namespace motifgraph::stats {

// Regularized lower/upper incomplete gamma P(a,x), Q(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double chi2_cdf(double x, double dof);
// Smallest x with chi2_cdf(x, dof) >= prob, by bisection.
double chi2_quantile(double prob, double dof);

struct MeanStderr {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
};
MeanStderr mean_stderr(const std::vector<double>& values);

// Pearson statistic against expected bin probabilities. Bins with expected
// count below `min_expected` are pooled into their left neighbor before the
// statistic is formed. Returns (statistic, degrees of freedom).
struct Chi2Result {
    double statistic = 0.0;
    int dof = 0;
};
Chi2Result pearson_chi2(const std::vector<std::int64_t>& observed,
                        const std::vector<double>& expected_prob, std::int64_t total,
                        double min_expected = 5.0);

}  // namespace motifgraph::stats
