#include "motifgraph/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace motifgraph::stats {

namespace {

// Series expansion of P(a,x), good for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), good for x >= a+1 (modified Lentz).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) { return 1.0 - gamma_p(a, x); }

double chi2_cdf(double x, double dof) { return x <= 0.0 ? 0.0 : gamma_p(dof / 2.0, x / 2.0); }

double chi2_quantile(double prob, double dof) {
    if (!(prob > 0.0 && prob < 1.0)) throw std::invalid_argument("chi2_quantile: prob in (0,1)");
    double lo = 0.0, hi = dof + 10.0;
    while (chi2_cdf(hi, dof) < prob) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (chi2_cdf(mid, dof) < prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

MeanStderr mean_stderr(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n == 0) return {};
    long double sum = 0.0L;
    for (double v : values) sum += v;
    const double mean = static_cast<double>(sum / static_cast<long double>(n));
    if (n == 1) return {mean, 0.0};
    long double ss = 0.0L;
    for (double v : values) {
        const long double d = static_cast<long double>(v) - mean;
        ss += d * d;
    }
    const double var = static_cast<double>(ss / static_cast<long double>(n - 1));
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

Chi2Result pearson_chi2(const std::vector<std::int64_t>& observed,
                        const std::vector<double>& expected_prob, std::int64_t total,
                        double min_expected) {
    if (observed.size() != expected_prob.size())
        throw std::invalid_argument("pearson_chi2: size mismatch");
    // Pool sparse bins left-to-right so every retained bin has enough mass.
    std::vector<double> exp_pooled;
    std::vector<std::int64_t> obs_pooled;
    double e_acc = 0.0;
    std::int64_t o_acc = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        e_acc += expected_prob[i] * static_cast<double>(total);
        o_acc += observed[i];
        if (e_acc >= min_expected) {
            exp_pooled.push_back(e_acc);
            obs_pooled.push_back(o_acc);
            e_acc = 0.0;
            o_acc = 0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0) {
        if (exp_pooled.empty()) {
            exp_pooled.push_back(e_acc);
            obs_pooled.push_back(o_acc);
        } else {
            exp_pooled.back() += e_acc;
            obs_pooled.back() += o_acc;
        }
    }
    Chi2Result r;
    r.dof = static_cast<int>(exp_pooled.size()) - 1;
    for (std::size_t i = 0; i < exp_pooled.size(); ++i) {
        const double d = static_cast<double>(obs_pooled[i]) - exp_pooled[i];
        r.statistic += d * d / exp_pooled[i];
    }
    return r;
}

}  // namespace motifgraph::stats
