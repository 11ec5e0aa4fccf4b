#include "motifgraph/ising.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "motifgraph/common.hpp"

namespace motifgraph::ising {

namespace {

constexpr double kTangentT = 9.0 / 5.0;
// |x1 - e^{4K*}| <= criticality * e^{4K*} counts as sitting on the critical
// surface; generic floating iteration can never land on the repelling point.
constexpr double kCriticality = 1e-12;

double log_sum_exp(std::initializer_list<double> terms) {
    double m = -std::numeric_limits<double>::infinity();
    for (double a : terms) m = std::max(m, a);
    double s = 0.0;
    for (double a : terms) s += std::exp(a - m);
    return m + std::log(s);
}

}  // namespace

double t_of(double L, double p) {
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    const double ratio = (p * std::exp(L) + 1.0 - p) / (p * std::exp(-L) + 1.0 - p);
    return ratio * ratio;
}

StateTriple initial_state(double K, double h) {
    return {std::exp(4.0 * (K + h)), std::exp(2.0 * h), std::exp(4.0 * K - 2.0 * h)};
}

StateTriple map_step(const StateTriple& s, double t) {
    require(s.x > 0.0 && s.y > 0.0 && s.z > 0.0, "state must be strictly positive");
    require(t > 0.0, "t must be positive");
    const double x = s.x, y = s.y, z = s.z;
    const double px = x * x * x + 3.0 * x * y * y + 3.0 * y * y + 1.0;
    const double py = x * x * y + y * y * y + 2.0 * x * y + y * y * z + 2.0 * y + z;
    const double pz = y * y * y + 3.0 * y + 3.0 * z + z * z * z;
    const double q = x * y * y + x + 2.0 * y * y + 2.0 * y * z + z * z + 1.0;
    return {t * px / q, py / q, t * pz / q};
}

LogState map_step_log(const LogState& s, double log_t) {
    const double lx = s.lx, ly = s.ly, lz = s.lz;
    const double l3 = std::log(3.0), l2 = std::log(2.0);
    const double px = log_sum_exp({3.0 * lx, l3 + lx + 2.0 * ly, l3 + 2.0 * ly, 0.0});
    const double py = log_sum_exp(
        {2.0 * lx + ly, 3.0 * ly, l2 + lx + ly, 2.0 * ly + lz, l2 + ly, lz});
    const double pz = log_sum_exp({3.0 * ly, l3 + ly, l3 + lz, 3.0 * lz});
    const double q = log_sum_exp({lx + 2.0 * ly, lx, l2 + 2.0 * ly, l2 + ly + lz, 2.0 * lz, 0.0});
    return {log_t + px - q, py - q, log_t + pz - q};
}

double phi(double t, double x) { return t * (x * x - x + 4.0) / (x + 3.0); }

// phi in logarithmic coordinates; x^2 - x + 4 has no real roots, so the
// argument never cancels.
double phi_log(double t, double lx) {
    double num, den;
    if (lx > 1.0) {
        num = 2.0 * lx + std::log1p(std::exp(-lx) * (4.0 * std::exp(-lx) - 1.0));
        den = lx + std::log1p(3.0 * std::exp(-lx));
    } else {
        const double x = std::exp(lx);
        num = std::log(x * x - x + 4.0);
        den = std::log(x + 3.0);
    }
    return std::log(t) + num - den;
}

double phi_prime(double t, double x) {
    return t * (x + 7.0) * (x - 1.0) / ((x + 3.0) * (x + 3.0));
}

FixedPoints fixed_points(double t) {
    require(t > 0.0, "t must be positive");
    FixedPoints fp;
    if (t == 1.0) {
        fp.kind = FixedPoints::Kind::unit_only;
        fp.stable = 1.0;  // superstable: phi_1'(1) = 0
        return fp;
    }
    const double disc = 9.0 + 22.0 * t - 15.0 * t * t;
    if (std::abs(t - kTangentT) <= 16.0 * std::numeric_limits<double>::epsilon()) {
        // Tangency: the discriminant is an exact zero of the real problem,
        // so roundoff in `disc` must not split or drop the double root.
        fp.kind = FixedPoints::Kind::tangent;
        fp.stable = fp.unstable = 8.0 * t / (3.0 + t);
        return fp;
    }
    if (t > 1.0 && disc < 0.0) {
        fp.kind = FixedPoints::Kind::none;
        return fp;
    }
    const double root = std::sqrt(disc);
    // 8t/(3+t+sqrt(disc)) is the cancellation-free form of the stable root
    // on both sides of t = 1.
    const double stable = 8.0 * t / (3.0 + t + root);
    if (t < 1.0) {
        fp.kind = FixedPoints::Kind::single_stable;
        fp.stable = stable;
    } else {
        fp.kind = FixedPoints::Kind::pair;
        fp.stable = stable;
        fp.unstable = (3.0 + t + root) / (2.0 * (t - 1.0));
    }
    return fp;
}

double psi(double L) {
    require(L > 0.0, "psi defined for L > 0");
    const double s5 = std::sqrt(5.0);
    return (3.0 - s5) / (s5 * std::exp(L) - 3.0 * std::exp(-L) + 3.0 - s5);
}

double L_star() { return 0.25 * std::log(9.0 / 5.0); }

std::optional<double> K_star(double L, double p) {
    require(L > 0.0, "K* defined for L > 0");
    require(p > 0.0 && p <= 1.0, "K* defined for p in (0, 1]");
    const FixedPoints fp = fixed_points(t_of(L, p));
    if (!fp.unstable) return std::nullopt;
    return 0.25 * std::log(*fp.unstable);
}

FlowResult classify_flow(const IsingParams& params, int max_iter, double div_threshold,
                         double tol) {
    require(max_iter >= 1, "max_iter must be >= 1");
    require(div_threshold > 1.0, "div_threshold must exceed 1");
    require(tol > 0.0, "tol must be positive");

    FlowResult res;
    res.t = t_of(params.L, params.p);
    const FixedPoints fp = fixed_points(res.t);
    res.stable_fp = fp.stable;
    res.unstable_fp = fp.unstable;
    if (fp.unstable) res.critical_K = 0.25 * std::log(*fp.unstable);

    const double log_t = std::log(res.t);
    LogState s{4.0 * (params.K + params.h), 2.0 * params.h, 4.0 * params.K - 2.0 * params.h};
    const double log_div = std::log(div_threshold);

    // On the critical surface the trajectory heads to the repelling point in
    // exact arithmetic; decide from K directly instead of iterating onto it.
    const bool on_critical_surface =
        params.h == 0.0 && res.critical_K &&
        std::abs(std::expm1(4.0 * (params.K - *res.critical_K))) <= kCriticality;

    // At h = 0, spin-flip symmetry pins the trajectory to y = 1, z = x
    // exactly. That line is transversally repelling for t > 1 (the dominant
    // off-line multiplier at the stable point exceeds 1), so rounding noise
    // would eject a naive 3-variable iteration; evolve the restricted map.
    const bool symmetric = params.h == 0.0;

    auto push = [&](const LogState& st) {
        res.trajectory.push_back({std::exp(st.lx), std::exp(st.ly), std::exp(st.lz)});
    };
    push(s);

    bool diverged = false, converged = false;
    for (int it = 0; it < max_iter && !diverged && !converged; ++it) {
        if (symmetric) {
            s.lx = phi_log(res.t, s.lx);
            s.ly = 0.0;
            s.lz = s.lx;
        } else {
            s = map_step_log(s, log_t);
        }
        push(s);
        if (s.lx > log_div) {
            diverged = true;
        } else if (fp.stable) {
            const double target = *fp.stable;
            converged = std::abs(std::exp(s.lx) - target) <= tol &&
                        std::abs(std::exp(s.ly) - 1.0) <= tol &&
                        std::abs(std::exp(s.lz) - target) <= tol;
        }
    }

    if (fp.kind == FixedPoints::Kind::none) {
        res.classification = FlowClass::no_critical_point_regime;
    } else if (on_critical_surface) {
        res.classification = FlowClass::critical;
    } else if (diverged) {
        res.classification = FlowClass::diverges;
    } else if (converged) {
        res.classification = FlowClass::converges_to_low_fp;
    } else if (fp.unstable &&
               std::abs(std::exp(s.lx) - *fp.unstable) <= std::sqrt(tol) * (*fp.unstable)) {
        // max_iter exhausted while pinned near the repelling point
        res.classification = FlowClass::critical;
    } else {
        res.classification = std::exp(s.lx) > fp.unstable.value_or(
                                                  std::numeric_limits<double>::infinity())
                                 ? FlowClass::diverges
                                 : FlowClass::converges_to_low_fp;
    }
    return res;
}

std::string flow_class_name(FlowClass c) {
    switch (c) {
        case FlowClass::converges_to_low_fp: return "converges_to_low_fp";
        case FlowClass::critical: return "critical";
        case FlowClass::diverges: return "diverges";
        case FlowClass::no_critical_point_regime: return "no_critical_point_regime";
    }
    return "?";
}

PhaseRow phase_cell(double L, double p) {
    PhaseRow row;
    row.L = L;
    row.p = p;
    row.t = t_of(L, p);
    if (L > 0.0) row.psi = psi(L);
    if (p == 0.0 || L == 0.0) {
        row.regime = "no-transition";
        return row;
    }
    if (L < 0.0) {
        row.regime = "frustrated";
        return row;
    }
    const FixedPoints fp = fixed_points(row.t);
    if (fp.unstable) row.K_star = 0.25 * std::log(*fp.unstable);
    if (fp.kind == FixedPoints::Kind::tangent || std::abs(row.t - kTangentT) <= 1e-9) {
        row.regime = "boundary";
    } else if (fp.kind == FixedPoints::Kind::pair) {
        row.regime = "unique-for-small-K";
    } else {
        row.regime = "always-multiple";
    }
    return row;
}

std::vector<PhaseRow> phase_diagram(const std::vector<double>& L_values,
                                    const std::vector<double>& p_values) {
    std::vector<PhaseRow> rows(L_values.size() * p_values.size());
#pragma omp parallel for schedule(static) collapse(2)
    for (std::size_t i = 0; i < L_values.size(); ++i)
        for (std::size_t j = 0; j < p_values.size(); ++j)
            rows[i * p_values.size() + j] = phase_cell(L_values[i], p_values[j]);
    return rows;
}

std::vector<PhaseRow> phase_diagram_serial(const std::vector<double>& L_values,
                                           const std::vector<double>& p_values) {
    std::vector<PhaseRow> rows;
    rows.reserve(L_values.size() * p_values.size());
    for (double L : L_values)
        for (double p : p_values) rows.push_back(phase_cell(L, p));
    return rows;
}

std::vector<double> linspace(double lo, double hi, int count) {
    require(count >= 1, "grid needs at least one point");
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return v;
}

}  // namespace motifgraph::ising
