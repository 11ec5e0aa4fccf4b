#pragma once

#include <optional>
#include <string>
#include <vector>

namespace motifgraph::ising {

// Couplings of the spin system on the M1-based graph; the inverse
// temperature is absorbed into K, L and h.
struct IsingParams {
    double K = 0.0;  // basic bonds
    double L = 0.0;  // decoration bonds
    double h = 0.0;  // external field
    double p = 0.0;  // decoration probability, in [0, 1]
};

// Ratios of the four annealed boundary partition classes; strictly positive.
struct StateTriple {
    double x = 1.0;
    double y = 1.0;
    double z = 1.0;
};

// Decoration factor t = ((p e^L + 1-p)/(p e^-L + 1-p))^2; equals 1 at p = 0
// or L = 0 and e^{4L} at p = 1.
double t_of(double L, double p);

// (e^{4(K+h)}, e^{2h}, e^{4K-2h}); lies on the surface x = y^3 z.
StateTriple initial_state(double K, double h);

// One application of the level recursion,
//   x' = t Px/Q, y' = Py/Q, z' = t Pz/Q,
// with Px = x^3+3xy^2+3y^2+1, Py = x^2y+y^3+2xy+y^2z+2y+z,
// Pz = y^3+3y+3z+z^3, Q = xy^2+x+2y^2+2yz+z^2+1.
// Maps the open positive octant into itself and preserves {y=1, x=z}.
StateTriple map_step(const StateTriple& s, double t);

// Same map on logarithmic coordinates (log-sum-exp kernels); never
// overflows, so divergent flows can be followed arbitrarily far.
struct LogState {
    double lx = 0.0, ly = 0.0, lz = 0.0;
};
LogState map_step_log(const LogState& s, double log_t);

// Restriction to the invariant subspace y = 1, x = z:
//   phi_t(x) = t (x^2 - x + 4) / (x + 3).
double phi(double t, double x);
double phi_prime(double t, double x);

// Fixed points of phi_t on x > 0.
//   t < 1   : one stable point below 1
//   t = 1   : x = 1 only
//   1<t<9/5 : stable/unstable pair
//   t = 9/5 : tangency, double root 3
//   t > 9/5 : none (phi_t lies above the identity)
struct FixedPoints {
    enum class Kind { single_stable, unit_only, pair, tangent, none };
    Kind kind = Kind::unit_only;
    std::optional<double> stable;    // phi' < 1 here
    std::optional<double> unstable;  // phi' > 1 here
};
FixedPoints fixed_points(double t);

// Threshold probability: the pair of fixed points exists for p < psi(L).
// Defined for L > 0; decreasing, psi(L*) = 1.
double psi(double L);
// Largest decoration coupling with a transition at every p: (1/4) ln(9/5).
double L_star();

// Critical basic coupling e^{4K*} = x_unstable(t); empty when t is outside
// (1, 9/5], i.e. when no transition exists at these (L, p).
std::optional<double> K_star(double L, double p);

enum class FlowClass { converges_to_low_fp, critical, diverges, no_critical_point_regime };
std::string flow_class_name(FlowClass c);

struct FlowResult {
    double t = 1.0;
    std::vector<StateTriple> trajectory;  // includes the initial state
    FlowClass classification = FlowClass::converges_to_low_fp;
    std::optional<double> stable_fp;
    std::optional<double> unstable_fp;
    std::optional<double> critical_K;
};

// Iterates the map from initial_state(K, h) and classifies the flow.
// At h = 0 the trichotomy is decided by K against K*(L, p); criticality is
// declared from |x1 - e^{4K*}| <= 1e-12 e^{4K*} because the unstable point
// repels floating-point trajectories. t > 9/5 flows diverge for every K and
// are tagged no_critical_point_regime.
FlowResult classify_flow(const IsingParams& params, int max_iter = 10000,
                         double div_threshold = 1e12, double tol = 1e-9);

struct PhaseRow {
    double L = 0.0, p = 0.0, t = 1.0;
    std::optional<double> psi;     // defined for L > 0
    std::optional<double> K_star;  // defined for t in (1, 9/5]
    std::string regime;  // frustrated | no-transition | unique-for-small-K | boundary | always-multiple
};

// Regime sweep over the (L, p) grid; cells are independent, OpenMP over
// rows with a serial reference twin.
std::vector<PhaseRow> phase_diagram(const std::vector<double>& L_values,
                                    const std::vector<double>& p_values);
std::vector<PhaseRow> phase_diagram_serial(const std::vector<double>& L_values,
                                           const std::vector<double>& p_values);
PhaseRow phase_cell(double L, double p);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace motifgraph::ising
