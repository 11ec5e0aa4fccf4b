#pragma once

#include <cstdint>
#include <vector>

#include "motifgraph/ising.hpp"
#include "motifgraph/sampling.hpp"

namespace motifgraph::oracle {

using ising::IsingParams;

// Spins (+1/-1) on the external nodes, canonical id order 0..q-1.
struct BoundaryConfig {
    std::vector<int> spins;
};

// Boundary partition function by exhaustive summation over internal spins:
//   sum exp( K sum_basic s s + L sum_present_decorations s s + h sum_i w_i s_i )
// where the field weight w_i counts the smallest-pattern copies the node
// belongs to: boundary nodes once, interior (glued) nodes twice. That weight
// is what the level recursion composes, and it reduces to the plain field at
// h = 0. Capped at 24 internal nodes.
long double partition_conditional(const RealizedGraph& g, const IsingParams& params,
                                  const BoundaryConfig& boundary);

// Average of partition_conditional over all decoration subsets with exact
// Bernoulli weights (explicit enumeration, Kahan-compensated). Capped at 20
// decorations and 24 internal nodes.
long double annealed_partition(const UnderlyingGraph& g, const IsingParams& params,
                               const BoundaryConfig& boundary);

// The four annealed boundary classes of the M1 graph, keyed by the number of
// +1 boundary spins.
struct CornerValues {
    long double ppp = 1.0L;  // (+,+,+)
    long double ppm = 1.0L;  // two +
    long double pmm = 1.0L;  // one +
    long double mmm = 1.0L;  // (-,-,-)

    long double by_plus_count(int plus) const;
};

CornerValues corner_initial(const IsingParams& params);
// One gluing level: decoration factors (p e^{+-L} + 1-p) times the cubic
// polynomials produced by summing out the three shared spins.
CornerValues corner_step(const CornerValues& c, const IsingParams& params);
CornerValues corners_at_level(int level, const IsingParams& params);

// Worst relative gap between the enumeration oracle and the level recursion
// over all 8 boundary configurations of the M1 graph. level in {2, 3}.
double recursion_check(int level, const IsingParams& params);

// Worst recursion_check over a parameter grid, separately for levels 2 and 3.
struct GridCheck {
    double worst_level2 = 0.0;
    double worst_level3 = 0.0;
};
GridCheck recursion_check_grid(const std::vector<double>& K_values,
                               const std::vector<double>& L_values,
                               const std::vector<double>& h_values,
                               const std::vector<double>& p_values);
GridCheck recursion_check_grid_serial(const std::vector<double>& K_values,
                                      const std::vector<double>& L_values,
                                      const std::vector<double>& h_values,
                                      const std::vector<double>& p_values);

// (x, y, z) per level: enumeration oracle up to level 3, the reduced map
// beyond.
struct RatioRow {
    int level = 1;
    double x = 1.0, y = 1.0, z = 1.0;
    bool from_enumeration = false;
};
std::vector<RatioRow> ratio_probe(const IsingParams& params, int max_level);

// Worst relative gap between enumeration ratios and reduced-map iterates
// over levels 1..3.
double ratio_probe_max_deviation(const IsingParams& params);

}  // namespace motifgraph::oracle
