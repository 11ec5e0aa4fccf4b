#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace motifgraph::verify {

enum class Status { pass, warn, fail };

struct Entry {
    Status status = Status::pass;
    std::string name;
    std::string detail;
};

struct Options {
    int grid_size = 2;         // points per axis of the (K, L, h, p) grid
    std::uint64_t seed = 0;
};

// Cross-validation sweep: enumeration oracles against closed forms and the
// reduced map. Checks that can fail report FAIL; known closed-form
// discrepancies of this graph family are reported as WARN with both values.
std::vector<Entry> run(const Options& options = {});

std::string render(const std::vector<Entry>& entries);
bool has_failure(const std::vector<Entry>& entries);

}  // namespace motifgraph::verify
