#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace motifgraph {

// Request exceeds a hard enumeration or index cap (CLI exit code 2).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph algorithm requires a connected graph; message names two components.
struct disconnected_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void require_capacity(bool cond, const std::string& msg) {
    if (!cond) throw capacity_error(msg);
}

}  // namespace motifgraph
