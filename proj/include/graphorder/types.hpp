#ifndef GRAPHORDER_TYPES_HPP
#define GRAPHORDER_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphorder {

// Vertex index. int32 covers the graph sizes this toolkit targets
// (up to a few tens of millions of vertices); edge offsets are 64-bit.
using vidx = std::int32_t;
using eidx = std::int64_t;

// Malformed or inconsistent input data (files, index ranges, headers).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to reach its contract (e.g. eigensolver
// non-convergence surfaced in strict mode).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graphorder

#endif
