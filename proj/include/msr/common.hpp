#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace msr {

// Shape/dimension violations (mismatched operand shapes, bad extents).
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameter values (nonpositive eps, bad factors, out-of-range p).
struct ValueError : std::runtime_error {
    explicit ValueError(const std::string& msg) : std::runtime_error(msg) {}
};

// File/serialization failures (bad magic, truncation, non-finite payload).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

using Shape = std::vector<int64_t>;

std::string shape_to_string(const Shape& s);

inline int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int64_t e : s) n *= e;
    return n;
}

}  // namespace msr
