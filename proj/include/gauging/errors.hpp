#pragma once

#include <stdexcept>
#include <string>

namespace gauging {

// Requested computation exceeds a configured cap (dense dimension, subgroup
// enumeration, solver size).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A model restriction was violated (e.g. non-Z2 group for the Sierpinski
// checks).
struct UnsupportedGroupError : std::invalid_argument {
    explicit UnsupportedGroupError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed while assembling a code. This is a
// regression guard: it must never fire on the built-in models.
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// A gauging map annihilated its input (the boundary state carries charge).
struct ChargedBoundaryError : std::runtime_error {
    explicit ChargedBoundaryError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gauging
