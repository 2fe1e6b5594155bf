#pragma once

#include <stdexcept>
#include <string>

namespace qmap {

/// Raised when an exhaustive computation would exceed a desk-scale cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qmap
