#pragma once

namespace ratsemi {

inline constexpr const char* kToolName = "ratsemi";
inline constexpr const char* kVersion = "0.1.0";

// Default resource bounds, overridable per call / via CLI flags.
inline constexpr long kDefaultDegreeCap = 4096;
inline constexpr int kDefaultFiberCap = 81;
inline constexpr double kDefaultPrecision = 1e-9;
inline constexpr int kDefaultMaxVertices = 64;

}  // namespace ratsemi
