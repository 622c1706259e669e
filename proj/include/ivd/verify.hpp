#pragma once

#include <string>
#include <vector>

#include "ivd/diagram.hpp"
#include "ivd/oracle.hpp"

namespace ivd {

// Each check returns an empty string on success, otherwise a short reason.

/// V = 2N - 5 and E = 3N - 9 over finite vertices, N counting sentinels.
std::string check_counts(const Diagram& d);

/// Every finite vertex circle strictly excludes all sites not defining it.
/// Quadratic; meant for small instances.
std::string check_empty_circles(const Diagram& d);

/// Canonical graph equals the dual of the triangulation.
std::string check_against(const Diagram& d, const Triangulation& t);

}  // namespace ivd
