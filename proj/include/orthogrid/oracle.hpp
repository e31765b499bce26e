#pragma once

#include <cstddef>
#include <optional>

#include "orthogrid/colouring.hpp"
#include "orthogrid/graph.hpp"

namespace orthogrid {

/// Largest graph the exhaustive search accepts unless told otherwise.
inline constexpr std::size_t kDefaultOracleGuard = 14;

/// Exhaustive search for an orthogonal pair of proper colourings of `g` over
/// `palette` colours. Returns the first pair found in search order, or nothing
/// if none exists. Throws `std::invalid_argument` when `g` has more than
/// `guard` vertices.
std::optional<ColouringPair> find_orthogonal_colouring(const Graph &g, std::size_t palette,
                                                       std::size_t guard = kDefaultOracleGuard);

/// Orthogonal chromatic number by exhaustive search: the smallest palette
/// `N <= max_colours` that admits an orthogonal pair, or nothing.
std::optional<std::size_t> brute_force_ochi(const Graph &g, std::size_t max_colours,
                                            std::size_t guard = kDefaultOracleGuard);

}  // namespace orthogrid
