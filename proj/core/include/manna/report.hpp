#pragma once

#include <string>
#include <utility>
#include <vector>

#include "manna/problem.hpp"

namespace manna {

/// Vertices of the efficient frontier of a two-agent problem, by
/// increasing first-agent utility. Throws NonPlottable for other sizes
/// and InputError beyond sixteen items (the frontier construction walks
/// all whole-item assignments).
std::vector<std::pair<Rat, Rat>> frontier_profiles(const Problem& p);

/// CSV with rows label,U1,U2: the frontier polyline, every competitive
/// division, the egalitarian point, and fair share. Exact rationals.
std::string report_csv(const Problem& p);

/// The same points rendered as a standalone SVG: frontier polyline,
/// circles for competitive profiles, a square for the egalitarian point
/// and a diamond for fair share.
std::string report_svg(const Problem& p);

}  // namespace manna
