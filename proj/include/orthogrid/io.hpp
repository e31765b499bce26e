#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "orthogrid/colouring.hpp"
#include "orthogrid/embed.hpp"
#include "orthogrid/geo.hpp"
#include "orthogrid/graph.hpp"

namespace orthogrid::io {

using nlohmann::json;

/// Shortest round-trip decimal form; "nan" for NaN.
std::string format_double(double value);

/// Edge list: vertex count on the first line, then one "u v" pair per line
/// with u < v, sorted. Blank lines and lines starting with '#' are skipped
/// on input.
void write_edge_list(std::ostream &out, const Graph &g);
Graph read_edge_list(std::istream &in);

/// {"N": palette, "c1": [...], "c2": [...]}, arrays indexed by vertex id.
json to_json(const ColouringPair &pair);
ColouringPair colouring_from_json(const json &j);

json to_json(const VerificationReport &report);

/// "# n=<n> r=<r> seed=<seed>" comment, an "x,y" header, then one point per
/// line with round-trip precision.
void write_points_csv(std::ostream &out, const PointSet &ps);
PointSet read_points_csv(std::istream &in);

json to_json(const CellPartition &cp);
json to_json(const ColouredRGG &rgg);

/// Points as circles filled by c1 (when a pair is given) over the edges.
void write_svg(std::ostream &out, const PointSet &ps, const Graph &g,
               const std::optional<ColouringPair> &pair, double size = 800.0);

}  // namespace orthogrid::io
