#pragma once

#include "nielsen/coincidence.hpp"
#include "nielsen/homotopy.hpp"
#include "nielsen/torus_loop.hpp"

#include <string>
#include <vector>

namespace nielsen {

// { "n": <int>, "branches": [ { "points": [["t", "y"], ...] }, ... ] }
// with rationals as reduced "p/q" (or plain "p") strings.
std::string multimap_to_json(const MultiMap& m, int indent = 2);

// Throws std::invalid_argument on malformed documents; invalid multimaps
// are rejected with the validation report.
MultiMap multimap_from_json(const std::string& text);

// { "points": [...], "intervals": [...], "continuum": bool,
//   "counts": { "domain": ..., "graph": ... } }; counts are integers or
// the string "continuum". Domain mode reports x values and x intervals.
std::string coincidence_to_json(const GraphIntersections& gi, bool domain_mode, int indent = 2);

// { "end": [n, a], "points": [["p/q", "p/q"], ...] }
std::string loop_to_json(const TorusLoop& l, int indent = 2);

// { "rep": [p, q], "det": D }
std::string class_index_to_json(const ClassIndex& c, int indent = 2);

// Header "t,domain_count,graph_count" plus one row per sampled time.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace nielsen
