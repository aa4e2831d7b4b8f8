#pragma once

#include "nielsen/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nielsen {

// Continuous piecewise-linear lift of one circle-valued branch over [0, 1].
struct LiftBranch {
    // (t, y) breakpoints with t strictly increasing from 0 to 1.
    std::vector<std::pair<Rational, Rational>> points;

    const Rational& start_value() const { return points.front().second; }
    const Rational& end_value() const { return points.back().second; }

    Rational value_at(const Rational& t) const;
    LiftBranch shifted(const Rational& c) const;
    std::vector<Rational> knots() const;
};

// Straight two-point lift from (0, y0) to (1, y1).
LiftBranch make_segment(const Rational& y0, const Rational& y1);

// Union of the knot sets of two branches, sorted, from 0 to 1.
std::vector<Rational> merged_knots(const LiftBranch& a, const LiftBranch& b);

struct ValidationReport {
    enum class Kind {
        ok,
        no_branches,
        bad_breakpoints,
        start_out_of_range,
        starts_not_ascending,
        branches_cross,
        closure_mismatch,
    };
    Kind kind = Kind::ok;
    std::string detail;

    bool ok() const { return kind == Kind::ok; }
};

// An n-valued circle self-map stored as n pairwise-disjoint PL lifts.
// Construction canonicalizes: every start value is reduced into [0, 1)
// and branches are sorted by start value.
class MultiMap {
public:
    MultiMap() = default;
    explicit MultiMap(std::vector<LiftBranch> branches);

    int valence() const { return static_cast<int>(branches_.size()); }
    const std::vector<LiftBranch>& branches() const { return branches_; }
    const LiftBranch& branch(int j) const { return branches_[static_cast<std::size_t>(j)]; }

private:
    std::vector<LiftBranch> branches_;
};

// The n-valued power map of degree d: n parallel lifts (d/n) t + u/n.
MultiMap make_power_map(int n, int d);

// Reports the first violated structural invariant (ascending distinct
// starts, exact pairwise disjointness with a witness t, closure of the
// endpoint multisets).
ValidationReport validate(const MultiMap& m);

// Throws std::invalid_argument carrying the validation report.
void require_valid(const MultiMap& m);

// The n distinct values f(x), sorted.
std::vector<UnitPoint> evaluate(const MultiMap& m, const UnitPoint& x);

// Degree of the map: with branches sorted by start value, locate the
// unique J with lift_0(1) - t_J integral, put v = lift_0(1) - t_J, and
// return n v + J. Throws if no such J exists (broken closure).
long long degree(const MultiMap& m);

// Every lift shifted by +c, then re-canonicalized.
MultiMap translate_vertical(const MultiMap& m, const Rational& c);

// Equality as set-valued maps (equality of graphs in the torus).
bool maps_equal(const MultiMap& a, const MultiMap& b);

// Same valence and same degree; circle multimaps are homotopic exactly
// under this condition.
bool homotopy_equivalent(const MultiMap& a, const MultiMap& b);

// True iff the graph is invariant under every vertical shift by t/w,
// t = 0..w-1. Requires w | n.
bool block_invariance_check(const MultiMap& m, int w);

// Bottom vertical block of a power map: the n/w branches whose start
// values lie in [0, 1/w); their values tile the block of height 1/w.
struct BottomBlock {
    int block_count = 1;  // w
    std::vector<LiftBranch> branches;
};
BottomBlock restrict_bottom_block(const MultiMap& power_map, int w);

// successor[j] = the branch whose start value equals branch j's end value
// mod 1. Requires a valid map.
std::vector<int> chain_successors(const MultiMap& m);

}  // namespace nielsen
