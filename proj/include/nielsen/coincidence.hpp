#pragma once

#include "nielsen/multimap.hpp"

#include <utility>
#include <vector>

namespace nielsen {

// A finite count or a continuum of solutions.
struct Count {
    bool continuum = false;
    long long value = 0;

    static Count finite(long long v) { return {false, v}; }
    static Count whole() { return {true, 0}; }

    friend bool operator==(const Count& a, const Count& b) {
        return a.continuum == b.continuum && (a.continuum || a.value == b.value);
    }
    friend bool operator!=(const Count& a, const Count& b) { return !(a == b); }

    bool at_least(long long bound) const { return continuum || value >= bound; }
};

std::string format_count(const Count& c);

// Isolated intersection of the two graphs in the torus:
// y = f_lift(x) mod 1 = g_lift(x) mod 1 and f_lift(x) = g_lift(x) + offset.
struct GraphPoint {
    UnitPoint x;
    UnitPoint y;
    int f_branch = 0;
    int g_branch = 0;
    Integer offset;
};

// Maximal parameter range where a branch pair satisfies
// f_lift(t) = g_lift(t) + offset identically.
struct GraphArc {
    Rational t_lo, t_hi;
    int f_branch = 0;
    int g_branch = 0;
    Integer offset;
};

struct GraphIntersections {
    std::vector<GraphPoint> points;  // sorted by (x, y)
    std::vector<GraphArc> arcs;

    Count count() const {
        return arcs.empty() ? Count::finite(static_cast<long long>(points.size())) : Count::whole();
    }
};

struct DomainCoincidences {
    std::vector<UnitPoint> points;                       // sorted, outside all arcs
    std::vector<std::pair<Rational, Rational>> arcs;     // closed x-intervals, merged

    Count count() const {
        return arcs.empty() ? Count::finite(static_cast<long long>(points.size())) : Count::whole();
    }
};

enum class Execution {
    serial,     // reference implementation
    parallel,   // OpenMP over branch pairs
    automatic,  // parallel for large enough workloads
};

// All solutions of f_lift_i(t) = g_lift_j(t) + k over every branch pair,
// every segment of the merged partition and every integer k reachable on
// that segment; deduplicated across segment ends and the wrap 0 ~ 1.
GraphIntersections graph_intersections(const MultiMap& f, const MultiMap& g,
                                       Execution exec = Execution::automatic);

DomainCoincidences project_to_domain(const GraphIntersections& gi);

DomainCoincidences domain_coincidences(const MultiMap& f, const MultiMap& g,
                                       Execution exec = Execution::automatic);

// Closed-form counts for the power pair (phi_{n,a}, phi_{m,b}).
struct CountPrediction {
    long long n = 1, a = 0, m = 1, b = 0;
    long long k = 0;  // |a m - b n|
    long long w = 1;  // GCD(n, m)
    Count domain_count;
    Count graph_count;
    Count bk_value;   // |a m - b n| / GCD(n, m)
};
CountPrediction predict_counts(long long n, long long a, long long m, long long b);

// The per-step domain coincidence set of the power pair when am != bn:
// { j w / k : j = 0 .. k/w - 1 } with k = |am - bn|, w = GCD(n, m).
std::vector<UnitPoint> predicted_domain_set(long long n, long long a, long long m, long long b);

// Constructive solution of g == n d - m c (mod n m) with 0 <= c < n,
// 0 <= d < m; requires GCD(n, m) = 1.
std::pair<long long, long long> bezout_rep(long long g, long long n, long long m);

// For am = bn: the power pair and its vertical 1/(2nm)-translate, which has
// an empty coincidence set.
std::pair<MultiMap, MultiMap> epsilon_separation(long long n, long long a, long long m, long long b);

// Domain coincidences of two bottom blocks, solved in the 1/w quotient.
DomainCoincidences block_domain_coincidences(const BottomBlock& fb, const BottomBlock& gb);

// Bottom-block domain coincidences of the power pair; requires am != bn and
// w = GCD(n, m) > 1.
DomainCoincidences bottom_block_coincidences(long long n, long long a, long long m, long long b);

}  // namespace nielsen
