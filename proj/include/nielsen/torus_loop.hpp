#pragma once

#include "nielsen/coincidence.hpp"

#include <utility>
#include <vector>

namespace nielsen {

// PL path in the plane covering a simple loop on the torus. The first
// coordinate is strictly increasing from 0 to an integer n >= 1, and the
// vertical displacement over the whole path is an integer a, so the loop
// represents the homology class (n, a).
struct TorusLoop {
    std::vector<std::pair<Rational, Rational>> points;

    std::pair<long long, long long> homology_class() const;
    Rational value_at(const Rational& u) const;
};

TorusLoop make_straight_loop(long long n, long long a);

// Cycles of the branch-successor permutation; one cycle per path component
// of the graph. For phi_{n,a} there are GCD(n, |a|) components.
std::vector<std::vector<int>> graph_components(const MultiMap& f);

// One multimap per graph component. Errors when the graph is connected.
std::vector<MultiMap> graph_split(const MultiMap& f);

// Concatenates the branch lifts along the chain order into one PL path,
// starting from the branch with the smallest start value. The mod-1 image
// of the path equals the graph of the map. Errors when the graph is
// disconnected.
TorusLoop loop_from_multimap(const MultiMap& f);

// Inverse direction: reads the n lift pieces off a loop whose first
// coordinate passes each integer once. Validates the result.
MultiMap multimap_from_loop(const TorusLoop& l);

// Exact membership of a torus point in the mod-1 image of the loop.
bool loop_contains(const TorusLoop& l, const UnitPoint& x, const UnitPoint& y);

// Intersection count of the two mod-1 images. Straight loops through the
// origin use the determinant count; general loops go through the solver.
Count loop_intersection_count(const TorusLoop& l1, const TorusLoop& l2);

// Label of one intersection class: the canonical coset representative of
// Z^2 modulo the lattice spanned by the loop classes of the two graph
// components meeting at the point. For connected graphs the components are
// (0, 0) and the lattice is spanned by (n, a) and (m, b); disconnected
// maps are indexed component pair by component pair, and the total number
// of distinct labels is still |a m - b n|.
struct ClassIndex {
    int f_component = 0;
    int g_component = 0;
    Integer p, q;
    Integer det;  // determinant of the component-pair lattice

    friend bool operator==(const ClassIndex& x, const ClassIndex& y) {
        return x.f_component == y.f_component && x.g_component == y.g_component && x.p == y.p &&
               x.q == y.q && x.det == y.det;
    }
    friend bool operator<(const ClassIndex& x, const ClassIndex& y) {
        if (x.f_component != y.f_component) {
            return x.f_component < y.f_component;
        }
        if (x.g_component != y.g_component) {
            return x.g_component < y.g_component;
        }
        if (x.p != y.p) {
            return x.p < y.p;
        }
        return x.q < y.q;
    }
};

// Column-reduced (triangular) basis of the lattice spanned by (n, a) and
// (m, b): columns (d1, shear) and (0, d2) with d1 d2 = |n b - a m|.
struct IntersectionLattice {
    long long n = 1, a = 0, m = 1, b = 0;
    Integer d1, shear, d2;
    Integer det;  // n b - a m

    ClassIndex reduce(Integer p, Integer q) const;
    Integer coset_count() const { return d1 * d2; }
};

// Throws on the degenerate case a m = b n.
IntersectionLattice make_lattice(long long n, long long a, long long m, long long b);

// Lifts a graph intersection of the pair (f, g) to the loop covers of the
// two components through it and reduces the integer offset vector modulo
// their lattice. Requires a m != b n.
ClassIndex class_index(const GraphPoint& pt, const MultiMap& f, const MultiMap& g);

// Sign of det [[n, m], [a, b]] = n b - a m; the common local sign of every
// transversal intersection of the two straight loops.
int intersection_sign(long long n, long long a, long long m, long long b);

// Nielsen coincidence number of an (n, m)-valued pair with degrees a, b:
// |a m - b n|.
long long nielsen_number(long long n, long long a, long long m, long long b);

}  // namespace nielsen
