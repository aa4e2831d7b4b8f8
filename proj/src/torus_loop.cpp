#include "nielsen/torus_loop.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nielsen {

std::pair<long long, long long> TorusLoop::homology_class() const {
    if (points.size() < 2) {
        throw std::invalid_argument("loop needs at least two points");
    }
    Rational du = points.back().first - points.front().first;
    Rational dv = points.back().second - points.front().second;
    if (!is_integer(du) || !is_integer(dv) || du < 1) {
        throw std::invalid_argument("loop endpoints do not differ by an integer vector");
    }
    return {static_cast<long long>(numerator(du)), static_cast<long long>(numerator(dv))};
}

Rational TorusLoop::value_at(const Rational& u) const {
    auto it = std::upper_bound(points.begin(), points.end(), u,
                               [](const Rational& v, const auto& p) { return v < p.first; });
    if (it == points.begin()) {
        return points.front().second;
    }
    if (it == points.end()) {
        return points.back().second;
    }
    const auto& [u1, v1] = *it;
    const auto& [u0, v0] = *(it - 1);
    return v0 + (v1 - v0) * (u - u0) / (u1 - u0);
}

TorusLoop make_straight_loop(long long n, long long a) {
    if (n < 1) {
        throw std::invalid_argument("loop class needs n >= 1");
    }
    return TorusLoop{{{Rational(0), Rational(0)}, {Rational(n), Rational(a)}}};
}

std::vector<std::vector<int>> graph_components(const MultiMap& f) {
    const auto succ = chain_successors(f);
    std::vector<std::vector<int>> components;
    std::vector<bool> seen(succ.size(), false);
    for (int start = 0; start < f.valence(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<int> cycle;
        int j = start;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            cycle.push_back(j);
            j = succ[static_cast<std::size_t>(j)];
        }
        components.push_back(std::move(cycle));
    }
    return components;
}

std::vector<MultiMap> graph_split(const MultiMap& f) {
    auto components = graph_components(f);
    if (components.size() < 2) {
        throw std::invalid_argument("graph is connected, nothing to split");
    }
    std::vector<MultiMap> parts;
    parts.reserve(components.size());
    for (const auto& cycle : components) {
        std::vector<LiftBranch> branches;
        branches.reserve(cycle.size());
        for (int j : cycle) {
            branches.push_back(f.branch(j));
        }
        parts.emplace_back(std::move(branches));
    }
    return parts;
}

namespace {

void append_collinear_aware(std::vector<std::pair<Rational, Rational>>& pts,
                            const std::pair<Rational, Rational>& next) {
    if (!pts.empty() && pts.back() == next) {
        return;
    }
    if (pts.size() >= 2) {
        const auto& a = pts[pts.size() - 2];
        const auto& b = pts.back();
        Rational cross = (b.first - a.first) * (next.second - a.second) -
                         (b.second - a.second) * (next.first - a.first);
        if (cross == 0) {
            pts.back() = next;
            return;
        }
    }
    pts.push_back(next);
}

}  // namespace

TorusLoop loop_from_multimap(const MultiMap& f) {
    auto components = graph_components(f);
    if (components.size() != 1) {
        std::string detail = "graph has " + std::to_string(components.size()) + " components:";
        for (const auto& cycle : components) {
            detail += " {";
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                detail += (i ? "," : "") + std::to_string(cycle[i]);
            }
            detail += "}";
        }
        throw std::invalid_argument(detail + "; split the graph first");
    }

    TorusLoop loop;
    // Branch 0 has the smallest start value; for power maps it passes
    // through (0, 0).
    const auto succ = chain_successors(f);
    Rational carry = 0;
    int j = 0;
    const int n = f.valence();
    for (int step = 0; step < n; ++step) {
        const LiftBranch& br = f.branch(j);
        for (const auto& [t, y] : br.points) {
            append_collinear_aware(loop.points, {Rational(step) + t, y + carry});
        }
        int next = succ[static_cast<std::size_t>(j)];
        carry += br.end_value() - f.branch(next).start_value();
        j = next;
    }
    return loop;
}

MultiMap multimap_from_loop(const TorusLoop& l) {
    auto [n, a] = l.homology_class();
    if (l.points.front().first != 0) {
        throw std::invalid_argument("loop must start at first coordinate 0");
    }
    for (std::size_t i = 1; i < l.points.size(); ++i) {
        if (!(l.points[i - 1].first < l.points[i].first)) {
            throw std::invalid_argument("loop first coordinate must be strictly increasing");
        }
    }
    std::vector<LiftBranch> branches;
    for (long long q = 0; q < n; ++q) {
        LiftBranch br;
        br.points.emplace_back(Rational(0), l.value_at(Rational(q)));
        for (const auto& [u, v] : l.points) {
            if (Rational(q) < u && u < Rational(q + 1)) {
                br.points.emplace_back(u - q, v);
            }
        }
        br.points.emplace_back(Rational(1), l.value_at(Rational(q + 1)));
        branches.push_back(std::move(br));
    }
    MultiMap m(std::move(branches));
    require_valid(m);
    return m;
}

bool loop_contains(const TorusLoop& l, const UnitPoint& x, const UnitPoint& y) {
    auto [n, a] = l.homology_class();
    for (long long q = 0; q < n; ++q) {
        if (mod_one(l.value_at(x.value + q)) == y.value) {
            return true;
        }
    }
    return false;
}

namespace {

bool is_straight_from_origin(const TorusLoop& l) {
    if (l.points.front() != std::pair<Rational, Rational>{Rational(0), Rational(0)}) {
        return false;
    }
    const auto& end = l.points.back();
    for (const auto& [u, v] : l.points) {
        if (v * end.first != u * end.second) {
            return false;
        }
    }
    return true;
}

}  // namespace

Count loop_intersection_count(const TorusLoop& l1, const TorusLoop& l2) {
    auto [n, a] = l1.homology_class();
    auto [m, b] = l2.homology_class();
    if (is_straight_from_origin(l1) && is_straight_from_origin(l2)) {
        long long k = std::abs(a * m - b * n);
        return k == 0 ? Count::whole() : Count::finite(k);
    }
    return graph_intersections(multimap_from_loop(l1), multimap_from_loop(l2)).count();
}

ClassIndex IntersectionLattice::reduce(Integer p, Integer q) const {
    Integer r = p % d1;
    if (r < 0) {
        r += d1;
    }
    Integer steps = (p - r) / d1;
    q -= steps * shear;
    q %= d2;
    if (q < 0) {
        q += d2;
    }
    ClassIndex idx;
    idx.p = r;
    idx.q = q;
    idx.det = det;
    return idx;
}

IntersectionLattice make_lattice(long long n, long long a, long long m, long long b) {
    IntersectionLattice lat;
    lat.n = n;
    lat.a = a;
    lat.m = m;
    lat.b = b;
    lat.det = Integer(n) * b - Integer(a) * m;
    if (lat.det == 0) {
        throw std::invalid_argument("degenerate lattice: a m = b n");
    }
    // Column reduction on the first row: x n + y m = GCD(n, m).
    long long x = 1, y = 0, x1 = 0, y1 = 1, r0 = n, r1 = m;
    while (r1 != 0) {
        long long quot = r0 / r1;
        std::tie(r0, r1) = std::pair(r1, r0 - quot * r1);
        std::tie(x, x1) = std::pair(x1, x - quot * x1);
        std::tie(y, y1) = std::pair(y1, y - quot * y1);
    }
    lat.d1 = r0;  // GCD(n, m) > 0
    lat.shear = Integer(x) * a + Integer(y) * b;
    lat.d2 = abs(lat.det) / lat.d1;
    return lat;
}

namespace {

// The component of the graph passing through (x, y), as its own multimap.
std::pair<int, MultiMap> component_through(const MultiMap& m, const UnitPoint& x,
                                           const UnitPoint& y) {
    auto components = graph_components(m);
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (int j : components[c]) {
            if (UnitPoint(m.branch(j).value_at(x.value)) == y) {
                std::vector<LiftBranch> branches;
                for (int i : components[c]) {
                    branches.push_back(m.branch(i));
                }
                return {static_cast<int>(c), MultiMap(std::move(branches))};
            }
        }
    }
    throw std::invalid_argument("point does not lie on the graph");
}

}  // namespace

ClassIndex class_index(const GraphPoint& pt, const MultiMap& f, const MultiMap& g) {
    auto [fc, f_part] = component_through(f, pt.x, pt.y);
    auto [gc, g_part] = component_through(g, pt.x, pt.y);
    TorusLoop lf = loop_from_multimap(f_part);
    TorusLoop lg = loop_from_multimap(g_part);
    auto [n, a] = lf.homology_class();
    auto [m, b] = lg.homology_class();
    IntersectionLattice lat = make_lattice(n, a, m, b);

    auto locate = [](const TorusLoop& l, long long span, const GraphPoint& point) {
        for (long long q = 0; q < span; ++q) {
            Rational u = point.x.value + q;
            Rational v = l.value_at(u);
            if (mod_one(v) == point.y.value) {
                return std::pair<Rational, Rational>{u, v};
            }
        }
        throw std::invalid_argument("point does not lie on the loop image");
    };
    auto [uf, vf] = locate(lf, n, pt);
    auto [ug, vg] = locate(lg, m, pt);
    Rational dp = uf - ug;
    Rational dq = vf - vg;
    if (!is_integer(dp) || !is_integer(dq)) {
        throw std::invalid_argument("loop lifts do not differ by an integer vector");
    }
    ClassIndex idx = lat.reduce(numerator(dp), numerator(dq));
    idx.f_component = fc;
    idx.g_component = gc;
    return idx;
}

int intersection_sign(long long n, long long a, long long m, long long b) {
    long long det = n * b - a * m;
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

long long nielsen_number(long long n, long long a, long long m, long long b) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("valences must be positive");
    }
    return std::abs(a * m - b * n);
}

}  // namespace nielsen
