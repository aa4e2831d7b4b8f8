#include "nielsen/multimap.hpp"

#include <algorithm>
#include <stdexcept>

namespace nielsen {

Rational LiftBranch::value_at(const Rational& t) const {
    auto it = std::upper_bound(points.begin(), points.end(), t,
                               [](const Rational& v, const auto& p) { return v < p.first; });
    if (it == points.begin()) {
        return points.front().second;
    }
    if (it == points.end()) {
        return points.back().second;
    }
    const auto& [t1, y1] = *it;
    const auto& [t0, y0] = *(it - 1);
    return y0 + (y1 - y0) * (t - t0) / (t1 - t0);
}

LiftBranch LiftBranch::shifted(const Rational& c) const {
    LiftBranch out = *this;
    for (auto& p : out.points) {
        p.second += c;
    }
    return out;
}

std::vector<Rational> LiftBranch::knots() const {
    std::vector<Rational> ts;
    ts.reserve(points.size());
    for (const auto& p : points) {
        ts.push_back(p.first);
    }
    return ts;
}

LiftBranch make_segment(const Rational& y0, const Rational& y1) {
    return LiftBranch{{{Rational(0), y0}, {Rational(1), y1}}};
}

std::vector<Rational> merged_knots(const LiftBranch& a, const LiftBranch& b) {
    std::vector<Rational> ts = a.knots();
    auto tb = b.knots();
    ts.insert(ts.end(), tb.begin(), tb.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

MultiMap::MultiMap(std::vector<LiftBranch> branches) : branches_(std::move(branches)) {
    for (auto& br : branches_) {
        if (br.points.empty()) {
            continue;  // reported by validate()
        }
        Integer shift = floor_to_integer(br.start_value());
        if (shift != 0) {
            br = br.shifted(Rational(-shift));
        }
    }
    std::stable_sort(branches_.begin(), branches_.end(), [](const LiftBranch& x, const LiftBranch& y) {
        if (x.points.empty() || y.points.empty()) {
            return false;
        }
        return x.start_value() < y.start_value();
    });
}

MultiMap make_power_map(int n, int d) {
    if (n < 1) {
        throw std::invalid_argument("power map valence must be positive, got " + std::to_string(n));
    }
    std::vector<LiftBranch> branches;
    branches.reserve(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        branches.push_back(make_segment(Rational(u, n), Rational(d + u, n)));
    }
    return MultiMap(std::move(branches));
}

namespace {

std::string multiset_to_string(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_rational(values[i]);
    }
    return out + "}";
}

}  // namespace

ValidationReport validate(const MultiMap& m) {
    if (m.valence() == 0) {
        return {ValidationReport::Kind::no_branches, "map has no branches"};
    }
    for (int j = 0; j < m.valence(); ++j) {
        const auto& pts = m.branch(j).points;
        if (pts.size() < 2 || pts.front().first != 0 || pts.back().first != 1) {
            return {ValidationReport::Kind::bad_breakpoints,
                    "branch " + std::to_string(j) + " must run from t=0 to t=1"};
        }
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (!(pts[i - 1].first < pts[i].first)) {
                return {ValidationReport::Kind::bad_breakpoints,
                        "branch " + std::to_string(j) + " breakpoints not strictly increasing"};
            }
        }
    }
    for (int j = 0; j < m.valence(); ++j) {
        const Rational& s = m.branch(j).start_value();
        if (s < 0 || s >= 1) {
            return {ValidationReport::Kind::start_out_of_range,
                    "branch " + std::to_string(j) + " starts at " + format_rational(s)};
        }
    }
    // Pairwise disjointness: on each segment of the merged partition the PL
    // difference attains an integer iff an endpoint does or the endpoint
    // values straddle one.
    for (int i = 0; i < m.valence(); ++i) {
        for (int j = i + 1; j < m.valence(); ++j) {
            auto ts = merged_knots(m.branch(i), m.branch(j));
            for (std::size_t s = 0; s + 1 < ts.size(); ++s) {
                Rational d0 = m.branch(i).value_at(ts[s]) - m.branch(j).value_at(ts[s]);
                Rational d1 = m.branch(i).value_at(ts[s + 1]) - m.branch(j).value_at(ts[s + 1]);
                Integer k_lo = ceil_to_integer(std::min(d0, d1));
                Integer k_hi = floor_to_integer(std::max(d0, d1));
                if (k_lo > k_hi) {
                    continue;
                }
                Rational witness = ts[s];
                if (d0 != d1) {
                    witness = ts[s] + (Rational(k_lo) - d0) * (ts[s + 1] - ts[s]) / (d1 - d0);
                }
                return {ValidationReport::Kind::branches_cross,
                        "branches " + std::to_string(i) + " and " + std::to_string(j) +
                            " meet mod 1 at t = " + format_rational(witness)};
            }
        }
    }
    for (int j = 1; j < m.valence(); ++j) {
        if (!(m.branch(j - 1).start_value() < m.branch(j).start_value())) {
            return {ValidationReport::Kind::starts_not_ascending,
                    "start values not strictly ascending at branch " + std::to_string(j)};
        }
    }
    std::vector<Rational> starts, ends;
    for (int j = 0; j < m.valence(); ++j) {
        starts.push_back(m.branch(j).start_value());
        ends.push_back(mod_one(m.branch(j).end_value()));
    }
    std::vector<Rational> se = starts, ee = ends;
    std::sort(se.begin(), se.end());
    std::sort(ee.begin(), ee.end());
    if (se != ee) {
        return {ValidationReport::Kind::closure_mismatch,
                "endpoint multiset " + multiset_to_string(ends) + " differs from start multiset " +
                    multiset_to_string(starts)};
    }
    return {};
}

void require_valid(const MultiMap& m) {
    ValidationReport report = validate(m);
    if (!report.ok()) {
        throw std::invalid_argument("invalid multimap: " + report.detail);
    }
}

std::vector<UnitPoint> evaluate(const MultiMap& m, const UnitPoint& x) {
    require_valid(m);
    std::vector<UnitPoint> values;
    values.reserve(static_cast<std::size_t>(m.valence()));
    for (const auto& br : m.branches()) {
        values.push_back(UnitPoint(br.value_at(x.value)));
    }
    std::sort(values.begin(), values.end());
    return values;
}

long long degree(const MultiMap& m) {
    if (m.valence() == 0) {
        throw std::invalid_argument("invalid multimap: map has no branches");
    }
    const Rational end = m.branch(0).end_value();
    for (int j = 0; j < m.valence(); ++j) {
        Rational diff = end - m.branch(j).start_value();
        if (is_integer(diff)) {
            Integer v = numerator(diff);
            return static_cast<long long>(v) * m.valence() + j;
        }
    }
    throw std::invalid_argument("invalid multimap: closure violated, no start matches lift_0(1)");
}

MultiMap translate_vertical(const MultiMap& m, const Rational& c) {
    std::vector<LiftBranch> branches;
    branches.reserve(m.branches().size());
    for (const auto& br : m.branches()) {
        branches.push_back(br.shifted(c));
    }
    return MultiMap(std::move(branches));
}

namespace {

bool branches_equal(const LiftBranch& a, const LiftBranch& b) {
    for (const auto& t : merged_knots(a, b)) {
        if (a.value_at(t) != b.value_at(t)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool maps_equal(const MultiMap& a, const MultiMap& b) {
    if (a.valence() != b.valence()) {
        return false;
    }
    // Canonical lifts are unique, so graph equality reduces to branchwise
    // function equality in canonical order.
    for (int j = 0; j < a.valence(); ++j) {
        if (!branches_equal(a.branch(j), b.branch(j))) {
            return false;
        }
    }
    return true;
}

bool homotopy_equivalent(const MultiMap& a, const MultiMap& b) {
    return a.valence() == b.valence() && degree(a) == degree(b);
}

bool block_invariance_check(const MultiMap& m, int w) {
    if (w < 1 || m.valence() % w != 0) {
        throw std::invalid_argument("block count must divide the valence");
    }
    for (int t = 1; t < w; ++t) {
        if (!maps_equal(translate_vertical(m, Rational(t, w)), m)) {
            return false;
        }
    }
    return true;
}

namespace {

bool is_affine(const LiftBranch& br) {
    const auto& pts = br.points;
    const Rational slope =
        (pts.back().second - pts.front().second) / (pts.back().first - pts.front().first);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (pts[i].second != pts.front().second + slope * pts[i].first) {
            return false;
        }
    }
    return true;
}

}  // namespace

BottomBlock restrict_bottom_block(const MultiMap& power_map, int w) {
    const int n = power_map.valence();
    if (w < 1 || n % w != 0) {
        throw std::invalid_argument("block count must divide the valence");
    }
    require_valid(power_map);
    for (int j = 0; j < n; ++j) {
        if (!is_affine(power_map.branch(j)) || power_map.branch(j).start_value() != Rational(j, n)) {
            throw std::invalid_argument("bottom-block restriction is defined for power maps only");
        }
    }
    BottomBlock block;
    block.block_count = w;
    const Rational height(1, w);
    for (const auto& br : power_map.branches()) {
        if (br.start_value() < height) {
            block.branches.push_back(br);
        }
    }
    return block;
}

std::vector<int> chain_successors(const MultiMap& m) {
    require_valid(m);
    std::vector<int> succ(static_cast<std::size_t>(m.valence()), -1);
    for (int j = 0; j < m.valence(); ++j) {
        Rational end = mod_one(m.branch(j).end_value());
        for (int i = 0; i < m.valence(); ++i) {
            if (m.branch(i).start_value() == end) {
                succ[static_cast<std::size_t>(j)] = i;
                break;
            }
        }
    }
    return succ;
}

}  // namespace nielsen
