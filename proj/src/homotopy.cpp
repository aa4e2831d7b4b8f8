#include "nielsen/homotopy.hpp"

#include "nielsen/torus_loop.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace nielsen {

namespace {

LiftBranch interpolate(const LiftBranch& a, const LiftBranch& b, const Rational& t) {
    LiftBranch out;
    for (const auto& s : merged_knots(a, b)) {
        out.points.emplace_back(s, (1 - t) * a.value_at(s) + t * b.value_at(s));
    }
    return out;
}

// Chain successor and winding of each lift in a list whose starts are
// distinct mod 1: lift j ends on the start of lift succ(j) plus wind(j).
struct ChainShape {
    std::vector<int> succ;
    std::vector<Integer> wind;
    bool ok = true;
};

ChainShape chain_shape(const std::vector<LiftBranch>& lifts) {
    ChainShape shape;
    shape.succ.assign(lifts.size(), -1);
    shape.wind.assign(lifts.size(), Integer(0));
    for (std::size_t j = 0; j < lifts.size(); ++j) {
        for (std::size_t i = 0; i < lifts.size(); ++i) {
            Rational diff = lifts[j].end_value() - lifts[i].start_value();
            if (is_integer(diff)) {
                shape.succ[j] = static_cast<int>(i);
                shape.wind[j] = numerator(diff);
                break;
            }
        }
        if (shape.succ[j] < 0) {
            shape.ok = false;
        }
    }
    return shape;
}

// Exact validity of every interpolation slice: the difference of two
// matched lift pairs is affine in t and PL in s, so its range over the
// whole square is spanned by the values at (knot, 0) and (knot, 1). The
// interpolation stays a valid multimap iff no pair range hits an integer.
std::optional<Rational> crossing_witness(const std::vector<LiftBranch>& from,
                                         const std::vector<LiftBranch>& to) {
    for (std::size_t i = 0; i < from.size(); ++i) {
        for (std::size_t j = i + 1; j < from.size(); ++j) {
            std::vector<Rational> ts = merged_knots(from[i], from[j]);
            for (const auto& t : merged_knots(to[i], to[j])) {
                ts.push_back(t);
            }
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            for (const auto& s : ts) {
                Rational d0 = from[i].value_at(s) - from[j].value_at(s);
                Rational d1 = to[i].value_at(s) - to[j].value_at(s);
                Integer k_lo = ceil_to_integer(std::min(d0, d1));
                Integer k_hi = floor_to_integer(std::max(d0, d1));
                if (k_lo > k_hi) {
                    continue;
                }
                if (d0 == d1) {
                    return Rational(0);
                }
                return (Rational(k_lo) - d0) / (d1 - d0);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

LinearHomotopy::LinearHomotopy(MultiMap source, MultiMap target,
                               std::vector<LiftBranch> matched_target_lifts)
    : source_(std::move(source)), target_(std::move(target)), matched_(std::move(matched_target_lifts)) {}

MultiMap LinearHomotopy::slice_at(const Rational& t) const {
    if (t < 0 || t > 1) {
        throw std::invalid_argument("homotopy time must lie in [0, 1], got " + format_rational(t));
    }
    std::vector<LiftBranch> lifts;
    lifts.reserve(matched_.size());
    for (std::size_t i = 0; i < matched_.size(); ++i) {
        lifts.push_back(interpolate(source_.branch(static_cast<int>(i)), matched_[i], t));
    }
    MultiMap slice(std::move(lifts));
    require_valid(slice);
    return slice;
}

LinearHomotopy make_linear_homotopy(const MultiMap& from, const MultiMap& to) {
    require_valid(from);
    require_valid(to);
    if (from.valence() != to.valence()) {
        throw std::invalid_argument("maps are not homotopic: valences " +
                                    std::to_string(from.valence()) + " and " +
                                    std::to_string(to.valence()) + " differ");
    }
    if (degree(from) != degree(to)) {
        throw std::invalid_argument("maps are not homotopic: degrees " +
                                    std::to_string(degree(from)) + " and " +
                                    std::to_string(degree(to)) + " differ");
    }
    const int n = from.valence();
    const ChainShape source_shape = chain_shape(from.branches());

    std::optional<Rational> witness;
    for (int r = 0; r < n; ++r) {
        std::vector<LiftBranch> matched;
        matched.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const int idx = (i + r) % n;
            LiftBranch lift = to.branch(idx);
            if (i + r >= n) {
                lift = lift.shifted(Rational(1));
            }
            matched.push_back(std::move(lift));
        }
        ChainShape matched_shape = chain_shape(matched);
        if (!matched_shape.ok || matched_shape.succ != source_shape.succ ||
            matched_shape.wind != source_shape.wind) {
            continue;  // ends would tear at intermediate times
        }
        auto cross = crossing_witness(from.branches(), matched);
        if (!cross) {
            return LinearHomotopy(from, to, std::move(matched));
        }
        if (!witness) {
            witness = cross;
        }
    }
    std::string message = "no branch matching keeps every slice valid";
    if (witness) {
        message += "; branches would cross near t = " + format_rational(*witness);
    }
    throw std::invalid_argument(message);
}

std::vector<SweepRow> sweep_counts(const LinearHomotopy& hf, const LinearHomotopy& hg,
                                   const std::vector<Rational>& times) {
    const long long bound =
        nielsen_number(hf.source().valence(), degree(hf.source()), hg.source().valence(),
                       degree(hg.source()));
    std::vector<SweepRow> rows;
    rows.reserve(times.size());
    for (const auto& t : times) {
        GraphIntersections gi = graph_intersections(hf.slice_at(t), hg.slice_at(t));
        SweepRow row{t, project_to_domain(gi).count(), gi.count()};
        if (!row.graph_count.at_least(bound)) {
            throw std::logic_error("slice at t = " + format_rational(t) + " has " +
                                   format_count(row.graph_count) +
                                   " graph intersections, below the Nielsen number " +
                                   std::to_string(bound));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

LiftBranch branch_from(std::initializer_list<std::pair<Rational, Rational>> pts) {
    LiftBranch br;
    br.points.assign(pts.begin(), pts.end());
    return br;
}

}  // namespace

CertifiedPair counterexample_pair() {
    // Three branches of degree -1; the middle branch of the straight power
    // map is kept, the outer two are re-routed so the intersections with
    // the two power-map branches over x = 2/5 and x = 4/5 line up.
    MultiMap g({
        branch_from({{Rational(0), Rational(0)},
                     {Rational(4, 5), Rational(-1, 10)},
                     {Rational(1), Rational(-1, 3)}}),
        branch_from({{Rational(0), Rational(1, 3)}, {Rational(1), Rational(0)}}),
        branch_from({{Rational(0), Rational(2, 3)},
                     {Rational(2, 5), Rational(7, 10)},
                     {Rational(4, 5), Rational(2, 5)},
                     {Rational(1), Rational(1, 3)}}),
    });
    return CertifiedPair{make_power_map(2, 1), std::move(g), 3, 5};
}

CertifiedPair second_counterexample_pair() {
    MultiMap g({
        branch_from({{Rational(0), Rational(0)}, {Rational(1), Rational(-1, 3)}}),
        branch_from({{Rational(0), Rational(1, 3)}, {Rational(1), Rational(0)}}),
        branch_from({{Rational(0), Rational(2, 3)},
                     {Rational(2, 5), Rational(7, 10)},
                     {Rational(4, 5), Rational(2, 5)},
                     {Rational(1), Rational(1, 3)}}),
    });
    return CertifiedPair{make_power_map(2, 1), std::move(g), 4, 5};
}

}  // namespace nielsen
