#include "nielsen/coincidence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nielsen {

std::string format_count(const Count& c) {
    return c.continuum ? "continuum" : std::to_string(c.value);
}

namespace {

struct PairSolutions {
    std::vector<std::pair<Rational, Integer>> roots;            // (t, k)
    std::vector<std::tuple<Rational, Rational, Integer>> spans; // (lo, hi, k)
};

// All t in [0,1] with fb(t) - gb(t) = k * modulus for some integer k.
// Linear per segment of the merged partition, so the reachable k range on a
// segment is read off the endpoint values.
PairSolutions solve_pair(const LiftBranch& fb, const LiftBranch& gb, const Rational& modulus) {
    PairSolutions out;
    const auto ts = merged_knots(fb, gb);
    for (std::size_t s = 0; s + 1 < ts.size(); ++s) {
        const Rational& t0 = ts[s];
        const Rational& t1 = ts[s + 1];
        Rational h0 = fb.value_at(t0) - gb.value_at(t0);
        Rational h1 = fb.value_at(t1) - gb.value_at(t1);
        Integer k_lo = ceil_to_integer(std::min(h0, h1) / modulus);
        Integer k_hi = floor_to_integer(std::max(h0, h1) / modulus);
        for (Integer k = k_lo; k <= k_hi; ++k) {
            if (h0 == h1) {
                out.spans.emplace_back(t0, t1, k);
            } else {
                Rational target = Rational(k) * modulus;
                Rational t = t0 + (target - h0) * (t1 - t0) / (h1 - h0);
                out.roots.emplace_back(t, k);
            }
        }
    }
    // Merge spans that continue across a shared knot.
    std::vector<std::tuple<Rational, Rational, Integer>> merged;
    for (auto& sp : out.spans) {
        if (!merged.empty() && std::get<2>(merged.back()) == std::get<2>(sp) &&
            std::get<1>(merged.back()) == std::get<0>(sp)) {
            std::get<1>(merged.back()) = std::get<1>(sp);
        } else {
            merged.push_back(sp);
        }
    }
    out.spans = std::move(merged);
    // Roots repeated at shared knots, or lying on a span, are duplicates.
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    out.roots.end());
    std::erase_if(out.roots, [&](const auto& root) {
        for (const auto& sp : out.spans) {
            if (std::get<0>(sp) <= root.first && root.first <= std::get<1>(sp)) {
                return true;
            }
        }
        return false;
    });
    return out;
}

int branch_through(const MultiMap& m, const Rational& x, const Rational& y) {
    for (int j = 0; j < m.valence(); ++j) {
        if (mod_one(m.branch(j).value_at(x)) == y) {
            return j;
        }
    }
    return -1;
}

bool point_on_arc(const MultiMap& f, const GraphArc& arc, const Rational& x, const Rational& y) {
    const LiftBranch& fb = f.branch(arc.f_branch);
    if (arc.t_lo <= x && x <= arc.t_hi && mod_one(fb.value_at(x)) == y) {
        return true;
    }
    if (x == 0 && arc.t_hi == 1 && mod_one(fb.value_at(Rational(1))) == y) {
        return true;
    }
    return false;
}

}  // namespace

GraphIntersections graph_intersections(const MultiMap& f, const MultiMap& g, Execution exec) {
    require_valid(f);
    require_valid(g);
    const int n = f.valence();
    const int m = g.valence();
    const long long pair_count = static_cast<long long>(n) * m;

    bool parallel = exec == Execution::parallel;
#ifdef _OPENMP
    if (exec == Execution::automatic) {
        parallel = pair_count >= 16 && omp_get_max_threads() > 1;
    }
#endif

    std::vector<PairSolutions> per_pair(static_cast<std::size_t>(pair_count));
    const Rational modulus(1);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long idx = 0; idx < pair_count; ++idx) {
            per_pair[static_cast<std::size_t>(idx)] =
                solve_pair(f.branch(static_cast<int>(idx / m)), g.branch(static_cast<int>(idx % m)), modulus);
        }
    } else {
        for (long long idx = 0; idx < pair_count; ++idx) {
            per_pair[static_cast<std::size_t>(idx)] =
                solve_pair(f.branch(static_cast<int>(idx / m)), g.branch(static_cast<int>(idx % m)), modulus);
        }
    }

    GraphIntersections out;
    for (long long idx = 0; idx < pair_count; ++idx) {
        const int i = static_cast<int>(idx / m);
        const int j = static_cast<int>(idx % m);
        const auto& sol = per_pair[static_cast<std::size_t>(idx)];
        for (const auto& [lo, hi, k] : sol.spans) {
            out.arcs.push_back(GraphArc{lo, hi, i, j, k});
        }
        for (const auto& [t, k] : sol.roots) {
            Rational x = t == 1 ? Rational(0) : t;
            Rational y = mod_one(f.branch(i).value_at(t));
            // Re-anchor roots found at t = 1 to the branches over x = 0.
            int fi = t == 1 ? branch_through(f, x, y) : i;
            int gj = t == 1 ? branch_through(g, x, y) : j;
            if (fi < 0 || gj < 0) {
                throw std::logic_error("wrapped root does not land on a branch");
            }
            Integer offset = numerator(f.branch(fi).value_at(x) - g.branch(gj).value_at(x));
            out.points.push_back(GraphPoint{UnitPoint(x), UnitPoint(y), fi, gj, offset});
        }
    }

    std::erase_if(out.points, [&](const GraphPoint& pt) {
        for (const auto& arc : out.arcs) {
            if (point_on_arc(f, arc, pt.x.value, pt.y.value)) {
                return true;
            }
        }
        return false;
    });
    std::sort(out.points.begin(), out.points.end(), [](const GraphPoint& a, const GraphPoint& b) {
        if (a.x != b.x) {
            return a.x < b.x;
        }
        return a.y < b.y;
    });
    out.points.erase(std::unique(out.points.begin(), out.points.end(),
                                 [](const GraphPoint& a, const GraphPoint& b) {
                                     return a.x == b.x && a.y == b.y;
                                 }),
                     out.points.end());
    std::sort(out.arcs.begin(), out.arcs.end(), [](const GraphArc& a, const GraphArc& b) {
        if (a.t_lo != b.t_lo) {
            return a.t_lo < b.t_lo;
        }
        if (a.t_hi != b.t_hi) {
            return a.t_hi < b.t_hi;
        }
        if (a.f_branch != b.f_branch) {
            return a.f_branch < b.f_branch;
        }
        return a.g_branch < b.g_branch;
    });
    return out;
}

namespace {

std::vector<std::pair<Rational, Rational>> merge_intervals(
    std::vector<std::pair<Rational, Rational>> intervals) {
    std::sort(intervals.begin(), intervals.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& iv : intervals) {
        if (!merged.empty() && iv.first <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, iv.second);
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

bool covered(const std::vector<std::pair<Rational, Rational>>& intervals, const Rational& x) {
    for (const auto& [lo, hi] : intervals) {
        if (lo <= x && x <= hi) {
            return true;
        }
        if (x == 0 && hi == 1) {
            return true;  // wrap 0 ~ 1
        }
    }
    return false;
}

}  // namespace

DomainCoincidences project_to_domain(const GraphIntersections& gi) {
    DomainCoincidences out;
    std::vector<std::pair<Rational, Rational>> intervals;
    intervals.reserve(gi.arcs.size());
    for (const auto& arc : gi.arcs) {
        intervals.emplace_back(arc.t_lo, arc.t_hi);
    }
    out.arcs = merge_intervals(std::move(intervals));
    for (const auto& pt : gi.points) {
        if (!covered(out.arcs, pt.x.value)) {
            out.points.push_back(pt.x);
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

DomainCoincidences domain_coincidences(const MultiMap& f, const MultiMap& g, Execution exec) {
    return project_to_domain(graph_intersections(f, g, exec));
}

CountPrediction predict_counts(long long n, long long a, long long m, long long b) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("valences must be positive");
    }
    CountPrediction p;
    p.n = n;
    p.a = a;
    p.m = m;
    p.b = b;
    p.k = std::abs(a * m - b * n);
    p.w = std::gcd(n, m);
    if (p.k == 0) {
        p.domain_count = Count::whole();
        p.graph_count = Count::whole();
        p.bk_value = Count::finite(0);
    } else {
        p.domain_count = Count::finite(p.k / p.w);
        p.graph_count = Count::finite(p.k);
        p.bk_value = Count::finite(p.k / p.w);
    }
    return p;
}

std::vector<UnitPoint> predicted_domain_set(long long n, long long a, long long m, long long b) {
    CountPrediction p = predict_counts(n, a, m, b);
    if (p.k == 0) {
        throw std::invalid_argument("no finite domain set: a m = b n");
    }
    std::vector<UnitPoint> set;
    set.reserve(static_cast<std::size_t>(p.k / p.w));
    for (long long j = 0; j < p.k / p.w; ++j) {
        set.push_back(UnitPoint(Rational(j * p.w, p.k)));
    }
    return set;
}

std::pair<long long, long long> bezout_rep(long long g, long long n, long long m) {
    if (n < 1 || m < 1 || std::gcd(n, m) != 1) {
        throw std::invalid_argument("bezout_rep requires coprime positive n, m");
    }
    // Extended Euclid: x n + y m = 1.
    long long x = 1, y = 0, x1 = 0, y1 = 1, r0 = n, r1 = m;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
        std::tie(x, x1) = std::pair(x1, x - q * x1);
        std::tie(y, y1) = std::pair(y1, y - q * y1);
    }
    long long d = ((g % m) * (x % m)) % m;
    d = ((d % m) + m) % m;
    long long c = ((-(g % n)) * (y % n)) % n;
    c = ((c % n) + n) % n;
    return {c, d};
}

std::pair<MultiMap, MultiMap> epsilon_separation(long long n, long long a, long long m, long long b) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("valences must be positive");
    }
    if (a * m != b * n) {
        throw std::invalid_argument("epsilon separation requires a m = b n");
    }
    MultiMap f = make_power_map(static_cast<int>(n), static_cast<int>(a));
    MultiMap g = translate_vertical(make_power_map(static_cast<int>(m), static_cast<int>(b)),
                                    Rational(1, 2 * n * m));
    return {std::move(f), std::move(g)};
}

DomainCoincidences block_domain_coincidences(const BottomBlock& fb, const BottomBlock& gb) {
    if (fb.block_count != gb.block_count) {
        throw std::invalid_argument("bottom blocks have different block counts");
    }
    const Rational modulus(1, fb.block_count);
    DomainCoincidences out;
    std::vector<std::pair<Rational, Rational>> intervals;
    std::vector<Rational> xs;
    for (const auto& f_branch : fb.branches) {
        for (const auto& g_branch : gb.branches) {
            PairSolutions sol = solve_pair(f_branch, g_branch, modulus);
            for (const auto& [lo, hi, k] : sol.spans) {
                intervals.emplace_back(lo, hi);
            }
            for (const auto& [t, k] : sol.roots) {
                xs.push_back(t == 1 ? Rational(0) : t);
            }
        }
    }
    out.arcs = merge_intervals(std::move(intervals));
    for (const auto& x : xs) {
        if (!covered(out.arcs, x)) {
            out.points.push_back(UnitPoint(x));
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

DomainCoincidences bottom_block_coincidences(long long n, long long a, long long m, long long b) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("valences must be positive");
    }
    if (a * m == b * n) {
        throw std::invalid_argument("bottom blocks require a m != b n");
    }
    long long w = std::gcd(n, m);
    if (w <= 1) {
        throw std::invalid_argument("bottom blocks require GCD(n, m) > 1");
    }
    BottomBlock fb = restrict_bottom_block(make_power_map(static_cast<int>(n), static_cast<int>(a)),
                                           static_cast<int>(w));
    BottomBlock gb = restrict_bottom_block(make_power_map(static_cast<int>(m), static_cast<int>(b)),
                                           static_cast<int>(w));
    return block_domain_coincidences(fb, gb);
}

}  // namespace nielsen
