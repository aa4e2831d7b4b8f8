#pragma once

#include "nielsen/coincidence.hpp"

#include <vector>

namespace nielsen {

// Straight-line interpolation between two maps of equal valence and equal
// degree. Branch lifts are matched by a rotation with wrap carry chosen so
// that every time slice is a valid multimap; the certificate is exact
// (endpoint extremes of the bilinear branch differences).
class LinearHomotopy {
public:
    LinearHomotopy(MultiMap source, MultiMap target, std::vector<LiftBranch> matched_target_lifts);

    const MultiMap& source() const { return source_; }
    const MultiMap& target() const { return target_; }

    // The time-t multimap; t must lie in [0, 1].
    MultiMap slice_at(const Rational& t) const;

private:
    MultiMap source_;
    MultiMap target_;
    std::vector<LiftBranch> matched_;  // target lifts aligned with source branches
};

// Throws when valences or degrees differ, or when no branch matching keeps
// every slice valid (the message carries a witness time).
LinearHomotopy make_linear_homotopy(const MultiMap& from, const MultiMap& to);

struct SweepRow {
    Rational t;
    Count domain_count;
    Count graph_count;
};

// Solves the slice pair at each requested time. Throws if any slice has
// fewer graph intersections than the Nielsen number of the pair.
std::vector<SweepRow> sweep_counts(const LinearHomotopy& hf, const LinearHomotopy& hg,
                                   const std::vector<Rational>& times);

struct CertifiedPair {
    MultiMap f;
    MultiMap g;
    long long domain_points = 0;
    long long graph_points = 0;
};

// The 2-valued degree-1 power map against a PL 3-valued map of degree -1
// with 5 graph intersections but only 3 domain coincidence points: two
// pairs of intersections share their x coordinate.
CertifiedPair counterexample_pair();

// Same pair of classes, with 4 domain coincidence points under 5 graph
// intersections.
CertifiedPair second_counterexample_pair();

}  // namespace nielsen
