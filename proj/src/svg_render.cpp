#include "nielsen/svg_render.hpp"

#include <algorithm>
#include <vector>

namespace nielsen {

namespace {

const Integer kScale = Integer(1000000000);  // 9 fractional digits

std::string decimal9(const Rational& r) {
    Rational scaled = r * Rational(kScale);
    Integer rounded = floor_to_integer(scaled + Rational(1, 2));
    bool negative = rounded < 0;
    Integer mag = negative ? Integer(-rounded) : rounded;
    Integer whole = mag / kScale;
    Integer frac = mag % kScale;
    std::string out = (negative ? "-" : "") + whole.str();
    if (frac != 0) {
        std::string digits = frac.str();
        digits.insert(digits.begin(), 9 - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0') {
            digits.pop_back();
        }
        out += "." + digits;
    }
    return out;
}

struct Canvas {
    const RenderSpec& spec;

    Rational px(const Rational& t) const {
        return Rational(spec.margin) + t * Rational(spec.width - 2 * spec.margin);
    }
    Rational py(const Rational& y) const {
        return Rational(spec.height - spec.margin) - y * Rational(spec.height - 2 * spec.margin);
    }
};

// Splits one lift into maximal runs on which the value stays within a
// single integer band, and renders each run as a polyline of its mod-1
// values.
void render_branch(std::string& out, const LiftBranch& br, const Canvas& canvas,
                   const std::string& stroke) {
    std::vector<Rational> cuts = br.knots();
    const auto& pts = br.points;
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        const Rational& t0 = pts[s].first;
        const Rational& t1 = pts[s + 1].first;
        const Rational& y0 = pts[s].second;
        const Rational& y1 = pts[s + 1].second;
        if (y0 == y1) {
            continue;
        }
        for (Integer k = ceil_to_integer(std::min(y0, y1)); k <= floor_to_integer(std::max(y0, y1));
             ++k) {
            cuts.push_back(t0 + (Rational(k) - y0) * (t1 - t0) / (y1 - y0));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<std::pair<Rational, Rational>> run;
    Integer run_band = 0;
    auto flush = [&]() {
        if (run.size() < 2) {
            run.clear();
            return;
        }
        out += "  <polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) {
            if (i) {
                out += " ";
            }
            out += decimal9(run[i].first) + "," + decimal9(run[i].second);
        }
        out += "\"/>\n";
        run.clear();
    };
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        Rational mid = (cuts[c] + cuts[c + 1]) / 2;
        Integer band = floor_to_integer(br.value_at(mid));
        if (!run.empty() && band != run_band) {
            flush();
        }
        if (run.empty()) {
            run_band = band;
            run.emplace_back(canvas.px(cuts[c]),
                             canvas.py(br.value_at(cuts[c]) - Rational(run_band)));
        }
        run.emplace_back(canvas.px(cuts[c + 1]),
                         canvas.py(br.value_at(cuts[c + 1]) - Rational(run_band)));
    }
    flush();
}

}  // namespace

std::string render_svg(const MultiMap& f, const MultiMap* g, const RenderSpec& spec) {
    require_valid(f);
    if (g != nullptr) {
        require_valid(*g);
    }
    Canvas canvas{spec};
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
           std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
    out += "  <rect x=\"" + std::to_string(spec.margin) + "\" y=\"" + std::to_string(spec.margin) +
           "\" width=\"" + std::to_string(spec.width - 2 * spec.margin) + "\" height=\"" +
           std::to_string(spec.height - 2 * spec.margin) +
           "\" fill=\"white\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    for (const auto& br : f.branches()) {
        render_branch(out, br, canvas, spec.strokes.empty() ? "#000" : spec.strokes[0]);
    }
    if (g != nullptr) {
        const std::string stroke = spec.strokes.size() > 1 ? spec.strokes[1] : "#000";
        for (const auto& br : g->branches()) {
            render_branch(out, br, canvas, stroke);
        }
        Rational radius = spec.marker_radius * Rational(spec.width - 2 * spec.margin);
        for (const auto& pt : graph_intersections(f, *g).points) {
            out += "  <circle cx=\"" + decimal9(canvas.px(pt.x.value)) + "\" cy=\"" +
                   decimal9(canvas.py(pt.y.value)) + "\" r=\"" + decimal9(radius) +
                   "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace nielsen
