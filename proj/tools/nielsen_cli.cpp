#include "nielsen/homotopy.hpp"
#include "nielsen/json_io.hpp"
#include "nielsen/svg_render.hpp"
#include "nielsen/torus_loop.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <unistd.h>
#endif

namespace {

using namespace nielsen;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool use_color() {
    if (std::getenv("NIELSEN_NO_COLOR") != nullptr) {
        return false;
    }
#ifndef _WIN32
    return isatty(STDOUT_FILENO) != 0;
#else
    return false;
#endif
}

std::string bold(const std::string& text) {
    return use_color() ? "\033[1m" + text + "\033[0m" : text;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

MultiMap load_multimap(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return multimap_from_json(buffer.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::vector<Rational> parse_times(const std::string& csv) {
    std::vector<Rational> times;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        times.push_back(parse_rational(token));
    }
    if (times.empty()) {
        throw std::invalid_argument("--times needs at least one rational");
    }
    return times;
}

std::string describe_pair(const MultiMap& f, const MultiMap& g) {
    std::ostringstream out;
    out << "f " << f.valence() << "-valued of degree " << degree(f) << ", g " << g.valence()
        << "-valued of degree " << degree(g);
    return out.str();
}

int run_nielsen_summary(long long n, long long a, long long m, long long b, bool as_json,
                        const std::string& out_path) {
    CountPrediction p = predict_counts(n, a, m, b);
    long long nielsen = nielsen_number(n, a, m, b);
    int sign = intersection_sign(n, a, m, b);
    if (as_json) {
        std::ostringstream doc;
        doc << "{\n  \"n\": " << n << ",\n  \"a\": " << a << ",\n  \"m\": " << m << ",\n  \"b\": "
            << b << ",\n  \"nielsen\": " << nielsen << ",\n  \"bk\": " << p.bk_value.value
            << ",\n  \"sign\": " << sign << ",\n  \"bk_equals_nielsen\": "
            << (p.bk_value.value == nielsen ? "true" : "false") << "\n}\n";
        write_output(doc.str(), out_path);
        return 0;
    }
    std::ostringstream out;
    out << bold("pair") << ": " << n << "-valued of degree " << a << " against " << m
        << "-valued of degree " << b << "\n";
    out << "N(f:g) = |am-bn| = " << nielsen
        << "   (minimal graph intersection count over the homotopy class)\n";
    out << "BK (|am-bn|/GCD(n,m)) = " << format_count(p.bk_value) << "\n";
    out << "sign of det [[n,m],[a,b]] = " << sign << "\n";
    if (nielsen == 0) {
        out << "am = bn: the pair is homotopic to one with no coincidences at all\n";
    } else if (p.bk_value.value != nielsen) {
        out << "note: BK differs from N (GCD(n,m) = " << p.w
            << "); BK is not a lower bound for domain coincidence points, N bounds graph"
               " intersections\n";
    } else {
        out << "note: N bounds graph intersections from below; domain coincidences can still be"
               " fewer (see demo-counterexample)\n";
    }
    write_output(out.str(), out_path);
    return 0;
}

int run_demo(bool as_json, const std::string& out_path) {
    const CertifiedPair pairs[] = {counterexample_pair(), second_counterexample_pair()};
    std::ostringstream out;
    bool all_certified = true;
    long long bk = predict_counts(2, 1, 3, -1).bk_value.value;
    long long nielsen = nielsen_number(2, degree(pairs[0].f), 3, degree(pairs[0].g));
    if (as_json) {
        out << "{\n  \"bk\": " << bk << ",\n  \"nielsen\": " << nielsen << ",\n  \"pairs\": [\n";
        for (int i = 0; i < 2; ++i) {
            GraphIntersections gi = graph_intersections(pairs[i].f, pairs[i].g);
            Count dom = project_to_domain(gi).count();
            all_certified = all_certified && gi.count() == Count::finite(pairs[i].graph_points) &&
                            dom == Count::finite(pairs[i].domain_points);
            out << "    {\"graph\": " << format_count(gi.count())
                << ", \"domain\": " << format_count(dom) << "}" << (i == 0 ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
    } else {
        out << bold("counterexample pairs") << " (f is the 2-valued degree-1 power map,"
            << " g is a PL 3-valued map of degree -1)\n\n";
        for (int i = 0; i < 2; ++i) {
            GraphIntersections gi = graph_intersections(pairs[i].f, pairs[i].g);
            Count dom = project_to_domain(gi).count();
            bool ok = gi.count() == Count::finite(pairs[i].graph_points) &&
                      dom == Count::finite(pairs[i].domain_points);
            all_certified = all_certified && ok;
            out << "pair " << (i + 1) << ": " << describe_pair(pairs[i].f, pairs[i].g) << "\n";
            out << "  graph intersections: " << format_count(gi.count()) << "\n";
            out << "  domain coincidences: " << format_count(dom) << "\n";
            out << "  certified: " << (ok ? "yes" : "NO") << "\n\n";
        }
        out << "BK (|am-bn|/GCD(n,m)) = " << bk << " exceeds the observed domain counts "
            << pairs[0].domain_points << " and " << pairs[1].domain_points << ":\n";
        out << "the BK value is not a lower bound for domain coincidence points.\n";
        out << "N(f:g) = |am-bn| = " << nielsen
            << " matches the graph intersection count of both pairs.\n";
    }
    write_output(out.str(), out_path);
    return all_certified ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coincidence theory of multivalued circle maps"};
    app.require_subcommand(1);

    long long n = 1, d = 0, a = 0, m = 1, b = 0;
    std::string file_f, file_g, out_path, mode = "graph", times_csv = "0,1/4,1/2,3/4,1";
    std::string file_f0, file_f1, file_g0, file_g1;
    bool as_json = false;

    auto* power = app.add_subcommand("power", "emit an n-valued power map of degree d as JSON");
    power->add_option("n", n, "valence")->required();
    power->add_option("d", d, "degree")->required();
    power->add_option("--out", out_path, "output file (default stdout)");

    auto* coincide = app.add_subcommand("coincide", "solve the coincidence problem of two maps");
    coincide->add_option("f", file_f, "first multimap JSON file")->required();
    coincide->add_option("g", file_g, "second multimap JSON file")->required();
    coincide->add_option("--mode", mode, "graph | domain")
        ->check(CLI::IsMember({"graph", "domain"}));
    coincide->add_option("--out", out_path, "output file (default stdout)");

    auto* nielsen_cmd = app.add_subcommand("nielsen", "Nielsen number and related counts");
    nielsen_cmd->add_option("n", n, "valence of f")->required();
    nielsen_cmd->add_option("a", a, "degree of f")->required();
    nielsen_cmd->add_option("m", m, "valence of g")->required();
    nielsen_cmd->add_option("b", b, "degree of g")->required();
    nielsen_cmd->add_flag("--json", as_json, "machine-readable output");
    nielsen_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* split = app.add_subcommand("split", "split a power map into graph components");
    split->add_option("n", n, "valence")->required();
    split->add_option("a", a, "degree")->required();
    split->add_option("--out", out_path, "output file (default stdout)");

    auto* loop = app.add_subcommand("loop", "torus loop of a connected power map");
    loop->add_option("n", n, "valence")->required();
    loop->add_option("a", a, "degree")->required();
    loop->add_option("--out", out_path, "output file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "coincidence counts along a pair of homotopies");
    sweep->add_option("f0", file_f0, "homotopy source for f")->required();
    sweep->add_option("f1", file_f1, "homotopy target for f")->required();
    sweep->add_option("g0", file_g0, "homotopy source for g")->required();
    sweep->add_option("g1", file_g1, "homotopy target for g")->required();
    sweep->add_option("--times", times_csv, "comma-separated rational times in [0,1]");
    sweep->add_option("--out", out_path, "output file (default stdout)");

    auto* render = app.add_subcommand("render", "render one or two maps as SVG");
    render->add_option("f", file_f, "multimap JSON file")->required();
    render->add_option("g", file_g, "optional second multimap JSON file");
    render->add_option("--out", out_path, "output SVG file")->required();

    auto* demo = app.add_subcommand("demo-counterexample",
                                    "certified pairs where domain coincidences undercut BK");
    demo->add_flag("--json", as_json, "machine-readable output");
    demo->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);

        if (power->parsed()) {
            write_output(multimap_to_json(make_power_map(static_cast<int>(n), static_cast<int>(d))) +
                             "\n",
                         out_path);
            return 0;
        }
        if (coincide->parsed()) {
            MultiMap f = load_multimap(file_f);
            MultiMap g = load_multimap(file_g);
            GraphIntersections gi = graph_intersections(f, g);
            write_output(coincidence_to_json(gi, mode == "domain") + "\n", out_path);
            return 0;
        }
        if (nielsen_cmd->parsed()) {
            return run_nielsen_summary(n, a, m, b, as_json, out_path);
        }
        if (split->parsed()) {
            auto parts = graph_split(make_power_map(static_cast<int>(n), static_cast<int>(a)));
            std::string doc = "[\n";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                std::istringstream part(multimap_to_json(parts[i]));
                std::string line;
                while (std::getline(part, line)) {
                    doc += "  " + line + "\n";
                }
                if (i + 1 < parts.size()) {
                    doc.insert(doc.size() - 1, ",");
                }
            }
            doc += "]\n";
            write_output(doc, out_path);
            return 0;
        }
        if (loop->parsed()) {
            TorusLoop l = loop_from_multimap(make_power_map(static_cast<int>(n), static_cast<int>(a)));
            write_output(loop_to_json(l) + "\n", out_path);
            return 0;
        }
        if (sweep->parsed()) {
            LinearHomotopy hf = make_linear_homotopy(load_multimap(file_f0), load_multimap(file_f1));
            LinearHomotopy hg = make_linear_homotopy(load_multimap(file_g0), load_multimap(file_g1));
            auto rows = sweep_counts(hf, hg, parse_times(times_csv));
            write_output(sweep_to_csv(rows), out_path);
            return 0;
        }
        if (render->parsed()) {
            MultiMap f = load_multimap(file_f);
            if (file_g.empty()) {
                write_output(render_svg(f, nullptr), out_path);
            } else {
                MultiMap g = load_multimap(file_g);
                write_output(render_svg(f, &g), out_path);
            }
            return 0;
        }
        if (demo->parsed()) {
            return run_demo(as_json, out_path);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
