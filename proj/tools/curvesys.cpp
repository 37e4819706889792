#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvesys/cubes.hpp"
#include "curvesys/families.hpp"
#include "curvesys/invariants.hpp"
#include "curvesys/io.hpp"
#include "curvesys/position.hpp"
#include "curvesys/suites.hpp"

using namespace curvesys;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

CurveSystem load_checked(const std::string& path) {
    CurveSystem s;
    try {
        s = load_system(path);
    } catch (const FormatError& e) {
        throw UsageError(e.what());
    }
    auto d = validate_system(s);
    if (!d.ok()) {
        std::string msg = path + ": invalid system";
        for (const auto& v : d.violations) msg += "\n  " + v;
        throw Violation(msg);
    }
    return s;
}

std::string tag_name(EndTag t) { return t == EndTag::S1 ? "s1" : "s2"; }

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string curve_label(const CurveSystem& s, int c) {
    return c < s.num_curves() && !s.curves[c].name.empty() ? s.curves[c].name : std::to_string(c);
}

// Compact cube-size multiset, largest first: "8 6 5x12".
std::string size_summary(std::vector<int> sizes) {
    std::sort(sizes.rbegin(), sizes.rend());
    std::string out;
    for (size_t i = 0; i < sizes.size();) {
        size_t j = i;
        while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(sizes[i]);
        if (j - i > 1) out += "x" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "-" : out;
}

std::string matrix_text(const CurveSystem& s, const Matrix& m) {
    std::ostringstream o;
    size_t w = 3;
    for (int c = 0; c < s.num_curves(); ++c) w = std::max(w, curve_label(s, c).size() + 1);
    o << std::setw(w) << "";
    for (int c = 0; c < s.num_curves(); ++c) o << std::setw(w) << curve_label(s, c);
    o << "\n";
    for (size_t i = 0; i < m.size(); ++i) {
        o << std::setw(w) << curve_label(s, static_cast<int>(i));
        for (int x : m[i]) o << std::setw(w) << x;
        o << "\n";
    }
    return o.str();
}

int cmd_analyze(const std::string& in, bool as_json) {
    const CurveSystem s = load_checked(in);
    json doc;
    std::ostringstream o;
    const int C = s.num_curves();
    const int gen = genus(s.map);
    const Matrix M = intersection_matrix(s);
    bool violation = false;
    doc["curves"] = C;
    doc["genus"] = gen;
    doc["intersection_matrix"] = M;
    o << "curves " << C << ", genus " << gen << ", crossings " << total_crossings(M) << "\n";
    o << "intersection matrix\n" << matrix_text(s, M);
    const bool pencils = has_pencils(s.map);
    if (!pencils) {
        const auto fc = classify_faces(s);
        doc["faces"] = {{"monogons", fc.monogons.size()},
                        {"bigons", fc.bigons.size()},
                        {"triangles", fc.triangles.size()},
                        {"other", fc.others.size()}};
        o << "faces: " << fc.monogons.size() << " monogons, " << fc.bigons.size() << " bigons, "
          << fc.triangles.size() << " triangles, " << fc.others.size() << " other\n";
    } else {
        o << "faces: pencil vertices present, census skipped\n";
    }
    const bool filling = s.genus_declared ? is_filling(s, *s.genus_declared) : is_filling(s, gen);
    doc["filling"] = filling;
    o << "filling " << (filling ? "yes" : "no") << "\n";
    const bool one = !pencils && is_one_system(s);
    const bool complete = one && is_complete_one_system(s);
    doc["one_system"] = one;
    doc["complete"] = complete;
    o << "1-system " << (one ? "yes" : "no") << ", complete " << (complete ? "yes" : "no") << "\n";
    if (one) {
        TriangleOracle tri(s);
        json triples = json::array();
        o << "triangle triples\n";
        int count = 0;
        for (int a = 0; a < C; ++a)
            for (int b = a + 1; b < C; ++b)
                for (int c = b + 1; c < C; ++c) {
                    if (!tri.intersects(a, b) || !tri.intersects(b, c) || !tri.intersects(a, c)) continue;
                    const bool t = tri(a, b, c);
                    triples.push_back({a, b, c, t});
                    if (t) {
                        o << "  " << curve_label(s, a) << " " << curve_label(s, b) << " " << curve_label(s, c) << "\n";
                        ++count;
                    }
                }
        o << "  " << count << " of " << triples.size() << " crossing triples form triangles\n";
        doc["triples"] = triples;
        std::vector<int> all(C);
        for (int i = 0; i < C; ++i) all[i] = i;
        const auto rep = maximal_cubes(tri, all);
        doc["maximal_cubes"] = rep.maximal_cubes;
        doc["dimension"] = rep.dimension;
        o << "maximal cubes (" << rep.maximal_cubes.size() << ")\n";
        std::vector<int> sizes;
        for (const auto& c : rep.maximal_cubes) {
            sizes.push_back(static_cast<int>(c.size()));
            o << "  " << c.size() << ":";
            for (int x : c) o << " " << curve_label(s, x);
            o << "\n";
        }
        o << "cube sizes " << size_summary(sizes) << "\n";
        o << "dimension " << rep.dimension << "\n";
        if (s.gamma) {
            const auto& e = s.gamma->epsilon;
            const int g = static_cast<int>(e.size());
            const int a = static_cast<int>(std::count(e.begin(), e.end(), 1)), b = g - a;
            const int formula = (a == 0 || b == 0) ? std::max(2 * g, 3) : std::max({2 * a, 2 * b, 5});
            const bool in_range = rep.dimension % 2 == 0 && rep.dimension >= g / 2 && rep.dimension <= g;
            doc["formula_dimension"] = formula;
            doc["in_even_range"] = in_range;
            o << "formula dimension " << formula << (formula == rep.dimension ? " (match)" : " (MISMATCH)") << "\n";
            if (!in_range)
                o << "note: dimension " << rep.dimension << " is not an even value in [" << g / 2 << ", " << g << "]\n";
            if (formula != rep.dimension) violation = true;
        }
    }
    if (!pencils) {
        const auto sc = dual_square_complex(s);
        std::vector<int> per;
        for (const auto& h : sc.hyperplanes) per.push_back(static_cast<int>(h.size()));
        doc["square_complex"] = {{"vertices", sc.vertices.size()},
                                 {"edges", sc.edges.size()},
                                 {"squares", sc.squares.size()},
                                 {"euler_characteristic", sc.euler_characteristic()},
                                 {"squares_per_curve", per}};
        o << "square complex: " << sc.vertices.size() << " vertices, " << sc.edges.size() << " edges, "
          << sc.squares.size() << " squares, euler characteristic " << sc.euler_characteristic() << "\n";
        o << "squares per curve " << join_ints(per) << "\n";
    }
    std::cout << (as_json ? doc.dump(2) + "\n" : o.str());
    return violation ? kViolation : kOk;
}

json polygon_json(const LabeledPolygon& p) {
    json j;
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back({v.curve, tag_name(v.tag)});
    j["vertices"] = verts;
    j["partition"] = p.partition;
    for (int cls : {1, 2}) {
        json es = json::array();
        for (const auto& e : cls == 1 ? p.r1 : p.r2) es.push_back({{"from", e.from}, {"to", e.to}, {"M", e.M}, {"N", e.N}});
        j[cls == 1 ? "r1" : "r2"] = es;
    }
    j["up"] = p.num_up;
    j["down"] = p.num_down;
    j["sum_n_r1"] = p.sum_n(1);
    j["sum_n_r2"] = p.sum_n(2);
    j["epsilon"] = epsilon_string(reconstruct_epsilon(p));
    return j;
}

int cmd_polygon(const std::string& in, bool as_json) {
    const CurveSystem s = load_checked(in);
    if (!s.gamma) throw UsageError(in + ": system carries no gamma metadata");
    LabeledPolygon p;
    try {
        p = labeled_polygon(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::logic_error& e) {
        throw Violation(e.what());
    }
    if (as_json) {
        std::cout << polygon_json(p).dump(2) << "\n";
        return kOk;
    }
    std::ostringstream o;
    o << "epsilon " << epsilon_string(s.gamma->epsilon) << ", |U| = " << p.num_up << ", |D| = " << p.num_down << "\n";
    o << "vertices";
    for (size_t k = 0; k < p.vertices.size(); ++k)
        o << " " << curve_label(s, p.vertices[k].curve) << "/" << tag_name(p.vertices[k].tag) << ":R"
          << p.partition[k];
    o << "\n";
    for (int cls : {1, 2}) {
        o << "R" << cls << " labels";
        for (const auto& e : cls == 1 ? p.r1 : p.r2) o << " (" << e.M << "," << e.N << ")";
        o << "\n";
    }
    o << "sum N over R1 = " << p.sum_n(1) << " (|D| = " << p.num_down << ")\n";
    o << "sum N over R2 = " << p.sum_n(2) << " (|D|(|U|-1) = " << p.num_down * (p.num_up - 1) << ")\n";
    o << "reconstructed orbit " << epsilon_string(reconstruct_epsilon(p)) << "\n";
    std::cout << o.str();
    return kOk;
}

std::string lower_bound_text(int g) {
    std::ostringstream o;
    o << "2^" << g - 3 << "/" << g - 1;
    return o.str();
}

int cmd_classify(int g, bool as_json) {
    if (g < 3 || g % 2 == 0) throw UsageError("genus must be odd and at least 3");
    const auto vectors = all_sign_vectors(g);
    std::vector<OrbitKey> keys(vectors.size());
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (size_t i = w; i < vectors.size(); i += workers) keys[i] = orbit_key(vectors[i]);
        }));
    for (auto& j : jobs) j.get();

    std::map<OrbitKey, std::vector<size_t>> classes;
    for (size_t i = 0; i < vectors.size(); ++i) classes[keys[i]].push_back(i);
    const long long burnside = sign_orbit_count_burnside(g), brute = sign_orbit_count_brute(g);
    bool consistent = burnside == brute && static_cast<long long>(classes.size()) == burnside;
    for (const auto& [key, members] : classes)
        for (size_t i : members) consistent = consistent && sign_orbit_equivalent(vectors[i], vectors[members[0]]);
    const bool bound_ok = static_cast<long long>(classes.size()) * (g - 1) >= (1LL << (g - 3));
    const int factorial_arg = 2 * g * (2 * g + 1);
    const std::string upper = orbit_upper_bound(g).str();

    json doc;
    std::ostringstream o;
    o << "genus " << g << ": " << vectors.size() << " sign vectors\n";
    o << std::left << std::setw(8) << "class" << std::setw(8) << "size" << std::setw(std::max(g + 4, 12)) << "orbit rep"
      << std::setw(24) << "cube sizes" << "polygon word\n";
    json jc = json::array();
    int idx = 0;
    for (const auto& [key, members] : classes) {
        const std::string rep = epsilon_string(canonical_orbit(vectors[members[0]]));
        const std::string word = key.polygon_word ? epsilon_string(*key.polygon_word) : "-";
        o << std::setw(8) << ++idx << std::setw(8) << members.size() << std::setw(std::max(g + 4, 12)) << rep << std::setw(24)
          << size_summary(key.cube_sizes) << word << "\n";
        jc.push_back({{"size", members.size()}, {"representative", rep}, {"cube_sizes", key.cube_sizes},
                      {"polygon_word", word}});
    }
    o << std::right;
    o << "invariant classes " << classes.size() << "\n";
    o << "orbit count " << burnside << " (Burnside), " << brute << " (enumeration)\n";
    o << "lower bound " << lower_bound_text(g) << " = " << std::fixed << std::setprecision(3)
      << static_cast<double>(1LL << (g - 3)) / (g - 1) << ": " << (bound_ok ? "holds" : "FAILS") << "\n";
    o << "upper bound (4g^2+2g)! = " << factorial_arg << "! = " << upper << "\n";
    o << "classes match orbits: " << (consistent ? "yes" : "NO") << "\n";
    doc["genus"] = g;
    doc["classes"] = jc;
    doc["orbit_count"] = burnside;
    doc["orbit_count_enumerated"] = brute;
    doc["lower_bound_holds"] = bound_ok;
    doc["upper_bound"] = {{"factorial_of", factorial_arg}, {"value", upper}};
    doc["consistent"] = consistent;
    std::cout << (as_json ? doc.dump(2) + "\n" : o.str());
    return consistent && bound_ok ? kOk : kViolation;
}

int cmd_orbits(int g) {
    if (g < 1 || g > 20) throw UsageError("genus must be between 1 and 20");
    std::map<SignVector, int> orbits;
    for (const auto& e : all_sign_vectors(g)) ++orbits[canonical_orbit(e)];
    const long long burnside = sign_orbit_count_burnside(g);
    std::cout << "genus " << g << ": " << orbits.size() << " orbits (Burnside " << burnside << ")\n";
    for (const auto& [rep, n] : orbits) std::cout << "  " << epsilon_string(rep) << "  " << n << "\n";
    return static_cast<long long>(orbits.size()) == burnside ? kOk : kViolation;
}

int cmd_verify(const std::string& suite, int g, std::uint64_t seed) {
    SuiteResult r;
    if (suite == "gamma") r = run_gamma_suite(g);
    else if (suite == "polygon") r = run_polygon_suite(g);
    else if (suite == "stab") r = run_stab_suite(g);
    else if (suite == "moves") r = run_moves_suite(g, seed);
    else throw UsageError("unknown suite " + suite);
    std::cout << "suite " << r.name << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
    std::cout << (r.ok() ? "PASS" : "FAIL") << "\n";
    return r.ok() ? kOk : kViolation;
}

const char* palette(int c) {
    static const char* colors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3",
                                   "gray40"};
    return colors[c % 10];
}

int cmd_export_dot(const std::string& in, const std::string& what) {
    const CurveSystem s = load_checked(in);
    std::ostringstream o;
    if (what == "map") {
        Topology t(s.map);
        o << "graph map {\n  node [shape=point];\n";
        for (int v = 0; v < t.num_vertices(); ++v) o << "  v" << t.vertex_key(v) << ";\n";
        for (int x = 0; x < s.map.num_darts(); ++x) {
            const int y = s.map.alpha[x];
            if (y < x) continue;
            const int c = s.map.curve_of_dart[x];
            o << "  v" << t.vertex_key(t.vertex_of(x)) << " -- v" << t.vertex_key(t.vertex_of(y)) << " [label=\""
              << curve_label(s, c) << "\", color=" << palette(c) << "];\n";
        }
        o << "}\n";
    } else if (what == "squares") {
        if (has_pencils(s.map)) throw UsageError("square complex needs a diagram without pencil vertices");
        const auto sc = dual_square_complex(s);
        o << "graph squares {\n  // " << sc.squares.size() << " squares, euler characteristic "
          << sc.euler_characteristic() << "\n";
        for (int f : sc.vertices) o << "  f" << f << ";\n";
        for (const auto& e : sc.edges)
            o << "  f" << e.from_face << " -- f" << e.to_face << " [label=\"" << curve_label(s, e.curve)
              << "\", color=" << palette(e.curve) << "];\n";
        o << "}\n";
    } else {
        throw UsageError("--what must be map or squares");
    }
    std::cout << o.str();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete 1-systems of curves on surfaces"};
    app.require_subcommand(1);

    std::string eps_text, in, out, curve, suite = "gamma", what = "map";
    int genus_arg = 0, point = -1, vgenus = 5;
    std::uint64_t seed = 1;
    bool as_json = false;

    auto* gen = app.add_subcommand("gen", "write gamma(eps)");
    gen->add_option("--epsilon", eps_text, "sign string such as ++-+--+")->required();
    gen->add_option("-o,--output", out);

    auto* can = app.add_subcommand("canonical", "write the canonical system of genus 1 or 2");
    can->add_option("--genus", genus_arg)->required();
    can->add_option("-o,--output", out);

    auto* stab = app.add_subcommand("stabilize", "stabilize along a curve");
    stab->add_option("-i,--input", in)->required();
    stab->add_option("--curve", curve, "curve id or name")->required();
    stab->add_option("--point", point, "trace position on the curve");
    stab->add_option("-o,--output", out);

    auto* red = app.add_subcommand("reduce", "remove monogons and bigons");
    red->add_option("-i,--input", in)->required();
    red->add_option("-o,--output", out);

    auto* ana = app.add_subcommand("analyze", "matrix, faces, triangles, cubes, square complex");
    ana->add_option("-i,--input", in)->required();
    ana->add_flag("--json", as_json);

    auto* poly = app.add_subcommand("polygon", "labeled polygon of a gamma system");
    poly->add_option("-i,--input", in)->required();
    poly->add_flag("--json", as_json);

    auto* cls = app.add_subcommand("classify", "invariant classes of all sign vectors");
    cls->add_option("--genus", genus_arg)->required();
    cls->add_flag("--json", as_json);

    auto* orb = app.add_subcommand("orbits", "orbits of the sign-vector action");
    orb->add_option("--genus", genus_arg)->required();

    auto* ver = app.add_subcommand("verify", "run an oracle suite");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"gamma", "polygon", "stab", "moves"}));
    ver->add_option("--seed", seed);
    ver->add_option("--genus", vgenus);

    auto* dot = app.add_subcommand("export-dot", "Graphviz export");
    dot->add_option("-i,--input", in)->required();
    dot->add_option("--what", what)->check(CLI::IsMember({"map", "squares"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            std::vector<int> eps;
            try {
                eps = parse_epsilon(eps_text);
                if (eps.size() < 3 || eps.size() % 2 == 0) throw std::invalid_argument("length must be odd and >= 3");
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--epsilon: ") + e.what());
            }
            emit(dump_system(gamma(eps)), out);
        } else if (*can) {
            if (genus_arg != 1 && genus_arg != 2) throw UsageError("--genus must be 1 or 2");
            emit(dump_system(canonical(genus_arg)), out);
        } else if (*stab) {
            const CurveSystem s = load_checked(in);
            const int c = s.find_curve(curve);
            if (c < 0) throw UsageError("unknown curve " + curve);
            try {
                emit(dump_system(point < 0 ? stabilize(s, c) : stabilize(s, c, point)), out);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        } else if (*red) {
            const CurveSystem s = load_checked(in);
            ReduceStats st;
            const CurveSystem r = reduce(s, &st);
            std::cerr << "removed " << st.monogons << " monogons, " << st.bigons << " bigons, " << st.pair_bigons
                      << " pair bigons\n";
            emit(dump_system(r), out);
        } else if (*ana) {
            return cmd_analyze(in, as_json);
        } else if (*poly) {
            return cmd_polygon(in, as_json);
        } else if (*cls) {
            return cmd_classify(genus_arg, as_json);
        } else if (*orb) {
            return cmd_orbits(genus_arg);
        } else if (*ver) {
            return cmd_verify(suite, vgenus, seed);
        } else if (*dot) {
            return cmd_export_dot(in, what);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Violation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kViolation;
    }
    return kOk;
}
