#include "curvesys/io.hpp"

#include <fstream>
#include <sstream>

namespace curvesys {

using nlohmann::json;

namespace {

const char* tag_name(EndTag t) { return t == EndTag::S1 ? "s1" : "s2"; }
const char* side_name(PencilSide s) { return s == PencilSide::UpPencil ? "UpPencil" : "DownPencil"; }

json ends_json(const std::vector<PencilEnd>& ends) {
    json a = json::array();
    for (const auto& e : ends) a.push_back({e.curve, tag_name(e.tag)});
    return a;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw FormatError(where + ": " + what);
}

const json& field(const json& obj, const std::string& where, const char* key) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<int>();
}

std::vector<int> int_array(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    std::vector<int> out;
    for (size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], where + "/" + std::to_string(i)));
    return out;
}

std::vector<PencilEnd> parse_ends(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    std::vector<PencilEnd> out;
    for (size_t i = 0; i < v.size(); ++i) {
        std::string w = where + "/" + std::to_string(i);
        const auto& e = v[i];
        if (!e.is_array() || e.size() != 2 || !e[1].is_string()) fail(w, "expected [curve, \"s1\"|\"s2\"]");
        std::string tag = e[1].get<std::string>();
        if (tag != "s1" && tag != "s2") fail(w + "/1", "unknown strand-end tag '" + tag + "'");
        out.push_back({as_int(e[0], w + "/0"), tag == "s1" ? EndTag::S1 : EndTag::S2});
    }
    return out;
}

}  // namespace

json to_json(const CurveSystem& s) {
    json j;
    const auto& m = s.map;
    j["num_darts"] = m.num_darts();
    j["sigma"] = m.sigma;
    j["alpha"] = m.alpha;
    j["curve_of_dart"] = m.curve_of_dart;
    json fg = json::object();
    for (auto [k, g] : m.face_genus) fg[std::to_string(k)] = g;
    j["face_genus"] = fg;
    j["face_links"] = m.face_links;
    j["genus_declared"] = s.genus_declared ? json(*s.genus_declared) : json(nullptr);
    json curves = json::array();
    for (const auto& c : s.curves) {
        curves.push_back({{"id", c.id},
                          {"name", c.name},
                          {"role", c.role ? json(role_name(*c.role)) : json(nullptr)},
                          {"partner", c.partner ? json(*c.partner) : json(nullptr)}});
    }
    j["curves"] = curves;
    json pencils = json::array();
    for (const auto& p : s.pencils) {
        pencils.push_back({{"member_curves", p.member_curves},
                           {"boundary_order", ends_json(p.boundary_order)},
                           {"side", side_name(p.side)}});
    }
    j["pencils"] = pencils;
    if (s.gamma) {
        j["gamma"] = {{"epsilon", epsilon_string(s.gamma->epsilon)},
                      {"delta", s.gamma->delta},
                      {"combined_order", ends_json(s.gamma->combined_order)}};
    }
    return j;
}

CurveSystem from_json(const json& j) {
    CurveSystem s;
    auto& m = s.map;
    int n = as_int(field(j, "", "num_darts"), "/num_darts");
    m.sigma = int_array(field(j, "", "sigma"), "/sigma");
    m.alpha = int_array(field(j, "", "alpha"), "/alpha");
    m.curve_of_dart = int_array(field(j, "", "curve_of_dart"), "/curve_of_dart");
    if (static_cast<int>(m.sigma.size()) != n) fail("/sigma", "length differs from num_darts");
    if (static_cast<int>(m.alpha.size()) != n) fail("/alpha", "length differs from num_darts");
    if (static_cast<int>(m.curve_of_dart.size()) != n) fail("/curve_of_dart", "length differs from num_darts");
    if (j.contains("face_genus")) {
        const auto& fg = j["face_genus"];
        if (!fg.is_object()) fail("/face_genus", "expected an object");
        for (auto it = fg.begin(); it != fg.end(); ++it) {
            std::string w = "/face_genus/" + it.key();
            int key;
            try {
                size_t used = 0;
                key = std::stoi(it.key(), &used);
                if (used != it.key().size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                fail(w, "face-key is not an integer");
            }
            m.face_genus[key] = as_int(it.value(), w);
        }
    }
    if (j.contains("face_links")) {
        const auto& fl = j["face_links"];
        if (!fl.is_array()) fail("/face_links", "expected an array");
        for (size_t i = 0; i < fl.size(); ++i) m.face_links.push_back(int_array(fl[i], "/face_links/" + std::to_string(i)));
    }
    if (j.contains("genus_declared") && !j["genus_declared"].is_null())
        s.genus_declared = as_int(j["genus_declared"], "/genus_declared");
    if (j.contains("curves")) {
        const auto& cs = j["curves"];
        if (!cs.is_array()) fail("/curves", "expected an array");
        for (size_t i = 0; i < cs.size(); ++i) {
            std::string w = "/curves/" + std::to_string(i);
            CurveInfo c;
            c.id = as_int(field(cs[i], w, "id"), w + "/id");
            const auto& name = field(cs[i], w, "name");
            if (!name.is_string()) fail(w + "/name", "expected a string");
            c.name = name.get<std::string>();
            if (cs[i].contains("role") && !cs[i]["role"].is_null()) {
                const auto& r = cs[i]["role"];
                if (!r.is_string() || !parse_role(r.get<std::string>())) fail(w + "/role", "unknown role");
                c.role = parse_role(r.get<std::string>());
            }
            if (cs[i].contains("partner") && !cs[i]["partner"].is_null())
                c.partner = as_int(cs[i]["partner"], w + "/partner");
            s.curves.push_back(c);
        }
    } else {
        for (int c = 0; c < m.num_curves(); ++c) s.curves.push_back({c, "c" + std::to_string(c), {}, {}});
    }
    if (j.contains("pencils")) {
        const auto& ps = j["pencils"];
        if (!ps.is_array()) fail("/pencils", "expected an array");
        for (size_t i = 0; i < ps.size(); ++i) {
            std::string w = "/pencils/" + std::to_string(i);
            PencilDisk p;
            p.member_curves = int_array(field(ps[i], w, "member_curves"), w + "/member_curves");
            p.boundary_order = parse_ends(field(ps[i], w, "boundary_order"), w + "/boundary_order");
            const auto& side = field(ps[i], w, "side");
            if (side == "UpPencil") p.side = PencilSide::UpPencil;
            else if (side == "DownPencil") p.side = PencilSide::DownPencil;
            else fail(w + "/side", "expected UpPencil or DownPencil");
            s.pencils.push_back(p);
        }
    }
    if (j.contains("gamma") && !j["gamma"].is_null()) {
        const auto& g = j["gamma"];
        GammaMetadata meta;
        const auto& e = field(g, "/gamma", "epsilon");
        if (!e.is_string()) fail("/gamma/epsilon", "expected a string over {+,-}");
        try {
            meta.epsilon = parse_epsilon(e.get<std::string>());
        } catch (const std::invalid_argument& ex) {
            fail("/gamma/epsilon", ex.what());
        }
        meta.delta = as_int(field(g, "/gamma", "delta"), "/gamma/delta");
        meta.combined_order = parse_ends(field(g, "/gamma", "combined_order"), "/gamma/combined_order");
        s.gamma = meta;
    }
    return s;
}

std::string dump_system(const CurveSystem& s) { return to_json(s).dump(2) + "\n"; }

CurveSystem parse_system(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": syntax error");
    }
    return from_json(j);
}

CurveSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_system(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void save_system(const CurveSystem& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot write file");
    out << dump_system(s);
}

std::string epsilon_string(const std::vector<int>& eps) {
    std::string s;
    for (int e : eps) s += e > 0 ? '+' : '-';
    return s;
}

std::vector<int> parse_epsilon(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty sign vector");
    std::vector<int> out;
    for (char c : s) {
        if (c == '+') out.push_back(1);
        else if (c == '-') out.push_back(-1);
        else throw std::invalid_argument(std::string("sign vector contains '") + c + "'");
    }
    return out;
}

}  // namespace curvesys
