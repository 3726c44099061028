#include "toric/model.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "toric/cox_ring.hpp"

namespace toric {
namespace {

using nlohmann::json;

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::size_t line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

std::int64_t as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ModelParseError(where, "expected an integer");
    return v.get<std::int64_t>();
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ModelParseError("/", std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<std::int64_t> int_array(const json& v, const std::string& where) {
    if (!v.is_array()) throw ModelParseError(where, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], where + "/" + std::to_string(i)));
    return out;
}

} // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational");
    const auto slash = s.find('/');
    auto check_digits = [&](const std::string& part, bool allow_sign) {
        std::size_t start = (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start >= part.size()) throw DomainError("malformed rational \"" + s + "\"");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw DomainError("malformed rational \"" + s + "\"");
    };
    const std::string num = s.substr(0, slash);
    check_digits(num, true);
    Integer p(num[0] == '+' ? num.substr(1) : num);
    Integer q(1);
    if (slash != std::string::npos) {
        const std::string den = s.substr(slash + 1);
        check_digits(den, false);
        q = Integer(den);
        if (q == 0) throw DomainError("zero denominator in \"" + s + "\"");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Model parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelParseError("line " + std::to_string(line_of(text, e.byte)), "malformed JSON");
    }
    if (!doc.is_object()) throw ModelParseError("/", "model must be a JSON object");

    Model m;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw ModelParseError("/name", "expected a string");
        m.name = it->get<std::string>();
    }
    const std::int64_t rank = as_int(field(doc, "rank"), "/rank");
    if (rank < 1) throw ModelParseError("/rank", "rank must be positive");

    const json& rays_json = field(doc, "rays");
    if (!rays_json.is_array()) throw ModelParseError("/rays", "expected an array");
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < rays_json.size(); ++i) {
        const std::string where = "/rays/" + std::to_string(i);
        auto r = int_array(rays_json[i], where);
        if (r.size() != static_cast<std::size_t>(rank)) throw ModelParseError(where, "ray has the wrong length");
        rays.push_back(std::move(r));
    }
    const std::size_t n = rays.size();

    const json& cones_json = field(doc, "cones");
    if (!cones_json.is_array()) throw ModelParseError("/cones", "expected an array");
    std::vector<RayIndices> cones;
    for (std::size_t c = 0; c < cones_json.size(); ++c) {
        const std::string where = "/cones/" + std::to_string(c);
        RayIndices cone;
        for (auto idx : int_array(cones_json[c], where)) {
            if (idx < 1 || static_cast<std::size_t>(idx) > n)
                throw ModelParseError(where, "ray index " + std::to_string(idx) + " out of range 1.." +
                                                 std::to_string(n));
            cone.push_back(static_cast<std::size_t>(idx - 1));
        }
        if (cone.empty()) throw ModelParseError(where, "empty cone");
        cones.push_back(normalize_indices(std::move(cone)));
    }
    try {
        m.fan = Fan::from_maximal_cones(static_cast<std::size_t>(rank), rays, cones);
    } catch (const DomainError& e) {
        throw ModelParseError("/rays", e.what());
    }
    const FanDiagnostics diag = validate_fan(m.fan);
    if (!diag.is_fan) throw ModelParseError("/cones", diag.violations.empty() ? "not a fan" : diag.violations.front());

    m.divisor.assign(n, 1);
    if (auto it = doc.find("divisor"); it != doc.end()) {
        m.divisor = int_array(*it, "/divisor");
        if (m.divisor.size() != n) throw ModelParseError("/divisor", "divisor needs one entry per ray");
    }

    if (auto it = doc.find("polynomial"); it != doc.end()) {
        if (!it->is_array()) throw ModelParseError("/polynomial", "expected an array of terms");
        Polynomial f(n);
        for (std::size_t t = 0; t < it->size(); ++t) {
            const std::string where = "/polynomial/" + std::to_string(t);
            const json& term = (*it)[t];
            if (!term.is_object()) throw ModelParseError(where, "expected an object");
            auto c = term.find("coefficient");
            if (c == term.end() || !c->is_string())
                throw ModelParseError(where, "coefficient must be a rational string \"p/q\"");
            Rational q;
            try {
                q = parse_rational(c->get<std::string>());
            } catch (const DomainError& e) {
                throw ModelParseError(where + "/coefficient", e.what());
            }
            auto ex = term.find("exponents");
            if (ex == term.end()) throw ModelParseError(where, "missing exponents");
            ExponentVector e = int_array(*ex, where + "/exponents");
            if (e.size() != n) throw ModelParseError(where + "/exponents", "needs one exponent per ray");
            for (auto x : e)
                if (x < 0) throw ModelParseError(where + "/exponents", "negative exponent");
            f.add_term(e, Coefficient(q));
        }
        if (f.is_zero()) throw ModelParseError("/polynomial", "polynomial is zero");
        if (!ChowGrading(m.fan).degree_of(f)) throw ModelParseError("/polynomial", "polynomial is not homogeneous");
        m.polynomial = std::move(f);
    }

    m.canonical_json = doc.dump();
    m.hash = fnv1a_hex(m.canonical_json);
    return m;
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelParseError(path, "cannot open model file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

std::vector<std::string> preset_names() { return {"p1", "p2", "p11222", "p11222-resolved", "quintic"}; }

std::string preset_json(const std::string& name) {
    struct Term {
        const char* coefficient;
        std::vector<std::int64_t> exponents;
    };
    std::vector<std::vector<std::int64_t>> rays;
    std::vector<std::vector<int>> cones;
    std::vector<Term> terms;
    std::size_t rank = 0;

    if (name == "p1") {
        rank = 1;
        rays = {{1}, {-1}};
        cones = {{1}, {2}};
        terms = {{"1", {2, 0}}, {"1", {0, 2}}};
    } else if (name == "p2") {
        rank = 2;
        rays = {{1, 0}, {0, 1}, {-1, -1}};
        cones = {{1, 2}, {2, 3}, {1, 3}};
        terms = {{"1", {3, 0, 0}}, {"1", {0, 3, 0}}, {"1", {0, 0, 3}}};
    } else if (name == "quintic") {
        rank = 4;
        rays = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}};
        for (int omit = 5; omit >= 1; --omit) {
            std::vector<int> c;
            for (int i = 1; i <= 5; ++i)
                if (i != omit) c.push_back(i);
            cones.push_back(c);
        }
        for (int i = 0; i < 5; ++i) {
            std::vector<std::int64_t> e(5, 0);
            e[i] = 5;
            terms.push_back({"1", e});
        }
    } else if (name == "p11222") {
        rank = 4;
        rays = {{-1, -2, -2, -2}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        for (int omit = 5; omit >= 1; --omit) {
            std::vector<int> c;
            for (int i = 1; i <= 5; ++i)
                if (i != omit) c.push_back(i);
            cones.push_back(c);
        }
        terms = {{"1", {8, 0, 0, 0, 0}}, {"1", {0, 8, 0, 0, 0}}, {"1", {0, 0, 4, 0, 0}},
                 {"1", {0, 0, 0, 4, 0}}, {"1", {0, 0, 0, 0, 4}}};
    } else if (name == "p11222-resolved") {
        rank = 4;
        rays = {{-1, -2, -2, -2}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, -1, -1, -1}};
        // star subdivision of the weighted projective fan at (e1 + e2)/2
        cones = {{2, 3, 4, 5}, {1, 3, 4, 5}, {2, 4, 5, 6}, {1, 4, 5, 6},
                 {2, 3, 5, 6}, {1, 3, 5, 6}, {2, 3, 4, 6}, {1, 3, 4, 6}};
        terms = {{"1", {8, 0, 0, 0, 0, 4}}, {"1", {0, 8, 0, 0, 0, 4}}, {"1", {0, 0, 4, 0, 0, 0}},
                 {"1", {0, 0, 0, 4, 0, 0}}, {"1", {0, 0, 0, 0, 4, 0}}};
    } else {
        std::string known;
        for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
        throw ModelParseError("--preset", "unknown preset \"" + name + "\" (known: " + known + ")");
    }

    json doc;
    doc["name"] = name;
    doc["rank"] = rank;
    doc["rays"] = rays;
    doc["cones"] = cones;
    json poly = json::array();
    for (const auto& t : terms) poly.push_back({{"coefficient", t.coefficient}, {"exponents", t.exponents}});
    doc["polynomial"] = poly;
    return doc.dump(2);
}

Model preset(const std::string& name) { return parse_model(preset_json(name)); }

} // namespace toric
