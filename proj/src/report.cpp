#include "toric/report.hpp"

#include <sstream>

#include "toric/infinitesimal.hpp"

namespace toric {
namespace {

using nlohmann::json;

json one_based(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
}

json lattice(const LatticeVector& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

const Polynomial& require_polynomial(const Model& model) {
    if (!model.polynomial) throw DomainError("model has no polynomial");
    return *model.polynomial;
}

SigmaXData sigma_x_of(const Model& model) { return compute_sigma_x(model.fan, model.divisor); }

json two_cone_json(const TwoConeData& cone) {
    json j;
    j["sigma"] = one_based(normalize_indices({cone.order.front(), cone.order.back()}));
    j["order"] = one_based(cone.order);
    j["multiplicity"] = cone.multiplicity.get_str();
    json subs = json::array();
    for (const auto& m : cone.subcone_multiplicity) subs.push_back(m.get_str());
    j["subcone_multiplicities"] = subs;
    j["interior_rays"] = one_based(std::vector<std::size_t>(cone.order.begin() + 1, cone.order.end() - 1));
    j["beta1"] = cone.beta1.to_string();
    json rid = json::array();
    for (std::size_t k = 1; k + 1 < cone.order.size(); ++k)
        rid.push_back({{"j", k},
                       {"holds", ray_identity_check(cone, k)},
                       {"matching_factor", matching_factor(cone, k).get_str()}});
    j["ray_identity"] = rid;
    return j;
}

std::string orientation_text(const CommandOptions& opts) {
    if (opts.orientation) return "l0 = " + var(*opts.orientation);
    return "default (l0 = boundary ray with the smaller index)";
}

const Root& select_root(const std::vector<Root>& roots, const CommandOptions& opts) {
    const std::size_t idx = opts.root.value_or(0);
    if (roots.empty()) throw DomainError("model has no roots (no interior rays in the 2-cones of Sigma_X)");
    if (idx >= roots.size())
        throw DomainError("root index " + std::to_string(idx) + " out of range 0.." +
                          std::to_string(roots.size() - 1));
    return roots[idx];
}

std::size_t orientation_for(const Root& root, const CommandOptions& opts) {
    if (!opts.orientation) return std::min(root.cone.order.front(), root.cone.order.back());
    const std::size_t l0 = *opts.orientation;
    if (l0 != root.cone.order.front() && l0 != root.cone.order.back())
        throw DomainError("orientation " + var(l0) + " is not a boundary ray of the root's 2-cone");
    return l0;
}

json root_json(const Fan& fan, const Root& r, std::size_t index) {
    json j;
    j["index"] = index;
    j["u"] = lattice(r.u);
    j["l"] = r.l + 1;
    j["x^u"] = monomial_string(r.pairing);
    j["x_l*x^u"] = monomial_string(r.shift());
    j["B"] = monomial_string(r.b_monomial);
    j["regularity"] = to_string(regularity_locus(fan, r.cone, r.l, r.u));
    return j;
}

json cocycle_entries(const CechCocycle& c, bool skip_reverse) {
    json out = json::array();
    for (const auto& [key, field] : c.entries) {
        if (skip_reverse && key.first > key.second) continue;
        out.push_back({{"from", c.charts[key.first]}, {"to", c.charts[key.second]}, {"field", field.to_string()}});
    }
    return out;
}

json cmd_validate(const Model& model) {
    const FanDiagnostics d = validate_fan(model.fan);
    json j;
    j["rank"] = model.fan.rank();
    j["rays"] = model.fan.ray_count();
    j["maximal_cones"] = model.fan.maximal_cones().size();
    j["is_fan"] = d.is_fan;
    j["is_complete"] = d.is_complete;
    j["is_simplicial"] = d.is_simplicial;
    j["violations"] = d.violations;
    if (model.polynomial) {
        j["polynomial"] = model.polynomial->to_string();
        j["polynomial_degree"] = ChowGrading(model.fan).degree_of(*model.polynomial)->to_string();
    }
    return j;
}

json cmd_analyze(const Model& model) {
    const NefBigReport nb = nef_big_classify(model.fan, model.divisor);
    json j;
    j["divisor"] = model.divisor;
    j["nef"] = nb.nef;
    j["big"] = nb.big;
    if (!nb.nef || !nb.big) return j;
    const SigmaXData sx = sigma_x_of(model);
    json s;
    s["rays"] = one_based(sx.ray_origin);
    json cones = json::array();
    for (std::size_t k = 0; k < sx.maximal_cones.size(); ++k) {
        json w = json::array();
        for (const auto& q : sx.witnesses[k]) w.push_back(q.get_str());
        cones.push_back({{"rays", one_based(sx.maximal_cones[k])},
                         {"contained_rays", one_based(sx.contained_rays[k])},
                         {"witness", w}});
    }
    s["maximal_cones"] = cones;
    j["sigma_x"] = s;
    json twos = json::array();
    for (const auto& sigma : sx.two_cones()) {
        const TwoConeData cone = two_cone_analysis(model.fan, sx, sigma);
        if (cone.interior_count() > 0) twos.push_back(two_cone_json(cone));
    }
    j["two_cones_with_interior_rays"] = twos;
    return j;
}

json cmd_roots(const Model& model) {
    const SigmaXData sx = sigma_x_of(model);
    json pairs = json::array();
    std::size_t index = 0;
    for (const auto& [cone, l] : interior_ray_pairs(model.fan, sx)) {
        json p;
        p["sigma"] = one_based(normalize_indices({cone.order.front(), cone.order.back()}));
        p["l"] = l + 1;
        p["order"] = one_based(cone.order);
        const ChartCover cover = chart_cover(cone, l);
        p["charts"] = {{"U0_nonzero", one_based(cover.chart0)},
                       {"U1_nonzero", one_based(cover.chart1)},
                       {"intersection_nonzero", one_based(cover.intersection)}};
        json roots = json::array();
        for (const auto& r : enumerate_roots(model.fan, cone, l)) roots.push_back(root_json(model.fan, r, index++));
        p["roots"] = roots;
        p["beta1_monomials"] = enumerate_root_candidates(model.fan, cone, l).size();
        pairs.push_back(p);
    }
    json j;
    j["pairs"] = pairs;
    j["root_count"] = index;
    return j;
}

json cmd_deform(const Model& model, const CommandOptions& opts) {
    const Polynomial& f = require_polynomial(model);
    const auto roots = all_roots(model);
    const Root& root = select_root(roots, opts);
    const std::size_t l0 = orientation_for(root, opts);
    const HypersurfaceFamily fam = build_family(model.fan, f, root, l0);

    json j;
    j["root"] = root_json(model.fan, root, opts.root.value_or(0));
    j["l0"] = l0 + 1;
    j["transitions"] = {gluing_map(root, 0).to_string(), gluing_map(root, 1).to_string()};
    j["composite_transition"] = composite_transition(root).to_string();
    json cm = json::array();
    for (auto it = fam.cm.rbegin(); it != fam.cm.rend(); ++it) {
        const CmEntry& e = *it;
        json row = {{"monomial", monomial_string(e.exponent)}, {"c", e.c}};
        if (e.m) row["m"] = lattice(*e.m);
        cm.push_back(row);
    }
    j["cm"] = cm;
    j["f"] = f.to_string();
    j["f_lambda"] = fam.f_lambda.to_string();
    j["f0_lambda"] = fam.f_chart[0].to_string();
    j["f1_lambda"] = fam.f_chart[1].to_string();
    json poles = json::array();
    for (const auto& r : verify_no_poles(fam)) {
        json off = json::array();
        for (const auto& e : r.offending) off.push_back(monomial_string(e));
        poles.push_back({{"chart", r.chart}, {"passed", r.passed}, {"offending", off}});
    }
    j["pole_check"] = poles;
    json coherent = json::array();
    for (int k = 0; k < 2; ++k) coherent.push_back(apply(gluing_map(root, k), fam.f_lambda) == fam.f_chart[k]);
    j["substitution_coherent"] = coherent;
    const FirstOrderFamily fo = first_order_family(fam);
    j["first_order"] = {{"f_eps", fo.f_eps.to_string()},
                        {"f0_eps", fo.f_chart[0].to_string()},
                        {"f1_eps", fo.f_chart[1].to_string()}};
    j["factor_note"] = "the deformation factor is x^u = " + monomial_string(root.pairing) + ", which includes " +
                       var(root.l) + "^-1 since <u,e_l> = -1";
    return j;
}

json cmd_cocycle(const Model& model, const CommandOptions& opts) {
    const Polynomial& f = require_polynomial(model);
    const auto roots = all_roots(model);
    const Root& root = select_root(roots, opts);
    const std::size_t l0 = orientation_for(root, opts);
    const HypersurfaceFamily fam = build_family(model.fan, f, root, l0);
    const TwoConeData& cone = fam.root.cone;
    const std::size_t j_pos = cone.position(root.l);

    json j;
    j["root"] = root_json(model.fan, root, opts.root.value_or(0));
    j["l0"] = l0 + 1;
    const CechCocycle kod = kodaira_cocycle(root);
    j["kodaira"] = cocycle_entries(kod, true);

    const CechCocycle theta = theta_cocycle(fam);
    json th;
    th["charts"] = theta.charts;
    th["antisymmetric"] = theta.check_antisymmetry();
    th["cocycle"] = theta.check_cocycle();
    // entries that change only the chart side k
    json same_i = json::array();
    for (std::size_t p = 0; p + 1 < theta.charts.size(); p += 2)
        same_i.push_back({{"from", theta.charts[p]}, {"to", theta.charts[p + 1]},
                          {"field", theta.entry(p, p + 1).to_string()}});
    th["entries_k0_to_k1"] = same_i;
    j["theta"] = th;

    const Polynomial b = Polynomial::monomial(root.b_monomial);
    const CechCocycle lift = lift_nonpolynomial(model.fan, cone, root.l, b);
    j["lift"] = {{"B", b.to_string()},
                 {"entries", cocycle_entries(lift, true)},
                 {"cocycle", lift.check_cocycle()},
                 {"coboundary", lift.coboundary}};
    j["matching_factor"] = matching_factor(cone, j_pos).get_str();
    json rid = json::array();
    for (std::size_t k = 1; k + 1 < cone.order.size(); ++k) rid.push_back({{"j", k}, {"holds", ray_identity_check(cone, k)}});
    j["ray_identity"] = rid;
    return j;
}

json cmd_dims(const Model& model) {
    const H1Decomposition d = h1_decomposition(model.fan, require_polynomial(model));
    json j;
    j["polynomial"] = d.polynomial_dim;
    json np = json::array();
    std::size_t non_poly = 0;
    for (const auto& s : d.non_polynomial) {
        np.push_back({{"sigma", one_based(s.sigma)}, {"l", s.l + 1}, {"dim", s.dim}, {"roots", s.root_count}});
        non_poly += s.dim;
    }
    j["non_polynomial"] = np;
    j["non_polynomial_total"] = non_poly;
    j["total"] = d.total;
    return j;
}

void render(std::ostringstream& os, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    auto is_flat = [](const json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_object() || (x.is_array() && !is_flat(x))) {
                os << pad << k << ":\n";
                render(os, x, indent + 1);
            } else if (x.is_array()) {
                os << pad << k << ": [";
                bool first = true;
                for (const auto& e : x) {
                    os << (first ? "" : ", ") << scalar(e);
                    first = false;
                }
                os << "]\n";
            } else {
                os << pad << k << ": " << scalar(x) << "\n";
            }
        }
    } else if (v.is_array()) {
        std::size_t i = 0;
        for (const auto& x : v) {
            if (x.is_structured()) {
                os << pad << "- [" << i << "]\n";
                render(os, x, indent + 1);
            } else {
                os << pad << "- " << scalar(x) << "\n";
            }
            ++i;
        }
    } else {
        os << pad << scalar(v) << "\n";
    }
}

} // namespace

std::vector<Root> all_roots(const Model& model) {
    const SigmaXData sx = sigma_x_of(model);
    std::vector<Root> out;
    for (const auto& [cone, l] : interior_ray_pairs(model.fan, sx))
        for (auto& r : enumerate_roots(model.fan, cone, l)) out.push_back(std::move(r));
    return out;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"validate", "analyze", "roots", "deform", "cocycle", "dims"};
    return names;
}

json run_command(const std::string& command, const Model& model, const CommandOptions& opts) {
    json report;
    report["command"] = command;
    report["model"] = {{"name", model.name}, {"hash", model.hash}};
    report["orientation"] = orientation_text(opts);
    if (command == "validate") report["result"] = cmd_validate(model);
    else if (command == "analyze") report["result"] = cmd_analyze(model);
    else if (command == "roots") report["result"] = cmd_roots(model);
    else if (command == "deform") report["result"] = cmd_deform(model, opts);
    else if (command == "cocycle") report["result"] = cmd_cocycle(model, opts);
    else if (command == "dims") report["result"] = cmd_dims(model);
    else throw std::invalid_argument("unknown command \"" + command + "\"");
    return report;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

} // namespace toric
