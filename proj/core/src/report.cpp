#include "edgering/report.hpp"

#include <nlohmann/json.hpp>

#include "edgering/formulas.hpp"

namespace edgering {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json specJson(const MultiPathSpec& spec) {
    ordered_json j;
    j["paths"] = spec.lengths();
    return j;
}

ordered_json multigradedJson(const BettiTable& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, v] : table.entries()) {
        ordered_json e;
        e["i"] = key.first;
        e["monomial"] = key.second.str();
        e["beta"] = v;
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json gradedJson(const BettiTable& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, v] : table.graded()) {
        ordered_json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["beta"] = v;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string info_json(const MultiPathSpec& spec) {
    SimpleGraph g = build_graph(spec);
    ordered_json j;
    j["spec"] = specJson(spec);
    j["vertices"] = g.vertexCount();
    j["edges"] = g.edgeCount();
    j["even_paths"] = spec.evenCount();
    j["odd_paths"] = spec.oddCount();
    j["type"] = spec.isEvenType() ? "even" : (spec.isOddType() ? "odd" : "mixed");
    j["bipartite"] = spec.isBipartite();
    j["pdim"] = pdim_formula(spec);
    j["mat"] = matching_number(spec);
    j["reg"] = regularity_formula(spec);
    j["theta"] = theta(spec).str();
    j["D"] = big_d(spec).str();
    return dump(j);
}

std::string betti_json(const MultiPathSpec& spec) {
    BettiTable table = multigraded_betti(spec);
    ordered_json j;
    j["spec"] = specJson(spec);
    j["total"] = table.totals();
    j["graded"] = gradedJson(table);
    j["multigraded"] = multigradedJson(table);
    return dump(j);
}

std::string oracle_json(const MultiPathSpec& spec, const BettiTable& table,
                        const std::string& order) {
    ordered_json j;
    j["spec"] = specJson(spec);
    j["order"] = order;
    j["total"] = table.totals();
    j["multigraded"] = multigradedJson(table);
    return dump(j);
}

std::string canonical_json(const MultiPathSpec& spec) {
    int p = pdim_formula(spec);
    std::set<MultiDegree> top;
    if (p == 0)
        top.insert(MultiDegree{});
    else
        top = n_i(spec, p);
    MultiDegree d = big_d(spec);
    ordered_json j;
    j["spec"] = specJson(spec);
    ordered_json tops = ordered_json::array(), gens = ordered_json::array();
    for (const auto& alpha : top) {
        tops.push_back(alpha.str());
        gens.push_back((d - alpha).str());
    }
    j["top_support"] = std::move(tops);
    j["generators"] = std::move(gens);
    return dump(j);
}

std::string report_json(const VerificationReport& rep, bool strict) {
    ordered_json j;
    j["spec"] = specJson(rep.spec);
    j["pdim"] = rep.pdim;
    j["mat"] = rep.mat;
    j["reg"] = rep.reg;
    j["multigraded"] = multigradedJson(rep.formula);
    j["graded"] = gradedJson(rep.formula);
    j["best_order"] = rep.bestOrder;
    j["orders_evaluated"] = [&] {
        std::size_t n = 0;
        for (const auto& ev : rep.ideals) n += ev.orders.size();
        return n;
    }();
    j["distinct_initial_ideals"] = rep.ideals.size();
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["status"] = check_status_name(c.status);
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["status"] = rep.exitCode(strict) == 0 ? "pass" : "fail";
    return dump(j);
}

} // namespace edgering
