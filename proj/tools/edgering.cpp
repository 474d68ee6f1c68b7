// edgering -- exact Betti numbers, canonical modules and edge-cone geometry
// of multi-path graph edge rings, with a brute-force homology oracle.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgering/cone.hpp"
#include "edgering/errors.hpp"
#include "edgering/formulas.hpp"
#include "edgering/report.hpp"
#include "edgering/toric.hpp"
#include "edgering/verify.hpp"

namespace {

using namespace edgering;

MultiPathSpec parsePaths(const std::string& paths) {
    std::vector<int> lengths;
    std::stringstream ss(paths);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            lengths.push_back(v);
        } catch (const std::exception&) {
            throw InvalidSpecError("cannot parse path length '" + item + "'");
        }
    }
    return MultiPathSpec(lengths);
}

MonomialOrder parseOrder(const MultiPathSpec& spec, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidSpecError("order must look like kind:perm, got '" + text + "'");
    std::string kindName = text.substr(0, colon);
    std::string permName = text.substr(colon + 1);
    OrderKind kind;
    if (kindName == "lex")
        kind = OrderKind::Lex;
    else if (kindName == "grlex")
        kind = OrderKind::GrLex;
    else if (kindName == "grevlex")
        kind = OrderKind::GrevLex;
    else
        throw InvalidSpecError("unknown order kind '" + kindName + "'");

    std::vector<Edge> natural = spec.edges();
    if (permName == "natural") return MonomialOrder(kind, natural);
    if (permName == "rev") return MonomialOrder(kind, {natural.rbegin(), natural.rend()});

    std::map<std::string, Edge> byName;
    for (const Edge& e : natural) byName[e.str()] = e;
    std::vector<Edge> ranking;
    std::stringstream ss(permName);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto it = byName.find(item);
        if (it == byName.end()) throw InvalidSpecError("unknown edge variable '" + item + "'");
        ranking.push_back(it->second);
    }
    if (ranking.size() != natural.size())
        throw InvalidSpecError("order permutation must list every edge variable exactly once");
    return MonomialOrder(kind, std::move(ranking));
}

OrderFamilyMode parseOrders(const std::string& text) {
    if (text == "exhaustive") return OrderFamilyMode::exhaustive();
    if (text == "blocks") return OrderFamilyMode::blocks();
    if (text.rfind("sampled:", 0) == 0) {
        std::string rest = text.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw InvalidSpecError("sampled mode must look like sampled:N:SEED");
        try {
            int n = std::stoi(rest.substr(0, colon));
            std::uint64_t seed = std::stoull(rest.substr(colon + 1));
            return OrderFamilyMode::sampled(n, seed);
        } catch (const std::exception&) {
            throw InvalidSpecError("cannot parse sampled:N:SEED from '" + text + "'");
        }
    }
    throw InvalidSpecError("unknown order family '" + text + "'");
}

std::string latexBetti(const BettiTable& table) {
    // Macaulay-style display: row r holds the strand j - i = r, column i.
    auto graded = table.graded();
    int pd = table.pdim();
    long long regv = table.reg();
    std::string out = "\\begin{array}{r|" + std::string(pd + 1, 'c') + "}\n";
    for (int i = 0; i <= pd; ++i) out += " & " + std::to_string(i);
    out += " \\\\\\hline\n";
    for (long long r = 0; r <= regv; ++r) {
        out += std::to_string(r);
        for (int i = 0; i <= pd; ++i) {
            auto it = graded.find({i, r + i});
            out += " & " + (it == graded.end() ? std::string(".") : std::to_string(it->second));
        }
        out += " \\\\\n";
    }
    out += "\\end{array}\n";
    return out;
}

int cmdInfo(const std::string& paths, const std::string& format) {
    MultiPathSpec spec = parsePaths(paths);
    if (format == "json") {
        std::cout << info_json(spec);
        return 0;
    }
    SimpleGraph g = build_graph(spec);
    std::cout << "spec:      " << spec.str() << "\n"
              << "vertices:  " << g.vertexCount() << "\n"
              << "edges:     " << g.edgeCount() << "\n"
              << "type:      "
              << (spec.isEvenType() ? "even" : (spec.isOddType() ? "odd" : "mixed")) << " ("
              << spec.evenCount() << " even, " << spec.oddCount() << " odd)\n"
              << "bipartite: " << (spec.isBipartite() ? "yes" : "no") << "\n"
              << "pdim:      " << pdim_formula(spec) << "\n"
              << "mat:       " << matching_number(spec) << "\n"
              << "reg:       " << regularity_formula(spec) << "\n"
              << "Theta:     " << theta(spec).str() << "\n"
              << "D:         " << big_d(spec).str() << "\n";
    return 0;
}

int cmdBetti(const std::string& paths, const std::string& which, const std::string& format) {
    MultiPathSpec spec = parsePaths(paths);
    BettiTable table = multigraded_betti(spec);

    if (format == "json") {
        std::cout << betti_json(spec);
        return 0;
    }
    if (format == "latex") {
        std::cout << latexBetti(table);
        return 0;
    }
    if (which == "total") {
        auto totals = table.totals();
        if (format == "csv") {
            std::cout << "i,beta\n";
            for (std::size_t i = 0; i < totals.size(); ++i)
                std::cout << i << "," << totals[i] << "\n";
        } else {
            for (std::size_t i = 0; i < totals.size(); ++i)
                std::cout << (i ? ", " : "") << totals[i];
            std::cout << "\n";
        }
        return 0;
    }
    if (which == "graded") {
        if (format == "csv") std::cout << "i,j,beta\n";
        for (const auto& [key, v] : table.graded()) {
            if (format == "csv")
                std::cout << key.first << "," << key.second << "," << v << "\n";
            else
                std::cout << "beta_{" << key.first << "," << key.second << "} = " << v << "\n";
        }
        return 0;
    }
    if (format == "csv") std::cout << "i,monomial,beta\n";
    for (const auto& [key, v] : table.entries()) {
        if (format == "csv")
            std::cout << key.first << "," << key.second.str() << "," << v << "\n";
        else
            std::cout << "beta_{" << key.first << ", " << key.second.str() << "} = " << v << "\n";
    }
    return 0;
}

int cmdOracle(const std::string& paths, const std::string& orderText, const std::string& emit,
              const std::string& format) {
    MultiPathSpec spec = parsePaths(paths);
    MonomialOrder ord = parseOrder(spec, orderText);
    MonomialIdeal I = initial_ideal(spec, ord);
    if (emit == "initial") {
        if (I.isZero()) {
            std::cout << "0\n";
            return 0;
        }
        for (const auto& g : I.generatorStrings()) std::cout << g << "\n";
        return 0;
    }
    BettiTable table = betti_table_monomial(I, edge_degree_map(spec));
    if (format == "json") {
        std::cout << oracle_json(spec, table, ord.str());
        return 0;
    }
    for (const auto& [key, v] : table.entries())
        std::cout << "beta_{" << key.first << ", " << key.second.str() << "} = " << v << "\n";
    return 0;
}

int cmdVerify(const std::string& paths, const std::string& orders, bool strict) {
    MultiPathSpec spec = parsePaths(paths);
    VerificationReport rep = run_verification(spec, parseOrders(orders));
    std::cout << report_json(rep, strict);
    return rep.exitCode(strict);
}

int cmdCanonical(const std::string& paths, const std::string& format) {
    MultiPathSpec spec = parsePaths(paths);
    int p = pdim_formula(spec);
    std::set<MultiDegree> top;
    if (p == 0)
        top.insert(MultiDegree{});
    else
        top = n_i(spec, p);
    MultiDegree d = big_d(spec);

    if (format == "json") {
        std::cout << canonical_json(spec);
        return 0;
    }
    std::cout << "top-support:\n";
    for (const auto& alpha : top) std::cout << "  " << alpha.str() << "\n";
    std::cout << "canonical-generators:\n";
    for (const auto& alpha : top) std::cout << "  " << (d - alpha).str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers and canonical modules of multi-path graph edge rings"};
    app.require_subcommand(1);

    std::string paths, format = "text", which = "multigraded";
    std::string orderText = "lex:natural", emit = "betti", orders = "blocks";
    bool strict = false;

    auto* info = app.add_subcommand("info", "graph and invariant summary");
    info->add_option("--paths", paths, "comma-separated path lengths")->required();
    info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* betti = app.add_subcommand("betti", "formula-side Betti tables");
    betti->add_option("--paths", paths)->required();
    auto* total = betti->add_flag("--total", "total Betti numbers");
    auto* graded = betti->add_flag("--graded", "standard-graded table");
    betti->add_flag("--multigraded", "multigraded table (default)");
    betti->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv", "latex"}));

    auto* oracle = app.add_subcommand("oracle", "initial ideals and the homology oracle");
    oracle->add_option("--paths", paths)->required();
    oracle->add_option("--order", orderText, "kind:natural|rev|<edge list> (default lex:natural)");
    oracle->add_option("--emit", emit)->check(CLI::IsMember({"initial", "betti"}));
    oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "end-to-end verification pipeline");
    verify->add_option("--paths", paths)->required();
    verify->add_option("--orders", orders, "exhaustive|blocks|sampled:N:SEED (default blocks)");
    verify->add_flag("--strict", strict, "soft checks also gate the exit status");

    auto* canonical = app.add_subcommand("canonical", "top-support and canonical generators");
    canonical->add_option("--paths", paths)->required();
    canonical->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return cmdInfo(paths, format);
        if (betti->parsed()) {
            if (total->count()) which = "total";
            else if (graded->count()) which = "graded";
            return cmdBetti(paths, which, format);
        }
        if (oracle->parsed()) return cmdOracle(paths, orderText, emit, format);
        if (verify->parsed()) return cmdVerify(paths, orders, strict);
        if (canonical->parsed()) return cmdCanonical(paths, format);
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
