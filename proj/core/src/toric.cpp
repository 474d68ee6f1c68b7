#include "edgering/toric.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "edgering/errors.hpp"

namespace edgering {

int EdgeMonomial::at(const Edge& e) const {
    auto it = exp_.find(e);
    return it == exp_.end() ? 0 : it->second;
}

void EdgeMonomial::add(const Edge& e, int k) {
    int v = at(e) + k;
    if (v == 0)
        exp_.erase(e);
    else
        exp_[e] = v;
}

int EdgeMonomial::totalDegree() const {
    int t = 0;
    for (const auto& [e, k] : exp_) t += k;
    return t;
}

bool EdgeMonomial::isSquareFree() const {
    for (const auto& [e, k] : exp_)
        if (k > 1) return false;
    return true;
}

bool EdgeMonomial::divides(const EdgeMonomial& o) const {
    for (const auto& [e, k] : exp_)
        if (k > o.at(e)) return false;
    return true;
}

EdgeMonomial& EdgeMonomial::operator*=(const EdgeMonomial& o) {
    for (const auto& [e, k] : o.exp_) add(e, k);
    return *this;
}

std::string EdgeMonomial::str() const {
    if (exp_.empty()) return "1";
    std::string s;
    for (const auto& [e, k] : exp_) {
        if (!s.empty()) s += "*";
        s += e.str();
        if (k != 1) s += "^" + std::to_string(k);
    }
    return s;
}

std::string order_kind_name(OrderKind k) {
    switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    default: return "grevlex";
    }
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<Edge> ranking)
    : kind_(kind), ranking_(std::move(ranking)) {
    std::vector<Edge> sorted = ranking_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("variable ranking is not a permutation");
}

MonomialOrder MonomialOrder::natural(const MultiPathSpec& spec, OrderKind kind) {
    return MonomialOrder(kind, spec.edges());
}

int MonomialOrder::compare(const EdgeMonomial& a, const EdgeMonomial& b) const {
    if (kind_ != OrderKind::Lex) {
        int da = a.totalDegree(), db = b.totalDegree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind_ == OrderKind::GrevLex) {
        for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
            int d = a.at(*it) - b.at(*it);
            if (d != 0) return d > 0 ? -1 : 1; // smaller trailing exponent wins
        }
        return 0;
    }
    for (const Edge& e : ranking_) {
        int d = a.at(e) - b.at(e);
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

std::string MonomialOrder::str() const {
    std::string s = order_kind_name(kind_) + ":";
    for (std::size_t i = 0; i < ranking_.size(); ++i) {
        if (i) s += ",";
        s += ranking_[i].str();
    }
    return s;
}

std::vector<PrimitiveBinomial> primitive_walks(const MultiPathSpec& spec) {
    std::vector<PrimitiveBinomial> out;
    auto addPairs = [&](const std::vector<int>& labels) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                int a = labels[i], b = labels[j];
                int la = spec.lengthOf(a), lb = spec.lengthOf(b);
                PrimitiveBinomial f;
                f.walk = {a, b};
                int pos = 0;
                for (int k = 1; k <= la; ++k) // path a from v1 to v2
                    (++pos % 2 == 1 ? f.plus : f.minus).add(Edge{a, k}, 1);
                for (int k = lb; k >= 1; --k) // path b back from v2 to v1
                    (++pos % 2 == 1 ? f.plus : f.minus).add(Edge{b, k}, 1);
                out.push_back(std::move(f));
            }
        }
    };
    addPairs(spec.evenLabels());
    addPairs(spec.oddLabels());
    std::sort(out.begin(), out.end(),
              [](const PrimitiveBinomial& x, const PrimitiveBinomial& y) { return x.walk < y.walk; });
    return out;
}

const EdgeMonomial& leading_term(const PrimitiveBinomial& b, const MonomialOrder& ord) {
    int c = ord.compare(b.plus, b.minus);
    if (c == 0) throw Error("degenerate binomial with equal terms");
    return c > 0 ? b.plus : b.minus;
}

MonomialIdeal initial_ideal(const MultiPathSpec& spec, const MonomialOrder& ord) {
    std::vector<Edge> edges = spec.edges();
    std::vector<std::string> vars;
    vars.reserve(edges.size());
    for (const Edge& e : edges) vars.push_back(e.str());

    std::vector<Expo> gens;
    for (const PrimitiveBinomial& b : primitive_walks(spec)) {
        const EdgeMonomial& lt = leading_term(b, ord);
        Expo g(edges.size(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) g[i] = lt.at(edges[i]);
        gens.push_back(std::move(g));
    }
    return MonomialIdeal::fromGenerators(std::move(vars), std::move(gens));
}

std::vector<MultiDegree> edge_degree_map(const MultiPathSpec& spec) {
    std::vector<MultiDegree> degs;
    for (const Edge& e : spec.edges()) {
        auto [a, b] = spec.endpoints(e);
        MultiDegree d;
        d.add(a, 1);
        d.add(b, 1);
        degs.push_back(std::move(d));
    }
    return degs;
}

MultiDegree mdeg(const MultiPathSpec& spec, const EdgeMonomial& m) {
    MultiDegree d;
    for (const auto& [e, k] : m.entries()) {
        auto [a, b] = spec.endpoints(e);
        d.add(a, k);
        d.add(b, k);
    }
    return d;
}

namespace {

void appendNaturalOrders(const MultiPathSpec& spec, std::vector<MonomialOrder>& out) {
    out.push_back(MonomialOrder::natural(spec, OrderKind::Lex));
    out.push_back(MonomialOrder::natural(spec, OrderKind::GrevLex));
}

std::vector<MonomialOrder> dedupBySerialization(std::vector<MonomialOrder> orders) {
    std::vector<MonomialOrder> out;
    std::set<std::string> seen;
    for (auto& o : orders)
        if (seen.insert(o.str()).second) out.push_back(std::move(o));
    return out;
}

} // namespace

std::vector<MonomialOrder> order_family(const MultiPathSpec& spec, const OrderFamilyMode& mode) {
    std::vector<MonomialOrder> out;
    const std::vector<Edge> natural = spec.edges();

    switch (mode.kind) {
    case OrderFamilyMode::Kind::Exhaustive: {
        if (natural.size() > 8)
            throw TooLargeError("exhaustive order family capped at 8 edge variables, got " +
                                std::to_string(natural.size()));
        for (OrderKind kind : {OrderKind::Lex, OrderKind::GrevLex}) {
            std::vector<Edge> perm = natural;
            do {
                out.emplace_back(kind, perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        break;
    }
    case OrderFamilyMode::Kind::Blocks: {
        std::vector<int> blockOrder = spec.labels();
        std::sort(blockOrder.begin(), blockOrder.end());
        for (OrderKind kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
            std::vector<int> perm = blockOrder;
            do {
                int t = static_cast<int>(perm.size());
                for (std::uint32_t dirs = 0; dirs < (1u << t); ++dirs) {
                    std::vector<Edge> ranking;
                    for (int b = 0; b < t; ++b) {
                        int label = perm[b];
                        int L = spec.lengthOf(label);
                        if (dirs & (1u << b))
                            for (int j = L; j >= 1; --j) ranking.push_back(Edge{label, j});
                        else
                            for (int j = 1; j <= L; ++j) ranking.push_back(Edge{label, j});
                    }
                    out.emplace_back(kind, std::move(ranking));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        appendNaturalOrders(spec, out);
        break;
    }
    case OrderFamilyMode::Kind::Sampled: {
        appendNaturalOrders(spec, out);
        std::mt19937_64 rng(mode.seed);
        for (int i = 0; i < mode.sampleCount; ++i) {
            std::vector<Edge> perm = natural;
            for (std::size_t j = perm.size(); j > 1; --j)
                std::swap(perm[j - 1], perm[rng() % j]);
            OrderKind kind = static_cast<OrderKind>(rng() % 3);
            out.emplace_back(kind, std::move(perm));
        }
        break;
    }
    }
    return dedupBySerialization(std::move(out));
}

} // namespace edgering
