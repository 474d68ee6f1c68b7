#ifndef EDGERING_TORIC_HPP
#define EDGERING_TORIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edgering/monomial_ideal.hpp"
#include "edgering/multipath.hpp"

namespace edgering {

// Monomial in the edge variables of a multi-path graph.
class EdgeMonomial {
public:
    EdgeMonomial() = default;

    int at(const Edge& e) const;
    void add(const Edge& e, int k);

    int totalDegree() const;
    bool isSquareFree() const;
    bool divides(const EdgeMonomial& o) const;

    EdgeMonomial& operator*=(const EdgeMonomial& o);
    friend EdgeMonomial operator*(EdgeMonomial a, const EdgeMonomial& b) { return a *= b; }

    const std::map<Edge, int>& entries() const { return exp_; }

    // Factors sorted by the natural edge order: "e1_1*e2_2".
    std::string str() const;

    friend auto operator<=>(const EdgeMonomial& a, const EdgeMonomial& b) {
        return a.exp_ <=> b.exp_;
    }
    friend bool operator==(const EdgeMonomial& a, const EdgeMonomial& b) {
        return a.exp_ == b.exp_;
    }

private:
    std::map<Edge, int> exp_;
};

// Binomial f_W of the even closed walk through two same-parity paths:
// path a traversed v1 -> v2, then path b traversed v2 -> v1; edges at odd
// walk positions go to `plus`.
struct PrimitiveBinomial {
    EdgeMonomial plus;
    EdgeMonomial minus;
    std::pair<int, int> walk; // path labels (a, b), a < b

    std::string str() const { return plus.str() + " - " + minus.str(); }
};

enum class OrderKind { Lex, GrLex, GrevLex };

std::string order_kind_name(OrderKind k);

// A monomial order on the edge variables: lex/grlex/grevlex composed with a
// permutation of the variables (most significant first).
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, std::vector<Edge> ranking);

    static MonomialOrder natural(const MultiPathSpec& spec, OrderKind kind);

    OrderKind kind() const { return kind_; }
    const std::vector<Edge>& ranking() const { return ranking_; }

    // negative / zero / positive when a < b / a == b / a > b.
    int compare(const EdgeMonomial& a, const EdgeMonomial& b) const;

    std::string str() const; // "lex:e1_1,e1_2,..."

private:
    OrderKind kind_;
    std::vector<Edge> ranking_;
};

// One binomial per unordered same-parity path pair {a, b}, a < b.  This set
// is a universal Groebner basis of the toric ideal.
std::vector<PrimitiveBinomial> primitive_walks(const MultiPathSpec& spec);

const EdgeMonomial& leading_term(const PrimitiveBinomial& b, const MonomialOrder& ord);

// Ideal of leading terms over the edge variables in natural order, with
// generators minimalized; always square-free here.
MonomialIdeal initial_ideal(const MultiPathSpec& spec, const MonomialOrder& ord);

// Vertex multidegree of each edge variable, aligned with spec.edges().
std::vector<MultiDegree> edge_degree_map(const MultiPathSpec& spec);

// Image of an edge monomial under the degree map (sum of endpoint vectors).
MultiDegree mdeg(const MultiPathSpec& spec, const EdgeMonomial& m);

struct OrderFamilyMode {
    enum class Kind { Exhaustive, Blocks, Sampled };
    Kind kind = Kind::Blocks;
    int sampleCount = 0;
    std::uint64_t seed = 0;

    static OrderFamilyMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
    static OrderFamilyMode blocks() { return {Kind::Blocks, 0, 0}; }
    static OrderFamilyMode sampled(int n, std::uint64_t seed) { return {Kind::Sampled, n, seed}; }
};

// Deterministic order family.  Exhaustive: every edge permutation (capped at
// 8 edges) under lex and grevlex.  Blocks: path-block permutations times
// per-block direction under all three kinds.  Sampled: n seeded random
// permutations.  Natural lex and grevlex are always included.
std::vector<MonomialOrder> order_family(const MultiPathSpec& spec, const OrderFamilyMode& mode);

} // namespace edgering

#endif
