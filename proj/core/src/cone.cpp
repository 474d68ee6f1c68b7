#include "edgering/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "edgering/errors.hpp"

namespace edgering {

long long LinearInequality::eval(const MultiDegree& alpha) const {
    long long s = 0;
    for (const auto& [v, c] : coeff) s += c * alpha.at(v);
    return s;
}

bool LinearInequality::holds(const MultiDegree& alpha, bool strict) const {
    long long s = eval(alpha);
    if (rel == Rel::Eq) return s == 0;
    return strict ? s > 0 : s >= 0;
}

std::string LinearInequality::str() const {
    std::string neg, pos;
    for (const auto& [v, c] : coeff) {
        std::string term;
        if (c == 1 || c == -1)
            term = "x(" + v.str() + ")";
        else
            term = std::to_string(std::abs(c)) + "*x(" + v.str() + ")";
        if (c > 0) {
            if (!pos.empty()) pos += "+";
            pos += term;
        } else if (c < 0) {
            if (!neg.empty()) neg += "+";
            neg += term;
        }
    }
    if (pos.empty()) pos = "0";
    if (rel == Rel::Eq) return neg.empty() ? pos + " == 0" : neg + " == " + pos;
    if (neg.empty()) return pos + " >= 0";
    return neg + " <= " + pos;
}

namespace {

std::string setOrigin(const std::vector<Vertex>& t) {
    std::string s = "T{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].str();
    }
    return s + "}";
}

} // namespace

ConeDescription facet_description(const MultiPathSpec& spec) {
    SimpleGraph g = build_graph(spec);
    auto coloring = g.bipartition();
    if (!coloring) throw NotBipartiteError("edge cone facets require a bipartite multi-path graph");
    const auto& color = *coloring; // v1 has index 0, hence color 0

    const int n = g.vertexCount();
    std::vector<int> side1; // indices of the bipartition class not holding v1
    for (int i = 0; i < n; ++i)
        if (color[i] == 1) side1.push_back(i);
    if (side1.size() > 18)
        throw TooLargeError("facet search capped at 18 vertices per side, got " +
                            std::to_string(side1.size()));

    ConeDescription cone;
    cone.affine.rel = LinearInequality::Rel::Eq;
    cone.affine.origin = "affine";
    for (int i = 0; i < n; ++i)
        cone.affine.coeff[g.vertices()[i]] = color[i] == 1 ? 1 : -1;

    std::vector<LinearInequality> candidates;

    // (a) vertex facets: x_i >= 0 whenever G \ i stays connected
    for (int i = 0; i < n; ++i) {
        std::vector<bool> keep(n, true);
        keep[i] = false;
        if (!g.inducedConnected(keep)) continue;
        LinearInequality ineq;
        ineq.coeff[g.vertices()[i]] = 1;
        ineq.origin = "vertex " + g.vertices()[i].str();
        candidates.push_back(std::move(ineq));
    }

    // (b) independent-set facets: sum(T) <= sum(N(T)) for proper nonempty
    // T within side1 with G_{T u N(T)} and its complement connected
    const std::uint32_t full = side1.empty() ? 0 : (1u << side1.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<bool> inT(n, false), inTN(n, false);
        std::vector<Vertex> tVerts;
        for (std::size_t b = 0; b < side1.size(); ++b)
            if (mask & (1u << b)) {
                inT[side1[b]] = true;
                inTN[side1[b]] = true;
                tVerts.push_back(g.vertices()[side1[b]]);
            }
        for (int v = 0; v < n; ++v)
            if (inT[v])
                for (int w : g.neighbors(v)) inTN[w] = true;
        std::vector<bool> rest(n);
        for (int v = 0; v < n; ++v) rest[v] = !inTN[v];
        if (!g.inducedConnected(inTN) || !g.inducedConnected(rest)) continue;

        LinearInequality ineq;
        for (int v = 0; v < n; ++v) {
            if (inT[v])
                ineq.coeff[g.vertices()[v]] = -1;
            else if (inTN[v])
                ineq.coeff[g.vertices()[v]] = 1;
        }
        ineq.origin = setOrigin(tVerts);
        candidates.push_back(std::move(ineq));
    }

    // Deduplicate by the set of edge generators each hyperplane annihilates;
    // hyperplanes cutting the same facet are interchangeable on the cone.
    std::vector<MultiDegree> rays;
    for (const Edge& e : spec.edges()) {
        auto [a, b] = spec.endpoints(e);
        MultiDegree d;
        d.add(a, 1);
        d.add(b, 1);
        rays.push_back(std::move(d));
    }
    if (rays.size() > 64) throw TooLargeError("facet dedup supports at most 64 edges");
    std::set<std::uint64_t> seen;
    for (auto& ineq : candidates) {
        std::uint64_t key = 0;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            long long v = ineq.eval(rays[r]);
            if (v < 0) throw Error("inequality " + ineq.str() + " cuts off an edge generator");
            if (v == 0) key |= (1ull << r);
        }
        if (seen.insert(key).second) cone.facets.push_back(std::move(ineq));
    }
    return cone;
}

namespace {

// Enumerates nonempty subsets of `pool` together with one integer choice per
// chosen element, ranges given by `lo(p)`..`hi(p)`; calls f(choices) with
// label -> value.
void forSubsetChoices(const std::vector<int>& pool,
                      const std::function<int(int)>& lo,
                      const std::function<int(int)>& hi,
                      const std::function<void(const std::map<int, int>&)>& f) {
    std::map<int, int> current;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == pool.size()) {
            if (!current.empty()) f(current);
            return;
        }
        rec(idx + 1); // skip pool[idx]
        int p = pool[idx];
        for (int k = lo(p); k <= hi(p); ++k) {
            current[p] = k;
            rec(idx + 1);
        }
        current.erase(p);
    };
    rec(0);
}

} // namespace

ConeDescription even_type_inequalities(const MultiPathSpec& spec) {
    if (!spec.isEvenType()) throw NotEvenTypeError("inequality system defined for even type only");

    const std::vector<int> labels = spec.labels();
    auto ell = [&](int p) { return spec.ellOf(p); };

    ConeDescription cone;

    // (1) affine hull: odd-position internal vertices balance the rest
    cone.affine.rel = LinearInequality::Rel::Eq;
    cone.affine.origin = "(1)";
    for (int p : labels) {
        for (int i = 1; i <= ell(p); ++i) cone.affine.coeff[Vertex::u(p, 2 * i - 1)] = 1;
        for (int i = 1; i <= ell(p) - 1; ++i) cone.affine.coeff[Vertex::u(p, 2 * i)] = -1;
    }
    cone.affine.coeff[Vertex::v1()] = -1;
    cone.affine.coeff[Vertex::v2()] = -1;

    auto push = [&](LinearInequality ineq) { cone.facets.push_back(std::move(ineq)); };

    // (2), (3) nonnegativity
    for (const Vertex& v : spec.vertices()) {
        LinearInequality ineq;
        ineq.coeff[v] = 1;
        ineq.origin = v.isHub() ? "(3)" : "(2)";
        push(std::move(ineq));
    }

    // (4) prefix runs toward v1: sum of a_{p,2i} (i<=k_p) + b1 >= matching odd prefix
    forSubsetChoices(
        labels, [](int) { return 1; }, [&](int p) { return ell(p) - 1; },
        [&](const std::map<int, int>& ks) {
            LinearInequality ineq;
            ineq.origin = "(4)";
            for (const auto& [p, k] : ks)
                for (int i = 1; i <= k; ++i) {
                    ineq.coeff[Vertex::u(p, 2 * i)] = 1;
                    ineq.coeff[Vertex::u(p, 2 * i - 1)] = -1;
                }
            ineq.coeff[Vertex::v1()] = 1;
            push(std::move(ineq));
        });

    // (5) suffix runs toward v2
    forSubsetChoices(
        labels, [](int) { return 2; }, [&](int p) { return ell(p); },
        [&](const std::map<int, int>& ks) {
            LinearInequality ineq;
            ineq.origin = "(5)";
            for (const auto& [p, k] : ks) {
                for (int i = k - 1; i <= ell(p) - 1; ++i) ineq.coeff[Vertex::u(p, 2 * i)] = 1;
                for (int i = k; i <= ell(p); ++i) ineq.coeff[Vertex::u(p, 2 * i - 1)] = -1;
            }
            ineq.coeff[Vertex::v2()] = 1;
            push(std::move(ineq));
        });

    // All-other-path terms shared by (6)-(9).
    auto allBut = [&](int p, LinearInequality& ineq) {
        for (int j : labels) {
            if (j == p) continue;
            for (int i = 1; i <= ell(j) - 1; ++i) ineq.coeff[Vertex::u(j, 2 * i)] = 1;
            for (int i = 1; i <= ell(j); ++i) ineq.coeff[Vertex::u(j, 2 * i - 1)] = -1;
        }
        ineq.coeff[Vertex::v1()] = 1;
        ineq.coeff[Vertex::v2()] = 1;
    };

    for (int p : labels) {
        // (6)
        {
            LinearInequality ineq;
            ineq.origin = "(6)";
            allBut(p, ineq);
            push(std::move(ineq));
        }
        // (7) with 1 <= f_p <= ell_p - 1
        for (int f = 1; f <= ell(p) - 1; ++f) {
            LinearInequality ineq;
            ineq.origin = "(7)";
            allBut(p, ineq);
            for (int i = 1; i <= f; ++i) {
                ineq.coeff[Vertex::u(p, 2 * i)] = 1;
                ineq.coeff[Vertex::u(p, 2 * i - 1)] = -1;
            }
            push(std::move(ineq));
        }
        // (8) with 2 <= k_p <= ell_p
        for (int k = 2; k <= ell(p); ++k) {
            LinearInequality ineq;
            ineq.origin = "(8)";
            allBut(p, ineq);
            for (int i = k; i <= ell(p); ++i) ineq.coeff[Vertex::u(p, 2 * i - 2)] = 1;
            for (int i = k; i <= ell(p); ++i) ineq.coeff[Vertex::u(p, 2 * i - 1)] = -1;
            push(std::move(ineq));
        }
        // (9) with 1 <= f_p < k_p - 1 <= ell_p - 1
        for (int f = 1; f <= ell(p) - 1; ++f)
            for (int k = f + 2; k <= ell(p); ++k) {
                LinearInequality ineq;
                ineq.origin = "(9)";
                allBut(p, ineq);
                for (int i = 1; i <= f; ++i) {
                    ineq.coeff[Vertex::u(p, 2 * i)] = 1;
                    ineq.coeff[Vertex::u(p, 2 * i - 1)] = -1;
                }
                for (int i = k; i <= ell(p); ++i) {
                    ineq.coeff[Vertex::u(p, 2 * i - 2)] = 1;
                    ineq.coeff[Vertex::u(p, 2 * i - 1)] = -1;
                }
                push(std::move(ineq));
            }
        // (10) interior runs, 2 <= f_j <= k_j <= ell_j - 1
        for (int f = 2; f <= ell(p) - 1; ++f)
            for (int k = f; k <= ell(p) - 1; ++k) {
                LinearInequality ineq;
                ineq.origin = "(10)";
                for (int i = f - 1; i <= k; ++i) ineq.coeff[Vertex::u(p, 2 * i)] = 1;
                for (int i = f; i <= k; ++i) ineq.coeff[Vertex::u(p, 2 * i - 1)] = -1;
                push(std::move(ineq));
            }
    }
    return cone;
}

bool in_cone(const MultiDegree& alpha, const ConeDescription& cone) {
    if (!cone.affine.holds(alpha, false)) return false;
    for (const auto& ineq : cone.facets)
        if (!ineq.holds(alpha, false)) return false;
    return true;
}

bool in_relint(const MultiDegree& alpha, const ConeDescription& cone) {
    if (!cone.affine.holds(alpha, false)) return false;
    for (const auto& ineq : cone.facets)
        if (!ineq.holds(alpha, true)) return false;
    return true;
}

std::set<MultiDegree> canonical_generators(const MultiPathSpec& spec,
                                           const std::set<MultiDegree>& oracleTop) {
    ConeDescription cone = facet_description(spec);
    const MultiDegree d = big_d(spec);
    std::set<MultiDegree> gens;
    for (const MultiDegree& alpha : oracleTop) {
        MultiDegree g = d - alpha;
        if (!in_relint(g, cone))
            throw VerificationFailedError("claimed generator " + g.str() +
                                          " is not in the relative interior");
        for (const Edge& e : spec.edges()) {
            auto [a, b] = spec.endpoints(e);
            MultiDegree shrunk = g;
            shrunk.add(a, -1);
            shrunk.add(b, -1);
            if (in_relint(shrunk, cone))
                throw VerificationFailedError("claimed generator " + g.str() +
                                              " is not minimal: " + e.str() +
                                              " can be removed");
        }
        gens.insert(std::move(g));
    }
    return gens;
}

} // namespace edgering
