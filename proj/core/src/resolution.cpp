#include "edgering/resolution.hpp"

#include <algorithm>
#include <deque>

#include "edgering/caps.hpp"
#include "edgering/errors.hpp"

namespace edgering {

std::set<Expo> lcm_lattice(const MonomialIdeal& I) {
    std::set<Expo> lattice;
    std::deque<Expo> work;
    for (const Expo& g : I.gens()) {
        if (lattice.insert(g).second) work.push_back(g);
    }
    while (!work.empty()) {
        Expo x = work.front();
        work.pop_front();
        for (const Expo& g : I.gens()) {
            Expo j = expo_lcm(x, g);
            if (lattice.insert(j).second) {
                if (static_cast<int>(lattice.size()) > caps().lattice)
                    throw TooLargeError("lcm lattice capped at " + std::to_string(caps().lattice) +
                                        " elements");
                work.push_back(j);
            }
        }
    }
    return lattice;
}

SimplicialComplex upper_koszul(const MonomialIdeal& I, const Expo& alpha) {
    if (alpha.size() != I.vars().size())
        throw Error("multidegree arity does not match the ideal's variable count");
    std::vector<int> ground; // variable indices of supp(alpha), increasing
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        if (alpha[v] < 0) throw Error("negative multidegree");
        if (alpha[v] > 0) ground.push_back(static_cast<int>(v));
    }
    int n = static_cast<int>(ground.size());
    if (n > caps().ground)
        throw TooLargeError("upper Koszul ground set capped at " + std::to_string(caps().ground));

    bool squarefree = I.isSquareFree() && std::all_of(alpha.begin(), alpha.end(),
                                                      [](int e) { return e <= 1; });
    std::vector<std::uint32_t> faces;
    if (squarefree) {
        // Faces are exactly the tau avoiding the support of some generator
        // dividing x^alpha, so the facet candidates are those complements.
        for (const Expo& g : I.gens()) {
            if (!expo_divides(g, alpha)) continue;
            std::uint32_t mask = 0;
            for (int b = 0; b < n; ++b)
                if (g[ground[b]] == 0) mask |= (1u << b);
            faces.push_back(mask);
        }
    } else {
        Expo rest(alpha.size());
        for (std::uint32_t tau = 0; tau < (1u << n); ++tau) {
            rest = alpha;
            for (int b = 0; b < n; ++b)
                if (tau & (1u << b)) rest[ground[b]] -= 1;
            if (I.contains(rest)) faces.push_back(tau);
        }
    }
    return SimplicialComplex::fromFaces(n, std::move(faces));
}

long long RawBettiTable::at(int i, const Expo& alpha) const {
    auto it = entries_.find({i, alpha});
    return it == entries_.end() ? 0 : it->second;
}

long long RawBettiTable::total(int i) const {
    long long t = 0;
    for (const auto& [key, v] : entries_)
        if (key.first == i) t += v;
    return t;
}

std::vector<long long> RawBettiTable::totals() const {
    std::vector<long long> r(static_cast<std::size_t>(pdim()) + 1, 0);
    for (const auto& [key, v] : entries_) r[key.first] += v;
    return r;
}

int RawBettiTable::pdim() const {
    if (entries_.empty()) throw EmptyTableError("Betti table is empty");
    int p = 0;
    for (const auto& [key, v] : entries_)
        if (v != 0) p = std::max(p, key.first);
    return p;
}

long long RawBettiTable::reg() const {
    if (entries_.empty()) throw EmptyTableError("Betti table is empty");
    long long r = 0;
    for (const auto& [key, v] : entries_)
        if (v != 0) r = std::max(r, static_cast<long long>(expo_total(key.second)) - key.first);
    return r;
}

long long BettiTable::at(int i, const MultiDegree& alpha) const {
    auto it = entries_.find({i, alpha});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, const MultiDegree& alpha, long long v) {
    if (v == 0) return;
    auto key = std::make_pair(i, alpha);
    auto it = entries_.find(key);
    if (it == entries_.end())
        entries_.emplace(key, v);
    else if ((it->second += v) == 0)
        entries_.erase(it);
}

long long BettiTable::total(int i) const {
    long long t = 0;
    for (const auto& [key, v] : entries_)
        if (key.first == i) t += v;
    return t;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> r(static_cast<std::size_t>(pdim()) + 1, 0);
    for (const auto& [key, v] : entries_) r[key.first] += v;
    return r;
}

std::map<std::pair<int, long long>, long long> BettiTable::graded() const {
    std::map<std::pair<int, long long>, long long> g;
    for (const auto& [key, v] : entries_) {
        long long t = key.second.total();
        if (t % 2 != 0) throw Error("odd total degree in an edge-ring Betti table");
        g[{key.first, t / 2}] += v;
    }
    return g;
}

int BettiTable::pdim() const {
    if (entries_.empty()) throw EmptyTableError("Betti table is empty");
    int p = 0;
    for (const auto& [key, v] : entries_)
        if (v != 0) p = std::max(p, key.first);
    return p;
}

long long BettiTable::reg() const {
    if (entries_.empty()) throw EmptyTableError("Betti table is empty");
    long long r = 0;
    for (const auto& [key, v] : entries_) {
        if (v == 0) continue;
        long long t = key.second.total();
        if (t % 2 != 0) throw Error("odd total degree in an edge-ring Betti table");
        r = std::max(r, t / 2 - key.first);
    }
    return r;
}

std::set<MultiDegree> BettiTable::supportAt(int i) const {
    std::set<MultiDegree> s;
    for (const auto& [key, v] : entries_)
        if (key.first == i && v != 0) s.insert(key.second);
    return s;
}

RawBettiTable betti_table_raw(const MonomialIdeal& I) {
    RawBettiTable table;
    table.entries()[{0, Expo(I.vars().size(), 0)}] = 1;
    for (const Expo& alpha : lcm_lattice(I)) {
        auto ranks = reduced_homology_ranks(upper_koszul(I, alpha));
        for (std::size_t d = 0; d < ranks.size(); ++d)
            if (ranks[d] > 0) table.entries()[{static_cast<int>(d) + 1, alpha}] = ranks[d];
    }
    return table;
}

BettiTable regrade(const RawBettiTable& raw, const std::vector<MultiDegree>& varDegrees) {
    BettiTable out;
    for (const auto& [key, v] : raw.entries()) {
        const Expo& alpha = key.second;
        if (alpha.size() != varDegrees.size())
            throw Error("degree map arity does not match the table's variable count");
        MultiDegree md;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            for (int k = 0; k < alpha[i]; ++k) md += varDegrees[i];
        out.add(key.first, md, v);
    }
    return out;
}

BettiTable betti_table_monomial(const MonomialIdeal& I,
                                const std::vector<MultiDegree>& varDegrees) {
    return regrade(betti_table_raw(I), varDegrees);
}

std::map<Expo, long long> hilbert_numerator_ie(const MonomialIdeal& I) {
    const auto& gens = I.gens();
    if (gens.size() > 20)
        throw TooLargeError("inclusion-exclusion capped at 20 generators");
    std::map<Expo, long long> coeff;
    const std::size_t n = I.vars().size();
    for (std::uint32_t s = 0; s < (1u << gens.size()); ++s) {
        Expo l(n, 0);
        int bits = 0;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (s & (1u << g)) {
                l = expo_lcm(l, gens[g]);
                ++bits;
            }
        coeff[l] += (bits % 2 == 0) ? 1 : -1;
    }
    for (auto it = coeff.begin(); it != coeff.end();)
        it = it->second == 0 ? coeff.erase(it) : std::next(it);
    return coeff;
}

} // namespace edgering
