#include "edgering/monomial_ideal.hpp"

#include <algorithm>

#include "edgering/errors.hpp"

namespace edgering {

bool expo_divides(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) throw Error("exponent vectors over different variable sets");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) throw Error("exponent vectors over different variable sets");
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int expo_total(const Expo& a) {
    int t = 0;
    for (int e : a) t += e;
    return t;
}

MonomialIdeal MonomialIdeal::fromGenerators(std::vector<std::string> vars,
                                            std::vector<Expo> gens) {
    MonomialIdeal I;
    I.vars_ = std::move(vars);
    for (const Expo& g : gens) {
        if (g.size() != I.vars_.size())
            throw Error("generator arity does not match variable count");
        for (int e : g)
            if (e < 0) throw Error("negative exponent in generator");
        if (expo_total(g) == 0)
            throw Error("the unit monomial cannot be a minimal generator");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // divisibility pruning
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && expo_divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
        if (!redundant) I.gens_.push_back(gens[i]);
    }
    return I;
}

bool MonomialIdeal::isSquareFree() const {
    for (const Expo& g : gens_)
        for (int e : g)
            if (e > 1) return false;
    return true;
}

bool MonomialIdeal::contains(const Expo& m) const {
    for (const Expo& g : gens_)
        if (expo_divides(g, m)) return true;
    return false;
}

std::string MonomialIdeal::monomialString(const Expo& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars_[i];
        if (m[i] != 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<std::string> MonomialIdeal::generatorStrings() const {
    std::vector<std::string> r;
    r.reserve(gens_.size());
    for (const Expo& g : gens_) r.push_back(monomialString(g));
    return r;
}

} // namespace edgering
