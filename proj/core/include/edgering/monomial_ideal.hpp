#ifndef EDGERING_MONOMIAL_IDEAL_HPP
#define EDGERING_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

namespace edgering {

// Exponent vector over a fixed variable list.
using Expo = std::vector<int>;

bool expo_divides(const Expo& a, const Expo& b); // a <= b entrywise
Expo expo_lcm(const Expo& a, const Expo& b);
int expo_total(const Expo& a);

// A monomial ideal over an arbitrary finite variable set, kept as its unique
// minimal generating set.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    // Prunes non-minimal generators, drops duplicates, sorts.
    static MonomialIdeal fromGenerators(std::vector<std::string> vars,
                                        std::vector<Expo> gens);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Expo>& gens() const { return gens_; }

    bool isZero() const { return gens_.empty(); }
    bool isSquareFree() const;
    bool contains(const Expo& m) const; // some generator divides m

    std::string monomialString(const Expo& m) const; // "x*y^2", "1" for zero
    std::vector<std::string> generatorStrings() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> vars_;
    std::vector<Expo> gens_;
};

} // namespace edgering

#endif
