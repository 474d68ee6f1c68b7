#ifndef EDGERING_RESOLUTION_HPP
#define EDGERING_RESOLUTION_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "edgering/monomial_ideal.hpp"
#include "edgering/multipath.hpp"
#include "edgering/simplicial.hpp"

namespace edgering {

// Smallest set of exponent vectors containing the generators and closed
// under pairwise lcm.  Every nonzero Betti multidegree of R/I lies here.
// Guarded by caps().lattice.
std::set<Expo> lcm_lattice(const MonomialIdeal& I);

// Upper Koszul complex of I at alpha: faces are the subsets tau of supp(alpha)
// with x^(alpha - tau) in I.  Ground set = supp(alpha) in variable order.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const Expo& alpha);

// Betti table of R/I in the ideal's own variable grading.
class RawBettiTable {
public:
    std::map<std::pair<int, Expo>, long long>& entries() { return entries_; }
    const std::map<std::pair<int, Expo>, long long>& entries() const { return entries_; }

    long long at(int i, const Expo& alpha) const;
    long long total(int i) const;
    std::vector<long long> totals() const; // index i = 0..pdim

    int pdim() const;      // max homological index with a nonzero entry
    long long reg() const; // max over entries of total(alpha) - i

private:
    std::map<std::pair<int, Expo>, long long> entries_;
};

// Betti table regraded into vertex multidegrees of a multi-path graph.
class BettiTable {
public:
    std::map<std::pair<int, MultiDegree>, long long>& entries() { return entries_; }
    const std::map<std::pair<int, MultiDegree>, long long>& entries() const { return entries_; }

    long long at(int i, const MultiDegree& alpha) const;
    void add(int i, const MultiDegree& alpha, long long v);

    long long total(int i) const;
    std::vector<long long> totals() const;

    // Standard-graded aggregation: beta_{i,j} with j = |alpha|/2.  Every
    // multidegree in the vertex grading of an edge ring has even total degree.
    std::map<std::pair<int, long long>, long long> graded() const;

    int pdim() const;
    long long reg() const; // max over entries of |alpha|/2 - i

    // Multidegrees with a nonzero entry at homological index i.
    std::set<MultiDegree> supportAt(int i) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<std::pair<int, MultiDegree>, long long> entries_;
};

// Multigraded Betti numbers of R/I by reduced homology of upper Koszul
// complexes over the lcm lattice: beta_{i,alpha} = rank H~_{i-2}(K^alpha(I)),
// plus beta_{0,0} = 1.
RawBettiTable betti_table_raw(const MonomialIdeal& I);

// Pushforward along a degree map (one MultiDegree per variable); collisions
// accumulate additively.
BettiTable regrade(const RawBettiTable& raw, const std::vector<MultiDegree>& varDegrees);

BettiTable betti_table_monomial(const MonomialIdeal& I,
                                const std::vector<MultiDegree>& varDegrees);

// Numerator of the multigraded Hilbert series of R/I by inclusion-exclusion
// over generator subsets; the independent side of the alternating-sum check.
std::map<Expo, long long> hilbert_numerator_ie(const MonomialIdeal& I);

} // namespace edgering

#endif
