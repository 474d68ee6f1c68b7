#ifndef EDGERING_SIMPLICIAL_HPP
#define EDGERING_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

namespace edgering {

// A finite simplicial complex on ground set {0,..,groundSize-1}, stored by its
// maximal faces as bitmasks.  Faces are implicitly closed under subsets; the
// empty face belongs to every nonvoid complex.  An empty facet list is the
// void complex; facets == {0} is the complex whose only face is the empty one.
struct SimplicialComplex {
    int groundSize = 0;
    std::vector<std::uint32_t> facets;

    // Drops faces contained in others, dedups, sorts.
    static SimplicialComplex fromFaces(int groundSize, std::vector<std::uint32_t> faces);

    bool isVoid() const { return facets.empty(); }
};

// Ranks of reduced simplicial homology over the rationals.  Entry [d+1] is
// the rank in dimension d, for d = -1 .. groundSize-1 (all zero for the void
// complex).  Faces are enumerated, collapsible pairs removed, and the ranks
// of the remaining boundary matrices computed by exact integer fraction-free
// elimination.  Guarded by caps().ground.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& K);

} // namespace edgering

#endif
