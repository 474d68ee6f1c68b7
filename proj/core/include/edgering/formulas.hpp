#ifndef EDGERING_FORMULAS_HPP
#define EDGERING_FORMULAS_HPP

#include <map>
#include <set>
#include <vector>

#include "edgering/multipath.hpp"
#include "edgering/resolution.hpp"

namespace edgering {

// Projective dimension of the edge ring: p+q-2 when both parities occur,
// p+q-1 otherwise (p even paths, q odd paths).
int pdim_formula(const MultiPathSpec& spec);

// Top Betti multidegrees all have full vertex support iff neither parity
// count equals one.
bool is_top_betti(const MultiPathSpec& spec);

// The top-support: multidegrees carrying the top nonzero Betti numbers.
// Pure even: Theta*v1^a*v2^(p-2-a); pure odd: Theta*(v1*v2)^b; mixed:
// Theta*v1^(s+t+1)*v2^(p+s-t-1) over 0<=s<=q-2, 0<=t<=p-2.
std::set<MultiDegree> top_support(const MultiPathSpec& spec);

// Label subsets inducing top-Betti sub-multipaths of projective dimension i.
std::vector<std::vector<int>> top_betti_subgraphs(const MultiPathSpec& spec, int i);

// Disjoint union of the top-supports of those subgraphs, embedded in the
// ambient vertex set.
std::set<MultiDegree> n_i(const MultiPathSpec& spec, int i);

// The full multigraded Betti table: beta_{0,0} = 1 and beta_{i,alpha} = 1
// exactly on n_i.
BettiTable multigraded_betti(const MultiPathSpec& spec);

// Standard-graded table; for pure types the direct counting formulas are
// evaluated alongside and must agree.
std::map<std::pair<int, long long>, long long> graded_betti(const MultiPathSpec& spec);

// Total Betti numbers with the closed-form cross-check
// sum_{j+k=i+2, j,k>=2} C(p,j)C(q,k)(j-1)(k-1) + i(C(p,i+1)+C(q,i+1)).
long long total_betti(const MultiPathSpec& spec, int i);

// Tensor product of Betti tables over disjoint internal vertex sets.
BettiTable tensor_convolve(const BettiTable& a, const BettiTable& b);

// Castelnuovo-Mumford regularity: mat-1 with the matching number of the
// whole graph, or of the dominant part when the other parity has one path.
long long regularity_formula(const MultiPathSpec& spec);

} // namespace edgering

#endif
