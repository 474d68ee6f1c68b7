#ifndef EDGERING_CONE_HPP
#define EDGERING_CONE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "edgering/multipath.hpp"

namespace edgering {

// Linear form over the vertex variables compared against zero.  The facet
// inequalities of an edge cone all take the shape coeff . x >= 0.
struct LinearInequality {
    enum class Rel { Eq, Geq };

    std::map<Vertex, long long> coeff;
    Rel rel = Rel::Geq;
    std::string origin; // "vertex v1", "T{u1_1,u2_1}", "affine", "(4)", ...

    long long eval(const MultiDegree& alpha) const;
    bool holds(const MultiDegree& alpha, bool strict) const;

    // "x(u1_1)+x(u2_1) <= x(v1)+x(v2)" / "x(v1) >= 0" / "... == ..."
    std::string str() const;
};

// Affine hull plus facet inequalities; every edge monomial's multidegree
// satisfies all of them non-strictly.
struct ConeDescription {
    LinearInequality affine;
    std::vector<LinearInequality> facets;
};

// Facets of the edge cone of a bipartite multi-path graph: vertex
// inequalities x_i >= 0 for the i with G\i connected, and sum(T) <= sum(N(T))
// for the independent T within one side of the bipartition whose neighborhood
// split leaves both pieces connected.  Coincident facets (as point sets on
// the cone) are deduplicated.
ConeDescription facet_description(const MultiPathSpec& spec);

// The explicit inequality system for an even-type multi-path graph,
// transcribed from its closed-form facet families; semantically equal to
// facet_description but generated without any graph search.
ConeDescription even_type_inequalities(const MultiPathSpec& spec);

bool in_cone(const MultiDegree& alpha, const ConeDescription& cone);

// Affine hull met exactly and every facet inequality strict.
bool in_relint(const MultiDegree& alpha, const ConeDescription& cone);

// Canonical-module generators D_G - alpha for alpha in the oracle's top
// multidegrees, each verified to lie in the relative interior and to be
// minimal under single-edge subtraction.
std::set<MultiDegree> canonical_generators(const MultiPathSpec& spec,
                                           const std::set<MultiDegree>& oracleTop);

} // namespace edgering

#endif
