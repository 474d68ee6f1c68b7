#ifndef EDGERING_MULTIPATH_HPP
#define EDGERING_MULTIPATH_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edgering/errors.hpp"

namespace edgering {

// A vertex of a multi-path graph: the two hubs v1, v2 or an internal vertex
// u_{k,j} (path k, position j counted from the v1 end).  The ordering
// v1 < v2 < u1_1 < u1_2 < ... is the canonical serialization order.
struct Vertex {
    enum class Tag : std::uint8_t { V1 = 0, V2 = 1, U = 2 };

    Tag tag = Tag::V1;
    int path = 0; // valid for U only
    int pos = 0;  // valid for U only, 1-based

    static Vertex v1() { return Vertex{Tag::V1, 0, 0}; }
    static Vertex v2() { return Vertex{Tag::V2, 0, 0}; }
    static Vertex u(int path, int pos) { return Vertex{Tag::U, path, pos}; }

    bool isHub() const { return tag != Tag::U; }

    std::string str() const;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Edge e_{k,j}: the j-th edge of path k, 1 <= j <= L_k.  (k, j) is the
// natural edge-variable order.
struct Edge {
    int path = 0;
    int pos = 0;

    std::string str() const;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Exponent vector over the vertex set, identified with a monomial in the
// vertex variables.  Only nonzero entries are stored.  Differences of
// multidegrees may carry negative entries; monomials never do.
class MultiDegree {
public:
    MultiDegree() = default;

    long long at(const Vertex& v) const;
    void set(const Vertex& v, long long e);
    void add(const Vertex& v, long long e);

    long long total() const;
    bool isZero() const { return exp_.empty(); }
    bool isNonNegative() const;
    std::set<Vertex> support() const;

    MultiDegree& operator+=(const MultiDegree& o);
    MultiDegree& operator-=(const MultiDegree& o);
    friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
    friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }

    bool divides(const MultiDegree& o) const; // this <= o entrywise (both monomials)

    // "v1*v2^2*u1_1" with factors in canonical vertex order; "1" when zero.
    std::string str() const;

    const std::map<Vertex, long long>& entries() const { return exp_; }

    friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) {
        return a.exp_ <=> b.exp_;
    }
    friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
        return a.exp_ == b.exp_;
    }

private:
    std::map<Vertex, long long> exp_;
};

// Ordered list of path lengths L_1..L_t (edge counts), each >= 2, t >= 2.
// Paths keep their labels so sub-multipaths embed into the ambient vertex set.
class MultiPathSpec {
public:
    // Paths labelled 1..t.
    explicit MultiPathSpec(std::vector<int> lengths);
    // Explicit labels (strictly increasing); used by subSpec.
    MultiPathSpec(std::vector<int> lengths, std::vector<int> labels);

    int pathCount() const { return static_cast<int>(lengths_.size()); }
    const std::vector<int>& lengths() const { return lengths_; }
    const std::vector<int>& labels() const { return labels_; }

    int lengthOf(int label) const;

    // Half parameters: ell = L/2 for even L, (L-1)/2 for odd L.
    int ellOf(int label) const;

    std::vector<int> evenLabels() const;
    std::vector<int> oddLabels() const;
    int evenCount() const;
    int oddCount() const;

    bool isEvenType() const { return oddCount() == 0; }
    bool isOddType() const { return evenCount() == 0; }
    bool isMixedType() const { return !isEvenType() && !isOddType(); }
    bool isBipartite() const { return !isMixedType(); }

    long long edgeCount() const;
    long long vertexCount() const;
    long long ellSum() const;

    std::vector<Vertex> vertices() const; // canonical order
    std::vector<Edge> edges() const;      // natural order
    std::pair<Vertex, Vertex> endpoints(const Edge& e) const;

    std::string str() const; // "paths(2,2,3)" with labels when non-default

    friend auto operator<=>(const MultiPathSpec&, const MultiPathSpec&) = default;

private:
    std::vector<int> lengths_;
    std::vector<int> labels_;
};

// Plain labelled simple graph; just enough structure for matchings,
// connectivity and bipartiteness questions about multi-path graphs.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::vector<Vertex> vertices);

    int vertexCount() const { return static_cast<int>(vertices_.size()); }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int indexOf(const Vertex& v) const; // -1 if absent
    void addEdge(const Vertex& a, const Vertex& b);
    bool hasEdge(int a, int b) const;

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool isConnected() const;
    // Two-coloring if bipartite (color of vertex i in {0,1}, component roots color 0).
    std::optional<std::vector<int>> bipartition() const;

    // Connectivity of the subgraph induced on `keep` (by vertex index).
    // The empty set counts as disconnected.
    bool inducedConnected(const std::vector<bool>& keep) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// --- operations -------------------------------------------------------------

SimpleGraph build_graph(const MultiPathSpec& spec);

// Theta_G: product of all vertices of degree >= 2 (all of them, for paths of
// length >= 2).
MultiDegree theta(const MultiPathSpec& spec);

// D_G = sum of edge incidence vectors; exponent of a vertex is its degree.
MultiDegree big_d(const MultiPathSpec& spec);

// Induced sub-multipath on v1, v2 and the chosen paths (by label).
MultiPathSpec sub_spec(const MultiPathSpec& spec, const std::vector<int>& pathLabels);

// Exact maximum matching by branch and bound; guarded by caps().edges.
int matching_number_bruteforce(const SimpleGraph& g);

// Closed forms: even type sum(ell)-m+2, odd type sum(ell)+1, mixed with at
// least two paths of each parity sum(ell)-#even+2; nullopt otherwise.
std::optional<long long> matching_number_formula(const MultiPathSpec& spec);

// Formula when defined, else brute force.
long long matching_number(const MultiPathSpec& spec);

} // namespace edgering

#endif
