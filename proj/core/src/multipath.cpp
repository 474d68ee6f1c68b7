#include "edgering/multipath.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "edgering/caps.hpp"

namespace edgering {

std::string Vertex::str() const {
    switch (tag) {
    case Tag::V1: return "v1";
    case Tag::V2: return "v2";
    default: return "u" + std::to_string(path) + "_" + std::to_string(pos);
    }
}

std::string Edge::str() const {
    return "e" + std::to_string(path) + "_" + std::to_string(pos);
}

long long MultiDegree::at(const Vertex& v) const {
    auto it = exp_.find(v);
    return it == exp_.end() ? 0 : it->second;
}

void MultiDegree::set(const Vertex& v, long long e) {
    if (e == 0)
        exp_.erase(v);
    else
        exp_[v] = e;
}

void MultiDegree::add(const Vertex& v, long long e) { set(v, at(v) + e); }

long long MultiDegree::total() const {
    long long t = 0;
    for (const auto& [v, e] : exp_) t += e;
    return t;
}

bool MultiDegree::isNonNegative() const {
    for (const auto& [v, e] : exp_)
        if (e < 0) return false;
    return true;
}

std::set<Vertex> MultiDegree::support() const {
    std::set<Vertex> s;
    for (const auto& [v, e] : exp_)
        if (e != 0) s.insert(v);
    return s;
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& o) {
    for (const auto& [v, e] : o.exp_) add(v, e);
    return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& o) {
    for (const auto& [v, e] : o.exp_) add(v, -e);
    return *this;
}

bool MultiDegree::divides(const MultiDegree& o) const {
    for (const auto& [v, e] : exp_)
        if (e > o.at(v)) return false;
    return true;
}

std::string MultiDegree::str() const {
    if (exp_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : exp_) {
        if (!s.empty()) s += "*";
        s += v.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

MultiPathSpec::MultiPathSpec(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    labels_.resize(lengths_.size());
    std::iota(labels_.begin(), labels_.end(), 1);
    if (lengths_.size() < 2)
        throw InvalidSpecError("multi-path graph needs at least two paths");
    for (int L : lengths_)
        if (L < 2)
            throw InvalidSpecError("path lengths must be at least 2, got " + std::to_string(L));
}

MultiPathSpec::MultiPathSpec(std::vector<int> lengths, std::vector<int> labels)
    : lengths_(std::move(lengths)), labels_(std::move(labels)) {
    if (labels_.size() != lengths_.size())
        throw InvalidSpecError("label/length count mismatch");
    if (lengths_.size() < 2)
        throw InvalidSpecError("multi-path graph needs at least two paths");
    for (int L : lengths_)
        if (L < 2)
            throw InvalidSpecError("path lengths must be at least 2, got " + std::to_string(L));
    for (std::size_t i = 0; i + 1 < labels_.size(); ++i)
        if (labels_[i] >= labels_[i + 1])
            throw InvalidSpecError("path labels must be strictly increasing");
    if (!labels_.empty() && labels_.front() < 1)
        throw InvalidSpecError("path labels must be positive");
}

int MultiPathSpec::lengthOf(int label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return lengths_[i];
    throw InvalidSpecError("unknown path label " + std::to_string(label));
}

int MultiPathSpec::ellOf(int label) const {
    int L = lengthOf(label);
    return L % 2 == 0 ? L / 2 : (L - 1) / 2;
}

std::vector<int> MultiPathSpec::evenLabels() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (lengths_[i] % 2 == 0) r.push_back(labels_[i]);
    return r;
}

std::vector<int> MultiPathSpec::oddLabels() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (lengths_[i] % 2 == 1) r.push_back(labels_[i]);
    return r;
}

int MultiPathSpec::evenCount() const { return static_cast<int>(evenLabels().size()); }
int MultiPathSpec::oddCount() const { return static_cast<int>(oddLabels().size()); }

long long MultiPathSpec::edgeCount() const {
    return std::accumulate(lengths_.begin(), lengths_.end(), 0LL);
}

long long MultiPathSpec::vertexCount() const {
    long long n = 2;
    for (int L : lengths_) n += L - 1;
    return n;
}

long long MultiPathSpec::ellSum() const {
    long long s = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) s += ellOf(labels_[i]);
    return s;
}

std::vector<Vertex> MultiPathSpec::vertices() const {
    std::vector<Vertex> vs{Vertex::v1(), Vertex::v2()};
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (int j = 1; j <= lengths_[i] - 1; ++j)
            vs.push_back(Vertex::u(labels_[i], j));
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::vector<Edge> MultiPathSpec::edges() const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (int j = 1; j <= lengths_[i]; ++j)
            es.push_back(Edge{labels_[i], j});
    std::sort(es.begin(), es.end());
    return es;
}

std::pair<Vertex, Vertex> MultiPathSpec::endpoints(const Edge& e) const {
    int L = lengthOf(e.path);
    if (e.pos < 1 || e.pos > L)
        throw InvalidSpecError("edge position out of range: " + e.str());
    Vertex a = (e.pos == 1) ? Vertex::v1() : Vertex::u(e.path, e.pos - 1);
    Vertex b = (e.pos == L) ? Vertex::v2() : Vertex::u(e.path, e.pos);
    return {a, b};
}

std::string MultiPathSpec::str() const {
    std::string s = "paths(";
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lengths_[i]);
    }
    s += ")";
    bool defaultLabels = true;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] != static_cast<int>(i) + 1) defaultLabels = false;
    if (!defaultLabels) {
        s += "@[";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(labels_[i]);
        }
        s += "]";
    }
    return s;
}

SimpleGraph::SimpleGraph(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    adj_.resize(vertices_.size());
}

int SimpleGraph::indexOf(const Vertex& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

void SimpleGraph::addEdge(const Vertex& a, const Vertex& b) {
    int ia = indexOf(a), ib = indexOf(b);
    if (ia < 0 || ib < 0) throw Error("edge endpoint not a vertex");
    if (ia == ib) throw Error("loops are not allowed");
    if (hasEdge(ia, ib)) throw Error("multi-edges are not allowed");
    edges_.emplace_back(std::min(ia, ib), std::max(ia, ib));
    adj_[ia].push_back(ib);
    adj_[ib].push_back(ia);
}

bool SimpleGraph::hasEdge(int a, int b) const {
    for (int n : adj_[a])
        if (n == b) return true;
    return false;
}

bool SimpleGraph::isConnected() const {
    std::vector<bool> keep(vertices_.size(), true);
    return inducedConnected(keep);
}

std::optional<std::vector<int>> SimpleGraph::bipartition() const {
    std::vector<int> color(vertices_.size(), -1);
    for (std::size_t s = 0; s < vertices_.size(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int n : adj_[v]) {
                if (color[n] == -1) {
                    color[n] = 1 - color[v];
                    q.push(n);
                } else if (color[n] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool SimpleGraph::inducedConnected(const std::vector<bool>& keep) const {
    int start = -1, count = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (keep[i]) {
            if (start < 0) start = static_cast<int>(i);
            ++count;
        }
    if (count == 0) return false; // empty graph counts as disconnected
    std::vector<bool> seen(vertices_.size(), false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int n : adj_[v]) {
            if (keep[n] && !seen[n]) {
                seen[n] = true;
                ++reached;
                q.push(n);
            }
        }
    }
    return reached == count;
}

SimpleGraph build_graph(const MultiPathSpec& spec) {
    SimpleGraph g(spec.vertices());
    for (const Edge& e : spec.edges()) {
        auto [a, b] = spec.endpoints(e);
        g.addEdge(a, b);
    }
    return g;
}

MultiDegree theta(const MultiPathSpec& spec) {
    SimpleGraph g = build_graph(spec);
    MultiDegree t;
    for (int i = 0; i < g.vertexCount(); ++i)
        if (g.degree(i) >= 2) t.add(g.vertices()[i], 1);
    return t;
}

MultiDegree big_d(const MultiPathSpec& spec) {
    MultiDegree d;
    for (const Edge& e : spec.edges()) {
        auto [a, b] = spec.endpoints(e);
        d.add(a, 1);
        d.add(b, 1);
    }
    return d;
}

MultiPathSpec sub_spec(const MultiPathSpec& spec, const std::vector<int>& pathLabels) {
    std::vector<int> sorted = pathLabels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 2)
        throw SubsetTooSmallError("sub-multipath needs at least two paths");
    std::vector<int> lengths;
    for (int label : sorted) lengths.push_back(spec.lengthOf(label));
    return MultiPathSpec(std::move(lengths), std::move(sorted));
}

namespace {

// Branch on the lowest-index uncovered vertex: leave it unmatched or match it
// along each incident free edge.
int matchingSearch(const SimpleGraph& g, std::uint32_t covered, int from) {
    int n = g.vertexCount();
    int v = from;
    while (v < n && (covered & (1u << v))) ++v;
    if (v >= n) return 0;
    int best = matchingSearch(g, covered | (1u << v), v + 1); // v stays unmatched
    for (int w : g.neighbors(v)) {
        if (covered & (1u << w)) continue;
        int r = 1 + matchingSearch(g, covered | (1u << v) | (1u << w), v + 1);
        best = std::max(best, r);
    }
    return best;
}

} // namespace

int matching_number_bruteforce(const SimpleGraph& g) {
    if (g.edgeCount() > caps().edges)
        throw TooLargeError("matching search capped at " + std::to_string(caps().edges) +
                            " edges, got " + std::to_string(g.edgeCount()));
    if (g.vertexCount() > 31) throw TooLargeError("matching search supports at most 31 vertices");
    return matchingSearch(g, 0, 0);
}

std::optional<long long> matching_number_formula(const MultiPathSpec& spec) {
    long long s = spec.ellSum();
    int p = spec.evenCount(), q = spec.oddCount();
    if (q == 0) return s - p + 2;                  // even type
    if (p == 0) return s + 1;                      // odd type (derived, validated by tests)
    if (p >= 2 && q >= 2) return s - p + 2;        // mixed, both parities doubled
    return std::nullopt;
}

long long matching_number(const MultiPathSpec& spec) {
    if (auto m = matching_number_formula(spec)) return *m;
    return matching_number_bruteforce(build_graph(spec));
}

} // namespace edgering
