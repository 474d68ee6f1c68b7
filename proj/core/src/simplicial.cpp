#include "edgering/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgering/caps.hpp"
#include "edgering/errors.hpp"

namespace edgering {

using boost::multiprecision::cpp_int;

SimplicialComplex SimplicialComplex::fromFaces(int groundSize, std::vector<std::uint32_t> faces) {
    if (groundSize < 0 || groundSize > 31) throw TooLargeError("ground set limited to 31 elements");
    for (std::uint32_t f : faces)
        if (groundSize < 31 && (f >> groundSize) != 0)
            throw Error("face outside the ground set");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex K;
    K.groundSize = groundSize;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < faces.size() && maximal; ++j)
            if (i != j && (faces[i] & faces[j]) == faces[i]) maximal = false;
        if (maximal) K.facets.push_back(faces[i]);
    }
    return K;
}

namespace {

// Fraction-free Bareiss elimination; returns the rank of an integer matrix.
int bareissRank(std::vector<std::vector<cpp_int>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

struct FaceSet {
    std::unordered_set<std::uint32_t> faces;
    std::uint32_t groundMask = 0;

    bool contains(std::uint32_t f) const { return faces.count(f) != 0; }
};

// Remove free pairs (a face with a unique proper coface of one dimension
// higher, together with that coface).  Homotopy type, hence homology, is
// preserved; only the boundary matrices shrink.
void collapse(FaceSet& fs) {
    std::unordered_map<std::uint32_t, int> cofaces;
    cofaces.reserve(fs.faces.size() * 2);
    for (std::uint32_t f : fs.faces) {
        std::uint32_t rest = f;
        while (rest) {
            std::uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            ++cofaces[f ^ bit];
        }
    }
    std::deque<std::uint32_t> work(fs.faces.begin(), fs.faces.end());
    std::sort(work.begin(), work.end());

    auto uniqueCoface = [&fs](std::uint32_t f) -> std::uint32_t {
        std::uint32_t rest = fs.groundMask & ~f;
        while (rest) {
            std::uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            if (fs.contains(f | bit)) return f | bit;
        }
        throw Error("coface bookkeeping out of sync");
    };
    auto erase = [&](std::uint32_t f) {
        fs.faces.erase(f);
        std::uint32_t rest = f;
        while (rest) {
            std::uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            std::uint32_t sub = f ^ bit;
            auto it = cofaces.find(sub);
            if (it != cofaces.end() && --(it->second) == 1 && fs.contains(sub))
                work.push_back(sub);
        }
    };

    while (!work.empty()) {
        std::uint32_t f = work.front();
        work.pop_front();
        if (!fs.contains(f)) continue;
        auto it = cofaces.find(f);
        if (it == cofaces.end() || it->second != 1) continue;
        std::uint32_t cof = uniqueCoface(f);
        erase(cof);
        erase(f);
    }
}

} // namespace

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& K) {
    if (K.groundSize > caps().ground)
        throw TooLargeError("homology ground set capped at " + std::to_string(caps().ground) +
                            ", got " + std::to_string(K.groundSize));
    std::vector<long long> ranks(static_cast<std::size_t>(K.groundSize) + 1, 0);
    if (K.isVoid()) return ranks;

    // A vertex shared by every facet makes the complex a cone, hence acyclic.
    std::uint32_t common = K.facets.front();
    for (std::uint32_t f : K.facets) common &= f;
    if (common != 0) return ranks;

    FaceSet fs;
    for (std::uint32_t f : K.facets) fs.groundMask |= f;
    for (std::uint32_t f : K.facets) {
        std::uint32_t s = f;
        while (true) {
            fs.faces.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }

    collapse(fs);
    if (fs.faces.empty()) return ranks; // collapsed to nothing: contractible

    // Bucket the core by dimension; the empty face sits at dimension -1.
    std::map<int, std::vector<std::uint32_t>> byDim;
    for (std::uint32_t f : fs.faces) byDim[std::popcount(f) - 1].push_back(f);
    for (auto& [d, v] : byDim) std::sort(v.begin(), v.end());

    int maxDim = byDim.rbegin()->first;
    std::map<int, int> boundaryRank; // rank of d_k : C_k -> C_{k-1}
    for (int d = maxDim; d >= 0; --d) {
        auto hi = byDim.find(d);
        auto lo = byDim.find(d - 1);
        if (hi == byDim.end() || lo == byDim.end()) {
            boundaryRank[d] = 0;
            continue;
        }
        std::unordered_map<std::uint32_t, int> rowIndex;
        for (std::size_t i = 0; i < lo->second.size(); ++i) rowIndex[lo->second[i]] = static_cast<int>(i);
        std::vector<std::vector<cpp_int>> m(lo->second.size(),
                                            std::vector<cpp_int>(hi->second.size(), 0));
        for (std::size_t c = 0; c < hi->second.size(); ++c) {
            std::uint32_t f = hi->second[c];
            int sign = 1;
            std::uint32_t rest = f;
            while (rest) {
                std::uint32_t bit = rest & (~rest + 1);
                rest ^= bit;
                auto it = rowIndex.find(f ^ bit);
                if (it == rowIndex.end()) throw Error("core complex not closed under subsets");
                m[it->second][c] = sign;
                sign = -sign;
            }
        }
        boundaryRank[d] = bareissRank(std::move(m));
    }

    for (int d = -1; d <= maxDim; ++d) {
        auto it = byDim.find(d);
        long long cells = it == byDim.end() ? 0 : static_cast<long long>(it->second.size());
        long long rIn = d + 1 <= maxDim && boundaryRank.count(d + 1) ? boundaryRank[d + 1] : 0;
        long long rOut = d >= 0 && boundaryRank.count(d) ? boundaryRank[d] : 0;
        ranks[d + 1] = cells - rIn - rOut;
        if (ranks[d + 1] < 0) throw Error("negative homology rank; elimination bug");
    }
    return ranks;
}

} // namespace edgering
