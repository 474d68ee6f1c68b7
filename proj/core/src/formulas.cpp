#include "edgering/formulas.hpp"

#include <algorithm>
#include <functional>

#include "edgering/errors.hpp"

namespace edgering {

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

int pdim_formula(const MultiPathSpec& spec) {
    int p = spec.evenCount(), q = spec.oddCount();
    return (p >= 1 && q >= 1) ? p + q - 2 : p + q - 1;
}

bool is_top_betti(const MultiPathSpec& spec) {
    return spec.evenCount() != 1 && spec.oddCount() != 1;
}

std::set<MultiDegree> top_support(const MultiPathSpec& spec) {
    if (!is_top_betti(spec))
        throw NotTopBettiError(spec.str() + " is not a top-Betti graph");
    const MultiDegree th = theta(spec);
    const int p = spec.evenCount(), q = spec.oddCount();
    std::set<MultiDegree> out;
    auto withHubs = [&](long long e1, long long e2) {
        MultiDegree d = th;
        d.add(Vertex::v1(), e1);
        d.add(Vertex::v2(), e2);
        out.insert(std::move(d));
    };
    if (q == 0) {
        for (int a = 0; a <= p - 2; ++a) withHubs(a, p - 2 - a);
    } else if (p == 0) {
        for (int b = 0; b <= q - 2; ++b) withHubs(b, b);
    } else {
        for (int s = 0; s <= q - 2; ++s)
            for (int t = 0; t <= p - 2; ++t) withHubs(s + t + 1, p + s - t - 1);
    }
    return out;
}

std::vector<std::vector<int>> top_betti_subgraphs(const MultiPathSpec& spec, int i) {
    std::vector<std::vector<int>> out;
    if (i < 1) return out;
    const std::vector<int>& labels = spec.labels();
    const int t = spec.pathCount();
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        std::vector<int> subset;
        int pEven = 0, qOdd = 0;
        for (int b = 0; b < t; ++b)
            if (mask & (1u << b)) {
                subset.push_back(labels[b]);
                (spec.lengthOf(labels[b]) % 2 == 0 ? pEven : qOdd)++;
            }
        if (subset.size() < 2 || pEven == 1 || qOdd == 1) continue;
        int pd = (pEven >= 1 && qOdd >= 1) ? pEven + qOdd - 2 : pEven + qOdd - 1;
        if (pd == i) out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<MultiDegree> n_i(const MultiPathSpec& spec, int i) {
    if (i < 1) throw Error("n_i is defined for homological index >= 1");
    std::set<MultiDegree> out;
    for (const auto& subset : top_betti_subgraphs(spec, i)) {
        for (const MultiDegree& alpha : top_support(sub_spec(spec, subset))) {
            if (!out.insert(alpha).second)
                throw DisjointnessViolatedError("top supports of distinct subgraphs collided at " +
                                                alpha.str());
        }
    }
    return out;
}

BettiTable multigraded_betti(const MultiPathSpec& spec) {
    BettiTable table;
    table.add(0, MultiDegree{}, 1);
    const int p = pdim_formula(spec);
    for (int i = 1; i <= p; ++i)
        for (const MultiDegree& alpha : n_i(spec, i)) table.add(i, alpha, 1);
    return table;
}

namespace {

// Visits the ell-sum of every subset of the given size, as needed by the
// pure-type counting sets.
void forSubsetsOfSize(const std::vector<int>& ells, int size,
                      const std::function<void(long long)>& fSum) {
    std::function<void(int, int, long long)> rec = [&](int from, int left, long long sum) {
        if (left == 0) {
            fSum(sum);
            return;
        }
        for (int k = from; k <= static_cast<int>(ells.size()) - left; ++k)
            rec(k + 1, left - 1, sum + ells[k]);
    };
    rec(0, size, 0);
}

} // namespace

std::map<std::pair<int, long long>, long long> graded_betti(const MultiPathSpec& spec) {
    std::map<std::pair<int, long long>, long long> graded = multigraded_betti(spec).graded();

    if (spec.isEvenType() || spec.isOddType()) {
        // Direct counting route: E_i^j for even type, O_i^j for odd type.
        std::vector<int> ells;
        for (int label : spec.labels()) ells.push_back(spec.ellOf(label));
        std::map<std::pair<int, long long>, long long> counted;
        counted[{0, 0}] = 1;
        const int pd = pdim_formula(spec);
        for (int i = 1; i <= pd; ++i) {
            forSubsetsOfSize(ells, i + 1, [&](long long sum) {
                if (spec.isEvenType())
                    counted[{i, sum}] += i; // r = 0..i-1
                else
                    for (int r = 1; r <= i; ++r) counted[{i, sum + r}] += 1;
            });
        }
        if (counted != graded)
            throw FormulaMismatchError("graded Betti numbers disagree with the counting sets for " +
                                       spec.str());
    }
    return graded;
}

long long total_betti(const MultiPathSpec& spec, int i) {
    if (i < 0) throw Error("homological index must be nonnegative");
    if (i == 0) return 1;
    long long fromSets = static_cast<long long>(n_i(spec, i).size());

    const long long p = spec.evenCount(), q = spec.oddCount();
    long long closed = i * (binom(p, i + 1) + binom(q, i + 1));
    for (long long j = 2; j + 2 <= i + 2; ++j) {
        long long k = i + 2 - j;
        if (k < 2) continue;
        closed += binom(p, j) * binom(q, k) * (j - 1) * (k - 1);
    }
    if (closed != fromSets)
        throw FormulaMismatchError("total Betti closed form disagrees with |N_i| at i = " +
                                   std::to_string(i) + " for " + spec.str());
    return fromSets;
}

BettiTable tensor_convolve(const BettiTable& a, const BettiTable& b) {
    std::set<Vertex> internalA, internalB;
    for (const auto& [key, v] : a.entries())
        for (const Vertex& x : key.second.support())
            if (!x.isHub()) internalA.insert(x);
    for (const auto& [key, v] : b.entries())
        for (const Vertex& x : key.second.support())
            if (!x.isHub()) internalB.insert(x);
    for (const Vertex& x : internalA)
        if (internalB.count(x))
            throw OverlapError("tensor factors share the internal vertex " + x.str());

    BettiTable out;
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries())
            out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return out;
}

long long regularity_formula(const MultiPathSpec& spec) {
    const int p = spec.evenCount(), q = spec.oddCount();
    if (p >= 1 && q >= 1) {
        if (p == 1 && q == 1) return 0; // toric ideal is zero
        if (q == 1) return matching_number(sub_spec(spec, spec.evenLabels())) - 1;
        if (p == 1) return matching_number(sub_spec(spec, spec.oddLabels())) - 1;
    }
    return matching_number(spec) - 1;
}

} // namespace edgering
