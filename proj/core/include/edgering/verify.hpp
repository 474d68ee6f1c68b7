#ifndef EDGERING_VERIFY_HPP
#define EDGERING_VERIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edgering/formulas.hpp"
#include "edgering/monomial_ideal.hpp"
#include "edgering/multipath.hpp"
#include "edgering/resolution.hpp"
#include "edgering/toric.hpp"

namespace edgering {

enum class CheckStatus { Pass, Fail, SoftFail };

std::string check_status_name(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

// Oracle results for one distinct initial ideal, shared by all orders that
// select it.
struct IdealEvaluation {
    MonomialIdeal ideal;
    std::vector<std::string> orders; // serialized, sorted
    RawBettiTable raw;
    BettiTable table; // regraded to vertex multidegrees
    long long totalBetti = 0;
};

struct VerificationReport {
    explicit VerificationReport(MultiPathSpec s) : spec(std::move(s)) {}

    MultiPathSpec spec;
    long long pdim = 0;
    long long mat = 0;
    long long reg = 0;
    BettiTable formula;
    std::vector<IdealEvaluation> ideals; // sorted by ideal serialization
    int bestIdeal = -1;
    std::string bestOrder;
    std::set<MultiDegree> oracleTop;      // top multidegrees at the best ideal
    std::set<MultiDegree> canonicalGens;  // bipartite specs only
    std::vector<CheckRecord> checks;

    const IdealEvaluation& best() const { return ideals.at(bestIdeal); }
    bool hardPass() const;
    bool softPass() const;
    int exitCode(bool strict) const; // 0 pass, 1 fail
};

// Runs the whole pipeline: formula tables with their internal cross-checks,
// the oracle over every distinct initial ideal of the order family, and the
// hard checks H1-H6 plus the soft order-family equality S1.
VerificationReport run_verification(const MultiPathSpec& spec, const OrderFamilyMode& mode);

} // namespace edgering

#endif
