#ifndef EDGERING_REPORT_HPP
#define EDGERING_REPORT_HPP

#include <string>

#include "edgering/verify.hpp"

namespace edgering {

// JSON views with stable key order; re-serializing parsed output is
// byte-identical.

std::string info_json(const MultiPathSpec& spec);

std::string betti_json(const MultiPathSpec& spec);

std::string oracle_json(const MultiPathSpec& spec, const BettiTable& table,
                        const std::string& order);

std::string canonical_json(const MultiPathSpec& spec);

std::string report_json(const VerificationReport& rep, bool strict);

} // namespace edgering

#endif
