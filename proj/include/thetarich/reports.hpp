#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"
#include "thetarich/characterize.hpp"
#include "thetarich/complexity.hpp"
#include "thetarich/core.hpp"
#include "thetarich/palindromic.hpp"

namespace thetarich {

/// Key order is part of the interface; all emitters are deterministic.
using Json = nlohmann::ordered_json;

const char* balance_status_name(BalanceStatus s);
const char* closure_verdict_name(ClosureVerdict v);

/// Provenance block embedded in every report.
struct ReportMeta {
    std::string source;      // "word:<text>" | "file:<path>" | "gen:<spec>" | "corpus:<name>"
    std::string theta_spec;  // canonical rendering, see theta_spec_string
    std::size_t window = 0;
};

Json meta_json(const ReportMeta& meta);

Json word_json(const Word& w);
Json richness_json(const RichnessReport& report);
Json closure_json(const ClosureStatus& status);

/// Rows n_lo..n_hi of the balance table; requires n_hi <= profile.n_max().
Json balance_rows_json(const ComplexityProfile& profile, std::size_t n_lo, std::size_t n_hi);

/// CSV with header "n,C,dC,P,lhs,rhs,status"; same row range as above.
std::string balance_csv(const ComplexityProfile& profile, std::size_t n_lo, std::size_t n_hi);

Json property_json(const CharacterizationResult& result);
Json characterization_json(const CharacterizationTable& table);

/// Includes both the implemented "+2" evaluation and the "+1" variant.
Json criterion_json(const EpisturmianRichnessCriterion& criterion);

}  // namespace thetarich
