#include "thetarich/reports.hpp"

#include <sstream>

namespace thetarich {

const char* balance_status_name(BalanceStatus s) {
    switch (s) {
        case BalanceStatus::equal: return "equal";
        case BalanceStatus::strict: return "strict";
        case BalanceStatus::violated: return "violated";
    }
    return "unknown";
}

const char* closure_verdict_name(ClosureVerdict v) {
    switch (v) {
        case ClosureVerdict::closed_on_window: return "closed";
        case ClosureVerdict::not_closed: return "not_closed";
        case ClosureVerdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

Json meta_json(const ReportMeta& meta) {
    Json j;
    j["format_version"] = 1;
    j["source"] = meta.source;
    j["theta"] = meta.theta_spec;
    j["window"] = meta.window;
    return j;
}

Json word_json(const Word& w) {
    Json j;
    j["display"] = w.display();
    j["length"] = w.size();
    return j;
}

Json richness_json(const RichnessReport& report) {
    Json j;
    j["rich"] = report.is_rich;
    j["palindromic_factors"] = report.pal_count;
    j["bound"] = report.bound;
    j["defect"] = report.defect;
    if (report.witness) {
        Json w;
        w["prefix"] = report.witness->prefix.display();
        w["prefix_length"] = report.witness->prefix.size();
        w["suffix"] = report.witness->suffix.display();
        w["suffix_occurrences"] = report.witness->suffix_occurrences;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json closure_json(const ClosureStatus& status) {
    Json j;
    j["verdict"] = closure_verdict_name(status.verdict);
    j["mode"] = status.mode == ClosureMode::window ? "window" : "complete";
    j["n_max"] = status.n_max;
    if (status.counterexample)
        j["counterexample"] = status.counterexample->display();
    else
        j["counterexample"] = nullptr;
    Json incomplete = Json::array();
    for (const auto& row : status.per_length) {
        if (row.missing_images == 0) continue;
        Json r;
        r["n"] = row.n;
        r["factors"] = row.factor_count;
        r["missing_images"] = row.missing_images;
        incomplete.push_back(std::move(r));
    }
    j["incomplete_lengths"] = std::move(incomplete);
    return j;
}

Json balance_rows_json(const ComplexityProfile& profile, std::size_t n_lo, std::size_t n_hi) {
    Json rows = Json::array();
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        ComplexityRow row = profile.row(n);
        Json r;
        r["n"] = row.n;
        r["c"] = row.c;
        r["dc"] = row.dc;
        r["p"] = row.p;
        r["lhs"] = row.lhs;
        r["rhs"] = row.rhs;
        r["status"] = balance_status_name(row.status);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string balance_csv(const ComplexityProfile& profile, std::size_t n_lo, std::size_t n_hi) {
    std::ostringstream out;
    out << "n,C,dC,P,lhs,rhs,status\n";
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        ComplexityRow row = profile.row(n);
        out << row.n << ',' << row.c << ',' << row.dc << ',' << row.p << ',' << row.lhs
            << ',' << row.rhs << ',' << balance_status_name(row.status) << '\n';
    }
    return out.str();
}

Json property_json(const CharacterizationResult& result) {
    Json j;
    j["property"] = std::string(property_name(result.property));
    j["holds"] = result.holds;
    if (result.counterexample) {
        Json c;
        Json factors = Json::array();
        for (const Word& f : result.counterexample->factors) factors.push_back(f.display());
        c["factors"] = std::move(factors);
        c["positions"] = result.counterexample->positions;
        c["detail"] = result.counterexample->detail;
        j["counterexample"] = std::move(c);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json characterization_json(const CharacterizationTable& table) {
    Json j;
    j["window_length"] = table.window_length;
    j["factor_cap"] = table.factor_cap;
    j["closed_on_window"] = table.closed_on_window;
    j["rich"] = table.rich;
    j["ups"] = table.ups;
    j["vTheta_factor"] = table.v_theta_factor;
    j["sufficient"] = table.sufficient;
    j["crw_palindrome"] = table.crw_palindrome;
    j["alternation"] = table.alternation;
    j["letter_alternation"] = table.letter_alternation;
    if (table.equality_all_n)
        j["equality_all_n"] = *table.equality_all_n;
    else
        j["equality_all_n"] = nullptr;
    j["inconsistencies"] = table.inconsistencies;
    return j;
}

Json criterion_json(const EpisturmianRichnessCriterion& criterion) {
    Json j;
    j["p1"] = criterion.p1;
    j["p2"] = criterion.p2;
    j["dc1"] = criterion.dc1;
    j["lhs"] = criterion.lhs;
    j["rhs"] = criterion.rhs;
    j["rich_predicted"] = criterion.rich_predicted;
    j["rhs_alternative"] = criterion.rhs_alternative;
    j["alternative_satisfied"] = criterion.alternative_satisfied;
    return j;
}

}  // namespace thetarich
