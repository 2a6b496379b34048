#pragma once

/**
 * @file report.hpp
 * @brief The verification report for one connected sum and its JSON form.
 *
 * A report aggregates the pipeline classify -> build_candidate ->
 * check_annihilation -> evaluate_and_compare -> minimality_certificate ->
 * (optional) minimality_scan. Every field is plain data so that
 * from_json(to_json(r)) == r holds exactly.
 */

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ajtorus/minimality.hpp"

namespace ajt {

struct CertificateSummary {
    bool verdict = false;
    std::vector<CertificateItem> items;
    friend bool operator==(const CertificateSummary&, const CertificateSummary&) = default;
};

struct ScanSummary {
    bool ran = false;
    int l_degree_bound = 0;
    std::pair<int, int> m_window{0, 0};
    std::pair<long, long> n_range{0, 0};
    int unknowns = 0;
    int kernel_dimension = 0;
    std::optional<std::string> witness;
    bool witness_matches_candidate = false;
    long verified_up_to = 0;
    bool witness_exact = false;
    std::string note;
    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct AJReport {
    std::string knot;
    std::string case_id;
    int l_degree = 0;
    long annihilation_checked_up_to = 0;
    std::vector<long> skipped_n;  // denominator collapses tolerated by the check
    std::string alpha_at_minus1;
    std::vector<std::string> factors;
    std::vector<std::string> repeated_factors;
    std::string squarefree_part;
    std::string a_polynomial;
    bool match = false;
    std::string unit;
    CertificateSummary certificates;
    ScanSummary scan;
    // Stage name -> error message for every stage that failed.
    std::map<std::string, std::string> failures;

    bool passed() const { return failures.empty() && match && certificates.verdict; }
    friend bool operator==(const AJReport&, const AJReport&) = default;
};

bool operator==(const CertificateItem& a, const CertificateItem& b);

struct VerifyOptions {
    long n_max = 8;
    bool strict_denominators = true;  // DenominatorCollapse is a failure
    std::optional<int> scan_degree;   // run the scan at this L-degree bound
    std::optional<std::pair<int, int>> m_window;  // default: the candidate's support
    std::shared_ptr<JonesSequence> jones;          // reused for the annihilation check
};

// Runs the whole pipeline. OppositeSigns propagates; failures of later
// stages are recorded in AJReport::failures under the stage name.
AJReport verify_sum(const TorusKnot& k1, const TorusKnot& k2, const VerifyOptions& opt = {});

nlohmann::json to_json(const AJReport& r);
AJReport report_from_json(const nlohmann::json& j);
std::string render_text(const AJReport& r);

}  // namespace ajt
