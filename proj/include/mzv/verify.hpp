#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mzv/rate_fit.hpp"

namespace mzvkit {

using Json = nlohmann::ordered_json;

enum class ReportFormat { json, csv };

struct CampaignConfig {
    unsigned max_weight = 6;
    // N values for the asymptotic campaigns (geometric, 2^4..2^14 by default).
    std::vector<std::uint64_t> n_schedule = geometric_schedule(4, 14);
    // N values for the exact finite-sum identity (capped at 60 there).
    std::vector<std::uint64_t> exact_n = {2, 5, 10, 25, 50};
    unsigned harmonic_pairs = 100;
    std::uint64_t harmonic_n = 100;
    // Residual bound for the regularized relations and the mzv tolerance behind it.
    double tolerance = 1e-5;
    double mzv_tolerance = 1e-7;
    // mzv / polylog tolerance for the asymptotic campaigns, where residuals are ~1e-4.
    double asymptotic_tolerance = 1e-12;
    // Residual sequences entirely below this count as identically zero.
    double zero_floor = 1e-10;
    double slack = 1.25;
    std::uint64_t seed = 20240917;
    int workers = 0; // 0 = OpenMP default
    std::optional<std::filesystem::path> out;
    ReportFormat format = ReportFormat::json;
    bool timing = false;

    static std::vector<std::uint64_t> geometric_schedule(unsigned from_exp, unsigned to_exp);
    // Throws DomainError when an invariant is violated.
    void validate() const;
    Json to_json() const;
};

enum class Verdict { pass, fail, out_of_scope };
const char *to_string(Verdict v);

struct CaseRecord {
    std::string key;
    bool pass = false;
    std::optional<double> residual;
    std::optional<RateFit> fit;
    Json detail = Json::object();

    Json to_json() const;
};

struct Report {
    std::string claim_id;
    std::string statement;
    Json parameters = Json::object();
    std::vector<CaseRecord> cases;
    Verdict verdict = Verdict::fail;
    std::optional<double> elapsed_ms;

    // verdict = pass iff every case passes (out_of_scope reports are left alone)
    void finalize();
    std::size_t failed_cases() const;
    Json to_json() const;
    std::string to_csv() const;
};

// Campaigns. Each produces the report for exactly one claim.
Report verify_msw(const CampaignConfig &cfg);
Report verify_harmonic(const CampaignConfig &cfg);
Report verify_flat_natural(const CampaignConfig &cfg);
enum class LemmaClause { i, ii, iii };
Report verify_lemma_r(const CampaignConfig &cfg, LemmaClause clause);
Report verify_asymp_shuffle(const CampaignConfig &cfg);
Report verify_asymp_dsr(const CampaignConfig &cfg);
Report verify_asymp_h(const CampaignConfig &cfg);
Report verify_asymp_li(const CampaignConfig &cfg);
enum class RegKind { star, sh };
Report verify_edsr(const CampaignConfig &cfg, RegKind kind);
Report regularization_rho_entry(const CampaignConfig &cfg);

struct ClaimInfo {
    std::string id;
    std::string statement;
    std::function<Report(const CampaignConfig &)> run;
};

// Fixed catalog in reporting order.
const std::vector<ClaimInfo> &claim_catalog();
// Throws DomainError for unknown ids.
Report run_claim(const std::string &claim_id, const CampaignConfig &cfg);

struct ReportBundle {
    std::vector<Report> reports;
    bool all_pass() const;
    Json summary(const CampaignConfig &cfg) const;
};

ReportBundle run_all(const CampaignConfig &cfg);
ReportBundle run_claims(const std::vector<std::string> &claim_ids, const CampaignConfig &cfg);

// One file per claim plus summary.json under dir.
void write_bundle(const ReportBundle &bundle, const CampaignConfig &cfg, const std::filesystem::path &dir);

} // namespace mzvkit
