#include <chrono>

#include "mzv/error.hpp"
#include "mzv/verify.hpp"

namespace mzvkit {

const std::vector<ClaimInfo> &claim_catalog()
{
    static const std::vector<ClaimInfo> catalog = {
        {"thm-msw", "exact equality of plain and flat truncations", verify_msw},
        {"zn-harmonic", "Z_N respects the harmonic product exactly", verify_harmonic},
        {"prop-flat-natural", "flat minus natural truncation decays", verify_flat_natural},
        {"lemma-R-i", "R sums grow at most like log^k N",
         [](const CampaignConfig &c) { return verify_lemma_r(c, LemmaClause::i); }},
        {"lemma-R-ii", "R sums decay when some b_i >= 1 and a_i + b_i >= 2",
         [](const CampaignConfig &c) { return verify_lemma_r(c, LemmaClause::ii); }},
        {"lemma-R-iii", "R sums decay when a_i >= 2 and b_j >= 1 for some i < j",
         [](const CampaignConfig &c) { return verify_lemma_r(c, LemmaClause::iii); }},
        {"prop-asymp-shuffle", "asymptotic shuffle product for natural truncations", verify_asymp_shuffle},
        {"thm-main", "asymptotic double shuffle relation", verify_asymp_dsr},
        {"prop-asymp-H", "asymptotic expansion of zeta_<N", verify_asymp_h},
        {"prop-asymp-Li", "asymptotic expansion of Li_k near z = 1", verify_asymp_li},
        {"thm-edsr-star", "extended double shuffle, harmonic regularization",
         [](const CampaignConfig &c) { return verify_edsr(c, RegKind::star); }},
        {"thm-edsr-sh", "extended double shuffle, shuffle regularization",
         [](const CampaignConfig &c) { return verify_edsr(c, RegKind::sh); }},
        {"thm-regularization-rho", "comparison map between the regularizations (out of scope)",
         regularization_rho_entry},
    };
    return catalog;
}

Report run_claim(const std::string &claim_id, const CampaignConfig &cfg)
{
    cfg.validate();
    for (const ClaimInfo &info : claim_catalog()) {
        if (info.id != claim_id) continue;
        auto start = std::chrono::steady_clock::now();
        Report r = info.run(cfg);
        if (cfg.timing) {
            r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        return r;
    }
    throw DomainError("unknown claim id: " + claim_id);
}

ReportBundle run_claims(const std::vector<std::string> &claim_ids, const CampaignConfig &cfg)
{
    cfg.validate();
    ReportBundle bundle;
    for (const std::string &id : claim_ids) bundle.reports.push_back(run_claim(id, cfg));
    return bundle;
}

ReportBundle run_all(const CampaignConfig &cfg)
{
    std::vector<std::string> ids;
    for (const ClaimInfo &info : claim_catalog()) ids.push_back(info.id);
    return run_claims(ids, cfg);
}

} // namespace mzvkit
