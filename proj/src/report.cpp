#include "mzv/verify.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mzv/error.hpp"

namespace mzvkit {

std::vector<std::uint64_t> CampaignConfig::geometric_schedule(unsigned from_exp, unsigned to_exp)
{
    if (from_exp > to_exp || to_exp > 40) throw DomainError("bad N schedule exponents");
    std::vector<std::uint64_t> out;
    for (unsigned e = from_exp; e <= to_exp; ++e) out.push_back(std::uint64_t{1} << e);
    return out;
}

void CampaignConfig::validate() const
{
    auto increasing = [](const std::vector<std::uint64_t> &v) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (n_schedule.size() < 5 || !increasing(n_schedule) || n_schedule.front() < 2) {
        throw DomainError("N schedule must hold >= 5 strictly increasing values >= 2");
    }
    if (exact_n.empty() || !increasing(exact_n) || exact_n.front() < 1) {
        throw DomainError("exact N list must be strictly increasing and positive");
    }
    for (double t : {tolerance, mzv_tolerance, asymptotic_tolerance, zero_floor}) {
        if (!(t > 0) || !std::isfinite(t)) throw DomainError("tolerances must be positive");
    }
    if (!(slack >= 1)) throw DomainError("slack must be >= 1");
    if (max_weight < 1) throw DomainError("max weight must be >= 1");
    if (workers < 0) throw DomainError("workers must be >= 0");
}

Json CampaignConfig::to_json() const
{
    Json j;
    j["maxWeight"] = max_weight;
    j["nSchedule"] = n_schedule;
    j["exactN"] = exact_n;
    j["harmonicPairs"] = harmonic_pairs;
    j["harmonicN"] = harmonic_n;
    j["tolerance"] = tolerance;
    j["mzvTolerance"] = mzv_tolerance;
    j["asymptoticTolerance"] = asymptotic_tolerance;
    j["zeroFloor"] = zero_floor;
    j["slack"] = slack;
    j["seed"] = seed;
    return j;
}

const char *to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::out_of_scope: return "out_of_scope";
    }
    return "?";
}

Json CaseRecord::to_json() const
{
    Json j;
    j["key"] = key;
    j["pass"] = pass;
    if (residual) j["residual"] = *residual;
    for (const auto &[k, v] : detail.items()) j[k] = v;
    if (fit) {
        Json f;
        f["exponent"] = fit->exponent ? Json(*fit->exponent) : Json(nullptr);
        f["boundedConstant"] = fit->bounded_constant;
        Json obs = Json::array();
        for (const auto &o : fit->observations) obs.push_back({o.n, o.residual});
        f["observations"] = std::move(obs);
        j["fit"] = std::move(f);
    }
    return j;
}

void Report::finalize()
{
    if (verdict == Verdict::out_of_scope) return;
    verdict = failed_cases() == 0 ? Verdict::pass : Verdict::fail;
}

std::size_t Report::failed_cases() const
{
    std::size_t n = 0;
    for (const auto &c : cases) n += c.pass ? 0 : 1;
    return n;
}

Json Report::to_json() const
{
    Json j;
    j["claimId"] = claim_id;
    j["statement"] = statement;
    j["parameters"] = parameters;
    Json cs = Json::array();
    for (const auto &c : cases) cs.push_back(c.to_json());
    j["cases"] = std::move(cs);
    j["verdict"] = to_string(verdict);
    j["elapsedMs"] = elapsed_ms ? Json(*elapsed_ms) : Json(nullptr);
    return j;
}

namespace {

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string number(double x)
{
    return Json(x).dump();
}

} // namespace

std::string Report::to_csv() const
{
    std::ostringstream out;
    out << "claimId,key,pass,residual,fitExponent,boundedConstant\n";
    for (const auto &c : cases) {
        out << csv_field(claim_id) << ',' << csv_field(c.key) << ',' << (c.pass ? "true" : "false") << ','
            << (c.residual ? number(*c.residual) : "") << ','
            << (c.fit && c.fit->exponent ? std::to_string(*c.fit->exponent) : "") << ','
            << (c.fit ? number(c.fit->bounded_constant) : "") << '\n';
    }
    return out.str();
}

bool ReportBundle::all_pass() const
{
    for (const auto &r : reports) {
        if (r.verdict == Verdict::fail) return false;
    }
    return true;
}

Json ReportBundle::summary(const CampaignConfig &cfg) const
{
    Json j;
    j["config"] = cfg.to_json();
    Json claims = Json::array();
    for (const auto &r : reports) {
        Json c;
        c["claimId"] = r.claim_id;
        c["verdict"] = to_string(r.verdict);
        c["cases"] = r.cases.size();
        c["failed"] = r.failed_cases();
        if (r.elapsed_ms) c["elapsedMs"] = *r.elapsed_ms;
        claims.push_back(std::move(c));
    }
    j["claims"] = std::move(claims);
    j["verdict"] = all_pass() ? "pass" : "fail";
    return j;
}

void write_bundle(const ReportBundle &bundle, const CampaignConfig &cfg, const std::filesystem::path &dir)
{
    std::filesystem::create_directories(dir);
    auto write = [](const std::filesystem::path &path, const std::string &text) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << text;
    };
    for (const auto &r : bundle.reports) {
        if (cfg.format == ReportFormat::csv) {
            write(dir / (r.claim_id + ".csv"), r.to_csv());
        } else {
            write(dir / (r.claim_id + ".json"), r.to_json().dump(2) + "\n");
        }
    }
    write(dir / "summary.json", bundle.summary(cfg).dump(2) + "\n");
}

} // namespace mzvkit
