#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mzv/error.hpp"
#include "mzv/finitesum.hpp"
#include "mzv/numeric.hpp"
#include "mzv/products.hpp"
#include "mzv/regularize.hpp"
#include "mzv/verify.hpp"

using namespace mzvkit;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// "w:0110" is a word, "i:2,1" an index; otherwise strings over {0,1} are words
// and anything else is an index.
LinComb parse_operand(const std::string &text)
{
    if (text.starts_with("w:")) return LinComb(Word::from_letters(text.substr(2)));
    if (text.starts_with("i:")) return LinComb::of_index(Index::parse(text.substr(2)));
    if (!text.empty() && text.find_first_not_of("01") == std::string::npos) return LinComb(Word::from_letters(text));
    return LinComb::of_index(Index::parse(text));
}

std::vector<std::uint64_t> parse_schedule(const std::string &text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("--n-schedule expects a:b");
    try {
        unsigned long a = std::stoul(text.substr(0, colon));
        unsigned long b = std::stoul(text.substr(colon + 1));
        return CampaignConfig::geometric_schedule(static_cast<unsigned>(a), static_cast<unsigned>(b));
    } catch (const std::logic_error &) {
        throw DomainError("--n-schedule expects two exponents a:b");
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Multiple zeta value toolkit: word algebra, truncated sums, regularization and verification."};
    app.require_subcommand(1);

    std::string op, lhs, rhs;
    bool pretty = false;
    auto *product = app.add_subcommand("product", "Harmonic or shuffle product of two words or indices");
    product->add_option("--op", op, "harmonic|shuffle")->required()->check(CLI::IsMember({"harmonic", "shuffle"}));
    product->add_option("lhs", lhs, "word (e.g. 110) or index (e.g. 2,1)")->required();
    product->add_option("rhs", rhs, "word or index")->required();
    product->add_flag("--pretty", pretty, "print as a sum of e(...) terms");

    std::string kind, sum_arg;
    std::uint64_t n = 0;
    auto *sum = app.add_subcommand("sum", "Exact truncated sum at N");
    sum->add_option("--kind", kind, "plain|flat|natural|r")->required()->check(
        CLI::IsMember({"plain", "flat", "natural", "r"}));
    sum->add_option("arg", sum_arg, "index (e.g. 1,2) or, for r, a;b arguments (e.g. 2,1;0,0)")->required();
    sum->add_option("--n", n, "upper bound N")->required();

    std::string reg_op, reg_index;
    bool reg_only = false;
    auto *regularize_cmd = app.add_subcommand("regularize", "Polynomial in T of a regularized index");
    regularize_cmd->add_option("--op", reg_op, "star|sh")->required()->check(CLI::IsMember({"star", "sh"}));
    regularize_cmd->add_option("index", reg_index, "index")->required();
    regularize_cmd->add_flag("--reg", reg_only, "print only the constant term");

    std::string mzv_index;
    double tol = kDefaultMzvTolerance;
    auto *mzv_cmd = app.add_subcommand("mzv", "Numerical multiple zeta value");
    mzv_cmd->add_option("index", mzv_index, "admissible index")->required();
    mzv_cmd->add_option("--tol", tol, "absolute tolerance");

    CampaignConfig cfg;
    std::string claim, schedule, out, format = "json";
    auto *verify = app.add_subcommand("verify", "Run verification campaigns");
    verify->add_option("claim", claim, "claim id or 'all'")->required();
    verify->add_option("--max-weight", cfg.max_weight, "maximal weight");
    verify->add_option("--n-schedule", schedule, "N = 2^a .. 2^b");
    verify->add_option("--tol", cfg.tolerance, "residual tolerance for the regularized relations");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--workers", cfg.workers, "worker threads (0 = default)");
    verify->add_option("--out", out, "directory for report files");
    verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--timing", cfg.timing, "record elapsedMs (reports stop being reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*product) {
            LinComb p = multiply(op == "harmonic" ? Product::harmonic : Product::shuffle, parse_operand(lhs),
                                 parse_operand(rhs));
            std::cout << (pretty ? p.pretty() : p.serialize()) << '\n';
        } else if (*sum) {
            Rational v = kind == "r" ? r_value(RArgs::parse(sum_arg), n)
                                     : evaluate(parse_variant(kind), word_of_index(Index::parse(sum_arg)), n);
            std::cout << to_pq_string(v) << '\n';
        } else if (*regularize_cmd) {
            Product k = reg_op == "star" ? Product::harmonic : Product::shuffle;
            LinComb x = LinComb::of_index(Index::parse(reg_index));
            if (reg_only) {
                std::cout << regularize(k, x).serialize() << '\n';
            } else {
                std::cout << decompose(k, x).serialize() << '\n';
            }
        } else if (*mzv_cmd) {
            std::cout << mzv(Index::parse(mzv_index), tol).serialize() << '\n';
        } else if (*verify) {
            if (!schedule.empty()) cfg.n_schedule = parse_schedule(schedule);
            cfg.format = format == "csv" ? ReportFormat::csv : ReportFormat::json;
            cfg.validate();
            ReportBundle bundle;
            if (claim == "all") {
                bundle = run_all(cfg);
            } else {
                bundle = run_claims({claim}, cfg);
            }
            if (!out.empty()) {
                write_bundle(bundle, cfg, out);
                for (const Report &r : bundle.reports) {
                    std::cout << r.claim_id << ' ' << to_string(r.verdict) << " (" << r.cases.size() << " cases, "
                              << r.failed_cases() << " failed)\n";
                }
            } else if (bundle.reports.size() == 1) {
                const Report &r = bundle.reports.front();
                std::cout << (cfg.format == ReportFormat::csv ? r.to_csv() : r.to_json().dump(2) + "\n");
            } else {
                std::cout << bundle.summary(cfg).dump(2) << '\n';
            }
            return bundle.all_pass() ? 0 : kExitFail;
        }
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RefusalError &e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
