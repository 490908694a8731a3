// hodgecalc: exact tables and consistency checks for the Hurwitz-Hodge
// integral families D, V, T of degree-d admissible covers.
//
// All values are exact rationals; "check" subcommands certify the closed
// generating functions against the genus recursions coefficient by
// coefficient.

#include "hodge/engine.hpp"
#include "hodge/partition.hpp"
#include "hodge/records.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitCacheError = 4;

struct TableOptions {
    int degree = 0;
    int gmax = 0;
    std::string family_text;
    int i_filter = -1;
    std::string format = "pretty";
    bool verify = false;
    std::string cache_path;
    int max_order = 64;
};

struct CheckAllOptions {
    int degree = 0;
    int gmax = 0;
    int imax = 0;
    int max_order = 64;
};

struct LemmaOptions {
    int nmax = 0;
};

struct CorollaryOptions {
    int degree = 0;
    int order = 20;
    int max_order = 64;
};

bool order_within_cap(int order, int max_order, const char* what)
{
    if (order <= max_order)
        return true;
    std::cerr << what << " needs series order " << order << " which exceeds --max-order "
              << max_order << " (raise the cap to proceed)\n";
    return false;
}

std::vector<hodge::OutputRecord> all_family_records(const hodge::Engine& engine)
{
    std::vector<hodge::OutputRecord> records;
    for (const hodge::Family family :
         {hodge::Family::D, hodge::Family::V, hodge::Family::T}) {
        auto part = hodge::records_from_table(engine.build_table(family), engine.degree());
        records.insert(records.end(), part.begin(), part.end());
    }
    return records;
}

int run_table(const TableOptions& opt)
{
    const hodge::Family family = *hodge::family_from_letter(opt.family_text);
    if (family == hodge::Family::T && opt.i_filter >= 0) {
        std::cerr << "--i cannot be used with family T (T values carry no i index)\n";
        return kExitUsage;
    }
    if (!order_within_cap(2 * opt.gmax + 2, opt.max_order, "table"))
        return kExitUsage;

    std::vector<hodge::OutputRecord> records;
    if (opt.verify) {
        // Verification always computes both paths fresh; the cache only ever
        // holds the canonical closed-form records.
        const hodge::Engine engine({opt.degree, opt.gmax});
        if (const auto mismatch = engine.verify_family(family)) {
            std::cerr << "verification failed: " << *mismatch << '\n';
            return kExitCheckFailed;
        }
        records = hodge::records_from_table(engine.build_table(family), engine.degree());
        for (hodge::OutputRecord& rec : records) {
            // D_1 is the initial condition shared by both paths, so it has
            // no independent second computation to agree with.
            if (!(family == hodge::Family::D && rec.i == 1))
                rec.path = "both-agree";
        }
        if (!opt.cache_path.empty()) {
            try {
                hodge::write_cache_file(opt.cache_path,
                                        {opt.degree, opt.gmax, all_family_records(engine)});
            } catch (const hodge::CacheError& err) {
                std::cerr << err.what() << '\n';
                return kExitCacheError;
            }
        }
    } else {
        std::optional<std::vector<hodge::OutputRecord>> cached;
        if (!opt.cache_path.empty()) {
            try {
                if (const auto cache = hodge::read_cache_file(opt.cache_path);
                    cache && cache->degree == opt.degree && cache->gmax == opt.gmax)
                    cached = cache->records;
            } catch (const hodge::CacheError& err) {
                std::cerr << err.what() << '\n';
                return kExitCacheError;
            }
        }
        if (cached) {
            records = std::move(*cached);
            std::erase_if(records, [&](const hodge::OutputRecord& rec) {
                return rec.family != family;
            });
        } else {
            const hodge::Engine engine({opt.degree, opt.gmax});
            records = hodge::records_from_table(engine.build_table(family), engine.degree());
            if (!opt.cache_path.empty()) {
                try {
                    hodge::write_cache_file(opt.cache_path,
                                            {opt.degree, opt.gmax, all_family_records(engine)});
                } catch (const hodge::CacheError& err) {
                    std::cerr << err.what() << '\n';
                    return kExitCacheError;
                }
            }
        }
    }

    if (opt.i_filter >= 0)
        std::erase_if(records, [&](const hodge::OutputRecord& rec) {
            return rec.i != opt.i_filter;
        });

    if (opt.format == "csv")
        std::cout << hodge::render_csv(records);
    else if (opt.format == "json")
        std::cout << hodge::render_json(opt.degree, opt.gmax, records);
    else
        std::cout << hodge::render_pretty(opt.degree, opt.gmax, records);
    return kExitOk;
}

int finish_check(const std::vector<hodge::CheckResult>& results)
{
    int failed = 0;
    for (const hodge::CheckResult& check : results) {
        if (check.passed) {
            std::cout << "[pass] " << check.name << '\n';
        } else {
            std::cout << "[fail] " << check.name;
            if (!check.detail.empty())
                std::cout << ": " << check.detail;
            std::cout << '\n';
            ++failed;
        }
    }
    if (failed == 0) {
        std::cout << results.size() << (results.size() == 1 ? " check" : " checks")
                  << " passed\n";
        return kExitOk;
    }
    std::cout << "FAILED: " << failed << " of " << results.size() << " checks failed\n";
    return kExitCheckFailed;
}

int run_check_all(const CheckAllOptions& opt)
{
    if (opt.imax > opt.gmax) {
        std::cerr << "--imax must not exceed --gmax\n";
        return kExitUsage;
    }
    if (!order_within_cap(2 * opt.gmax + 2, opt.max_order, "check all"))
        return kExitUsage;
    std::cout << "check all: degree=" << opt.degree << " gmax=" << opt.gmax
              << " imax=" << opt.imax << '\n';
    const hodge::Engine engine({opt.degree, opt.gmax});
    return finish_check(engine.cross_check(opt.imax).checks);
}

int run_check_lemma1(const LemmaOptions& opt)
{
    std::cout << "check lemma1: nmax=" << opt.nmax << '\n';
    std::vector<hodge::CheckResult> results;
    for (int n = 1; n <= opt.nmax; ++n) {
        const auto partitions = hodge::enumerate_partitions(n);
        hodge::CheckResult result;
        result.name = "n=" + std::to_string(n) + ": alternating split sums vanish ("
                      + std::to_string(partitions.size())
                      + (partitions.size() == 1 ? " partition)" : " partitions)");
        result.passed = true;
        for (const hodge::Partition& eta : partitions) {
            const hodge::Rational sum = hodge::alternating_split_sum(eta);
            if (sum != 0) {
                result.passed = false;
                result.detail = "counterexample eta = " + eta.to_string()
                                + ", sum = " + hodge::to_string(sum);
                break;
            }
        }
        results.push_back(std::move(result));
    }
    return finish_check(results);
}

int run_check_lemma2(const LemmaOptions& opt)
{
    std::cout << "check lemma2: nmax=" << opt.nmax << '\n';
    std::vector<hodge::CheckResult> results;
    for (int n = 1; n <= opt.nmax; ++n) {
        const auto partitions = hodge::enumerate_partitions(n);
        hodge::CheckResult result;
        result.name = "n=" + std::to_string(n)
                      + ": weighted split sums match the single-part dichotomy ("
                      + std::to_string(partitions.size())
                      + (partitions.size() == 1 ? " partition)" : " partitions)");
        result.passed = true;
        for (const hodge::Partition& eta : partitions) {
            const hodge::Rational sum = hodge::weighted_split_sum(eta);
            const hodge::Rational expected(eta.length() == 1 ? eta.size() + 1 : 0);
            if (sum != expected) {
                result.passed = false;
                result.detail = "counterexample eta = " + eta.to_string() + ", sum = "
                                + hodge::to_string(sum) + ", expected "
                                + hodge::to_string(expected);
                break;
            }
        }
        results.push_back(std::move(result));
    }
    return finish_check(results);
}

int run_check_corollary(const CorollaryOptions& opt)
{
    if (!order_within_cap(opt.order, opt.max_order, "check corollary"))
        return kExitUsage;
    std::cout << "check corollary: degree=" << opt.degree << " order=" << opt.order << '\n';
    const hodge::Series exp_form = hodge::total_exp_form(opt.degree, opt.order);
    const hodge::Series product_form = hodge::total_product_form(opt.degree, opt.order);
    hodge::CheckResult result;
    result.name = "exponential form equals sine product form through u^"
                  + std::to_string(opt.order);
    result.passed = true;
    for (int n = 0; n <= opt.order; ++n) {
        if (exp_form.coeff(n) != product_form.coeff(n)) {
            result.passed = false;
            result.detail = "first mismatch at u^" + std::to_string(n) + ": "
                            + hodge::to_string(exp_form.coeff(n)) + " vs "
                            + hodge::to_string(product_form.coeff(n));
            break;
        }
    }
    return finish_check({result});
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Hurwitz-Hodge integral tables with twin-path certification"};
    app.require_subcommand(1);

    TableOptions table_opt;
    CLI::App* table = app.add_subcommand("table", "emit raw integral values for one family");
    table->add_option("--degree", table_opt.degree, "covering degree d (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
    table->add_option("--gmax", table_opt.gmax, "largest genus G (>= 1)")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    table->add_option("--family", table_opt.family_text, "family: D, V or T")
        ->required()
        ->check(CLI::IsMember({"D", "V", "T"}));
    table->add_option("--i", table_opt.i_filter, "only emit rows with this i index")
        ->check(CLI::Range(0, 1 << 20));
    table->add_option("--format", table_opt.format, "output format (default pretty)")
        ->check(CLI::IsMember({"pretty", "csv", "json"}));
    table->add_flag("--verify", table_opt.verify,
                    "compute both paths and require exact agreement");
    table->add_option("--cache", table_opt.cache_path,
                      "reuse/store values in this cache file");
    table->add_option("--max-order", table_opt.max_order,
                      "guard cap on the series order 2G+2 (default 64)")
        ->envname("HH_MAX_ORDER");

    CLI::App* check = app.add_subcommand("check", "run a certification suite");
    check->require_subcommand(1);

    CheckAllOptions all_opt;
    CLI::App* check_all = check->add_subcommand(
        "all", "cross-check closed forms, recursions, repackaging and residuals");
    check_all->add_option("--degree", all_opt.degree, "covering degree d (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
    check_all->add_option("--gmax", all_opt.gmax, "largest genus G (>= 1)")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    check_all->add_option("--imax", all_opt.imax, "largest family index to cross-check")
        ->required()
        ->check(CLI::Range(0, 1 << 20));
    check_all->add_option("--max-order", all_opt.max_order,
                          "guard cap on the series order 2G+2 (default 64)")
        ->envname("HH_MAX_ORDER");

    LemmaOptions lemma1_opt;
    CLI::App* check_lemma1 = check->add_subcommand(
        "lemma1", "alternating split sums vanish on every nonempty partition");
    check_lemma1->add_option("--nmax", lemma1_opt.nmax, "check all partitions of 1..nmax")
        ->required()
        ->check(CLI::Range(1, 200));

    LemmaOptions lemma2_opt;
    CLI::App* check_lemma2 = check->add_subcommand(
        "lemma2", "weighted split sums: |eta|+1 on single parts, 0 otherwise");
    check_lemma2->add_option("--nmax", lemma2_opt.nmax, "check all partitions of 1..nmax")
        ->required()
        ->check(CLI::Range(1, 200));

    CorollaryOptions corollary_opt;
    CLI::App* check_corollary = check->add_subcommand(
        "corollary", "total-family series: exponential form vs sine product form");
    check_corollary->add_option("--degree", corollary_opt.degree, "covering degree d (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
    check_corollary->add_option("--order", corollary_opt.order,
                                "compare coefficients through u^order (default 20)")
        ->check(CLI::Range(0, 1 << 20));
    check_corollary->add_option("--max-order", corollary_opt.max_order,
                                "guard cap on the series order (default 64)")
        ->envname("HH_MAX_ORDER");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForVersion& version) {
        return app.exit(version);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (table->parsed())
            return run_table(table_opt);
        if (check_all->parsed())
            return run_check_all(all_opt);
        if (check_lemma1->parsed())
            return run_check_lemma1(lemma1_opt);
        if (check_lemma2->parsed())
            return run_check_lemma2(lemma2_opt);
        if (check_corollary->parsed())
            return run_check_corollary(corollary_opt);
    } catch (const hodge::CacheError& err) {
        std::cerr << err.what() << '\n';
        return kExitCacheError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
