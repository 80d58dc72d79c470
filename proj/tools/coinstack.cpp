// coinstack: stack-composition counts, rational generating functions and
// Frobenius (coin-problem) queries for sets of coin denominations.
//
// Exit codes: 0 success; 1 target not representable (decide); 2 bad input or
// usage; 3 work/search limit exceeded; 4 no finite Frobenius number
// (gcd > 1); 5 cross-strategy mismatch in bench.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coinstack/denominations.hpp"
#include "coinstack/errors.hpp"
#include "coinstack/frobenius.hpp"
#include "coinstack/genfunc.hpp"
#include "coinstack/recurrence.hpp"

namespace {

using coinstack::DenominationSet;
using coinstack::WorkBudget;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNotRepresentable = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInfiniteGap = 4;
constexpr int kExitBenchMismatch = 5;

// Big values are reported by digit count instead of printed in full.
constexpr std::size_t kValuePrintDigits = 40;

json envelope(const std::string& command, const DenominationSet& ds, json result) {
    return json{{"command", command},
                {"denominations", ds.to_string()},
                {"result", std::move(result)}};
}

void print_json(const json& j) {
    std::cout << j.dump(2) << '\n';
}

WorkBudget budget_from_env() {
    WorkBudget budget;
    if (const char* raw = std::getenv("COINSTACK_MAX_WORK")) {
        std::uint64_t value = 0;
        const char* last = raw + std::string_view(raw).size();
        auto [ptr, ec] = std::from_chars(raw, last, value);
        if (ec != std::errc{} || ptr != last || value == 0) {
            throw coinstack::MalformedError("COINSTACK_MAX_WORK must be a positive integer, got '" +
                                            std::string(raw) + "'");
        }
        budget.max_ops = value;
    }
    return budget;
}

int run_series(const std::string& denoms, std::uint64_t n, const std::string& format,
               const WorkBudget& budget) {
    const auto ds = DenominationSet::parse(denoms);
    const auto seq = coinstack::e_sequence(ds, n, budget);
    if (format == "json") {
        json terms = json::array();
        for (const auto& t : seq.terms) {
            terms.push_back(t.get_str());
        }
        print_json(envelope("series", ds,
                            json{{"n", std::to_string(n)}, {"terms", std::move(terms)}}));
    } else {
        const char sep = format == "csv" ? ',' : ' ';
        for (std::size_t i = 0; i < seq.terms.size(); ++i) {
            std::cout << i << sep << seq.terms[i].get_str() << '\n';
        }
    }
    return kExitOk;
}

int run_decide(const std::string& denoms, std::uint64_t target, const std::string& format,
               const WorkBudget& budget) {
    const auto ds = DenominationSet::parse(denoms);
    const auto report = coinstack::is_representable(ds, target, budget);
    if (format == "json") {
        print_json(envelope("decide", ds,
                            json{{"e_value", report.e_value.get_str()},
                                 {"representable", report.representable},
                                 {"target", std::to_string(target)}}));
    } else if (format == "csv") {
        std::cout << target << ','
                  << (report.representable ? "representable" : "not-representable") << ','
                  << report.e_value.get_str() << '\n';
    } else if (report.representable) {
        std::cout << "representable, count " << report.e_value.get_str() << '\n';
    } else {
        std::cout << "not-representable\n";
    }
    return report.representable ? kExitOk : kExitNotRepresentable;
}

int run_frobenius(const std::string& denoms, const std::string& format,
                  const WorkBudget& budget) {
    const auto ds = DenominationSet::parse(denoms);
    const auto result = coinstack::frobenius_number(ds, budget);
    const char* kind = coinstack::to_string(result.kind);
    if (format == "json") {
        json payload{{"kind", kind}};
        if (result.value) {
            payload["value"] = std::to_string(*result.value);
        }
        if (result.certificate) {
            payload["certificate"] = json{{"first", std::to_string(result.certificate->first)},
                                          {"length", std::to_string(result.certificate->length)}};
        }
        print_json(envelope("frobenius", ds, std::move(payload)));
    } else if (format == "csv") {
        std::cout << kind << ',' << (result.value ? std::to_string(*result.value) : "none")
                  << '\n';
    } else {
        switch (result.kind) {
            case coinstack::FrobeniusKind::finite:
                std::cout << "finite " << *result.value << '\n';
                break;
            case coinstack::FrobeniusKind::all_representable:
                std::cout << "all_representable none (all amounts representable)\n";
                break;
            case coinstack::FrobeniusKind::infinite_gap:
                std::cout << "infinite_gap\n";
                break;
        }
        if (result.certificate) {
            std::cout << "certificate " << result.certificate->first << ".."
                      << result.certificate->first + result.certificate->length - 1 << '\n';
        }
    }
    return result.kind == coinstack::FrobeniusKind::infinite_gap ? kExitInfiniteGap : kExitOk;
}

int run_genfunc(const std::string& denoms, const std::string& form, const std::string& format,
                const WorkBudget& budget) {
    const auto ds = DenominationSet::parse(denoms);
    const auto gf = form == "literal" ? coinstack::literal_gf(ds, budget)
                                      : coinstack::simplified_gf(ds);
    if (format == "json") {
        print_json(envelope("genfunc", ds,
                            json{{"P", gf.numerator.coeff_strings()},
                                 {"Q", gf.denominator.coeff_strings()},
                                 {"form", form},
                                 {"normalized", coinstack::to_display_normalized(gf)}}));
    } else if (format == "csv") {
        const auto dump = [](const char* name, const coinstack::IntPolynomial& poly) {
            for (std::size_t e = 0; e < poly.coeffs.size(); ++e) {
                if (sgn(poly.coeffs[e]) != 0) {
                    std::cout << name << ',' << e << ',' << poly.coeffs[e].get_str() << '\n';
                }
            }
        };
        dump("P", gf.numerator);
        dump("Q", gf.denominator);
    } else {
        std::cout << "P: " << gf.numerator.to_text() << '\n'
                  << "Q: " << gf.denominator.to_text() << '\n'
                  << "G: " << coinstack::to_display_normalized(gf) << '\n';
    }
    return kExitOk;
}

struct BenchMeasurement {
    double median_ms = 0.0;
    mpz_class term;
};

template <typename Fn>
BenchMeasurement measure(Fn&& evaluate, unsigned repeats) {
    BenchMeasurement out;
    std::vector<double> times;
    times.reserve(repeats);
    for (unsigned r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        mpz_class value = evaluate();
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        out.term = std::move(value);
    }
    std::sort(times.begin(), times.end());
    out.median_ms = times[(times.size() - 1) / 2];
    return out;
}

int run_bench(const std::string& denoms, std::uint64_t n, const std::string& strategy,
              unsigned repeats, const std::string& format, const WorkBudget& budget) {
    const auto ds = DenominationSet::parse(denoms);
    std::optional<BenchMeasurement> dp;
    std::optional<BenchMeasurement> fast;
    if (strategy == "dp" || strategy == "both") {
        dp = measure([&] { return coinstack::e_term_dp(ds, n, budget); }, repeats);
    }
    if (strategy == "fast" || strategy == "both") {
        fast = measure([&] { return coinstack::e_term_fast(ds, n, std::nullopt, budget); },
                       repeats);
    }
    if (dp && fast && dp->term != fast->term) {
        std::cerr << "error: dp and fast strategies disagree at n = " << n << '\n';
        return kExitBenchMismatch;
    }

    const mpz_class& term = dp ? dp->term : fast->term;
    const std::string digits_str = term.get_str();
    const bool huge = digits_str.size() > kValuePrintDigits;

    if (format == "json") {
        json payload{{"digits", std::to_string(digits_str.size())},
                     {"n", std::to_string(n)},
                     {"repeats", std::to_string(repeats)},
                     {"strategy", strategy}};
        if (dp) {
            payload["dp_median_ms"] = dp->median_ms;
        }
        if (fast) {
            payload["fast_median_ms"] = fast->median_ms;
        }
        if (dp && fast) {
            payload["equal"] = true;
        }
        if (!huge) {
            payload["value"] = digits_str;
        }
        print_json(envelope("bench", ds, std::move(payload)));
    } else if (format == "csv") {
        if (dp) {
            std::cout << "dp," << dp->median_ms << '\n';
        }
        if (fast) {
            std::cout << "fast," << fast->median_ms << '\n';
        }
        if (huge) {
            std::cout << "digits," << digits_str.size() << '\n';
        } else {
            std::cout << "value," << digits_str << '\n';
        }
    } else {
        std::cout << "n " << n << '\n' << "repeats " << repeats << '\n';
        if (dp) {
            std::cout << "dp median_ms " << dp->median_ms << '\n';
        }
        if (fast) {
            std::cout << "fast median_ms " << fast->median_ms << '\n';
        }
        if (dp && fast) {
            std::cout << "equal true\n";
        }
        if (huge) {
            std::cout << "digits " << digits_str.size() << '\n';
        } else {
            std::cout << "value " << digits_str << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stack-composition counts, generating functions and Frobenius queries "
                 "for coin denomination sets"};
    app.require_subcommand(1);

    std::string denoms;
    std::string format = "text";
    std::string form = "simplified";
    std::string strategy = "both";
    std::uint64_t n = 0;
    std::uint64_t target = 0;
    unsigned repeats = 5;

    const auto formats = CLI::IsMember({"text", "csv", "json"});

    auto* series = app.add_subcommand("series", "print E_0..E_n");
    series->add_option("--denoms", denoms, "comma-separated denominations")->required();
    series->add_option("--n", n, "last index to print")->required();
    series->add_option("--format", format, "output format")->check(formats);

    auto* decide = app.add_subcommand("decide", "is the target representable?");
    decide->add_option("--denoms", denoms, "comma-separated denominations")->required();
    decide->add_option("--target", target, "amount to test")->required();
    decide->add_option("--format", format, "output format")->check(formats);

    auto* frobenius = app.add_subcommand("frobenius", "largest non-representable amount");
    frobenius->add_option("--denoms", denoms, "comma-separated denominations")->required();
    frobenius->add_option("--format", format, "output format")->check(formats);

    auto* genfunc = app.add_subcommand("genfunc", "print the generating function P/Q");
    genfunc->add_option("--denoms", denoms, "comma-separated denominations")->required();
    genfunc->add_option("--form", form, "numerator construction")
        ->check(CLI::IsMember({"literal", "simplified"}));
    genfunc->add_option("--format", format, "output format")->check(formats);

    auto* bench = app.add_subcommand("bench", "time the E_n evaluation strategies");
    bench->add_option("--denoms", denoms, "comma-separated denominations")->required();
    bench->add_option("--n", n, "index to evaluate")->required();
    bench->add_option("--strategy", strategy, "evaluation strategy")
        ->check(CLI::IsMember({"dp", "fast", "both"}));
    bench->add_option("--repeats", repeats, "timing repetitions")->check(CLI::PositiveNumber);
    bench->add_option("--format", format, "output format")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        const WorkBudget budget = budget_from_env();
        if (series->parsed()) {
            return run_series(denoms, n, format, budget);
        }
        if (decide->parsed()) {
            return run_decide(denoms, target, format, budget);
        }
        if (frobenius->parsed()) {
            return run_frobenius(denoms, format, budget);
        }
        if (genfunc->parsed()) {
            return run_genfunc(denoms, form, format, budget);
        }
        if (bench->parsed()) {
            return run_bench(denoms, n, strategy, repeats, format, budget);
        }
    } catch (const coinstack::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const coinstack::OracleLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const coinstack::SearchLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const coinstack::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
