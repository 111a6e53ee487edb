#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "motivic/error.hpp"
#include "motivic/h2.hpp"
#include "motivic/json_io.hpp"
#include "motivic/k0.hpp"
#include "motivic/rat.hpp"
#include "motivic/variety.hpp"
#include "motivic/verify.hpp"
#include "motivic/witt.hpp"

namespace motivic::cli {

namespace {

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::BudgetExceeded: return kBudget;
        case ErrorCode::NoRationalForm:
        case ErrorCode::NonIntegralCoefficients: return kNoRationalForm;
        case ErrorCode::UnsupportedSpace:
        case ErrorCode::UnsupportedCycleLength:
        case ErrorCode::UnsupportedScenario: return kUnsupported;
        case ErrorCode::Internal: return kSuiteFailure;
        default: return kParse;
    }
}

struct Common {
    bool plain = false;
    std::uint64_t seed = 0;
    CountOptions count;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::uint64_t budget_from_env() {
    const char* env = std::getenv("MOTIVIC_BUDGET");
    if (!env) return ff::kDefaultBudget;
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
        throw Error(ErrorCode::ValidationError, "MOTIVIC_BUDGET must be a positive integer, got '" + s + "'");
    }
    const auto v = std::stoull(s);
    if (v == 0) throw Error(ErrorCode::ValidationError, "MOTIVIC_BUDGET must be positive");
    return v;
}

VarietyExpr read_variety(const std::string& text, std::optional<std::uint64_t> q) { return parse_variety(text, q); }

// "[1,2,3]", "{"coeffs": [...]}" or "1,2,3"
WittVector read_witt(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(ErrorCode::SyntaxError, std::string("bad JSON: ") + e.what(), e.byte ? e.byte - 1 : 0);
        }
        return witt_from_json(j);
    }
    Json arr = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        arr.push_back(item);
    }
    return witt_from_json(arr);
}

std::vector<Rational> read_ghosts(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || item.find_first_not_of("0123456789-/") != std::string::npos) {
            throw Error(ErrorCode::SyntaxError, "not a rational number: '" + item + "'");
        }
        Rational r;
        if (r.set_str(item, 10) != 0 || r.get_den() == 0) {
            throw Error(ErrorCode::SyntaxError, "not a rational number: '" + item + "'");
        }
        r.canonicalize();
        out.push_back(r);
    }
    if (out.empty()) throw Error(ErrorCode::ValidationError, "need at least one ghost component");
    return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

void plain_table(std::ostream& out, const std::string& head, const std::vector<BigInt>& v) {
    out << pad("m", 4) << "  " << head << '\n';
    for (std::size_t i = 0; i < v.size(); ++i) out << pad(std::to_string(i + 1), 4) << "  " << v[i].get_str() << '\n';
}

void plain_witt(std::ostream& out, const WittVector& w) {
    out << "precision " << w.precision() << '\n';
    plain_table(out, "a_m", w.coeffs());
}

bool curve_shaped(const RationalFn& f, std::uint64_t q) {
    return f.denominator == std::vector<BigInt>{1, -BigInt(q + 1), BigInt(q)} && f.numerator.size() % 2 == 1 &&
           f.numerator.size() > 1;
}

void report_rational(std::ostream& out, const Common& c, Json& j, const RationalFn& f, std::optional<std::uint64_t> q) {
    j["rational"] = rational_to_json(f);
    j["rational_text"] = format_rational_fn(f);
    std::optional<WeilReport> weil;
    if (q && curve_shaped(f, *q)) {
        weil = weil_validate(f, *q);
        j["weil"] = weil_to_json(*weil);
    }
    if (c.plain) {
        out << "zeta = " << format_rational_fn(f) << '\n';
        if (weil) {
            out << "weil: " << (weil->passed ? "pass" : "fail") << ", genus " << weil->genus << ", |roots|";
            out << std::setprecision(12);
            for (long double r : weil->root_abs) out << ' ' << static_cast<double>(r);
            out << '\n';
            for (const auto& fail : weil->failures) out << "  " << fail << '\n';
        }
    }
}

std::size_t default_degree(std::size_t n) { return n >= 2 ? (n - 2) / 2 : 0; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeta functions of varieties over finite fields as big Witt vectors, and the h2 invariant"};
    app.name("motivic");
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--plain", common.plain, "Human-readable tables instead of JSON");
    app.add_option("--seed", common.seed, "Seed for the randomized suites")->capture_default_str();

    std::string variety_text, second_text, op;
    std::optional<std::uint64_t> q_override;
    unsigned upto = 1;
    std::size_t precision = 8;
    std::optional<std::size_t> max_degree;
    bool want_rational = false;

    auto* count = app.add_subcommand("count", "Point counts N_1..N_m");
    count->add_option("variety", variety_text)->required();
    count->add_option("-m,--upto", upto, "Largest extension degree")->check(CLI::Range(1u, 64u));
    count->add_option("-q,--q", q_override, "Base field for untagged input");

    auto* profile = app.add_subcommand("profile", "Closed points by degree a_1..a_m");
    profile->add_option("variety", variety_text)->required();
    profile->add_option("-m,--upto", upto)->check(CLI::Range(1u, 64u));
    profile->add_option("-q,--q", q_override);

    auto* zeta = app.add_subcommand("zeta", "Zeta function as a Witt vector");
    zeta->add_option("variety", variety_text)->required();
    zeta->add_option("-n,--precision", precision)->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    zeta->add_option("-q,--q", q_override);
    zeta->add_flag("--rational", want_rational, "Also reconstruct P(t)/Q(t)");
    zeta->add_option("--max-degree", max_degree);

    auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
    witt->add_option("op", op, "add | sub | mul | neg | ghost | from-ghost | teichmuller")
        ->required()
        ->check(CLI::IsMember({"add", "sub", "mul", "neg", "ghost", "from-ghost", "teichmuller"}));
    witt->add_option("a", variety_text, "Witt vector: JSON or comma-separated a_1,..,a_N")->required();
    witt->add_option("b", second_text);
    witt->add_option("-n,--precision", precision)->check(CLI::Range(std::size_t{1}, std::size_t{64}));

    auto* rational = app.add_subcommand("rational", "Rational form of a zeta function");
    rational->add_option("input", variety_text, "A variety, or a Witt vector as JSON / comma list")->required();
    rational->add_option("-n,--precision", precision)->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    rational->add_option("-q,--q", q_override, "Base field (untagged varieties, Weil check for Witt input)");
    rational->add_option("--max-degree", max_degree);

    std::string perm_text;
    bool swap = false, conj = false;
    std::optional<std::uint64_t> frob, ell;
    auto* h2 = app.add_subcommand("h2", "The h2 invariant of an automorphism with a Galois element");
    h2->add_option("scenario", variety_text, "\"<variety>\" swap=(1 2) galois=frob q=3, or a variety with flags")
        ->required();
    h2->add_flag("--swap", swap, "Transpose components 1 and 2");
    h2->add_option("--perm", perm_text, "Permutation in cycle notation, e.g. \"(1 2)(3 4)\"");
    auto* frob_opt = h2->add_option("--frob", frob, "Frobenius over F_q");
    auto* conj_opt = h2->add_flag("--conj", conj, "Complex conjugation");
    frob_opt->excludes(conj_opt);
    h2->add_option("--ell", ell, "Use the odd-prime symbol (.,.)_ell instead of (.,.)_2");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(names));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        Json j;
        j["error"] = {{"code", "UsageError"}, {"message", e.what()}};
        err << j.dump() << '\n';
        return kParse;
    }

    try {
        common.count.budget = budget_from_env();
        if (count->parsed()) {
            const VarietyExpr x = read_variety(variety_text, q_override);
            std::vector<BigInt> counts;
            for (unsigned m = 1; m <= upto; ++m) counts.push_back(point_count(x, m, common.count));
            if (common.plain) {
                out << print_variety(x) << '\n';
                plain_table(out, "N_m", counts);
            } else {
                Json j;
                j["variety"] = print_variety(x);
                j["counts"] = big_array(counts);
                emit(out, j);
            }
            return kOk;
        }
        if (profile->parsed()) {
            const VarietyExpr x = read_variety(variety_text, q_override);
            const auto a = closed_point_profile(x, upto, common.count);
            if (common.plain) {
                out << print_variety(x) << '\n';
                plain_table(out, "a_m", a);
            } else {
                Json j;
                j["variety"] = print_variety(x);
                j["profile"] = big_array(a);
                emit(out, j);
            }
            return kOk;
        }
        if (zeta->parsed()) {
            const VarietyExpr x = read_variety(variety_text, q_override);
            const WittVector w = measure_zeta(K0Class::of(x), precision, common.count);
            Json j;
            j["variety"] = print_variety(x);
            j["witt"] = witt_to_json(w);
            if (common.plain) {
                out << print_variety(x) << '\n';
                plain_witt(out, w);
            }
            if (want_rational) {
                // reconstruction may need more coefficients than were asked for
                const std::size_t d = max_degree.value_or(std::max<std::size_t>(default_degree(precision), 2));
                const WittVector wide =
                    2 * d + 2 > precision ? measure_zeta(K0Class::of(x), 2 * d + 2, common.count) : w;
                report_rational(out, common, j, to_rational(wide, d), x.q());
            }
            if (!common.plain) emit(out, j);
            return kOk;
        }
        if (witt->parsed()) {
            Json j;
            auto binary = [&](auto f) {
                if (second_text.empty()) throw Error(ErrorCode::ValidationError, op + " needs two Witt vectors");
                return f(read_witt(variety_text), read_witt(second_text));
            };
            std::optional<WittVector> result;
            if (op == "add") result = binary(witt_add);
            if (op == "sub") result = binary(witt_sub);
            if (op == "mul") result = binary(witt_mul);
            if (op == "neg") result = witt_neg(read_witt(variety_text));
            if (op == "from-ghost") result = ghost_inverse(read_ghosts(variety_text));
            if (op == "teichmuller") {
                const auto v = read_ghosts(variety_text);
                if (v.size() != 1 || v[0].get_den() != 1) {
                    throw Error(ErrorCode::ValidationError, "teichmuller takes one integer");
                }
                result = teichmuller(v[0].get_num(), precision);
            }
            if (op == "ghost") {
                const GhostSeq g = ghost(read_witt(variety_text));
                if (common.plain) {
                    out << pad("m", 4) << "  g_m\n";
                    for (std::size_t i = 0; i < g.size(); ++i) out << pad(std::to_string(i + 1), 4) << "  " << g[i].get_str() << '\n';
                } else {
                    Json arr = Json::array();
                    for (const auto& v : g) arr.push_back(v.get_str());
                    j["ghost"] = arr;
                    emit(out, j);
                }
                return kOk;
            }
            if (common.plain) {
                plain_witt(out, *result);
            } else {
                emit(out, witt_to_json(*result));
            }
            return kOk;
        }
        if (rational->parsed()) {
            const auto first = variety_text.find_first_not_of(" \t");
            const bool is_witt = first != std::string::npos &&
                                 (variety_text[first] == '[' || variety_text[first] == '{' ||
                                  variety_text[first] == '-' || std::isdigit(static_cast<unsigned char>(variety_text[first])));
            Json j;
            std::optional<std::uint64_t> q = q_override;
            WittVector w = WittVector::zero(1);
            if (is_witt) {
                w = read_witt(variety_text);
            } else {
                const VarietyExpr x = read_variety(variety_text, q_override);
                q = x.q();
                j["variety"] = print_variety(x);
                w = measure_zeta(K0Class::of(x), precision, common.count);
            }
            report_rational(out, common, j, to_rational(w, max_degree.value_or(default_degree(w.precision()))), q);
            if (!common.plain) emit(out, j);
            return kOk;
        }
        if (h2->parsed()) {
            Scenario s;
            if (variety_text.find('"') != std::string::npos || variety_text.find("galois=") != std::string::npos) {
                std::string text = variety_text;
                if (text.find('"') == std::string::npos) {
                    // unquoted: the variety runs up to the first key=value token
                    const auto key = text.find_first_of("=");
                    auto cut = text.rfind(' ', key);
                    if (key == std::string::npos || cut == std::string::npos) {
                        throw Error(ErrorCode::SyntaxError, "scenario needs a quoted variety", 0);
                    }
                    text = "\"" + text.substr(0, cut) + "\"" + text.substr(cut);
                }
                s = parse_scenario(text);
            } else {
                if (!frob && !conj) throw Error(ErrorCode::SyntaxError, "pass --frob q or --conj");
                const Galois g = frob ? Galois::frobenius(*frob) : Galois::conjugation();
                const VarietyExpr x = read_variety(variety_text, frob ? frob : std::optional<std::uint64_t>(3));
                const std::size_t k = make_scenario(x, {}, g).components.size();
                std::string cycles = perm_text;
                if (swap) cycles += "(1 2)";
                s = make_scenario(x, parse_cycles(cycles, k), g);
            }
            const SteinbergProduct symbols = sigma2(scenario_pairs(s));
            const int value = ell ? h_odd_eval(s, *ell) : moore_h2(symbols);
            if (common.plain) {
                out << "h2 = " << value << '\n';
                for (const auto& f : symbols.factors) {
                    out << "  {" << f.a.get_str() << ", " << f.b.get_str() << "}^" << f.exponent << "  (,)_2 = "
                        << hilbert2(f.a, f.b) << '\n';
                }
            } else {
                Json j;
                j["value"] = value;
                j["symbols"] = symbols_to_json(symbols);
                if (ell) j["ell"] = *ell;
                emit(out, j);
            }
            return kOk;
        }
        if (verify->parsed()) {
            SuiteOptions opts;
            opts.seed = common.seed;
            opts.count = common.count;
            std::vector<std::string> run_names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool all_passed = true;
            Json suites = Json::array();
            for (const auto& name : run_names) {
                const SuiteReport r = run_suite(name, opts);
                all_passed = all_passed && r.passed;
                if (common.plain) {
                    out << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.cases.size() - r.failures() << "/"
                        << r.cases.size() << ")\n";
                    for (const auto& c : r.cases)
                        if (!c.passed) out << "  FAIL " << c.name << ": " << c.detail << '\n';
                    continue;
                }
                Json cases = Json::array();
                for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                suites.push_back({{"suite", r.suite}, {"passed", r.passed}, {"cases", cases}});
            }
            if (!common.plain) {
                Json j;
                j["passed"] = all_passed;
                j["seed"] = common.seed;
                j["suites"] = suites;
                emit(out, j);
            }
            return all_passed ? kOk : kSuiteFailure;
        }
    } catch (const Error& e) {
        err << error_to_json(e).dump() << '\n';
        return exit_code_for(e.code());
    }
    return kParse;
}

}  // namespace motivic::cli
