// Command-line front end: parses ring elements and truncated series, runs
// the library operations, and emits text or JSON.
//
// Exit codes: 0 success, 1 parse/usage error, 2 domain error (and failed
// selftest checks).

#include <cctype>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <motivic/motivic.hpp>
#include <motivic/selftest.hpp>

namespace {

using motivic::BigInt;
using motivic::LaurentPoly;
using motivic::TruncSeries;
using nlohmann::json;

template <motivic::zeta_ring R>
struct RingIo;

template <>
struct RingIo<BigInt> {
    static BigInt parse(const std::string& text) {
        std::string trimmed;
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                trimmed += ch;
            }
        }
        std::size_t pos = 0;
        if (pos < trimmed.size() && (trimmed[pos] == '+' || trimmed[pos] == '-')) {
            ++pos;
        }
        if (pos == trimmed.size()) {
            throw std::invalid_argument("expected an integer, got '" + text + "'");
        }
        for (std::size_t i = pos; i < trimmed.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(trimmed[i]))) {
                throw std::invalid_argument("expected an integer, got '" + text + "'");
            }
        }
        return BigInt(trimmed[0] == '+' ? trimmed.substr(1) : trimmed);
    }

    static std::string to_text(const BigInt& value) { return value.str(); }

    // Integers are encoded as constant Laurent terms so every ring element
    // shares one JSON shape.
    static json to_json(const BigInt& value) {
        json terms = json::array();
        if (value != 0) {
            terms.push_back({{"exp", 0}, {"coeff", value.str()}});
        }
        return terms;
    }
};

template <>
struct RingIo<LaurentPoly> {
    static LaurentPoly parse(const std::string& text) { return LaurentPoly::parse(text); }

    static std::string to_text(const LaurentPoly& value) { return value.to_string(); }

    static json to_json(const LaurentPoly& value) {
        json terms = json::array();
        for (const auto& [e, c] : value.terms()) {
            terms.push_back({{"exp", e}, {"coeff", c.str()}});
        }
        return terms;
    }
};

// Comma-separated coefficients of t^1..t^r; fewer entries than r means the
// rest are zero, more is an error.
template <motivic::zeta_ring R>
TruncSeries<R> parse_series(const std::string& text, int order) {
    std::vector<R> tail;
    std::string part;
    std::size_t start = 0;
    bool any = false;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            any = true;
        }
    }
    if (any) {
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            part = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start);
            tail.push_back(RingIo<R>::parse(part));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    return motivic::unit_series(order, tail);
}

template <motivic::zeta_ring R>
void emit_series(const TruncSeries<R>& series, bool as_json) {
    if (as_json) {
        json coeffs = json::array();
        for (int k = 0; k <= series.order(); ++k) {
            coeffs.push_back({{"t", k}, {"value", RingIo<R>::to_json(series.coeff(k))}});
        }
        std::cout << json{{"order", series.order()}, {"coefficients", coeffs}}.dump()
                  << "\n";
    } else {
        for (int k = 0; k <= series.order(); ++k) {
            std::cout << "t^" << k << ": " << RingIo<R>::to_text(series.coeff(k)) << "\n";
        }
    }
}

template <motivic::zeta_ring R>
void emit_element(const R& value, bool as_json) {
    if (as_json) {
        std::cout << json{{"value", RingIo<R>::to_json(value)}}.dump() << "\n";
    } else {
        std::cout << RingIo<R>::to_text(value) << "\n";
    }
}

struct Request {
    std::string ring = "laurent";
    std::string format = "text";
    int order = 8;
    int k = 0;
    std::string element;
    std::string series;
    std::string exponent;
    std::string surface;
    bool check = false;
    int cases = 100;
    std::uint64_t seed = 42;

    bool as_json() const { return format == "json"; }
};

template <motivic::zeta_ring R>
int run_zeta(const Request& req) {
    emit_series(motivic::zeta(RingIo<R>::parse(req.element), req.order), req.as_json());
    return 0;
}

template <motivic::zeta_ring R>
int run_power(const Request& req) {
    const auto base = parse_series<R>(req.series, req.order);
    emit_series(motivic::power(base, RingIo<R>::parse(req.exponent)), req.as_json());
    return 0;
}

template <motivic::zeta_ring R>
int run_decompose(const Request& req) {
    const auto dec = motivic::decompose(parse_series<R>(req.series, req.order));
    if (req.as_json()) {
        json exps = json::array();
        for (int i = 1; i <= dec.order; ++i) {
            exps.push_back({{"i", i},
                            {"value", RingIo<R>::to_json(
                                          dec.exponents[static_cast<std::size_t>(i - 1)])}});
        }
        std::cout << json{{"order", dec.order}, {"exponents", exps}}.dump() << "\n";
    } else {
        for (int i = 1; i <= dec.order; ++i) {
            std::cout << "i=" << i << ": "
                      << RingIo<R>::to_text(dec.exponents[static_cast<std::size_t>(i - 1)])
                      << "\n";
        }
    }
    return 0;
}

template <motivic::zeta_ring R>
int run_sympow(const Request& req) {
    emit_element(motivic::sym_pow(RingIo<R>::parse(req.element), req.k), req.as_json());
    return 0;
}

int run_euler(const Request& req) {
    emit_element(motivic::euler_characteristic(RingIo<LaurentPoly>::parse(req.element)),
                 req.as_json());
    return 0;
}

int run_hilb(const Request& req) {
    const motivic::SurfaceClass surface(RingIo<LaurentPoly>::parse(req.surface));
    const auto series = motivic::hilb_series_product(surface, req.order);
    bool agree = true;
    if (req.check) {
        agree = series == motivic::hilb_zeta_product_shifted(surface, req.order) &&
                series == motivic::hilb_series_power(surface, req.order) &&
                series == motivic::hilb_direct_sum_series(surface, req.order);
    }
    if (req.as_json()) {
        json coeffs = json::array();
        for (int k = 0; k <= series.order(); ++k) {
            coeffs.push_back(
                {{"t", k}, {"value", RingIo<LaurentPoly>::to_json(series.coeff(k))}});
        }
        json doc{{"order", series.order()}, {"coefficients", coeffs}};
        if (req.check) {
            doc["check_passed"] = agree;
        }
        std::cout << doc.dump() << "\n";
    } else {
        emit_series(series, false);
        if (req.check) {
            std::cout << "check: " << (agree ? "all forms agree" : "FORMS DISAGREE") << "\n";
        }
    }
    return agree ? 0 : 2;
}

int run_selftest(const Request& req) {
    motivic::selftest::Options opt;
    opt.order = req.order;
    opt.cases = req.cases;
    opt.seed = req.seed;
    const auto results = motivic::selftest::run_all(opt);
    bool all_passed = true;
    if (req.as_json()) {
        json checks = json::array();
        for (const auto& r : results) {
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all_passed = all_passed && r.passed;
        }
        std::cout << json{{"checks", checks}, {"all_passed", all_passed}}.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
                      << ")\n";
            all_passed = all_passed && r.passed;
        }
        std::cout << (all_passed ? "selftest: all checks passed"
                                 : "selftest: CHECKS FAILED")
                  << "\n";
    }
    return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    Request req;
    CLI::App app{"Exact power structures over Z and Z[L,L^-1]: truncated series, "
                 "motivic zeta functions, and Hilbert-scheme generating series"};
    app.require_subcommand(1);

    auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", req.ring, "Coefficient ring")
            ->check(CLI::IsMember({"int", "laurent"}))
            ->capture_default_str();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", req.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--order", req.order, "Truncation order r")
            ->check(CLI::Range(0, 64))
            ->capture_default_str();
    };

    auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function of a ring element");
    add_ring(zeta_cmd);
    add_common(zeta_cmd);
    zeta_cmd->add_option("--element", req.element, "Ring element")->required();

    auto* power_cmd =
        app.add_subcommand("power", "Raise a series with constant term 1 to a ring exponent");
    add_ring(power_cmd);
    add_common(power_cmd);
    power_cmd
        ->add_option("--series", req.series,
                     "Comma-separated coefficients of t^1..t^r (constant term is 1)")
        ->required();
    power_cmd->add_option("--exponent", req.exponent, "Ring element M")->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "Zeta-product decomposition of a series");
    add_ring(decompose_cmd);
    add_common(decompose_cmd);
    decompose_cmd
        ->add_option("--series", req.series,
                     "Comma-separated coefficients of t^1..t^r (constant term is 1)")
        ->required();

    auto* sympow_cmd = app.add_subcommand("sympow", "k-th symmetric power of a ring element");
    add_ring(sympow_cmd);
    sympow_cmd->add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sympow_cmd->add_option("--element", req.element, "Ring element")->required();
    sympow_cmd->add_option("--k", req.k, "Symmetric power index")
        ->check(CLI::Range(0, 64))
        ->required();

    auto* euler_cmd =
        app.add_subcommand("euler", "Euler-characteristic specialization L -> 1");
    euler_cmd->add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    euler_cmd->add_option("--element", req.element, "Laurent element")->required();

    auto* hilb_cmd = app.add_subcommand(
        "hilb", "Generating series of Hilbert schemes of points on a surface class");
    add_common(hilb_cmd);
    hilb_cmd->add_option("--surface", req.surface, "Surface class in Z[L,L^-1]")->required();
    hilb_cmd->add_flag("--check", req.check,
                       "Also verify that all equivalent forms of the series agree");

    auto* selftest_cmd =
        app.add_subcommand("selftest", "Run the randomized identity suite");
    selftest_cmd->add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    selftest_cmd
        ->add_option("--order", req.order,
                     "Truncation order of the randomized law checks; the Laurent-ring "
                     "identities grow steeply with the order, hence the tighter cap")
        ->check(CLI::Range(0, 24))
        ->capture_default_str();
    selftest_cmd->add_option("--cases", req.cases, "Randomized cases per check")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    selftest_cmd->add_option("--seed", req.seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const bool laurent = req.ring == "laurent";
        if (app.got_subcommand(zeta_cmd)) {
            return laurent ? run_zeta<LaurentPoly>(req) : run_zeta<BigInt>(req);
        }
        if (app.got_subcommand(power_cmd)) {
            return laurent ? run_power<LaurentPoly>(req) : run_power<BigInt>(req);
        }
        if (app.got_subcommand(decompose_cmd)) {
            return laurent ? run_decompose<LaurentPoly>(req) : run_decompose<BigInt>(req);
        }
        if (app.got_subcommand(sympow_cmd)) {
            return laurent ? run_sympow<LaurentPoly>(req) : run_sympow<BigInt>(req);
        }
        if (app.got_subcommand(euler_cmd)) {
            return run_euler(req);
        }
        if (app.got_subcommand(hilb_cmd)) {
            return run_hilb(req);
        }
        if (app.got_subcommand(selftest_cmd)) {
            return run_selftest(req);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
