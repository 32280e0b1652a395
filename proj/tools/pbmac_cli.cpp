// Command-line interface: compute Macdonald polynomials, list fillings,
// expand in the named bases, and run the verification suites.
//
// Exit codes: 0 success, 1 mathematical assertion failed, 2 usage or input
// error (including vanishing denominators at a requested specialization).

#include "pbmac/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pbmac;

// exact rationals only: "p/q" or an integer literal, no decimal points
Rational parse_rational(const std::string& s) {
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("rational '" + s + "': decimal literals are not accepted, use p/q");
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("rational '" + s + "': zero denominator");
    return Rational(num, den);
}

struct ComputeArgs {
    std::string shape, basement, q, t;
    std::string method = "combinatorial";
    std::string format = "text";
};

int run_compute(const ComputeArgs& a) {
    Composition shape = Composition::parse(a.shape);
    Permutation basement = Permutation::parse(a.basement);
    std::optional<Rational> qv, tv;
    if (!a.q.empty()) qv = parse_rational(a.q);
    if (!a.t.empty()) tv = parse_rational(a.t);
    XPolynomial e(shape.size());
    if (a.method == "combinatorial") {
        e = macdonald_combinatorial(shape, basement, qv, tv);
    } else if (a.method == "recursive") {
        e = macdonald_recursive(shape, basement);
        if (qv || tv) e = e.specialize(qv, tv);
    } else {
        throw std::invalid_argument("unknown method '" + a.method + "'");
    }
    if (a.format == "json") std::cout << e.to_json().dump() << "\n";
    else std::cout << e.to_string() << "\n";
    return 0;
}

struct FillingsArgs {
    std::string shape, basement;
    std::string format = "text";
    bool coinv_zero = false;
    bool maj_zero = false;
};

int run_fillings(const FillingsArgs& a) {
    Composition shape = Composition::parse(a.shape);
    Permutation basement = Permutation::parse(a.basement);
    std::vector<AugmentedFilling> fillings = enumerate_naf(shape, basement);
    std::vector<AugmentedFilling> kept;
    for (const auto& f : fillings) {
        if (a.coinv_zero && coinv(f) != 0) continue;
        if (a.maj_zero && maj(f) != 0) continue;
        kept.push_back(f);
    }
    if (a.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : kept) arr.push_back(filling_to_json(f));
        std::cout << nlohmann::json{{"fillings", arr}, {"count", kept.size()}}.dump() << "\n";
    } else {
        for (const auto& f : kept) std::cout << filling_to_string(f) << "\n";
        std::cout << "count: " << kept.size() << "\n";
    }
    return 0;
}

struct ExpandArgs {
    std::string family, shape, basement, n_str;
    std::string input_json;
    std::string product_schur, left_family = "auto";
    std::string basis, basis_basement;
    std::string format = "text";
    bool assert_positive = false;
};

// inline JSON, a file path, or "-" for standard input
XPolynomial read_polynomial_json(const std::string& arg) {
    std::string text;
    if (!arg.empty() && arg.front() == '{') {
        text = arg;
    } else if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open polynomial file '" + arg + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return XPolynomial::from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
    }
}

XPolynomial source_polynomial(const std::string& family, const Composition& shape,
                              const std::optional<Permutation>& basement, int n) {
    if (family == "key") return key_poly(pad_to(shape, n));
    if (family == "atom") {
        Permutation sigma = basement ? *basement : Permutation::identity(n);
        return macdonald_combinatorial(pad_to(shape, n), sigma, Rational(0), Rational(0));
    }
    if (family == "patom_t") {
        Permutation sigma = basement ? *basement : Permutation::identity(n);
        return patom_t(pad_to(shape, n), sigma);
    }
    if (family == "elementary") return elementary_poly(revsort(shape), n);
    if (family == "schur") return schur_poly(revsort(shape), n);
    if (family == "hall_littlewood") return hall_littlewood_p(revsort(shape), n);
    if (family == "e-q1t0") // the nonsymmetric elementary family E_lambda(x;1,0)
        return macdonald_combinatorial(pad_to(shape, n), Permutation::longest(n), Rational(1),
                                       Rational(0));
    throw std::invalid_argument("unknown family '" + family + "'");
}

int run_expand(const ExpandArgs& a) {
    XPolynomial f(1);
    int n = 0;
    if (!a.input_json.empty()) {
        f = read_polynomial_json(a.input_json);
        n = f.n();
    } else if (!a.product_schur.empty()) {
        const std::string sep = "-times-";
        auto pos = a.product_schur.find(sep);
        if (pos == std::string::npos)
            throw std::invalid_argument("--product-schur expects LEFT-times-FAMILY-SHAPE");
        Composition left = Composition::parse(a.product_schur.substr(0, pos));
        std::string rest = a.product_schur.substr(pos + sep.size());
        auto dash = rest.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("--product-schur expects LEFT-times-FAMILY-SHAPE");
        std::string rfam = rest.substr(0, dash);
        Composition right = Composition::parse(rest.substr(dash + 1));
        n = std::max(left.size(), right.size());
        std::string lfam = a.left_family;
        if (lfam == "auto") lfam = left.is_weakly_decreasing() ? "schur" : "e-q1t0";
        XPolynomial lp = source_polynomial(lfam, left, std::nullopt, n);
        XPolynomial rp = source_polynomial(rfam, right, std::nullopt, n);
        f = lp * rp;
    } else {
        if (a.family.empty() || a.shape.empty())
            throw std::invalid_argument("expand needs --family and --shape (or --product-schur)");
        Composition shape = Composition::parse(a.shape);
        std::optional<Permutation> basement;
        if (!a.basement.empty()) basement = Permutation::parse(a.basement);
        n = a.n_str.empty() ? shape.size() : std::stoi(a.n_str);
        f = source_polynomial(a.family, shape, basement, n);
    }

    auto fam = basis_family_from_name(a.basis);
    if (!fam) throw std::invalid_argument("unknown basis '" + a.basis + "'");
    BasisId basis{*fam, std::nullopt};
    if (!a.basis_basement.empty()) basis.basement = Permutation::parse(a.basis_basement);
    ExpansionResult r = expand_in_basis(f, basis);

    bool negative = false;
    const std::vector<Rational> pts{Rational(0),    Rational(1, 10), Rational(1, 4), Rational(1, 2),
                                    Rational(3, 4), Rational(9, 10), Rational(1)};
    for (const auto& [alpha, c] : r.coefficients) {
        if (c.is_constant()) {
            if (c.constant_value() < 0) negative = true;
        } else if (c.is_t_polynomial()) {
            for (const Rational& pt : pts)
                if (c.evaluate_t(pt) < 0) negative = true;
        }
    }
    if (a.format == "json") {
        std::cout << r.to_json().dump() << "\n";
    } else {
        for (const auto& [alpha, c] : r.coefficients)
            std::cout << "[" << alpha.to_string() << "]  " << c.to_string() << "\n";
        std::cout << "terms: " << r.coefficients.size() << "\n";
    }
    if (a.assert_positive && negative) {
        std::cerr << "assert-positive: a negative coefficient was found\n";
        return 1;
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    SuiteOptions options;
    std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
    std::vector<SuiteReport> reports = run_suites(a.suite, a.options);
    bool ok = true;
    if (a.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            ok = ok && r.passed();
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.to_string() << "\n";
            ok = ok && r.passed();
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permuted-basement Macdonald polynomial toolkit"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "compute E^sigma_lambda(x;q,t)");
    compute->add_option("--shape", ca.shape, "composition, e.g. 2,1,0")->required();
    compute->add_option("--basement", ca.basement, "permutation, e.g. 1,3,2")->required();
    compute->add_option("--q", ca.q, "exact rational (p/q or integer)");
    compute->add_option("--t", ca.t, "exact rational (p/q or integer)");
    compute->add_option("--method", ca.method, "combinatorial|recursive");
    compute->add_option("--format", ca.format, "text|json");

    FillingsArgs fa;
    auto* fillings = app.add_subcommand("fillings", "list non-attacking fillings with statistics");
    fillings->add_option("--shape", fa.shape)->required();
    fillings->add_option("--basement", fa.basement)->required();
    fillings->add_option("--format", fa.format, "text|json");
    fillings->add_flag("--coinv-zero", fa.coinv_zero, "keep coinversion-free fillings only");
    fillings->add_flag("--maj-zero", fa.maj_zero, "keep major-index-zero fillings only");

    ExpandArgs ea;
    auto* expand = app.add_subcommand("expand", "expand a polynomial in a named basis");
    expand->add_option("--family", ea.family, "key|atom|patom_t|elementary|schur|hall_littlewood|e-q1t0");
    expand->add_option("--input-json", ea.input_json,
                       "polynomial as canonical JSON (inline, a file path, or - for stdin)");
    expand->add_option("--shape", ea.shape);
    expand->add_option("--basement", ea.basement, "basement of the source family");
    expand->add_option("--n", ea.n_str, "number of variables (defaults to shape length)");
    expand->add_option("--product-schur", ea.product_schur, "LEFT-times-FAMILY-SHAPE product input");
    expand->add_option("--left-family", ea.left_family, "auto|schur|e-q1t0");
    expand->add_option("--basis", ea.basis, "target basis family")->required();
    expand->add_option("--basis-basement", ea.basis_basement, "basement of the target basis");
    expand->add_option("--format", ea.format, "text|json");
    expand->add_flag("--assert-positive", ea.assert_positive, "exit 1 on any negative coefficient");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", va.suite,
                       "oracle|partition|factorization|symmetry|operators|expansion|"
                       "hall-littlewood|negative-example|oracle-sampled|partition-sampled|all");
    verify->add_option("--n", va.options.n, "size bound (<=5)");
    verify->add_option("--degree", va.options.degree, "degree bound");
    verify->add_option("--seed", va.options.seed, "seed for sampled/randomized suites");
    verify->add_option("--jobs", va.options.jobs, "worker threads");
    verify->add_option("--samples", va.options.samples, "sample count for -sampled suites");
    verify->add_option("--format", va.format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(ca);
        if (fillings->parsed()) return run_fillings(fa);
        if (expand->parsed()) return run_expand(ea);
        if (verify->parsed()) return run_verify(va);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
