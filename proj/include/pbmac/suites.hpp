#pragma once

// Verification suites: each one checks a family of identities across an
// exhaustively generated (or, for the -sampled variants, seeded) instance
// set and reports the failures.  Reports are deterministic for fixed
// parameters and seed; wall time is kept out of the JSON form.

#include "pbmac/expansion.hpp"
#include "pbmac/operator_construction.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>

namespace pbmac {

struct SuiteOptions {
    int n = 3;
    int degree = 4;
    std::uint64_t seed = 1;
    int jobs = 1;
    int samples = 100; // used by the -sampled suites only
};

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json parameters;
    long instance_count = 0;
    std::vector<SuiteFailure> failures;
    nlohmann::json details; // e.g. recovered exponent tables
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }

    nlohmann::json to_json() const { // wall time excluded so bytes are stable
        nlohmann::json fj = nlohmann::json::array();
        for (const auto& f : failures)
            fj.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
        nlohmann::json j{{"suite", suite},
                         {"parameters", parameters},
                         {"instances", instance_count},
                         {"failures", fj},
                         {"pass", passed()}};
        if (!details.is_null()) j["details"] = details;
        return j;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << (passed() ? "PASS" : "FAIL") << " suite=" << suite
           << " instances=" << instance_count << " failures=" << failures.size()
           << " wall=" << wall_seconds << "s";
        for (std::size_t i = 0; i < failures.size() && i < 10; ++i)
            os << "\n  " << failures[i].input << "\n    expected: " << failures[i].expected
               << "\n    actual:   " << failures[i].actual;
        if (failures.size() > 10) os << "\n  ... " << failures.size() - 10 << " more";
        return os.str();
    }
};

namespace suite_detail {

using Task = std::function<std::optional<SuiteFailure>()>;

inline std::string clip(std::string s, std::size_t cap = 300) {
    if (s.size() > cap) s = s.substr(0, cap) + "...";
    return s;
}

// runs tasks across `jobs` threads; results are gathered in task order
inline std::vector<SuiteFailure> run_tasks(const std::vector<Task>& tasks, int jobs) {
    jobs = std::max(1, jobs);
    std::vector<std::optional<SuiteFailure>> results(tasks.size());
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < tasks.size();
                     i += static_cast<std::size_t>(jobs))
                    results[i] = tasks[i]();
            });
        for (auto& th : workers) th.join();
    }
    std::vector<SuiteFailure> out;
    for (auto& r : results)
        if (r) out.push_back(std::move(*r));
    return out;
}

inline SuiteReport finish(std::string name, nlohmann::json params, std::vector<Task> tasks,
                          int jobs, nlohmann::json details = nullptr) {
    SuiteReport rep;
    rep.suite = std::move(name);
    rep.parameters = std::move(params);
    rep.instance_count = static_cast<long>(tasks.size());
    auto t0 = std::chrono::steady_clock::now();
    rep.failures = run_tasks(tasks, jobs);
    rep.wall_seconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count() /
        1000.0;
    rep.details = std::move(details);
    return rep;
}

// independent triple counter for the inv+coinv shape invariant: walks box
// pairs geometrically instead of building the triple list
inline long oracle_triple_count(const Composition& shape) {
    long count = 0;
    const int n = shape.size();
    for (int r = 1; r <= n; ++r)
        for (int j = 1; j <= shape[r - 1]; ++j) {
            for (int rc = r + 1; rc <= n; ++rc) // type A: c below b at (rc, j)
                if (j <= shape[rc - 1] && shape[r - 1] >= shape[rc - 1]) ++count;
            for (int rc = 1; rc < r; ++rc) // type B: c above a at (rc, j-1)
                if (j - 1 <= shape[rc - 1] && shape[r - 1] > shape[rc - 1]) ++count;
        }
    return count;
}

inline XPolynomial random_polynomial(std::mt19937_64& rng, int n, int max_degree) {
    XPolynomial f(n);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; ++k) {
        ExpVec e(static_cast<std::size_t>(n), 0);
        int budget = max_degree;
        for (int i = 0; i < n; ++i) {
            int v = static_cast<int>(rng() % 3);
            v = std::min(v, budget);
            e[static_cast<std::size_t>(i)] = v;
            budget -= v;
        }
        int c = static_cast<int>(rng() % 7) - 3;
        if (c == 0) c = 1;
        QtRational coeff = QtRational(c) * QtRational::monomial(1, static_cast<int>(rng() % 3),
                                                                static_cast<int>(rng() % 3));
        f.add_term(std::move(e), std::move(coeff));
    }
    return f;
}

} // namespace suite_detail

// --- individual suites ------------------------------------------------------

inline SuiteReport suite_oracle(const SuiteOptions& opt) {
    std::vector<suite_detail::Task> tasks;
    for (int n = 1; n <= opt.n; ++n)
        for (int d = 0; d <= opt.degree; ++d)
            for (const Composition& shape : compositions_of(d, n))
                for (const Permutation& sigma : all_permutations(n))
                    tasks.push_back([shape, sigma]() -> std::optional<SuiteFailure> {
                        XPolynomial a = macdonald_combinatorial(shape, sigma);
                        XPolynomial b = macdonald_recursive(shape, sigma);
                        if (a == b) return std::nullopt;
                        return SuiteFailure{"shape=" + shape.to_string() + " basement=" + sigma.to_string(),
                                            suite_detail::clip(a.to_string()),
                                            suite_detail::clip(b.to_string())};
                    });
    return suite_detail::finish("oracle", {{"n", opt.n}, {"degree", opt.degree}}, std::move(tasks),
                                opt.jobs);
}

inline SuiteReport suite_oracle_sampled(const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<Composition, Permutation>> pool;
    for (int d = 0; d <= opt.degree; ++d)
        for (const Composition& shape : compositions_of(d, opt.n))
            for (const Permutation& sigma : all_permutations(opt.n)) pool.emplace_back(shape, sigma);
    std::vector<suite_detail::Task> tasks;
    for (int k = 0; k < opt.samples && !pool.empty(); ++k) {
        auto [shape, sigma] = pool[static_cast<std::size_t>(rng() % pool.size())];
        tasks.push_back([shape, sigma]() -> std::optional<SuiteFailure> {
            if (macdonald_combinatorial(shape, sigma) == macdonald_recursive(shape, sigma))
                return std::nullopt;
            return SuiteFailure{"shape=" + shape.to_string() + " basement=" + sigma.to_string(),
                                "recursive == combinatorial", "mismatch"};
        });
    }
    return suite_detail::finish(
        "oracle-sampled",
        {{"n", opt.n}, {"degree", opt.degree}, {"seed", opt.seed}, {"samples", opt.samples}},
        std::move(tasks), opt.jobs);
}

// E^sigma_lambda(x;1,t) = e_{lambda'}(x) for partitions lambda
inline SuiteReport suite_partition(const SuiteOptions& opt) {
    std::vector<suite_detail::Task> tasks;
    for (int d = 0; d <= opt.degree; ++d)
        for (const Partition& mu : partitions_of(d, opt.n)) {
            Composition lambda = pad_to(mu.comp, opt.n);
            for (const Permutation& sigma : all_permutations(opt.n))
                tasks.push_back([lambda, sigma, mu]() -> std::optional<SuiteFailure> {
                    XPolynomial e = macdonald_combinatorial(lambda, sigma, Rational(1), std::nullopt);
                    XPolynomial expected = elementary_poly(conjugate(mu), lambda.size());
                    if (e == expected) return std::nullopt;
                    return SuiteFailure{
                        "lambda=" + lambda.to_string() + " basement=" + sigma.to_string(),
                        suite_detail::clip(expected.to_string()), suite_detail::clip(e.to_string())};
                });
        }
    return suite_detail::finish("partition", {{"n", opt.n}, {"degree", opt.degree}},
                                std::move(tasks), opt.jobs);
}

inline SuiteReport suite_partition_sampled(const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<Composition, Permutation>> pool;
    for (int d = 0; d <= opt.degree; ++d)
        for (const Partition& mu : partitions_of(d, opt.n))
            for (const Permutation& sigma : all_permutations(opt.n))
                pool.emplace_back(pad_to(mu.comp, opt.n), sigma);
    std::vector<suite_detail::Task> tasks;
    for (int k = 0; k < opt.samples && !pool.empty(); ++k) {
        auto [lambda, sigma] = pool[static_cast<std::size_t>(rng() % pool.size())];
        tasks.push_back([lambda, sigma]() -> std::optional<SuiteFailure> {
            XPolynomial e = macdonald_combinatorial(lambda, sigma, Rational(1), std::nullopt);
            XPolynomial expected = elementary_poly(conjugate(revsort(lambda)), lambda.size());
            if (e == expected) return std::nullopt;
            return SuiteFailure{"lambda=" + lambda.to_string() + " basement=" + sigma.to_string(),
                                suite_detail::clip(expected.to_string()),
                                suite_detail::clip(e.to_string())};
        });
    }
    return suite_detail::finish(
        "partition-sampled",
        {{"n", opt.n}, {"degree", opt.degree}, {"seed", opt.seed}, {"samples", opt.samples}},
        std::move(tasks), opt.jobs);
}

// E^sigma_lambda(x;1,t) = (e_{lambda'}/e_{(lambda~)'}) E^sigma_{lambda~}(x;1,t)
inline SuiteReport suite_factorization(const SuiteOptions& opt) {
    std::vector<suite_detail::Task> tasks;
    for (int d = 0; d <= opt.degree; ++d)
        for (const Composition& lambda : compositions_of(d, opt.n))
            for (const Permutation& sigma : all_permutations(opt.n))
                tasks.push_back([lambda, sigma]() -> std::optional<SuiteFailure> {
                    FactorizationData fd = factorization_data(lambda, sigma);
                    if (fd.check) return std::nullopt;
                    return SuiteFailure{"lambda=" + lambda.to_string() + " basement=" + sigma.to_string(),
                                        "E(x;1,t) = F * E~(x;1,t)",
                                        "factorization check failed"};
                });
    return suite_detail::finish("factorization", {{"n", opt.n}, {"degree", opt.degree}},
                                std::move(tasks), opt.jobs);
}

// homogeneity, the shape-only triple count, and partial symmetry
inline SuiteReport suite_symmetry(const SuiteOptions& opt) {
    std::vector<suite_detail::Task> tasks;
    for (int n = 2; n <= opt.n; ++n)
        for (int d = 0; d <= opt.degree; ++d)
            for (const Composition& alpha : compositions_of(d, n))
                for (const Permutation& sigma : all_permutations(n))
                    tasks.push_back([alpha, sigma, n, d]() -> std::optional<SuiteFailure> {
                        XPolynomial e = macdonald_combinatorial(alpha, sigma);
                        if (!e.is_homogeneous() || (e.degree() != d && !e.is_zero()))
                            return SuiteFailure{"shape=" + alpha.to_string() +
                                                    " basement=" + sigma.to_string(),
                                                "homogeneous of degree " + std::to_string(d),
                                                suite_detail::clip(e.to_string())};
                        long triples = static_cast<long>(shape_triples(alpha).size());
                        if (triples != suite_detail::oracle_triple_count(alpha))
                            return SuiteFailure{"shape=" + alpha.to_string(), "triple counts agree",
                                                "triple enumerators disagree"};
                        for (int j = 1; j < n; ++j) {
                            if (alpha[j - 1] != alpha[j]) continue;
                            int i = std::min(sigma(j), sigma(j + 1));
                            if (std::max(sigma(j), sigma(j + 1)) != i + 1) continue;
                            if (e.swap_variables(i) != e)
                                return SuiteFailure{"shape=" + alpha.to_string() + " basement=" +
                                                        sigma.to_string() + " i=" + std::to_string(i),
                                                    "symmetric in x_i, x_{i+1}",
                                                    "not symmetric"};
                        }
                        return std::nullopt;
                    });
    return suite_detail::finish("symmetry", {{"n", opt.n}, {"degree", opt.degree}},
                                std::move(tasks), opt.jobs);
}

// operator identities on random polynomials: idempotence, braid relations,
// theta~ pi~ = pi~ theta~ = t
inline SuiteReport suite_operators(const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<suite_detail::Task> tasks;
    const int count = std::max(opt.samples, 100);
    for (int k = 0; k < count; ++k) {
        const int n = 3 + static_cast<int>(rng() % std::max(1, opt.n - 2));
        XPolynomial f = suite_detail::random_polynomial(rng, n, opt.degree);
        tasks.push_back([f, n, k]() -> std::optional<SuiteFailure> {
            auto fail = [&](const std::string& what) {
                return SuiteFailure{"random polynomial #" + std::to_string(k) + " n=" + std::to_string(n),
                                    what, "identity violated"};
            };
            const QtRational t = QtRational::monomial(1, 0, 1);
            for (int i = 1; i < n; ++i) {
                XPolynomial pi_f = demazure_pi(f, i);
                if (demazure_pi(pi_f, i) != pi_f) return fail("pi_i^2 = pi_i");
                XPolynomial th_f = demazure_theta(f, i);
                if (demazure_theta(th_f, i) != -th_f) return fail("theta_i^2 = -theta_i");
                if (theta_t(pi_t(f, i), i) != t * f) return fail("theta~_i pi~_i = t id");
                if (pi_t(theta_t(f, i), i) != t * f) return fail("pi~_i theta~_i = t id");
            }
            for (int i = 1; i + 1 < n; ++i) {
                if (pi_t(pi_t(pi_t(f, i + 1), i), i + 1) != pi_t(pi_t(pi_t(f, i), i + 1), i))
                    return fail("pi~ braid relation");
                if (theta_t(theta_t(theta_t(f, i + 1), i), i + 1) !=
                    theta_t(theta_t(theta_t(f, i), i + 1), i))
                    return fail("theta~ braid relation");
            }
            return std::nullopt;
        });
    }
    return suite_detail::finish(
        "operators", {{"n", opt.n}, {"degree", opt.degree}, {"seed", opt.seed}, {"samples", count}},
        std::move(tasks), opt.jobs);
}

// expansion checks: keys into sigma-atoms with {0,1} coefficients, the
// tau-to-sigma t-atom expansion (polynomial coefficients, non-negative on
// [0,1] sample points), the single-step law with its recovered t-exponent,
// and Schur-product positivity
inline SuiteReport suite_expansion(const SuiteOptions& opt) {
    std::vector<suite_detail::Task> tasks;
    const int n = opt.n;
    const std::vector<Permutation> perms = all_permutations(n);
    const std::vector<Rational> sample_points{Rational(0),      Rational(1, 10), Rational(1, 4),
                                              Rational(1, 2),   Rational(3, 4),  Rational(9, 10),
                                              Rational(1)};

    // (a) key into sigma-atoms, {0,1} coefficients, rearrangement support
    for (int d = 0; d <= opt.degree; ++d)
        for (const Composition& gamma : compositions_of(d, n))
            for (const Permutation& sigma : perms)
                tasks.push_back([gamma, sigma]() -> std::optional<SuiteFailure> {
                    ExpansionResult r =
                        expand_in_basis(key_poly(gamma), BasisId{BasisFamily::atom, sigma});
                    for (const auto& [alpha, c] : r.coefficients) {
                        if (!(revsort(alpha) == revsort(gamma)))
                            return SuiteFailure{"key " + gamma.to_string() + " into atoms sigma=" +
                                                    sigma.to_string(),
                                                "support on rearrangements",
                                                "coefficient at " + alpha.to_string()};
                        if (!c.is_constant() ||
                            (c.constant_value() != 0 && c.constant_value() != 1))
                            return SuiteFailure{"key " + gamma.to_string() + " into atoms sigma=" +
                                                    sigma.to_string(),
                                                "coefficients in {0,1}",
                                                alpha.to_string() + " -> " + c.to_string()};
                    }
                    return std::nullopt;
                });

    // (b,c) tau-to-sigma expansions over Bruhat-comparable pairs
    for (const Permutation& sigma : perms)
        for (const Permutation& tau : perms) {
            if (sigma == tau || !bruhat_leq(sigma, tau)) continue;
            for (int d = 1; d <= opt.degree; ++d)
                for (const Composition& gamma : compositions_of(d, n))
                    tasks.push_back([gamma, sigma, tau, sample_points]() -> std::optional<SuiteFailure> {
                        const std::string label = "A^tau_gamma tau=" + tau.to_string() +
                                                  " gamma=" + gamma.to_string() +
                                                  " into sigma=" + sigma.to_string();
                        ExpansionResult r = expand_in_basis(patom_t(gamma, tau),
                                                            BasisId{BasisFamily::patom_t, sigma});
                        for (const auto& [alpha, c] : r.coefficients) {
                            if (!(revsort(alpha) == revsort(gamma)))
                                return SuiteFailure{label, "support on rearrangements",
                                                    "coefficient at " + alpha.to_string()};
                            if (!c.is_t_polynomial())
                                return SuiteFailure{label, "polynomial in t",
                                                    alpha.to_string() + " -> " + c.to_string()};
                            for (const Rational& pt : sample_points)
                                if (c.evaluate_t(pt) < 0)
                                    return SuiteFailure{label, "non-negative on [0,1]",
                                                        alpha.to_string() + " -> " + c.to_string()};
                        }
                        // t = 0 coefficients lie in {0,1}
                        ExpansionResult r0 = expand_in_basis(
                            macdonald_combinatorial(gamma, tau, Rational(0), Rational(0)),
                            BasisId{BasisFamily::atom, sigma});
                        for (const auto& [alpha, c] : r0.coefficients)
                            if (!c.is_constant() ||
                                (c.constant_value() != 0 && c.constant_value() != 1))
                                return SuiteFailure{label + " at t=0", "coefficients in {0,1}",
                                                    alpha.to_string() + " -> " + c.to_string()};
                        return std::nullopt;
                    });
        }

    // (d) single-step law with recovered exponent m(lambda, sigma, i) >= 0
    auto m_table = std::make_shared<std::map<std::string, int>>();
    auto m_mutex = std::make_shared<std::mutex>();
    for (const Permutation& tau : perms)
        for (int i = 1; i < n; ++i) {
            Permutation sigma = tau.swap_positions(i);
            if (perm_length(sigma) <= perm_length(tau)) continue;
            for (int d = 1; d <= opt.degree; ++d)
                for (const Composition& lambda : compositions_of(d, n))
                    tasks.push_back([lambda, tau, sigma, i, m_table,
                                     m_mutex]() -> std::optional<SuiteFailure> {
                        const std::string label = "single-step tau=" + tau.to_string() +
                                                  " i=" + std::to_string(i) +
                                                  " lambda=" + lambda.to_string();
                        XPolynomial lhs = patom_t(lambda, sigma);
                        XPolynomial rhs = patom_t(lambda.swapped(i), tau);
                        if (lambda[i - 1] <= lambda[i]) {
                            if (lhs != rhs)
                                return SuiteFailure{label, "A^{tau s_i}_lambda = A^tau_{s_i lambda}",
                                                    "differs"};
                            return std::nullopt;
                        }
                        XPolynomial diff = lhs - rhs;
                        XPolynomial base = qt_one_minus_t() * patom_t(lambda, tau);
                        for (int m = 0; m <= 2 * lambda.total() + 2; ++m)
                            if (QtRational::monomial(1, 0, m) * base == diff) {
                                std::lock_guard<std::mutex> lock(*m_mutex);
                                m_table->emplace(label, m);
                                return std::nullopt;
                            }
                        return SuiteFailure{label, "difference = t^m (1-t) A^tau_lambda",
                                            suite_detail::clip(diff.to_string())};
                    });
        }

    // (e) Schur-product positivity in the sigma-atom basis
    for (int dm = 0; dm <= std::min(opt.degree, 3); ++dm)
        for (const Partition& mu : partitions_of(dm, n))
            for (int d = 0; d <= std::min(opt.degree, 3); ++d)
                for (const Composition& lambda : compositions_of(d, n))
                    for (const Permutation& sigma : perms)
                        tasks.push_back([mu, lambda, sigma]() -> std::optional<SuiteFailure> {
                            try {
                                product_expand_schur(mu, lambda, sigma);
                                return std::nullopt;
                            } catch (const std::exception& ex) {
                                return SuiteFailure{"s_mu * atom, mu=" + mu.comp.to_string() +
                                                        " lambda=" + lambda.to_string() +
                                                        " sigma=" + sigma.to_string(),
                                                    "non-negative integer coefficients", ex.what()};
                            }
                        });

    SuiteReport rep = suite_detail::finish("expansion", {{"n", opt.n}, {"degree", opt.degree}},
                                           std::move(tasks), opt.jobs);
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [label, m] : *m_table) table.push_back({{"instance", label}, {"m", m}});
    rep.details = {{"single_step_exponents", table}};
    return rep;
}

// P_mu(x;t) = sum of t-atoms over rearrangements, with P from the independent
// symmetrization oracle; P_mu(x;0) = s_mu comes along for free
inline SuiteReport suite_hall_littlewood(const SuiteOptions& opt) {
    std::vector<suite_detail::Task> tasks;
    for (int d = 0; d <= opt.degree; ++d)
        for (const Partition& mu : partitions_of(d, opt.n))
            tasks.push_back([mu, opt]() -> std::optional<SuiteFailure> {
                const int n = opt.n;
                XPolynomial p = hall_littlewood_p(mu, n);
                XPolynomial sum(n);
                for (const Composition& gamma : compositions_of(mu.total(), n))
                    if (revsort(gamma) == revsort(pad_to(mu.comp, n)))
                        sum += patom_t(gamma, Permutation::identity(n));
                if (p != sum)
                    return SuiteFailure{"mu=" + mu.comp.to_string(),
                                        suite_detail::clip(p.to_string()),
                                        suite_detail::clip(sum.to_string())};
                if (p.specialize(std::nullopt, Rational(0)) != schur_poly(mu, n))
                    return SuiteFailure{"mu=" + mu.comp.to_string(), "P(x;0) = s_mu",
                                        "specialization differs"};
                return std::nullopt;
            });
    return suite_detail::finish("hall-littlewood", {{"n", opt.n}, {"degree", opt.degree}},
                                std::move(tasks), opt.jobs);
}

// E_{030}(x;1,0) * K_{201} picks up a negative key coefficient
inline SuiteReport suite_negative_example(const SuiteOptions& opt) {
    std::vector<suite_detail::Task> tasks;
    tasks.push_back([]() -> std::optional<SuiteFailure> {
        Composition left({std::vector<int>{0, 3, 0}});
        Composition right({std::vector<int>{2, 0, 1}});
        XPolynomial product =
            macdonald_combinatorial(left, Permutation::longest(3), Rational(1), Rational(0)) *
            key_poly(right);
        ExpansionResult r = expand_in_basis(product, BasisId{BasisFamily::key, std::nullopt});
        for (const auto& [alpha, c] : r.coefficients)
            if (c.is_constant() && c.constant_value() < 0) return std::nullopt;
        return SuiteFailure{"E_{0,3,0}(x;1,0) * K_{2,0,1} in keys",
                            "at least one strictly negative coefficient", "all non-negative"};
    });
    return suite_detail::finish("negative-example", nlohmann::json::object(), std::move(tasks),
                                opt.jobs);
}

inline std::vector<std::string> suite_names() {
    return {"oracle",   "partition", "factorization",    "symmetry",
            "operators", "expansion", "hall-littlewood", "negative-example",
            "oracle-sampled", "partition-sampled", "all"};
}

inline std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt) {
    if (opt.n > 5) throw std::invalid_argument("run_suite: n bound exceeds 5");
    if (opt.n < 1 || opt.degree < 0 || opt.jobs < 1)
        throw std::invalid_argument("run_suite: bad bounds");
    std::vector<SuiteReport> reports;
    auto want = [&](const std::string& s) { return name == s || name == "all"; };
    if (want("oracle")) reports.push_back(suite_oracle(opt));
    if (name == "oracle-sampled") reports.push_back(suite_oracle_sampled(opt));
    if (want("partition")) reports.push_back(suite_partition(opt));
    if (name == "partition-sampled") reports.push_back(suite_partition_sampled(opt));
    if (want("factorization")) reports.push_back(suite_factorization(opt));
    if (want("symmetry")) reports.push_back(suite_symmetry(opt));
    if (want("operators")) reports.push_back(suite_operators(opt));
    if (want("expansion")) reports.push_back(suite_expansion(opt));
    if (want("hall-littlewood")) reports.push_back(suite_hall_littlewood(opt));
    if (want("negative-example")) reports.push_back(suite_negative_example(opt));
    if (reports.empty()) throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    return reports;
}

} // namespace pbmac
