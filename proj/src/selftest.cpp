#include <multisym/selftest.hpp>

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include <multisym/certify.hpp>
#include <multisym/membership.hpp>
#include <multisym/operators.hpp>
#include <multisym/symmetric.hpp>

namespace msym
{

void SuiteResult::record(bool passed, const std::string &description)
{
    ++cases;
    if (!passed) {
        if (failures == 0) {
            first_failure = description;
        }
        ++failures;
    }
}

namespace
{

std::uint64_t uniform(Rng &rng, std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

Coeff nonzero(Rng &rng, std::uint32_t p)
{
    return static_cast<Coeff>(uniform(rng, 1, p - 1));
}

Monomial random_monomial(Rng &rng, const Shape &shape, std::uint64_t degree)
{
    Monomial m(shape.rows, shape.width);
    for (std::uint64_t k = 0; k < degree; ++k) {
        const auto r = uniform(rng, 0, shape.rows - 1);
        const auto c = uniform(rng, 0, shape.width - 1);
        m.set(r, c, static_cast<Monomial::exponent_type>(m(r, c) + 1));
    }
    return m;
}

// Product by the definition: every pair of terms, accumulated in an ordered map.
Poly naive_product(const Poly &f, const Poly &g)
{
    std::map<Monomial, Coeff> acc;
    const auto &F = f.field();
    for (const auto &a : f.terms()) {
        for (const auto &b : g.terms()) {
            auto &slot = acc[a.mono * b.mono];
            slot = F.add(slot, F.mul(a.coeff, b.coeff));
        }
    }
    std::vector<Term> terms;
    for (const auto &[m, c] : acc) {
        terms.push_back({m, c});
    }
    return Poly::from_terms(f.shape(), std::move(terms));
}

std::string show(const Poly &f)
{
    auto s = f.to_string();
    return s.size() > 160 ? s.substr(0, 160) + "..." : s;
}

} // namespace

Poly random_poly(Rng &rng, const Shape &shape, std::size_t max_terms, std::uint64_t max_degree)
{
    std::vector<Term> terms;
    const auto n = uniform(rng, 0, max_terms);
    for (std::uint64_t k = 0; k < n; ++k) {
        terms.push_back({random_monomial(rng, shape, uniform(rng, 0, max_degree)), nonzero(rng, shape.p())});
    }
    return Poly::from_terms(shape, std::move(terms));
}

Poly random_invariant(Rng &rng, const Shape &shape, std::size_t max_orbits, std::uint64_t degree)
{
    Poly f(shape);
    const auto n = uniform(rng, 1, max_orbits);
    for (std::uint64_t k = 0; k < n; ++k) {
        f.add_scaled(orbit_sum(shape, random_monomial(rng, shape, degree)), nonzero(rng, shape.p()));
    }
    return f;
}

SuiteResult suite_gamma_identities(Rng &rng, std::uint32_t p, std::size_t max_width, std::size_t samples)
{
    SuiteResult result{fmt::format("gamma-identities p={}", p)};
    const PrimeField F(p);
    const auto max_d = static_cast<std::int64_t>(p) + 2;
    for (std::size_t k = 0; k < samples; ++k) {
        const auto width = static_cast<std::size_t>(uniform(rng, 1, max_width));
        const auto shape = single_row_shape(p, width);
        const auto s = random_poly(rng, shape, 3, 2);
        const auto t = random_poly(rng, shape, 3, 2);
        const auto lambda = static_cast<Coeff>(uniform(rng, 0, p - 1));
        const auto d = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::uint64_t>(max_d)));

        result.record(gamma(d, s.scaled(lambda)) == gamma(d, s).scaled(F.pow(lambda, static_cast<std::uint64_t>(d))),
                      fmt::format("scalar: d={} lambda={} s={}", d, lambda, show(s)));

        auto sum = gamma_unit(F, width).scaled(0);
        bool first = true;
        for (std::int64_t d1 = 0; d1 <= d; ++d1) {
            auto piece = shuffle(gamma(d1, s), gamma(d - d1, t));
            sum = first ? piece : sum + piece;
            first = false;
        }
        result.record(gamma(d, s + t) == sum, fmt::format("sum: d={} s={} t={}", d, show(s), show(t)));

        const auto e = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::uint64_t>(max_d - d)));
        result.record(shuffle(gamma(d, s), gamma(e, s))
                          == gamma(d + e, s).scaled(F.binomial(static_cast<std::uint64_t>(d + e),
                                                               static_cast<std::uint64_t>(e))),
                      fmt::format("binomial: d={} e={} s={}", d, e, show(s)));
    }
    return result;
}

SuiteResult suite_shuffle_algebra(Rng &rng, std::uint32_t p, std::size_t samples)
{
    SuiteResult result{fmt::format("shuffle-algebra p={}", p)};
    for (std::size_t k = 0; k < samples; ++k) {
        const auto width = static_cast<std::size_t>(uniform(rng, 1, 2));
        const auto shape = single_row_shape(p, width);
        auto tensor = [&] {
            return gamma(static_cast<std::int64_t>(uniform(rng, 0, 2)), random_poly(rng, shape, 2, 2));
        };
        const auto x = tensor(), y = tensor(), z = tensor();
        result.record(shuffle(x, y) == shuffle(y, x), "commutativity");
        result.record(shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z)), "associativity");
    }
    return result;
}

SuiteResult suite_ring_axioms(Rng &rng, std::uint32_t p, std::size_t samples)
{
    SuiteResult result{fmt::format("ring-axioms p={}", p)};
    for (std::size_t k = 0; k < samples; ++k) {
        const auto shape = Shape::ring(p, static_cast<std::size_t>(uniform(rng, 1, 3)));
        const auto f = random_poly(rng, shape, 6, 3);
        const auto g = random_poly(rng, shape, 6, 3);
        const auto h = random_poly(rng, shape, 6, 3);
        const auto ctx = fmt::format("f={} g={}", show(f), show(g));
        result.record(f * g == g * f, "commutativity " + ctx);
        result.record((f * g) * h == f * (g * h), "associativity " + ctx);
        result.record(f * (g + h) == f * g + f * h, "distributivity " + ctx);
        result.record((f + (-f)).is_zero(), "cancellation " + ctx);
        result.record(f * g == naive_product(f, g), "naive product " + ctx);
        result.record(frobenius(f * g) == frobenius(f) * frobenius(g), "frobenius product " + ctx);
        result.record(frobenius(f + g) == frobenius(f) + frobenius(g), "frobenius sum " + ctx);
        result.record(frobenius(f) == pow(f, p), "frobenius power " + ctx);
    }
    return result;
}

SuiteResult suite_orbit_sums(Rng &rng, std::uint32_t p, std::size_t samples)
{
    SuiteResult result{fmt::format("orbit-sums p={}", p)};
    for (std::size_t k = 0; k < samples; ++k) {
        const auto width = static_cast<std::size_t>(uniform(rng, 1, 3));
        const auto shape = Shape::ring(p, width);
        const auto m = random_monomial(rng, shape, uniform(rng, 0, 5));
        const auto t = orbit_sum(shape, m);
        result.record(is_invariant(t) && t.size() == orbit_size(m), "orbit sum of " + show(Poly::monomial(shape, m)));

        std::vector<ExpTuple::value_type> entries(width);
        for (auto &e : entries) {
            e = static_cast<ExpTuple::value_type>(uniform(rng, 0, 3));
        }
        const ExpTuple alpha(entries);
        Poly rows(shape);
        for (std::size_t r = 0; r < p; ++r) {
            rows += Poly::monomial(shape, row_monomial(shape, r, alpha));
        }
        result.record(power_sum(alpha, p, width) == rows, "power sum " + alpha.to_string());
    }
    return result;
}

SuiteResult suite_elementary_extraction(std::uint32_t p, std::size_t width)
{
    SuiteResult result{fmt::format("elementary-extraction p={} n={}", p, width)};
    const auto shape = Shape::ring(p, width);
    // prod_r (1 + sum_c t_c x_{r,c}), grouped by the t-exponent.
    std::map<ExpTuple, Poly> by_t;
    by_t.emplace(ExpTuple{}, Poly::one(shape));
    for (std::size_t r = 0; r < p; ++r) {
        std::map<ExpTuple, Poly> next;
        for (const auto &[tau, f] : by_t) {
            next.try_emplace(tau, shape).first->second += f;
            for (std::size_t c = 0; c < width; ++c) {
                next.try_emplace(tau + ExpTuple::unit(c), shape).first->second += f * Poly::variable(shape, r, c);
            }
        }
        by_t = std::move(next);
    }
    for (std::uint64_t d = 1; d <= p; ++d) {
        for (const auto &alpha : tuples_of_degree(d, width)) {
            result.record(elementary(alpha, p, width) == by_t.at(alpha), "E" + alpha.to_string());
        }
    }
    return result;
}

SuiteResult suite_newton(std::uint32_t p, std::uint64_t max_degree, bool mutate)
{
    SuiteResult result{fmt::format("newton p={}", p)};
    const auto convention = mutate ? NewtonSign::none : NewtonSign::derived;
    result.record(check_newton_tilde(p, convention), "integer identity");
    for (std::uint64_t d = p; d <= max_degree; ++d) {
        for (const auto &alpha : tuples_of_degree(d, 2)) {
            for (std::size_t col = 0; col < alpha.length(); ++col) {
                if (alpha[col] < p) {
                    continue;
                }
                const auto terms = newton_terms(alpha, col, p, convention);
                result.record(newton_identity_holds(terms, alpha, p, 2),
                              fmt::format("M{} at column {}", alpha.to_string(), col + 1));
            }
        }
    }
    return result;
}

SuiteResult suite_polarization(Rng &rng, std::uint32_t p, std::size_t samples)
{
    SuiteResult result{fmt::format("polarization p={}", p)};
    result.record(validate_polarization_closed_form(p, 3), "generator closed form");
    for (std::size_t k = 0; k < samples; ++k) {
        const auto shape = Shape::ring(p, static_cast<std::size_t>(uniform(rng, 2, 3)));
        const auto f = random_poly(rng, shape, 4, 3);
        const auto g = random_poly(rng, shape, 4, 3);
        const auto a = static_cast<std::size_t>(uniform(rng, 0, shape.width - 1));
        auto b = static_cast<std::size_t>(uniform(rng, 0, shape.width - 2));
        b += b >= a ? 1 : 0;
        const auto i = static_cast<std::uint32_t>(uniform(rng, 0, 2 * p));
        Poly leibniz(shape);
        for (std::uint32_t j = 0; j <= i; ++j) {
            leibniz += polarize(f, {a, b, j}) * polarize(g, {a, b, i - j});
        }
        result.record(polarize(f * g, {a, b, i}) == leibniz,
                      fmt::format("leibniz i={} f={} g={}", i, show(f), show(g)));
        const auto inv = random_invariant(rng, shape, 2, uniform(rng, 1, 4));
        result.record(is_invariant(polarize(inv, {a, b, i})), "invariance of " + show(inv));
    }
    return result;
}

SuiteResult suite_flatten(std::uint32_t p, std::uint64_t max_degree)
{
    SuiteResult result{fmt::format("flatten p={}", p)};
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
        for (const auto &alpha : tuples_of_degree(d, 2)) {
            for (std::size_t col = 0; col < alpha.length(); ++col) {
                if (alpha[col] % p == 0) {
                    continue;
                }
                const auto step = flatten_tuple(alpha, col, p);
                const auto width = std::max<std::size_t>(step.target.length(), step.source.length());
                result.record(realize_flatten(step, p, width) == power_sum(step.target, p, width),
                              fmt::format("{} at column {} -> {}", alpha.to_string(), col + 1,
                                          step.target.to_string()));
            }
        }
    }
    return result;
}

SuiteResult suite_frobenius_split(Rng &rng, std::uint32_t p, std::size_t max_width, std::uint64_t max_degree,
                                  std::size_t samples)
{
    SuiteResult result{fmt::format("frobenius-split p={}", p)};
    for (std::size_t k = 0; k < samples; ++k) {
        const auto shape = Shape::ring(p, static_cast<std::size_t>(uniform(rng, 1, max_width)));
        const auto da = uniform(rng, 1, std::max<std::uint64_t>(1, max_degree / p));
        const auto a = random_invariant(rng, shape, 3, da);
        const auto b = random_invariant(rng, shape, 3, uniform(rng, 1, max_degree));
        const auto c = random_invariant(rng, shape, 3, uniform(rng, 1, max_degree));
        const auto ctx = fmt::format("a={} b={}", show(a), show(b));
        result.record(frobenius_split(frobenius(a)) == a, "left inverse " + ctx);
        result.record(frobenius_split(b + c) == frobenius_split(b) + frobenius_split(c), "additivity " + ctx);
        result.record(frobenius_split(pow(a, p) * b) == a * frobenius_split(b), "linearity " + ctx);
        const auto split = frobenius_split(b);
        bool graded = is_invariant(split);
        if (!split.is_zero()) {
            const auto deg = split.homogeneous_degree();
            graded = graded && deg && *deg > 0 && *deg * p == *b.homogeneous_degree();
        }
        result.record(graded, "grading " + ctx);
    }
    return result;
}

SuiteResult suite_membership(Rng &rng, std::uint32_t p)
{
    SuiteResult result{fmt::format("membership p={}", p)};
    const std::size_t width = 2;
    PAlgebra algebra(p, width);
    for (std::uint64_t d = 1; d <= 4; ++d) {
        auto span = algebra.span(d);
        const auto gamma = gamma_basis(p, width, d);
        result.record(span.dimension() <= gamma.dimension(), fmt::format("dim P_{} <= dim Gamma_{}", d, d));
        const auto dim = span.dimension();
        bool idempotent = true;
        for (const auto &row : span.rows()) {
            idempotent = idempotent && span.contains(row).has_value() && !span.insert(row);
        }
        result.record(idempotent && span.dimension() == dim, fmt::format("echelon idempotence at degree {}", d));
        if (d > 0) {
            const auto report = square_ideal_quotient(p, width, d, default_dimension_cap, &algebra);
            result.record(report.match(), "quotient count: " + to_csv_row(report));
        }
        const auto f = random_invariant(rng, Shape::ring(p, width), 3, d);
        if (auto coords = span.contains(f)) {
            Poly back(f.shape());
            for (auto [k, c] : *coords) {
                back.add_scaled(span.row(k), c);
            }
            result.record(back == f, "coordinates re-expand for " + show(f));
        }
    }
    // gl-span of M_beta agrees with the single-row computation pushed through the row sum.
    for (std::uint64_t d = 1; d <= 3; ++d) {
        for (const auto &beta : tuples_of_degree(d, width)) {
            const auto ring_span = gl_span(power_sum(beta, p, width));
            const auto row_shape = single_row_shape(p, width);
            const auto row_span = gl_span(Poly::monomial(row_shape, row_monomial(row_shape, 0, beta)));
            bool agree = ring_span.dimension() == row_span.dimension();
            for (const auto &row : row_span.rows()) {
                agree = agree && ring_span.contains(spread_over_rows(row, p)).has_value();
            }
            result.record(agree, "gl-span of M" + beta.to_string());
        }
    }
    return result;
}

SuiteResult suite_certify(std::uint32_t p, std::uint64_t max_degree, std::size_t max_length, bool mutate)
{
    SuiteResult result{fmt::format("certify p={}", p)};
    bool mutated = false;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
        for (const auto &alpha : tuples_of_degree(d, max_length)) {
            auto cert = certify_pth_power(alpha, p, max_length);
            if (mutate && !mutated && !cert.terms.is_zero()) {
                const auto &[factors, coeff] = *cert.terms.terms().begin();
                cert.terms.add_term(factors, 1);
                mutated = true;
            }
            const auto check = verify(cert);
            result.record(check.ok, fmt::format("M{}: {}", alpha.scaled(p).to_string(), check.report));
            const auto rebuilt = replay(cert);
            result.record(mutated || (rebuilt && *rebuilt == cert.terms),
                          "trace replay of M" + alpha.scaled(p).to_string());
            result.record(cert.terms.homogeneous_degree() == alpha.degree() * p,
                          "degree bookkeeping of M" + alpha.scaled(p).to_string());
        }
    }
    return result;
}

bool SelftestReport::ok() const noexcept
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.ok(); });
}

std::string SelftestReport::log() const
{
    std::string out = fmt::format("multisym selftest prng={} seed={}\n", rng_name, seed);
    std::size_t cases = 0, failures = 0;
    for (const auto &s : suites) {
        out += fmt::format("{} {}: {} cases, {} failures\n", s.ok() ? "ok  " : "FAIL", s.name, s.cases, s.failures);
        if (!s.ok()) {
            out += "     first counterexample: " + s.first_failure + "\n";
        }
        cases += s.cases;
        failures += s.failures;
    }
    out += fmt::format("total: {} suites, {} cases, {} failures\n", suites.size(), cases, failures);
    return out;
}

SelftestReport run_selftest(const SelftestOptions &options)
{
    SelftestReport report;
    report.seed = options.seed;
    Rng rng(options.seed);
    const auto n = options.samples;
    const bool mutate = options.inject_mutation;
    for (std::uint32_t p : {2u, 3u}) {
        report.suites.push_back(suite_ring_axioms(rng, p, n));
        report.suites.push_back(suite_gamma_identities(rng, p, 3, n));
        report.suites.push_back(suite_shuffle_algebra(rng, p, n));
        report.suites.push_back(suite_orbit_sums(rng, p, n));
        report.suites.push_back(suite_elementary_extraction(p, 3));
        report.suites.push_back(suite_newton(p, 8, mutate && p == 3));
        report.suites.push_back(suite_polarization(rng, p, n));
        report.suites.push_back(suite_flatten(p, 8));
        report.suites.push_back(suite_frobenius_split(rng, p, 3, 8, n));
        report.suites.push_back(suite_membership(rng, p));
        report.suites.push_back(suite_certify(p, p == 2 ? 4 : 2, 2, mutate));
    }
    report.suites.push_back(suite_newton(5, 5));
    return report;
}

} // namespace msym
