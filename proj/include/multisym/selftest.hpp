#ifndef MULTISYM_SELFTEST_HPP
#define MULTISYM_SELFTEST_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <multisym/poly.hpp>

namespace msym
{

/// The generator used by every randomized suite.
using Rng = std::mt19937_64;
inline constexpr const char *rng_name = "mt19937_64";

struct SuiteResult {
    explicit SuiteResult(std::string suite_name = {}) : name(std::move(suite_name))
    {
    }

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Description of the first failing case, empty when green.
    std::string first_failure;

    bool ok() const noexcept
    {
        return failures == 0;
    }
    void record(bool passed, const std::string &description);
};

// Random inputs. Degrees and term counts are kept small enough that every
// suite runs in well under a second per case.

/// Sparse polynomial in the p x width ring.
Poly random_poly(Rng &rng, const Shape &shape, std::size_t max_terms, std::uint64_t max_degree);
/// Homogeneous invariant: a combination of up to `max_orbits` orbit sums of degree `degree`.
Poly random_invariant(Rng &rng, const Shape &shape, std::size_t max_orbits, std::uint64_t degree);

// Property suites. Each returns one result with every case counted.

/// gamma(d, c s) = c^d gamma(d, s); gamma(d, s + t) = sum shuffle(gamma(d1, s), gamma(d2, t));
/// shuffle(gamma(d, s), gamma(e, s)) = binom(d + e, e) gamma(d + e, s). `samples` per identity.
SuiteResult suite_gamma_identities(Rng &rng, std::uint32_t p, std::size_t max_width, std::size_t samples);
SuiteResult suite_shuffle_algebra(Rng &rng, std::uint32_t p, std::size_t samples);
SuiteResult suite_ring_axioms(Rng &rng, std::uint32_t p, std::size_t samples);
SuiteResult suite_orbit_sums(Rng &rng, std::uint32_t p, std::size_t samples);
/// E_alpha against the coefficient of prod t_c^alpha_c in prod_r (1 + sum_c t_c x_{r,c}).
SuiteResult suite_elementary_extraction(std::uint32_t p, std::size_t width);
/// Integer check of the signed identity and every rewrite with |alpha| <= max_degree, len <= 2.
/// With `mutate`, the unsigned identity is checked instead.
SuiteResult suite_newton(std::uint32_t p, std::uint64_t max_degree, bool mutate = false);
SuiteResult suite_polarization(Rng &rng, std::uint32_t p, std::size_t samples);
/// polarize realizes flatten_tuple for len(alpha) <= 2, |alpha| <= max_degree.
SuiteResult suite_flatten(std::uint32_t p, std::uint64_t max_degree);
/// Psi axioms on `samples` random invariant pairs at width <= max_width, degree <= max_degree.
SuiteResult suite_frobenius_split(Rng &rng, std::uint32_t p, std::size_t max_width, std::uint64_t max_degree,
                                  std::size_t samples);
SuiteResult suite_membership(Rng &rng, std::uint32_t p);
/// Certificates for every nonzero alpha with |alpha| <= max_degree, len <= max_length: verify,
/// replay, degree bookkeeping. With `mutate`, one coefficient is perturbed before verifying.
SuiteResult suite_certify(std::uint32_t p, std::uint64_t max_degree, std::size_t max_length, bool mutate = false);

struct SelftestOptions {
    std::uint64_t seed = 1;
    bool inject_mutation = false;
    std::size_t samples = 40;
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool ok() const noexcept;
    /// Deterministic log: a header naming the generator and seed, one line per suite.
    std::string log() const;
};

SelftestReport run_selftest(const SelftestOptions &options);

} // namespace msym

#endif
