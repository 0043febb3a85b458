#ifndef MULTISYM_CERTIFY_HPP
#define MULTISYM_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <multisym/elementary_expr.hpp>
#include <multisym/exp_tuple.hpp>

namespace msym
{

enum class StepKind {
    base_case,
    newton_rewrite,
    merge,
    flatten,
    frobenius,
};

std::string to_string(StepKind);
StepKind step_kind_from_string(const std::string &);

/// One step of the construction, in post-order: replaying the trace on a
/// stack of expressions rebuilds the certificate terms.
///
///   base_case       push the single-column expansion of M_{m e_column}
///   merge           annotation: `tuple` is certified through `merged`
///   flatten         pop X, push polarize(X, column -> column + 1, moved) / binom
///   newton_rewrite  pop one expression per entry of `inner` (in order), push
///                   sum coeff_k * E_{generator_k} * X_k
///   frobenius       annotation: the target is the p-th power of M_tuple
struct CertStep {
    StepKind kind = StepKind::base_case;
    ExpTuple tuple;
    ExpTuple merged;
    std::size_t column = 0;
    std::uint32_t moved = 0;
    std::uint64_t power = 0;
    std::vector<Coeff> coeffs;
    std::vector<ExpTuple> generators;
    std::vector<ExpTuple> inner;

    friend bool operator==(const CertStep &, const CertStep &) = default;
};

/// An expression of M_target as a polynomial in elementary multisymmetric generators.
struct Certificate {
    std::uint32_t p = 0;
    std::size_t width = 0;
    ExpTuple target;
    ElementaryExpr terms{2};
    std::vector<CertStep> trace;
    /// False when the terms come from linear algebra rather than the recursion;
    /// such certificates have no trace.
    bool constructive = true;

    nlohmann::json to_json() const;
    static Certificate from_json(const nlohmann::json &);
};

struct CertifyOptions {
    /// Skip the recursion and solve for the terms by elimination.
    bool force_fallback = false;
    std::size_t cap = 20000;
};

/// Certificate for M_alpha, where p divides every entry of alpha before the last.
/// Throws std::invalid_argument on a violated precondition or width < len(alpha).
Certificate certify_power_sum(const ExpTuple &alpha, std::uint32_t p, std::size_t width,
                              const CertifyOptions &options = {});

/// Certificate for M_{p alpha} = M_alpha^p.
Certificate certify_pth_power(const ExpTuple &alpha, std::uint32_t p, std::size_t width,
                              const CertifyOptions &options = {});

struct VerifyResult {
    bool ok = false;
    std::string report;
};

/// Re-expands the terms with elementary() and mul and compares with power_sum(target).
VerifyResult verify(const Certificate &cert);

/// Rebuilds the terms from the trace; none for a malformed or non-constructive trace.
std::optional<ElementaryExpr> replay(const Certificate &cert);

/// Whether the generator closed form for polarization was checked at this p.
/// Results are cached per prime.
bool polarization_validated(std::uint32_t p);

} // namespace msym

#endif
