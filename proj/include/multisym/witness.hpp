#ifndef MULTISYM_WITNESS_HPP
#define MULTISYM_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include <multisym/membership.hpp>

namespace msym
{

/// Outcome of the finite-width witness computation for omega = (1, ..., 1) of length N.
struct WitnessReport {
    std::uint32_t p = 0;
    std::uint64_t d = 0;
    std::size_t N = 0;
    std::size_t width = 0;

    /// N > d; when false the remaining checks still run but the witness fails.
    bool precondition = false;

    /// (a) M_omega is not in the square of the positive part.
    bool omega_indecomposable = false;
    std::size_t square_rank = 0;
    std::size_t square_columns = 0;

    /// (b) M_{p omega} has a verified certificate and equals frobenius(M_omega).
    bool certificate_verified = false;
    bool frobenius_matches = false;
    std::size_t certificate_terms = 0;

    /// (c) M_{p omega} is outside the ideal truncation at multidegree p omega.
    bool outside_ideal = false;
    bool outside_ideal_positive = false;
    std::size_t ideal_rank = 0;
    std::size_t ideal_rank_positive = 0;
    std::size_t ideal_columns = 0;

    /// Psi applied to every basis row of the ideal piece lands in the square.
    std::size_t psi_rows = 0;
    std::size_t psi_rows_in_square = 0;
    bool psi_target_is_omega = false;

    bool passed() const noexcept
    {
        return precondition && omega_indecomposable && certificate_verified && frobenius_matches && outside_ideal;
    }

    nlohmann::json to_json() const;
    std::string to_text() const;
};

WitnessReport witness_check(std::uint32_t p, std::uint64_t d, std::size_t N, std::size_t width,
                            std::size_t cap = default_dimension_cap);

} // namespace msym

#endif
