#ifndef MULTISYM_FIELD_HPP
#define MULTISYM_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msym
{

// Residues are stored reduced, one machine word each.
using Coeff = std::uint32_t;

inline constexpr std::uint32_t max_prime = 61;

bool is_prime(std::uint64_t n);

/// The prime field GF(p), p <= 61. All arithmetic is exact.
class PrimeField
{
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept
    {
        return m_p;
    }

    Coeff add(Coeff a, Coeff b) const noexcept
    {
        Coeff s = a + b;
        return s >= m_p ? s - m_p : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept
    {
        return a >= b ? a - b : a + m_p - b;
    }
    Coeff neg(Coeff a) const noexcept
    {
        return a == 0 ? 0 : m_p - a;
    }
    Coeff mul(Coeff a, Coeff b) const noexcept
    {
        return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % m_p);
    }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;
    // Throws std::domain_error on zero.
    Coeff inv(Coeff a) const;

    Coeff from_int(std::int64_t v) const noexcept
    {
        auto r = v % static_cast<std::int64_t>(m_p);
        return static_cast<Coeff>(r < 0 ? r + m_p : r);
    }
    // Symmetric representative in (-p/2, p/2], for readable output.
    std::int64_t to_signed(Coeff a) const noexcept
    {
        return a > m_p / 2 ? static_cast<std::int64_t>(a) - m_p : static_cast<std::int64_t>(a);
    }

    /// binom(n, k) mod p via Lucas' theorem.
    Coeff binomial(std::uint64_t n, std::uint64_t k) const noexcept;

    friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
    std::uint32_t m_p;
};

} // namespace msym

#endif
