#include <multisym/field.hpp>

namespace msym
{

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : m_p(p)
{
    if (!is_prime(p) || p > max_prime) {
        throw std::invalid_argument("characteristic must be a prime <= " + std::to_string(max_prime) + ", got "
                                    + std::to_string(p));
    }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept
{
    Coeff result = 1 % m_p;
    Coeff base = a % m_p;
    while (e != 0) {
        if (e & 1u) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Coeff PrimeField::inv(Coeff a) const
{
    if (a % m_p == 0) {
        throw std::domain_error("inverse of zero in GF(" + std::to_string(m_p) + ")");
    }
    return pow(a, m_p - 2);
}

Coeff PrimeField::binomial(std::uint64_t n, std::uint64_t k) const noexcept
{
    if (k > n) {
        return 0;
    }
    Coeff result = 1;
    while (n != 0 || k != 0) {
        auto nd = n % m_p;
        auto kd = k % m_p;
        if (kd > nd) {
            return 0;
        }
        // Small binomial with digits < p, computed exactly in the field.
        Coeff num = 1, den = 1;
        for (std::uint64_t i = 0; i < kd; ++i) {
            num = mul(num, static_cast<Coeff>(nd - i));
            den = mul(den, static_cast<Coeff>(i + 1));
        }
        result = mul(result, mul(num, inv(den)));
        n /= m_p;
        k /= m_p;
    }
    return result;
}

} // namespace msym
