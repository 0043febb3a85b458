#ifndef MULTISYM_ELEMENTARY_EXPR_HPP
#define MULTISYM_ELEMENTARY_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <multisym/exp_tuple.hpp>
#include <multisym/field.hpp>
#include <multisym/poly.hpp>

namespace msym
{

/// A GF(p)-linear combination of products of elementary multisymmetric
/// generators E_beta (|beta| <= p). Each product is a sorted list of tuples;
/// the empty product is 1.
class ElementaryExpr
{
public:
    using Product = std::vector<ExpTuple>;

    explicit ElementaryExpr(std::uint32_t p);

    static ElementaryExpr constant(std::uint32_t p, Coeff c);
    /// Throws if |beta| > p or beta == 0.
    static ElementaryExpr generator(std::uint32_t p, const ExpTuple &beta, Coeff c = 1);

    const PrimeField &field() const noexcept
    {
        return m_field;
    }
    const std::map<Product, Coeff> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }

    /// Adds c * prod(factors); factors need not be sorted.
    void add_term(Product factors, Coeff c);
    ElementaryExpr &operator+=(const ElementaryExpr &);
    ElementaryExpr scaled(Coeff c) const;
    friend ElementaryExpr operator+(ElementaryExpr a, const ElementaryExpr &b)
    {
        return a += b;
    }
    friend ElementaryExpr operator*(const ElementaryExpr &, const ElementaryExpr &);
    friend bool operator==(const ElementaryExpr &a, const ElementaryExpr &b) noexcept
    {
        return a.m_field == b.m_field && a.m_terms == b.m_terms;
    }

    /// Smallest width covering every generator.
    std::size_t required_width() const noexcept;
    /// Total degree of every product, or none if they differ (or no terms).
    std::optional<std::uint64_t> homogeneous_degree() const;

    /// Expands every product into the ambient ring at the given width.
    Poly expand(std::size_t width) const;

private:
    PrimeField m_field;
    std::map<Product, Coeff> m_terms;
};

} // namespace msym

#endif
