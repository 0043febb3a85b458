#ifndef MULTISYM_SYMMETRIC_HPP
#define MULTISYM_SYMMETRIC_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <multisym/exp_tuple.hpp>
#include <multisym/poly.hpp>

namespace msym
{

/// Sum of the distinct monomials in the row-permutation orbit of m, each with
/// coefficient 1 (the basis element T_m of the invariant ring).
Poly orbit_sum(const Shape &shape, const Monomial &m);

/// Number of distinct row permutations of m.
std::uint64_t orbit_size(const Monomial &m);

/// Monomial with a single nonzero row: x_{row}^alpha.
Monomial row_monomial(const Shape &shape, std::size_t row, const ExpTuple &alpha);

/// Power sum M_alpha = sum over rows r of x_r^alpha. Homogeneous of degree
/// |alpha|; the zero tuple gives p * 1 = 0. Throws if len(alpha) > width.
Poly power_sum(const ExpTuple &alpha, std::uint32_t p, std::size_t width);

/// Elementary multisymmetric polynomial E_alpha, |alpha| <= p: the orbit sum of
/// the monomial using column c in alpha_c distinct rows. E_{i e_j} = E_i(x_j).
Poly elementary(const ExpTuple &alpha, std::uint32_t p, std::size_t width);

/// The monomial whose orbit sum is E_alpha (rows filled in column order, from the last row up).
Monomial elementary_representative(const Shape &shape, const ExpTuple &alpha);

/// True iff f is fixed by every adjacent row transposition.
bool is_invariant(const Poly &f);

/// Element of Gamma^d(S): a row-permutation-invariant polynomial in a d x n matrix.
class SymTensor
{
public:
    /// Throws std::invalid_argument if body is not row-symmetric.
    explicit SymTensor(Poly body);

    std::size_t degree() const noexcept
    {
        return m_body.shape().rows;
    }
    std::size_t width() const noexcept
    {
        return m_body.shape().width;
    }
    const Poly &body() const noexcept
    {
        return m_body;
    }

    SymTensor scaled(Coeff c) const;
    friend SymTensor operator+(const SymTensor &, const SymTensor &);
    friend bool operator==(const SymTensor &a, const SymTensor &b) noexcept
    {
        return a.m_body == b.m_body;
    }

private:
    struct unchecked_tag {
    };
    SymTensor(Poly body, unchecked_tag) : m_body(std::move(body)) {}

    friend SymTensor gamma(std::int64_t, const Poly &);
    friend SymTensor shuffle(const SymTensor &, const SymTensor &);

    Poly m_body;
};

/// gamma^d(s) = s (x) s (x) ... (x) s, for s a polynomial in a single row of
/// variables (a 1 x n shape). gamma(0, s) is the unit of Gamma^0.
SymTensor gamma(std::int64_t d, const Poly &s);

/// The shuffle product of a degree-d and a degree-e tensor: sum over the
/// (d, e)-shuffles of the row-concatenated tensor product.
SymTensor shuffle(const SymTensor &x, const SymTensor &y);

/// The unit 1 in Gamma^0 at the given field and width.
SymTensor gamma_unit(const PrimeField &field, std::size_t width);

/// A polynomial in a single row of variables (the 1 x n shape).
Shape single_row_shape(std::uint32_t p, std::size_t width);

/// Sum over rows of f evaluated in row r: the map f -> gamma^1(f) x gamma^{p-1}(1).
/// f lives in the single-row shape.
Poly spread_over_rows(const Poly &f, std::uint32_t p);

} // namespace msym

#endif
