#ifndef MULTISYM_POLY_HPP
#define MULTISYM_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include <json.hpp>

#include <multisym/exp_tuple.hpp>
#include <multisym/field.hpp>

namespace msym
{

/// Layout of the variable matrix x_{r,c}: a prime field plus a rows x width grid.
///
/// The ambient ring R of the library has rows == p. Symmetric tensors of
/// degree d live in the d x width matrix over the same field.
struct Shape {
    PrimeField field;
    std::uint16_t rows;
    std::uint16_t width;

    static Shape ring(std::uint32_t p, std::size_t width);

    std::uint32_t p() const noexcept
    {
        return field.characteristic();
    }
    std::size_t variables() const noexcept
    {
        return std::size_t(rows) * width;
    }

    friend bool operator==(const Shape &, const Shape &) = default;
};

std::string to_string(const Shape &);

/// Exponent matrix of a monomial, stored row-major.
///
/// Ordering is graded lexicographic on the row-major exponent vector: first
/// total degree, then the exponent vectors lexicographically. Under this order
/// x_{1,1} > x_{1,2} > ... > x_{2,1} > ... within a degree.
class Monomial
{
public:
    using exponent_type = std::uint16_t;
    using storage = boost::container::small_vector<exponent_type, 24>;

    Monomial() = default;
    Monomial(std::size_t rows, std::size_t width);
    Monomial(std::size_t rows, std::size_t width, storage exps);

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t width() const noexcept
    {
        return m_width;
    }
    std::uint64_t degree() const noexcept
    {
        return m_degree;
    }
    bool is_one() const noexcept
    {
        return m_degree == 0;
    }

    // 0-based row and column.
    exponent_type operator()(std::size_t r, std::size_t c) const noexcept
    {
        return m_exps[r * m_width + c];
    }
    void set(std::size_t r, std::size_t c, exponent_type e);

    std::span<const exponent_type> exponents() const noexcept
    {
        return {m_exps.data(), m_exps.size()};
    }
    std::span<const exponent_type> row(std::size_t r) const noexcept
    {
        return {m_exps.data() + r * m_width, m_width};
    }

    /// Column degrees: entry c is the total exponent of column c.
    ExpTuple column_degrees() const;
    /// The row-r slice as a tuple (x_r^beta notation).
    ExpTuple row_tuple(std::size_t r) const;

    /// Whether every exponent is divisible by q.
    bool divisible_by(std::uint32_t q) const noexcept;
    /// Divides every exponent by q; precondition divisible_by(q).
    Monomial exact_root(std::uint32_t q) const;
    /// Whether m divides *this (same layout assumed).
    bool divides(const Monomial &other) const noexcept;

    /// Minimal element of the row-permutation orbit: rows sorted ascending.
    Monomial orbit_representative() const;
    bool is_orbit_representative() const noexcept;
    Monomial swap_rows(std::size_t a, std::size_t b) const;

    friend Monomial operator*(const Monomial &, const Monomial &);
    // Exact quotient; precondition b.divides(a).
    friend Monomial operator/(const Monomial &, const Monomial &);

    friend bool operator==(const Monomial &a, const Monomial &b) noexcept
    {
        return a.m_degree == b.m_degree && a.m_exps == b.m_exps;
    }
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) noexcept;

    std::size_t hash() const noexcept;

private:
    storage m_exps;
    std::uint64_t m_degree = 0;
    std::uint16_t m_rows = 0;
    std::uint16_t m_width = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept
    {
        return m.hash();
    }
};

struct Term {
    Monomial mono;
    Coeff coeff;

    friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse GF(p)-linear combination of monomials in canonical form.
///
/// Terms are kept sorted by decreasing monomial with no zero coefficients, so
/// two polynomials are equal iff their term lists are equal.
class Poly
{
public:
    explicit Poly(Shape shape);

    static Poly constant(Shape shape, Coeff c);
    static Poly one(Shape shape)
    {
        return constant(shape, 1);
    }
    // 0-based row and column.
    static Poly variable(Shape shape, std::size_t row, std::size_t column);
    static Poly monomial(Shape shape, Monomial m, Coeff c = 1);
    /// Canonicalizes arbitrary (possibly repeated, possibly zero) terms.
    static Poly from_terms(Shape shape, std::vector<Term> terms);
    /// Terms already strictly decreasing with nonzero reduced coefficients.
    static Poly from_sorted_terms(Shape shape, std::vector<Term> terms);

    const Shape &shape() const noexcept
    {
        return m_shape;
    }
    const PrimeField &field() const noexcept
    {
        return m_shape.field;
    }
    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    const Term &leading() const;
    Coeff coefficient(const Monomial &m) const noexcept;

    /// The common total degree of all terms, if there is one (none for zero).
    std::optional<std::uint64_t> homogeneous_degree() const;
    /// The common column-degree vector, if there is one.
    std::optional<ExpTuple> multidegree() const;
    /// Splits into multihomogeneous components, keyed by column degrees, in ascending key order.
    std::vector<std::pair<ExpTuple, Poly>> multigraded_components() const;

    Poly operator-() const;
    Poly &operator+=(const Poly &);
    Poly &operator-=(const Poly &);
    Poly &operator*=(const Poly &);
    Poly scaled(Coeff c) const;
    /// this += c * other.
    void add_scaled(const Poly &other, Coeff c);

    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend bool operator==(const Poly &a, const Poly &b) noexcept
    {
        return a.m_shape == b.m_shape && a.m_terms == b.m_terms;
    }

    std::string to_string() const;
    nlohmann::json to_json() const;
    static Poly from_json(Shape shape, const nlohmann::json &j);

private:
    void check_compatible(const Poly &other, const char *op) const;

    Shape m_shape;
    std::vector<Term> m_terms;
};

Poly add(const Poly &f, const Poly &g);
Poly mul(const Poly &f, const Poly &g);
Poly pow(const Poly &f, std::uint64_t e);
/// f^p, computed termwise: exponents times p, coefficients fixed.
Poly frobenius(const Poly &f);

/// Re-embeds f into a matrix with more columns (new columns unused).
Poly widen(const Poly &f, std::size_t width);
/// Relabels columns: column c of f becomes column perm[c] of the result.
Poly permute_columns(const Poly &f, std::span<const std::size_t> perm, std::size_t new_width);
/// Applies a row permutation: row r of f becomes row perm[r].
Poly permute_rows(const Poly &f, std::span<const std::size_t> perm);

} // namespace msym

template <>
struct std::hash<msym::Monomial> {
    std::size_t operator()(const msym::Monomial &m) const noexcept
    {
        return m.hash();
    }
};

#endif
