#ifndef MULTISYM_MEMBERSHIP_HPP
#define MULTISYM_MEMBERSHIP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <multisym/exp_tuple.hpp>
#include <multisym/poly.hpp>

namespace msym
{

inline constexpr std::size_t default_dimension_cap = 20000;

/// Orbit representatives of the monomials with the given column degrees, in
/// decreasing monomial order. These index the orbit-sum basis of that piece.
std::vector<Monomial> orbit_representatives(const Shape &shape, const ExpTuple &multidegree);

/// Column degrees with total `degree` and length <= width, ascending.
std::vector<ExpTuple> multidegrees(std::uint64_t degree, std::size_t width);

/// Echelonized subspace of one multihomogeneous piece of the invariant ring,
/// in coordinates over the orbit-sum basis {T_m}.
///
/// Rows are kept in reduced row echelon form sorted by pivot; a full piece
/// drops its rows and is treated as the identity.
class EchelonComponent
{
public:
    EchelonComponent(Shape shape, ExpTuple multidegree, std::size_t cap);

    const Shape &shape() const noexcept
    {
        return m_shape;
    }
    const ExpTuple &multidegree() const noexcept
    {
        return m_multidegree;
    }
    std::size_t columns() const noexcept
    {
        return m_columns.size();
    }
    const std::vector<Monomial> &column_monomials() const noexcept
    {
        return m_columns;
    }
    std::size_t rank() const noexcept
    {
        return m_full ? m_columns.size() : m_rows.size();
    }
    bool full() const noexcept
    {
        return m_full;
    }

    /// Coordinates of an invariant multihomogeneous polynomial of this multidegree.
    std::vector<Coeff> coordinates(const Poly &f) const;
    /// Coordinates of a * b, both invariant, read off at the orbit representatives.
    std::vector<Coeff> product_coordinates(const Poly &a, const Poly &b) const;
    /// Coordinates of T_a * T_b for orbit representatives a, b.
    std::vector<Coeff> orbit_product_coordinates(const Monomial &a, const Monomial &b) const;

    /// Returns true if the rank grew.
    bool insert(std::vector<Coeff> v);
    /// Reduces v; returns the pivot coordinates if v lies in the span.
    std::optional<std::vector<std::pair<std::size_t, Coeff>>> reduce(std::vector<Coeff> v) const;

    /// Dense row k of the RREF (identity rows when full).
    std::vector<Coeff> row(std::size_t k) const;
    std::size_t pivot(std::size_t k) const;
    /// sum_j v_j T_{column j}.
    Poly expand(const std::vector<Coeff> &v) const;

    void set_full();

private:
    Shape m_shape;
    ExpTuple m_multidegree;
    std::vector<Monomial> m_columns;
    std::unordered_map<Monomial, std::size_t, MonomialHash> m_index;
    std::vector<std::vector<std::uint8_t>> m_rows;
    std::vector<std::size_t> m_pivots;
    bool m_full = false;
};

/// Coordinates of f over the rows of a basis: (row index, coefficient) pairs
/// with nonzero coefficient, in row order.
using Coordinates = std::vector<std::pair<std::size_t, Coeff>>;

/// A graded, multigraded-by-columns subspace of the degree-d invariants at width n.
class SpanBasis
{
public:
    SpanBasis(Shape shape, std::uint64_t degree, std::size_t cap = default_dimension_cap);

    const Shape &shape() const noexcept
    {
        return m_shape;
    }
    std::uint64_t degree() const noexcept
    {
        return m_degree;
    }
    std::size_t width() const noexcept
    {
        return m_shape.width;
    }
    std::size_t dimension() const noexcept;
    /// Number of orbit-sum basis elements covered by computed components.
    std::size_t ambient_dimension() const noexcept;

    /// Restricts the basis to a single multidegree; other multidegrees are
    /// unknown rather than empty, and queries touching them throw.
    void restrict_to(ExpTuple multidegree);
    const std::optional<ExpTuple> &restriction() const noexcept
    {
        return m_restriction;
    }

    /// Creates (if needed) and returns the component of a multidegree.
    EchelonComponent &component(const ExpTuple &multidegree);
    const EchelonComponent *find_component(const ExpTuple &multidegree) const;
    const std::map<ExpTuple, EchelonComponent> &components() const noexcept
    {
        return m_components;
    }
    /// Installs a precomputed component, replacing any existing one.
    void set_component(EchelonComponent component);

    /// f must be invariant and multihomogeneous of this degree. Returns true if the dimension grew.
    bool insert(const Poly &f);
    /// Inserts each multihomogeneous component of f separately.
    void insert_components(const Poly &f);

    /// Coordinates of f if it lies in the span. Non-invariant f is never in the
    /// span. Throws std::invalid_argument on a degree mismatch.
    std::optional<Coordinates> contains(const Poly &f) const;

    /// Basis rows as invariant polynomials, components in ascending multidegree.
    std::vector<Poly> rows() const;
    /// Leading monomial of each row (the orbit representative at its pivot).
    std::vector<Monomial> pivots() const;
    Poly row(std::size_t k) const;

private:
    void check_cap() const;

    Shape m_shape;
    std::uint64_t m_degree;
    std::size_t m_cap;
    std::optional<ExpTuple> m_restriction;
    std::map<ExpTuple, EchelonComponent> m_components;
};

/// The orbit-sum basis of the degree-d invariants (all of Gamma_d).
SpanBasis gamma_basis(std::uint32_t p, std::size_t width, std::uint64_t degree,
                      std::size_t cap = default_dimension_cap);

/// Multigraded pieces of the algebra generated by all E_beta (0 < |beta| <= p)
/// at a fixed width, computed on demand and cached.
///
/// P_delta = sum_beta E_beta * P_{delta - beta}, seeded with P_0 = span{1}.
class PAlgebra
{
public:
    PAlgebra(std::uint32_t p, std::size_t width, std::size_t cap = default_dimension_cap);

    std::uint32_t p() const noexcept
    {
        return m_shape.p();
    }
    std::size_t width() const noexcept
    {
        return m_shape.width;
    }

    const EchelonComponent &component(const ExpTuple &multidegree);
    /// Spanning polynomials (expanded) of the piece, one per echelon row.
    const std::vector<Poly> &spanning_polys(const ExpTuple &multidegree);

    SpanBasis span(std::uint64_t degree);
    SpanBasis span_at(const ExpTuple &multidegree);

private:
    struct Piece {
        std::unique_ptr<EchelonComponent> echelon;
        std::vector<Poly> polys;
    };
    Piece &piece(const ExpTuple &multidegree);

    Shape m_shape;
    std::size_t m_cap;
    std::vector<ExpTuple> m_generators;
    std::map<ExpTuple, Poly> m_generator_polys;
    std::map<ExpTuple, Piece> m_pieces;
};

SpanBasis p_algebra_span(std::uint32_t p, std::size_t width, std::uint64_t degree,
                         std::size_t cap = default_dimension_cap);

std::optional<Coordinates> contains(const SpanBasis &basis, const Poly &f);

/// The multihomogeneous piece of (Gamma_{>0})^2, spanned by products T_a T_b of
/// positive degree.
void fill_square_component(EchelonComponent &component);

/// Per-degree comparison of Gamma_d, P_d, ((Gamma_{>0})^2)_d and the predicted
/// indecomposables {M_alpha : alpha_i < p} u {E_p(x_j)}.
struct GradedDimReport {
    std::uint32_t p = 0;
    std::size_t width = 0;
    std::uint64_t degree = 0;
    std::size_t dim_gamma = 0;
    std::size_t dim_p = 0;
    std::size_t dim_square = 0;
    std::size_t dim_quotient = 0;
    std::size_t predicted_count = 0;
    // The predicted elements are independent and spanning modulo the square.
    bool predicted_basis = false;

    bool match() const noexcept
    {
        return dim_quotient == predicted_count && predicted_basis;
    }
};

/// Number of M_alpha with |alpha| = d, alpha_i < p, len <= width, plus width if d == p.
std::size_t predicted_generator_count(std::uint32_t p, std::size_t width, std::uint64_t degree);

GradedDimReport square_ideal_quotient(std::uint32_t p, std::size_t width, std::uint64_t degree,
                                      std::size_t cap = default_dimension_cap, PAlgebra *palgebra = nullptr);

std::string csv_header();
std::string to_csv_row(const GradedDimReport &);

/// Which operators close a GL-span.
struct GlSpanOptions {
    /// Largest divided power used by polarization; 0 means unbounded (the
    /// exact span over the algebraic closure).
    std::uint32_t max_divided = 0;
    bool column_permutations = true;
    std::size_t cap = default_dimension_cap;
};

/// Smallest subspace containing the multihomogeneous components of f that is
/// closed under divided polarizations between any two columns (and column
/// transpositions). f must be homogeneous and invariant (or single-row).
SpanBasis gl_span(const Poly &f, const GlSpanOptions &options = {});

/// Restricted proxy: divided powers i <= p - 1 and column permutations.
GlSpanOptions proxy_gl_options(std::uint32_t p, std::size_t cap = default_dimension_cap);

/// Which products enter the ideal truncation.
enum class Cofactors {
    /// g * f with f in P of positive degree.
    positive,
    /// Also g itself when deg g = D.
    with_generators,
};

/// Degree-D (or one multidegree of degree D) piece of the ideal of P generated
/// by the GL-spans of M_alpha^p for 0 < |alpha| <= d.
SpanBasis ideal_truncation_span(std::uint32_t p, std::size_t width, std::uint64_t generator_degree,
                                std::uint64_t target_degree, Cofactors cofactors,
                                const std::optional<ExpTuple> &multidegree = std::nullopt,
                                std::size_t cap = default_dimension_cap, PAlgebra *palgebra = nullptr);

/// GL-span of {M_{p alpha} : |alpha| = k, len <= width} at degree p*k.
SpanBasis pth_power_generators(std::uint32_t p, std::size_t width, std::uint64_t k,
                               std::size_t cap = default_dimension_cap);

} // namespace msym

#endif
