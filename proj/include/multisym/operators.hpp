#ifndef MULTISYM_OPERATORS_HPP
#define MULTISYM_OPERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <multisym/elementary_expr.hpp>
#include <multisym/exp_tuple.hpp>
#include <multisym/poly.hpp>

namespace msym
{

// Newton identities

/// Sign attached to E_{p-i} * M_i in the rewrite of the p-th power sum.
enum class NewtonSign {
    /// (-1)^(p-1-i), which is what substituting T = x_j into prod (T - x_j) yields.
    derived,
    /// (-1)^i. Agrees with `derived` for odd p and modulo 2 for p = 2.
    alternating,
    /// No signs at all.
    none,
};

/// The integer sign of the i-th term under a convention.
int newton_sign(std::uint32_t p, std::uint32_t i, NewtonSign convention) noexcept;

/// One term coeff * E_{generator} * M_{power_sum} of a Newton rewrite.
struct NewtonTerm {
    Coeff coeff;
    ExpTuple generator;
    ExpTuple power_sum;
};

/// The p terms sum_{i<p} sign_i E_{p-i}(x_r) M_{alpha - p e_r + i e_r}, unchecked.
/// Throws std::invalid_argument if alpha_r < p.
std::vector<NewtonTerm> newton_terms(const ExpTuple &alpha, std::size_t column, std::uint32_t p,
                                     NewtonSign convention = NewtonSign::derived);

/// Whether the terms re-expand to M_alpha at the given width.
bool newton_identity_holds(const std::vector<NewtonTerm> &terms, const ExpTuple &alpha, std::uint32_t p,
                           std::size_t width);

/// Rewrites M_alpha through E_k(x_column) and power sums with a smaller entry
/// at `column`. The identity is re-expanded at `width` before returning;
/// SelfCheckFailure is thrown if it does not hold.
std::vector<NewtonTerm> newton_rewrite(const ExpTuple &alpha, std::size_t column, std::uint32_t p,
                                       std::size_t width);

/// Checks tildeM_p = sum_{i<p} sign_i E_{p-i}(x) tildeM_i in Z[x_1..x_p, t_1..t_p],
/// where tildeM_r = t_1 x_1^r + ... + t_p x_p^r.
bool check_newton_tilde(std::uint32_t p, NewtonSign convention = NewtonSign::derived);

/// M_{m e_column} as a polynomial in E_1(x_column), ..., E_p(x_column), from the
/// classical recursion p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... reduced mod p.
/// Verified by expansion; SelfCheckFailure on mismatch.
ElementaryExpr power_to_elementary_one_column(std::uint64_t m, std::size_t column, std::uint32_t p);

// Divided polarization

/// The divided power (x_target d/dx_source)^i / i!, columns 0-based.
struct PolarizationOp {
    std::size_t source;
    std::size_t target;
    std::uint32_t divided;
};

/// Coefficient of t^i in f under x_{r,source} -> x_{r,source} + t x_{r,target}
/// for every row r simultaneously. Any row count is accepted, so the same
/// operator acts on the single-row model.
Poly polarize(const Poly &f, const PolarizationOp &op);

/// Closed form on one generator: polarize(E_beta) = binom(beta_target + i, i) E_{beta - i e_s + i e_t}.
/// Returns a zero coefficient when beta_source < i.
std::pair<Coeff, ExpTuple> polarize_generator(const ExpTuple &beta, const PolarizationOp &op, std::uint32_t p);

/// Applies the operator to an expression via the divided-power Leibniz rule
/// and the generator closed form.
ElementaryExpr polarize_expr(const ElementaryExpr &expr, const PolarizationOp &op);

/// Brute-force check of polarize_generator against polarize(elementary(beta))
/// for all 0 < |beta| <= p, len <= width, all column pairs and i <= p.
bool validate_polarization_closed_form(std::uint32_t p, std::size_t width);

// Flattening

struct FlattenStep {
    ExpTuple source;  // the tuple polarized (after any column shift)
    ExpTuple target;
    std::size_t column;
    std::uint32_t moved;  // i, the units moved to column + 1
    bool shifted;         // columns after `column` were moved right by one
};

/// With alpha_column = jp + i, 0 < i < p: moves i units to column + 1. When
/// column + 1 is occupied the later columns are first shifted right by one.
/// Throws std::invalid_argument if p divides alpha_column.
FlattenStep flatten_tuple(const ExpTuple &alpha, std::size_t column, std::uint32_t p);

/// polarize(M_source, column -> column + 1, i) at the given width; equals M_target.
Poly realize_flatten(const FlattenStep &step, std::uint32_t p, std::size_t width);

// Frobenius splitting

/// Psi: T_m -> T_n if m = n^p, otherwise 0, extended linearly over the orbit-sum
/// basis. Throws std::invalid_argument if f is not row-permutation invariant.
Poly frobenius_split(const Poly &f);

} // namespace msym

#endif
