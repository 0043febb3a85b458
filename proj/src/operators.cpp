#include <multisym/operators.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

#include <multisym/errors.hpp>
#include <multisym/symmetric.hpp>

namespace msym
{

int newton_sign(std::uint32_t p, std::uint32_t i, NewtonSign convention) noexcept
{
    switch (convention) {
        case NewtonSign::derived:
            return ((p - 1 - i) % 2 == 0) ? 1 : -1;
        case NewtonSign::alternating:
            return (i % 2 == 0) ? 1 : -1;
        case NewtonSign::none:
            break;
    }
    return 1;
}

std::vector<NewtonTerm> newton_terms(const ExpTuple &alpha, std::size_t column, std::uint32_t p,
                                     NewtonSign convention)
{
    if (alpha[column] < p) {
        throw std::invalid_argument(fmt::format("newton_rewrite: entry {} of {} is below p = {}", column + 1,
                                                alpha.to_string(), p));
    }
    PrimeField F(p);
    const auto base = alpha.with(column, alpha[column] - p);
    std::vector<NewtonTerm> out;
    out.reserve(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        out.push_back({F.from_int(newton_sign(p, i, convention)), ExpTuple::unit(column, p - i),
                       base.with(column, base[column] + i)});
    }
    return out;
}

bool newton_identity_holds(const std::vector<NewtonTerm> &terms, const ExpTuple &alpha, std::uint32_t p,
                           std::size_t width)
{
    Poly sum(Shape::ring(p, width));
    for (const auto &t : terms) {
        sum.add_scaled(elementary(t.generator, p, width) * power_sum(t.power_sum, p, width), t.coeff);
    }
    return sum == power_sum(alpha, p, width);
}

std::vector<NewtonTerm> newton_rewrite(const ExpTuple &alpha, std::size_t column, std::uint32_t p,
                                       std::size_t width)
{
    auto terms = newton_terms(alpha, column, p, NewtonSign::derived);
    if (!newton_identity_holds(terms, alpha, p, std::max(width, alpha.length()))) {
        throw SelfCheckFailure(fmt::format("Newton rewrite of M{} at column {} does not re-expand (p = {})",
                                           alpha.to_string(), column + 1, p));
    }
    return terms;
}

namespace
{

// Integer polynomials over Z in a handful of variables; exponents by index.
using IntPoly = std::map<std::vector<std::uint8_t>, std::int64_t>;

void int_add(IntPoly &acc, const IntPoly &f, std::int64_t scale)
{
    for (const auto &[m, c] : f) {
        auto &slot = acc[m];
        slot += scale * c;
        if (slot == 0) {
            acc.erase(m);
        }
    }
}

IntPoly int_mul(const IntPoly &f, const IntPoly &g)
{
    IntPoly out;
    for (const auto &[mf, cf] : f) {
        for (const auto &[mg, cg] : g) {
            auto m = mf;
            for (std::size_t k = 0; k < m.size(); ++k) {
                m[k] = static_cast<std::uint8_t>(m[k] + mg[k]);
            }
            auto &slot = out[m];
            slot += cf * cg;
            if (slot == 0) {
                out.erase(m);
            }
        }
    }
    return out;
}

} // namespace

bool check_newton_tilde(std::uint32_t p, NewtonSign convention)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("check_newton_tilde: p must be prime");
    }
    const std::size_t nvars = 2 * std::size_t(p);
    // x_j is variable j, t_j is variable p + j.
    auto tilde_m = [&](std::uint32_t r) {
        IntPoly out;
        for (std::uint32_t j = 0; j < p; ++j) {
            std::vector<std::uint8_t> m(nvars, 0);
            m[j] = static_cast<std::uint8_t>(r);
            m[p + j] = 1;
            out[m] += 1;
        }
        return out;
    };
    auto elementary_x = [&](std::uint32_t k) {
        IntPoly out;
        std::vector<bool> mask(p, false);
        std::fill(mask.begin(), mask.begin() + k, true);
        do {
            std::vector<std::uint8_t> m(nvars, 0);
            for (std::uint32_t j = 0; j < p; ++j) {
                m[j] = mask[j] ? 1 : 0;
            }
            out[m] += 1;
        } while (std::prev_permutation(mask.begin(), mask.end()));
        return out;
    };
    IntPoly rhs;
    for (std::uint32_t i = 0; i < p; ++i) {
        int_add(rhs, int_mul(elementary_x(p - i), tilde_m(i)), newton_sign(p, i, convention));
    }
    return rhs == tilde_m(p);
}

ElementaryExpr power_to_elementary_one_column(std::uint64_t m, std::size_t column, std::uint32_t p)
{
    PrimeField F(p);
    std::vector<ElementaryExpr> power(m + 1, ElementaryExpr(p));
    for (std::uint64_t k = 1; k <= m; ++k) {
        ElementaryExpr pk(p);
        for (std::uint64_t j = 1; j < k && j <= p; ++j) {
            Coeff sign = (j % 2 == 1) ? 1 : F.neg(1);
            pk += ElementaryExpr::generator(p, ExpTuple::unit(column, static_cast<std::uint32_t>(j)), sign)
                  * power[k - j];
        }
        if (k <= p) {
            Coeff c = F.mul((k % 2 == 1) ? 1 : F.neg(1), F.from_int(static_cast<std::int64_t>(k)));
            pk += ElementaryExpr::generator(p, ExpTuple::unit(column, static_cast<std::uint32_t>(k)), c);
        }
        power[k] = std::move(pk);
    }
    auto result = std::move(power[m]);
    const auto width = column + 1;
    if (result.expand(width) != power_sum(ExpTuple::unit(column, static_cast<std::uint32_t>(m)), p, width)) {
        throw SelfCheckFailure(fmt::format("single-column Newton expansion of M_{{{} e_{}}} failed (p = {})", m,
                                           column + 1, p));
    }
    return result;
}

namespace
{

void check_op(const PolarizationOp &op, std::size_t width)
{
    if (op.source == op.target) {
        throw std::invalid_argument("polarization needs distinct source and target columns");
    }
    if (op.source >= width || op.target >= width) {
        throw std::invalid_argument(fmt::format("polarization column out of width {} (source {}, target {})", width,
                                                op.source + 1, op.target + 1));
    }
}

} // namespace

Poly polarize(const Poly &f, const PolarizationOp &op)
{
    const auto &shape = f.shape();
    check_op(op, shape.width);
    if (op.divided == 0) {
        return f;
    }
    const auto &F = shape.field;
    const std::size_t rows = shape.rows;
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;

    std::vector<std::uint32_t> take(rows, 0);
    for (const auto &t : f.terms()) {
        std::uint64_t available = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            available += t.mono(r, op.source);
        }
        if (available < op.divided) {
            continue;
        }
        // Distribute i among the rows, take[r] <= exponent of x_{r,source}.
        auto emit = [&](auto &&self, std::size_t r, std::uint32_t left, Coeff c) -> void {
            if (c == 0) {
                return;
            }
            if (r == rows) {
                if (left != 0) {
                    return;
                }
                Monomial m(t.mono);
                for (std::size_t k = 0; k < rows; ++k) {
                    if (take[k] != 0) {
                        m.set(k, op.source, static_cast<Monomial::exponent_type>(m(k, op.source) - take[k]));
                        m.set(k, op.target, static_cast<Monomial::exponent_type>(m(k, op.target) + take[k]));
                    }
                }
                auto &slot = acc[m];
                slot = F.add(slot, F.mul(c, t.coeff));
                return;
            }
            const std::uint32_t cap = std::min<std::uint32_t>(left, t.mono(r, op.source));
            for (std::uint32_t k = 0; k <= cap; ++k) {
                take[r] = k;
                self(self, r + 1, left - k, F.mul(c, F.binomial(t.mono(r, op.source), k)));
            }
            take[r] = 0;
        };
        emit(emit, 0, op.divided, 1);
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto &[m, c] : acc) {
        if (c != 0) {
            terms.push_back({m, c});
        }
    }
    return Poly::from_terms(shape, std::move(terms));
}

std::pair<Coeff, ExpTuple> polarize_generator(const ExpTuple &beta, const PolarizationOp &op, std::uint32_t p)
{
    if (op.source == op.target) {
        throw std::invalid_argument("polarization needs distinct source and target columns");
    }
    if (beta[op.source] < op.divided) {
        return {0, beta};
    }
    PrimeField F(p);
    auto moved = beta.with(op.source, beta[op.source] - op.divided);
    moved = moved.with(op.target, moved[op.target] + op.divided);
    return {F.binomial(beta[op.target] + op.divided, op.divided), moved};
}

ElementaryExpr polarize_expr(const ElementaryExpr &expr, const PolarizationOp &op)
{
    const auto p = expr.field().characteristic();
    const auto &F = expr.field();
    if (op.source == op.target) {
        throw std::invalid_argument("polarization needs distinct source and target columns");
    }
    ElementaryExpr out(p);
    if (op.divided == 0) {
        return expr;
    }
    for (const auto &[prod, coeff] : expr.terms()) {
        ElementaryExpr::Product cur(prod.size());
        auto distribute = [&](auto &&self, std::size_t k, std::uint32_t left, Coeff c) -> void {
            if (c == 0) {
                return;
            }
            if (k == prod.size()) {
                if (left == 0) {
                    out.add_term(cur, F.mul(c, coeff));
                }
                return;
            }
            const std::uint32_t cap = std::min<std::uint32_t>(left, prod[k][op.source]);
            for (std::uint32_t i = 0; i <= cap; ++i) {
                auto [g, moved] = polarize_generator(prod[k], PolarizationOp{op.source, op.target, i}, p);
                cur[k] = std::move(moved);
                self(self, k + 1, left - i, F.mul(c, g));
            }
        };
        distribute(distribute, 0, op.divided, 1);
    }
    return out;
}

bool validate_polarization_closed_form(std::uint32_t p, std::size_t width)
{
    for (std::uint64_t d = 1; d <= p; ++d) {
        for (const auto &beta : tuples_of_degree(d, width)) {
            const auto e = elementary(beta, p, width);
            for (std::size_t a = 0; a < width; ++a) {
                for (std::size_t b = 0; b < width; ++b) {
                    if (a == b) {
                        continue;
                    }
                    for (std::uint32_t i = 0; i <= p; ++i) {
                        PolarizationOp op{a, b, i};
                        auto [c, moved] = polarize_generator(beta, op, p);
                        Poly expected = c == 0 ? Poly(e.shape()) : elementary(moved, p, width).scaled(c);
                        if (polarize(e, op) != expected) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

FlattenStep flatten_tuple(const ExpTuple &alpha, std::size_t column, std::uint32_t p)
{
    const auto v = alpha[column];
    const auto i = v % p;
    if (i == 0) {
        throw std::invalid_argument(fmt::format("flatten: entry {} of {} is divisible by p = {}, nothing to flatten",
                                                column + 1, alpha.to_string(), p));
    }
    FlattenStep step{alpha, {}, column, i, false};
    if (alpha[column + 1] != 0) {
        auto e = alpha.entries();
        e.insert(e.begin() + static_cast<std::ptrdiff_t>(column) + 1, 0);
        step.source = ExpTuple(std::move(e));
        step.shifted = true;
    }
    step.target = step.source.with(column, v - i).with(column + 1, i);
    return step;
}

Poly realize_flatten(const FlattenStep &step, std::uint32_t p, std::size_t width)
{
    return polarize(power_sum(step.source, p, width), PolarizationOp{step.column, step.column + 1, step.moved});
}

Poly frobenius_split(const Poly &f)
{
    if (!is_invariant(f)) {
        throw std::invalid_argument("frobenius_split: argument is not row-permutation invariant");
    }
    const auto p = f.shape().p();
    Poly out(f.shape());
    for (const auto &t : f.terms()) {
        // Coordinates in the orbit-sum basis sit on the orbit representatives.
        if (!t.mono.is_orbit_representative() || !t.mono.divisible_by(p)) {
            continue;
        }
        // Over GF(p) the p-th root of a coefficient is itself.
        out.add_scaled(orbit_sum(f.shape(), t.mono.exact_root(p)), t.coeff);
    }
    return out;
}

} // namespace msym
