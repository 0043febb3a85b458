#include <multisym/symmetric.hpp>

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace msym
{

namespace
{

using Row = std::vector<Monomial::exponent_type>;

std::vector<Row> rows_of(const Monomial &m)
{
    std::vector<Row> rs;
    rs.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto rw = m.row(r);
        rs.emplace_back(rw.begin(), rw.end());
    }
    return rs;
}

Monomial from_rows(const std::vector<Row> &rs, std::size_t width)
{
    Monomial::storage e;
    e.reserve(rs.size() * width);
    for (const auto &r : rs) {
        e.insert(e.end(), r.begin(), r.end());
    }
    return Monomial(rs.size(), width, std::move(e));
}

void check_width(const ExpTuple &alpha, std::size_t width, const char *what)
{
    if (alpha.length() > width) {
        throw std::invalid_argument(
            fmt::format("{}: tuple {} has length {} > width {}", what, alpha.to_string(), alpha.length(), width));
    }
}

} // namespace

Poly orbit_sum(const Shape &shape, const Monomial &m)
{
    if (m.rows() != shape.rows || m.width() != shape.width) {
        throw std::invalid_argument("orbit_sum: monomial layout does not match " + to_string(shape));
    }
    auto rs = rows_of(m);
    std::sort(rs.begin(), rs.end());
    std::vector<Term> terms;
    do {
        terms.push_back({from_rows(rs, shape.width), 1});
    } while (std::next_permutation(rs.begin(), rs.end()));
    return Poly::from_terms(shape, std::move(terms));
}

std::uint64_t orbit_size(const Monomial &m)
{
    auto rs = rows_of(m);
    std::sort(rs.begin(), rs.end());
    // Multinomial n! / prod(k_i!) over runs of equal rows.
    std::uint64_t size = 1;
    std::uint64_t placed = 0;
    for (std::size_t i = 0; i < rs.size();) {
        std::size_t j = i;
        while (j < rs.size() && rs[j] == rs[i]) {
            ++j;
        }
        for (std::size_t k = 1; k <= j - i; ++k) {
            ++placed;
            size = size * placed / k;
        }
        i = j;
    }
    return size;
}

Monomial row_monomial(const Shape &shape, std::size_t row, const ExpTuple &alpha)
{
    check_width(alpha, shape.width, "row_monomial");
    Monomial m(shape.rows, shape.width);
    for (std::size_t c = 0; c < alpha.length(); ++c) {
        m.set(row, c, static_cast<Monomial::exponent_type>(alpha[c]));
    }
    return m;
}

Poly power_sum(const ExpTuple &alpha, std::uint32_t p, std::size_t width)
{
    check_width(alpha, width, "power_sum");
    auto shape = Shape::ring(p, width);
    if (alpha.is_zero()) {
        return Poly::constant(shape, p);
    }
    std::vector<Term> terms;
    for (std::size_t r = 0; r < shape.rows; ++r) {
        terms.push_back({row_monomial(shape, r, alpha), 1});
    }
    return Poly::from_terms(shape, std::move(terms));
}

Monomial elementary_representative(const Shape &shape, const ExpTuple &alpha)
{
    check_width(alpha, shape.width, "elementary");
    if (alpha.degree() > shape.rows) {
        throw std::invalid_argument(
            fmt::format("elementary: |{}| = {} exceeds p = {}", alpha.to_string(), alpha.degree(), shape.rows));
    }
    Monomial m(shape.rows, shape.width);
    std::size_t r = shape.rows;
    for (std::size_t c = 0; c < alpha.length(); ++c) {
        for (std::uint32_t k = 0; k < alpha[c]; ++k) {
            m.set(--r, c, 1);
        }
    }
    return m.orbit_representative();
}

Poly elementary(const ExpTuple &alpha, std::uint32_t p, std::size_t width)
{
    auto shape = Shape::ring(p, width);
    return orbit_sum(shape, elementary_representative(shape, alpha));
}

bool is_invariant(const Poly &f)
{
    const auto rows = f.shape().rows;
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (const auto &t : f.terms()) {
            if (f.coefficient(t.mono.swap_rows(r, r + 1)) != t.coeff) {
                return false;
            }
        }
    }
    return true;
}

// SymTensor

SymTensor::SymTensor(Poly body) : m_body(std::move(body))
{
    if (!is_invariant(m_body)) {
        throw std::invalid_argument("SymTensor body is not invariant under row permutations");
    }
}

SymTensor SymTensor::scaled(Coeff c) const
{
    return SymTensor(m_body.scaled(c), unchecked_tag{});
}

SymTensor operator+(const SymTensor &a, const SymTensor &b)
{
    return SymTensor(a.m_body + b.m_body, SymTensor::unchecked_tag{});
}

Shape single_row_shape(std::uint32_t p, std::size_t width)
{
    return Shape{PrimeField(p), 1, static_cast<std::uint16_t>(width)};
}

SymTensor gamma_unit(const PrimeField &field, std::size_t width)
{
    return gamma(0, Poly::one(Shape{field, 1, static_cast<std::uint16_t>(width)}));
}

SymTensor gamma(std::int64_t d, const Poly &s)
{
    if (d < 0) {
        throw std::invalid_argument("gamma: negative tensor degree");
    }
    if (s.shape().rows != 1) {
        throw std::invalid_argument("gamma: argument must use a single row of variables");
    }
    const auto width = s.shape().width;
    Shape out{s.field(), static_cast<std::uint16_t>(d), width};
    Poly acc = Poly::one(out);
    for (std::int64_t r = 0; r < d; ++r) {
        std::vector<Term> placed;
        placed.reserve(s.size());
        for (const auto &t : s.terms()) {
            Monomial m(out.rows, width);
            for (std::size_t c = 0; c < width; ++c) {
                m.set(static_cast<std::size_t>(r), c, t.mono(0, c));
            }
            placed.push_back({std::move(m), t.coeff});
        }
        acc *= Poly::from_terms(out, std::move(placed));
    }
    return SymTensor(std::move(acc), SymTensor::unchecked_tag{});
}

SymTensor shuffle(const SymTensor &x, const SymTensor &y)
{
    if (x.width() != y.width()) {
        throw std::invalid_argument(fmt::format("shuffle: width mismatch {} vs {}", x.width(), y.width()));
    }
    if (!(x.body().field() == y.body().field())) {
        throw std::invalid_argument("shuffle: tensors over different fields");
    }
    const std::size_t d = x.degree(), e = y.degree(), n = x.width();
    Shape out{x.body().field(), static_cast<std::uint16_t>(d + e), static_cast<std::uint16_t>(n)};

    // A (d, e)-shuffle is determined by the increasing positions taken by x's rows.
    std::vector<std::vector<std::size_t>> placements;
    std::vector<bool> mask(d + e, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
        std::vector<std::size_t> pos;
        pos.reserve(d + e);
        for (std::size_t k = 0; k < d + e; ++k) {
            if (mask[k]) {
                pos.push_back(k);
            }
        }
        for (std::size_t k = 0; k < d + e; ++k) {
            if (!mask[k]) {
                pos.push_back(k);
            }
        }
        placements.push_back(std::move(pos));
    } while (std::prev_permutation(mask.begin(), mask.end()));

    const auto &F = out.field;
    std::vector<Term> terms;
    terms.reserve(x.body().size() * y.body().size() * placements.size());
    for (const auto &tx : x.body().terms()) {
        for (const auto &ty : y.body().terms()) {
            Coeff c = F.mul(tx.coeff, ty.coeff);
            for (const auto &pos : placements) {
                Monomial m(d + e, n);
                for (std::size_t r = 0; r < d; ++r) {
                    for (std::size_t col = 0; col < n; ++col) {
                        m.set(pos[r], col, tx.mono(r, col));
                    }
                }
                for (std::size_t r = 0; r < e; ++r) {
                    for (std::size_t col = 0; col < n; ++col) {
                        m.set(pos[d + r], col, ty.mono(r, col));
                    }
                }
                terms.push_back({std::move(m), c});
            }
        }
    }
    return SymTensor(Poly::from_terms(out, std::move(terms)), SymTensor::unchecked_tag{});
}

Poly spread_over_rows(const Poly &f, std::uint32_t p)
{
    if (f.shape().rows != 1) {
        throw std::invalid_argument("spread_over_rows: argument must use a single row of variables");
    }
    auto shape = Shape::ring(p, f.shape().width);
    if (!(f.field() == shape.field)) {
        throw std::invalid_argument("spread_over_rows: field mismatch");
    }
    std::vector<Term> terms;
    terms.reserve(f.size() * p);
    for (const auto &t : f.terms()) {
        for (std::size_t r = 0; r < p; ++r) {
            terms.push_back({row_monomial(shape, r, t.mono.row_tuple(0)), t.coeff});
        }
    }
    return Poly::from_terms(shape, std::move(terms));
}

} // namespace msym
