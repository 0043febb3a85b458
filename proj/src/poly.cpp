#include <multisym/poly.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

namespace msym
{

Shape Shape::ring(std::uint32_t p, std::size_t width)
{
    return Shape{PrimeField(p), static_cast<std::uint16_t>(p), static_cast<std::uint16_t>(width)};
}

std::string to_string(const Shape &s)
{
    return fmt::format("GF({})[{}x{}]", s.p(), s.rows, s.width);
}

// Monomial

Monomial::Monomial(std::size_t rows, std::size_t width)
    : m_exps(rows * width, 0), m_rows(static_cast<std::uint16_t>(rows)), m_width(static_cast<std::uint16_t>(width))
{
}

Monomial::Monomial(std::size_t rows, std::size_t width, storage exps)
    : m_exps(std::move(exps)), m_rows(static_cast<std::uint16_t>(rows)), m_width(static_cast<std::uint16_t>(width))
{
    if (m_exps.size() != rows * width) {
        throw std::invalid_argument("exponent vector does not match the monomial layout");
    }
    for (auto e : m_exps) {
        m_degree += e;
    }
}

void Monomial::set(std::size_t r, std::size_t c, exponent_type e)
{
    if (r >= m_rows || c >= m_width) {
        throw std::out_of_range(fmt::format("variable x[{},{}] outside the {}x{} matrix", r + 1, c + 1, m_rows, m_width));
    }
    auto &slot = m_exps[r * m_width + c];
    m_degree = m_degree - slot + e;
    slot = e;
}

ExpTuple Monomial::column_degrees() const
{
    std::vector<ExpTuple::value_type> cols(m_width, 0);
    for (std::size_t r = 0; r < m_rows; ++r) {
        for (std::size_t c = 0; c < m_width; ++c) {
            cols[c] += m_exps[r * m_width + c];
        }
    }
    return ExpTuple(std::move(cols));
}

ExpTuple Monomial::row_tuple(std::size_t r) const
{
    auto rw = row(r);
    return ExpTuple(std::vector<ExpTuple::value_type>(rw.begin(), rw.end()));
}

bool Monomial::divisible_by(std::uint32_t q) const noexcept
{
    return std::all_of(m_exps.begin(), m_exps.end(), [q](auto e) { return e % q == 0; });
}

Monomial Monomial::exact_root(std::uint32_t q) const
{
    storage e(m_exps);
    for (auto &v : e) {
        v = static_cast<exponent_type>(v / q);
    }
    return Monomial(m_rows, m_width, std::move(e));
}

bool Monomial::divides(const Monomial &other) const noexcept
{
    if (m_degree > other.m_degree) {
        return false;
    }
    for (std::size_t i = 0; i < m_exps.size(); ++i) {
        if (m_exps[i] > other.m_exps[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::orbit_representative() const
{
    if (m_rows <= 1 || m_width == 0) {
        return *this;
    }
    std::vector<std::span<const exponent_type>> rs;
    rs.reserve(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r) {
        rs.push_back(row(r));
    }
    std::sort(rs.begin(), rs.end(),
              [](auto a, auto b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); });
    Monomial out(*this);
    for (std::size_t r = 0; r < m_rows; ++r) {
        std::copy(rs[r].begin(), rs[r].end(), out.m_exps.begin() + r * m_width);
    }
    return out;
}

bool Monomial::is_orbit_representative() const noexcept
{
    for (std::size_t r = 1; r < m_rows; ++r) {
        auto a = row(r - 1), b = row(r);
        if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::swap_rows(std::size_t a, std::size_t b) const
{
    Monomial out(*this);
    for (std::size_t c = 0; c < m_width; ++c) {
        std::swap(out.m_exps[a * m_width + c], out.m_exps[b * m_width + c]);
    }
    return out;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial out(a);
    for (std::size_t i = 0; i < out.m_exps.size(); ++i) {
        std::uint32_t s = std::uint32_t(a.m_exps[i]) + b.m_exps[i];
        if (s > std::numeric_limits<Monomial::exponent_type>::max()) {
            throw std::overflow_error("monomial exponent overflow");
        }
        out.m_exps[i] = static_cast<Monomial::exponent_type>(s);
    }
    out.m_degree = a.m_degree + b.m_degree;
    return out;
}

Monomial operator/(const Monomial &a, const Monomial &b)
{
    Monomial out(a);
    for (std::size_t i = 0; i < out.m_exps.size(); ++i) {
        out.m_exps[i] = static_cast<Monomial::exponent_type>(a.m_exps[i] - b.m_exps[i]);
    }
    out.m_degree = a.m_degree - b.m_degree;
    return out;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) noexcept
{
    if (auto c = a.m_degree <=> b.m_degree; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.m_exps.begin(), a.m_exps.end(), b.m_exps.begin(),
                                                  b.m_exps.end());
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto e : m_exps) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

// Poly

namespace
{

void canonicalize(std::vector<Term> &terms, const PrimeField &field)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.mono > b.mono; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Coeff c = 0;
        std::size_t j = i;
        for (; j < terms.size() && terms[j].mono == terms[i].mono; ++j) {
            c = field.add(c, terms[j].coeff % field.characteristic());
        }
        if (c != 0) {
            if (out != i) {
                terms[out].mono = std::move(terms[i].mono);
            }
            terms[out].coeff = c;
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

} // namespace

Poly::Poly(Shape shape) : m_shape(shape) {}

Poly Poly::constant(Shape shape, Coeff c)
{
    Poly out(shape);
    c %= shape.p();
    if (c != 0) {
        out.m_terms.push_back({Monomial(shape.rows, shape.width), c});
    }
    return out;
}

Poly Poly::variable(Shape shape, std::size_t row, std::size_t column)
{
    Monomial m(shape.rows, shape.width);
    m.set(row, column, 1);
    return monomial(shape, std::move(m));
}

Poly Poly::monomial(Shape shape, Monomial m, Coeff c)
{
    if (m.rows() != shape.rows || m.width() != shape.width) {
        throw std::invalid_argument("monomial layout does not match " + msym::to_string(shape));
    }
    Poly out(shape);
    c %= shape.p();
    if (c != 0) {
        out.m_terms.push_back({std::move(m), c});
    }
    return out;
}

Poly Poly::from_terms(Shape shape, std::vector<Term> terms)
{
    for (const auto &t : terms) {
        if (t.mono.rows() != shape.rows || t.mono.width() != shape.width) {
            throw std::invalid_argument("monomial layout does not match " + msym::to_string(shape));
        }
    }
    canonicalize(terms, shape.field);
    Poly out(shape);
    out.m_terms = std::move(terms);
    return out;
}

Poly Poly::from_sorted_terms(Shape shape, std::vector<Term> terms)
{
    Poly out(shape);
    out.m_terms = std::move(terms);
    return out;
}

const Term &Poly::leading() const
{
    if (m_terms.empty()) {
        throw std::domain_error("zero polynomial has no leading term");
    }
    return m_terms.front();
}

Coeff Poly::coefficient(const Monomial &m) const noexcept
{
    auto it = std::lower_bound(m_terms.begin(), m_terms.end(), m,
                               [](const Term &t, const Monomial &key) { return t.mono > key; });
    return it != m_terms.end() && it->mono == m ? it->coeff : 0;
}

std::optional<std::uint64_t> Poly::homogeneous_degree() const
{
    if (m_terms.empty()) {
        return std::nullopt;
    }
    // Graded order: first and last term bracket all degrees.
    auto d = m_terms.front().mono.degree();
    if (m_terms.back().mono.degree() != d) {
        return std::nullopt;
    }
    return d;
}

std::optional<ExpTuple> Poly::multidegree() const
{
    if (m_terms.empty()) {
        return std::nullopt;
    }
    auto d = m_terms.front().mono.column_degrees();
    for (const auto &t : m_terms) {
        if (t.mono.column_degrees() != d) {
            return std::nullopt;
        }
    }
    return d;
}

std::vector<std::pair<ExpTuple, Poly>> Poly::multigraded_components() const
{
    std::vector<std::pair<ExpTuple, std::vector<Term>>> buckets;
    for (const auto &t : m_terms) {
        auto key = t.mono.column_degrees();
        auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto &b) { return b.first == key; });
        if (it == buckets.end()) {
            buckets.emplace_back(std::move(key), std::vector<Term>{t});
        } else {
            it->second.push_back(t);
        }
    }
    std::sort(buckets.begin(), buckets.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<std::pair<ExpTuple, Poly>> out;
    out.reserve(buckets.size());
    for (auto &[key, terms] : buckets) {
        // Subsequences of a canonical list stay canonical.
        out.emplace_back(key, from_sorted_terms(m_shape, std::move(terms)));
    }
    return out;
}

void Poly::check_compatible(const Poly &other, const char *op) const
{
    if (!(m_shape == other.m_shape)) {
        throw std::invalid_argument(fmt::format("{}: operands live in different rings {} and {}", op,
                                                msym::to_string(m_shape), msym::to_string(other.m_shape)));
    }
}

Poly Poly::operator-() const
{
    Poly out(*this);
    for (auto &t : out.m_terms) {
        t.coeff = m_shape.field.neg(t.coeff);
    }
    return out;
}

void Poly::add_scaled(const Poly &other, Coeff c)
{
    check_compatible(other, "add");
    c %= m_shape.p();
    if (c == 0 || other.is_zero()) {
        return;
    }
    const auto &F = m_shape.field;
    std::vector<Term> out;
    out.reserve(m_terms.size() + other.m_terms.size());
    auto i = m_terms.begin();
    auto j = other.m_terms.begin();
    while (i != m_terms.end() || j != other.m_terms.end()) {
        if (j == other.m_terms.end() || (i != m_terms.end() && i->mono > j->mono)) {
            out.push_back(std::move(*i));
            ++i;
        } else if (i == m_terms.end() || j->mono > i->mono) {
            out.push_back({j->mono, F.mul(j->coeff, c)});
            ++j;
        } else {
            auto s = F.add(i->coeff, F.mul(j->coeff, c));
            if (s != 0) {
                out.push_back({std::move(i->mono), s});
            }
            ++i;
            ++j;
        }
    }
    m_terms = std::move(out);
}

Poly &Poly::operator+=(const Poly &other)
{
    add_scaled(other, 1);
    return *this;
}

Poly &Poly::operator-=(const Poly &other)
{
    add_scaled(other, m_shape.field.neg(1));
    return *this;
}

Poly Poly::scaled(Coeff c) const
{
    c %= m_shape.p();
    Poly out(m_shape);
    if (c == 0) {
        return out;
    }
    out.m_terms = m_terms;
    for (auto &t : out.m_terms) {
        t.coeff = m_shape.field.mul(t.coeff, c);
    }
    return out;
}

Poly operator*(const Poly &a, const Poly &b)
{
    a.check_compatible(b, "mul");
    const auto &F = a.field();
    if (a.is_zero() || b.is_zero()) {
        return Poly(a.shape());
    }
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    std::vector<Term> terms;
    if (small.size() == 1) {
        // Multiplying by a monomial preserves the order.
        const auto &s = small.m_terms.front();
        terms.reserve(large.size());
        for (const auto &t : large.m_terms) {
            terms.push_back({t.mono * s.mono, F.mul(t.coeff, s.coeff)});
        }
        return Poly::from_sorted_terms(a.shape(), std::move(terms));
    }
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(small.size() * large.size());
    for (const auto &s : small.m_terms) {
        for (const auto &t : large.m_terms) {
            auto &slot = acc[s.mono * t.mono];
            slot = F.add(slot, F.mul(s.coeff, t.coeff));
        }
    }
    terms.reserve(acc.size());
    for (auto &[m, c] : acc) {
        if (c != 0) {
            terms.push_back({m, c});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return x.mono > y.mono; });
    return Poly::from_sorted_terms(a.shape(), std::move(terms));
}

Poly &Poly::operator*=(const Poly &other)
{
    *this = *this * other;
    return *this;
}

std::string Poly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t k = 0; k < m_terms.size(); ++k) {
        const auto &t = m_terms[k];
        if (k != 0) {
            s += " + ";
        }
        s += std::to_string(t.coeff);
        if (!t.mono.is_one()) {
            s += " *";
            for (std::size_t r = 0; r < t.mono.rows(); ++r) {
                for (std::size_t c = 0; c < t.mono.width(); ++c) {
                    if (auto e = t.mono(r, c); e != 0) {
                        s += fmt::format(" x[{},{}]^{}", r + 1, c + 1, e);
                    }
                }
            }
        }
    }
    return s;
}

nlohmann::json Poly::to_json() const
{
    auto arr = nlohmann::json::array();
    for (const auto &t : m_terms) {
        auto exps = nlohmann::json::array();
        for (std::size_t r = 0; r < t.mono.rows(); ++r) {
            for (std::size_t c = 0; c < t.mono.width(); ++c) {
                if (auto e = t.mono(r, c); e != 0) {
                    exps.push_back({r + 1, c + 1, e});
                }
            }
        }
        arr.push_back({{"coeff", t.coeff}, {"exponents", std::move(exps)}});
    }
    return arr;
}

Poly Poly::from_json(Shape shape, const nlohmann::json &j)
{
    std::vector<Term> terms;
    for (const auto &rec : j) {
        Monomial m(shape.rows, shape.width);
        for (const auto &e : rec.at("exponents")) {
            auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
            if (r == 0 || c == 0) {
                throw std::invalid_argument("JSON polynomial uses 1-based indices");
            }
            m.set(r - 1, c - 1, e.at(2).get<Monomial::exponent_type>());
        }
        terms.push_back({std::move(m), shape.field.from_int(rec.at("coeff").get<std::int64_t>())});
    }
    return from_terms(shape, std::move(terms));
}

Poly add(const Poly &f, const Poly &g)
{
    return f + g;
}

Poly mul(const Poly &f, const Poly &g)
{
    return f * g;
}

Poly pow(const Poly &f, std::uint64_t e)
{
    Poly result = Poly::one(f.shape());
    Poly base = f;
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Poly frobenius(const Poly &f)
{
    const auto p = f.shape().p();
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto &t : f.terms()) {
        Monomial::storage e(t.mono.exponents().begin(), t.mono.exponents().end());
        for (auto &v : e) {
            if (std::uint32_t(v) * p > std::numeric_limits<Monomial::exponent_type>::max()) {
                throw std::overflow_error("monomial exponent overflow in frobenius");
            }
            v = static_cast<Monomial::exponent_type>(v * p);
        }
        terms.push_back({Monomial(t.mono.rows(), t.mono.width(), std::move(e)), t.coeff});
    }
    // Scaling every exponent by p is strictly monotone for graded lex.
    return Poly::from_sorted_terms(f.shape(), std::move(terms));
}

Poly widen(const Poly &f, std::size_t width)
{
    if (width < f.shape().width) {
        throw std::invalid_argument("widen: target width is smaller than the current width");
    }
    std::vector<std::size_t> perm(f.shape().width);
    for (std::size_t c = 0; c < perm.size(); ++c) {
        perm[c] = c;
    }
    return permute_columns(f, perm, width);
}

Poly permute_columns(const Poly &f, std::span<const std::size_t> perm, std::size_t new_width)
{
    const auto &s = f.shape();
    if (perm.size() != s.width) {
        throw std::invalid_argument("column map must cover every column");
    }
    for (auto c : perm) {
        if (c >= new_width) {
            throw std::out_of_range("column map points outside the target width");
        }
    }
    Shape out_shape{s.field, s.rows, static_cast<std::uint16_t>(new_width)};
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto &t : f.terms()) {
        Monomial m(s.rows, new_width);
        for (std::size_t r = 0; r < s.rows; ++r) {
            for (std::size_t c = 0; c < s.width; ++c) {
                if (auto e = t.mono(r, c); e != 0) {
                    m.set(r, perm[c], static_cast<Monomial::exponent_type>(m(r, perm[c]) + e));
                }
            }
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(out_shape, std::move(terms));
}

Poly permute_rows(const Poly &f, std::span<const std::size_t> perm)
{
    const auto &s = f.shape();
    if (perm.size() != s.rows) {
        throw std::invalid_argument("row permutation must cover every row");
    }
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto &t : f.terms()) {
        Monomial m(s.rows, s.width);
        for (std::size_t r = 0; r < s.rows; ++r) {
            for (std::size_t c = 0; c < s.width; ++c) {
                m.set(perm[r], c, t.mono(r, c));
            }
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(s, std::move(terms));
}

} // namespace msym
