#include <multisym/membership.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

#include <fmt/format.h>

#include <multisym/errors.hpp>
#include <multisym/operators.hpp>
#include <multisym/symmetric.hpp>

namespace msym
{

namespace
{

using Row = std::vector<Monomial::exponent_type>;

// All vectors v <= bound componentwise, ascending lexicographically.
std::vector<Row> dominated_rows(const ExpTuple &bound, std::size_t width)
{
    std::vector<Row> out;
    Row cur(width, 0);
    auto rec = [&](auto &&self, std::size_t c) -> void {
        if (c == width) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= bound[c]; ++v) {
            cur[c] = static_cast<Monomial::exponent_type>(v);
            self(self, c + 1);
        }
        cur[c] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<ExpTuple> sub_multidegrees(const ExpTuple &bound)
{
    std::vector<ExpTuple> out;
    for (const auto &r : dominated_rows(bound, bound.length())) {
        out.emplace_back(std::vector<ExpTuple::value_type>(r.begin(), r.end()));
    }
    return out;
}

} // namespace

std::vector<Monomial> orbit_representatives(const Shape &shape, const ExpTuple &multidegree)
{
    const std::size_t width = shape.width, rows = shape.rows;
    if (multidegree.length() > width) {
        throw std::invalid_argument("multidegree " + multidegree.to_string() + " exceeds width "
                                    + std::to_string(width));
    }
    std::vector<Monomial> out;
    if (rows == 0) {
        if (multidegree.is_zero()) {
            out.emplace_back(0, width);
        }
        return out;
    }
    const auto candidates = dominated_rows(multidegree, width);
    std::vector<std::size_t> chosen(rows, 0);
    Row remaining(width);
    for (std::size_t c = 0; c < width; ++c) {
        remaining[c] = static_cast<Monomial::exponent_type>(multidegree[c]);
    }
    // Rows are chosen in ascending order, so every multiset is produced once
    // and in its orbit-minimal arrangement.
    auto rec = [&](auto &&self, std::size_t r, std::size_t min_index) -> void {
        if (r + 1 == rows) {
            auto it = std::lower_bound(candidates.begin(), candidates.end(), remaining);
            if (it != candidates.end() && *it == remaining
                && static_cast<std::size_t>(it - candidates.begin()) >= min_index) {
                chosen[r] = static_cast<std::size_t>(it - candidates.begin());
                Monomial::storage e;
                for (auto idx : chosen) {
                    e.insert(e.end(), candidates[idx].begin(), candidates[idx].end());
                }
                out.emplace_back(rows, width, std::move(e));
            }
            return;
        }
        for (std::size_t idx = min_index; idx < candidates.size(); ++idx) {
            const auto &v = candidates[idx];
            bool fits = true;
            for (std::size_t c = 0; c < width; ++c) {
                if (v[c] > remaining[c]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) {
                continue;
            }
            chosen[r] = idx;
            for (std::size_t c = 0; c < width; ++c) {
                remaining[c] = static_cast<Monomial::exponent_type>(remaining[c] - v[c]);
            }
            self(self, r + 1, idx);
            for (std::size_t c = 0; c < width; ++c) {
                remaining[c] = static_cast<Monomial::exponent_type>(remaining[c] + v[c]);
            }
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

std::vector<ExpTuple> multidegrees(std::uint64_t degree, std::size_t width)
{
    return tuples_of_degree(degree, width);
}

// EchelonComponent

EchelonComponent::EchelonComponent(Shape shape, ExpTuple multidegree, std::size_t cap)
    : m_shape(shape), m_multidegree(std::move(multidegree)), m_columns(orbit_representatives(shape, m_multidegree))
{
    if (m_columns.size() > cap) {
        throw CapExceeded(fmt::format("piece {} of {} has {} basis elements, above the cap {}",
                                      m_multidegree.to_string(), to_string(shape), m_columns.size(), cap));
    }
    m_index.reserve(m_columns.size());
    for (std::size_t j = 0; j < m_columns.size(); ++j) {
        m_index.emplace(m_columns[j], j);
    }
    if (m_columns.empty()) {
        m_full = true;
    }
}

std::vector<Coeff> EchelonComponent::coordinates(const Poly &f) const
{
    std::vector<Coeff> v(m_columns.size(), 0);
    for (const auto &t : f.terms()) {
        if (!t.mono.is_orbit_representative()) {
            continue;
        }
        auto it = m_index.find(t.mono);
        if (it == m_index.end()) {
            throw std::invalid_argument("polynomial has terms outside multidegree " + m_multidegree.to_string());
        }
        v[it->second] = t.coeff;
    }
    return v;
}

std::vector<Coeff> EchelonComponent::product_coordinates(const Poly &a, const Poly &b) const
{
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    const auto &F = m_shape.field;
    std::vector<Coeff> v(m_columns.size(), 0);
    for (std::size_t j = 0; j < m_columns.size(); ++j) {
        const auto &m = m_columns[j];
        Coeff acc = 0;
        for (const auto &t : small.terms()) {
            if (t.mono.divides(m)) {
                if (auto c = large.coefficient(m / t.mono); c != 0) {
                    acc = F.add(acc, F.mul(c, t.coeff));
                }
            }
        }
        v[j] = acc;
    }
    return v;
}

std::vector<Coeff> EchelonComponent::orbit_product_coordinates(const Monomial &a, const Monomial &b) const
{
    const auto orbit = orbit_sum(m_shape, a);
    const auto p = m_shape.p();
    std::vector<Coeff> v(m_columns.size(), 0);
    for (std::size_t j = 0; j < m_columns.size(); ++j) {
        const auto &m = m_columns[j];
        std::uint32_t count = 0;
        for (const auto &t : orbit.terms()) {
            if (t.mono.divides(m) && (m / t.mono).orbit_representative() == b) {
                ++count;
            }
        }
        v[j] = count % p;
    }
    return v;
}

bool EchelonComponent::insert(std::vector<Coeff> v)
{
    if (m_full) {
        return false;
    }
    const auto &F = m_shape.field;
    const auto p = F.characteristic();
    const std::size_t n = m_columns.size();
    for (std::size_t k = 0; k < m_rows.size(); ++k) {
        const Coeff c = v[m_pivots[k]];
        if (c == 0) {
            continue;
        }
        const Coeff negc = F.neg(c);
        const auto &row = m_rows[k];
        for (std::size_t j = m_pivots[k]; j < n; ++j) {
            if (row[j] != 0) {
                v[j] = (v[j] + negc * row[j]) % p;
            }
        }
    }
    std::size_t lead = 0;
    while (lead < n && v[lead] == 0) {
        ++lead;
    }
    if (lead == n) {
        return false;
    }
    const Coeff inv = F.inv(v[lead]);
    std::vector<std::uint8_t> fresh(n, 0);
    for (std::size_t j = lead; j < n; ++j) {
        fresh[j] = static_cast<std::uint8_t>(F.mul(v[j], inv));
    }
    for (std::size_t k = 0; k < m_rows.size(); ++k) {
        auto &row = m_rows[k];
        const Coeff c = row[lead];
        if (c == 0) {
            continue;
        }
        const Coeff negc = F.neg(c);
        for (std::size_t j = lead; j < n; ++j) {
            if (fresh[j] != 0) {
                row[j] = static_cast<std::uint8_t>((row[j] + negc * fresh[j]) % p);
            }
        }
    }
    auto pos = std::lower_bound(m_pivots.begin(), m_pivots.end(), lead) - m_pivots.begin();
    m_pivots.insert(m_pivots.begin() + pos, lead);
    m_rows.insert(m_rows.begin() + pos, std::move(fresh));
    if (m_rows.size() == n) {
        set_full();
    }
    return true;
}

std::optional<std::vector<std::pair<std::size_t, Coeff>>> EchelonComponent::reduce(std::vector<Coeff> v) const
{
    std::vector<std::pair<std::size_t, Coeff>> coords;
    if (m_full) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) {
                coords.emplace_back(j, v[j]);
            }
        }
        return coords;
    }
    const auto &F = m_shape.field;
    const auto p = F.characteristic();
    for (std::size_t k = 0; k < m_rows.size(); ++k) {
        const Coeff c = v[m_pivots[k]];
        if (c == 0) {
            continue;
        }
        coords.emplace_back(k, c);
        const Coeff negc = F.neg(c);
        const auto &row = m_rows[k];
        for (std::size_t j = m_pivots[k]; j < v.size(); ++j) {
            if (row[j] != 0) {
                v[j] = (v[j] + negc * row[j]) % p;
            }
        }
    }
    if (std::any_of(v.begin(), v.end(), [](Coeff c) { return c != 0; })) {
        return std::nullopt;
    }
    return coords;
}

std::vector<Coeff> EchelonComponent::row(std::size_t k) const
{
    std::vector<Coeff> v(m_columns.size(), 0);
    if (m_full) {
        v.at(k) = 1;
        return v;
    }
    const auto &r = m_rows.at(k);
    std::copy(r.begin(), r.end(), v.begin());
    return v;
}

std::size_t EchelonComponent::pivot(std::size_t k) const
{
    return m_full ? k : m_pivots.at(k);
}

Poly EchelonComponent::expand(const std::vector<Coeff> &v) const
{
    Poly out(m_shape);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) {
            out.add_scaled(orbit_sum(m_shape, m_columns[j]), v[j]);
        }
    }
    return out;
}

void EchelonComponent::set_full()
{
    m_full = true;
    m_rows.clear();
    m_rows.shrink_to_fit();
    m_pivots.clear();
}

// SpanBasis

SpanBasis::SpanBasis(Shape shape, std::uint64_t degree, std::size_t cap)
    : m_shape(shape), m_degree(degree), m_cap(cap)
{
}

std::size_t SpanBasis::dimension() const noexcept
{
    std::size_t d = 0;
    for (const auto &[key, comp] : m_components) {
        d += comp.rank();
    }
    return d;
}

std::size_t SpanBasis::ambient_dimension() const noexcept
{
    std::size_t d = 0;
    for (const auto &[key, comp] : m_components) {
        d += comp.columns();
    }
    return d;
}

void SpanBasis::restrict_to(ExpTuple multidegree)
{
    if (multidegree.degree() != m_degree) {
        throw std::invalid_argument("restriction " + multidegree.to_string() + " is not of degree "
                                    + std::to_string(m_degree));
    }
    for (const auto &[key, comp] : m_components) {
        if (key != multidegree) {
            throw std::logic_error("cannot restrict a basis that already has other components");
        }
    }
    m_restriction = std::move(multidegree);
}

void SpanBasis::check_cap() const
{
    if (ambient_dimension() > m_cap) {
        throw CapExceeded(fmt::format("span in degree {} covers {} basis elements, above the cap {}", m_degree,
                                      ambient_dimension(), m_cap));
    }
}

EchelonComponent &SpanBasis::component(const ExpTuple &multidegree)
{
    auto it = m_components.find(multidegree);
    if (it != m_components.end()) {
        return it->second;
    }
    if (multidegree.degree() != m_degree) {
        throw std::invalid_argument("multidegree " + multidegree.to_string() + " is not of degree "
                                    + std::to_string(m_degree));
    }
    if (m_restriction && *m_restriction != multidegree) {
        throw std::invalid_argument("basis is restricted to multidegree " + m_restriction->to_string());
    }
    it = m_components.emplace(multidegree, EchelonComponent(m_shape, multidegree, m_cap)).first;
    check_cap();
    return it->second;
}

const EchelonComponent *SpanBasis::find_component(const ExpTuple &multidegree) const
{
    auto it = m_components.find(multidegree);
    return it == m_components.end() ? nullptr : &it->second;
}

void SpanBasis::set_component(EchelonComponent component)
{
    auto key = component.multidegree();
    if (key.degree() != m_degree) {
        throw std::invalid_argument("component degree does not match the basis");
    }
    if (m_restriction && *m_restriction != key) {
        throw std::invalid_argument("basis is restricted to multidegree " + m_restriction->to_string());
    }
    m_components.insert_or_assign(std::move(key), std::move(component));
    check_cap();
}

bool SpanBasis::insert(const Poly &f)
{
    if (f.is_zero()) {
        return false;
    }
    if (!(f.shape() == m_shape)) {
        throw std::invalid_argument("insert: polynomial lives in " + to_string(f.shape()) + ", basis in "
                                    + to_string(m_shape));
    }
    auto md = f.multidegree();
    if (!md) {
        throw std::invalid_argument("insert: polynomial is not multihomogeneous");
    }
    if (md->degree() != m_degree) {
        throw std::invalid_argument("insert: polynomial has degree " + std::to_string(md->degree())
                                    + ", basis degree " + std::to_string(m_degree));
    }
    if (!is_invariant(f)) {
        throw std::invalid_argument("insert: polynomial is not row-permutation invariant");
    }
    auto &comp = component(*md);
    return comp.insert(comp.coordinates(f));
}

void SpanBasis::insert_components(const Poly &f)
{
    for (const auto &[key, part] : f.multigraded_components()) {
        insert(part);
    }
}

std::optional<Coordinates> SpanBasis::contains(const Poly &f) const
{
    Coordinates coords;
    if (f.is_zero()) {
        return coords;
    }
    if (!(f.shape() == m_shape)) {
        throw std::invalid_argument("contains: polynomial lives in " + to_string(f.shape()) + ", basis in "
                                    + to_string(m_shape));
    }
    if (f.homogeneous_degree() != m_degree) {
        throw std::invalid_argument("contains: polynomial is not homogeneous of degree " + std::to_string(m_degree));
    }
    if (!is_invariant(f)) {
        return std::nullopt;
    }
    for (const auto &[key, part] : f.multigraded_components()) {
        if (m_restriction && *m_restriction != key) {
            throw std::invalid_argument("contains: basis only covers multidegree " + m_restriction->to_string()
                                        + ", polynomial has a component in " + key.to_string());
        }
        std::size_t offset = 0;
        const EchelonComponent *comp = nullptr;
        for (const auto &[k2, c2] : m_components) {
            if (k2 == key) {
                comp = &c2;
                break;
            }
            offset += c2.rank();
        }
        if (comp == nullptr) {
            return std::nullopt;
        }
        auto local = comp->reduce(comp->coordinates(part));
        if (!local) {
            return std::nullopt;
        }
        for (auto [k, c] : *local) {
            coords.emplace_back(offset + k, c);
        }
    }
    std::sort(coords.begin(), coords.end());
    return coords;
}

std::vector<Poly> SpanBasis::rows() const
{
    std::vector<Poly> out;
    for (const auto &[key, comp] : m_components) {
        for (std::size_t k = 0; k < comp.rank(); ++k) {
            out.push_back(comp.expand(comp.row(k)));
        }
    }
    return out;
}

std::vector<Monomial> SpanBasis::pivots() const
{
    std::vector<Monomial> out;
    for (const auto &[key, comp] : m_components) {
        for (std::size_t k = 0; k < comp.rank(); ++k) {
            out.push_back(comp.column_monomials()[comp.pivot(k)]);
        }
    }
    return out;
}

Poly SpanBasis::row(std::size_t k) const
{
    for (const auto &[key, comp] : m_components) {
        if (k < comp.rank()) {
            return comp.expand(comp.row(k));
        }
        k -= comp.rank();
    }
    throw std::out_of_range("row index beyond the basis dimension");
}

SpanBasis gamma_basis(std::uint32_t p, std::size_t width, std::uint64_t degree, std::size_t cap)
{
    SpanBasis basis(Shape::ring(p, width), degree, cap);
    for (const auto &md : multidegrees(degree, width)) {
        basis.component(md).set_full();
    }
    return basis;
}

std::optional<Coordinates> contains(const SpanBasis &basis, const Poly &f)
{
    return basis.contains(f);
}

// PAlgebra

PAlgebra::PAlgebra(std::uint32_t p, std::size_t width, std::size_t cap) : m_shape(Shape::ring(p, width)), m_cap(cap)
{
    for (std::uint64_t d = 1; d <= p; ++d) {
        for (auto &beta : tuples_of_degree(d, width)) {
            m_generator_polys.emplace(beta, elementary(beta, p, width));
            m_generators.push_back(std::move(beta));
        }
    }
}

PAlgebra::Piece &PAlgebra::piece(const ExpTuple &multidegree)
{
    if (auto it = m_pieces.find(multidegree); it != m_pieces.end()) {
        return it->second;
    }
    Piece fresh;
    fresh.echelon = std::make_unique<EchelonComponent>(m_shape, multidegree, m_cap);
    if (multidegree.is_zero()) {
        fresh.polys.push_back(Poly::one(m_shape));
        fresh.echelon->set_full();
        return m_pieces.emplace(multidegree, std::move(fresh)).first->second;
    }
    for (const auto &beta : m_generators) {
        if (fresh.echelon->full()) {
            break;
        }
        if (!dominated_by(beta, multidegree)) {
            continue;
        }
        const auto &sub = piece(multidegree - beta);
        const auto &gen = m_generator_polys.at(beta);
        for (const auto &g : sub.polys) {
            if (fresh.echelon->insert(fresh.echelon->product_coordinates(gen, g))) {
                fresh.polys.push_back(gen * g);
            }
            if (fresh.echelon->full()) {
                break;
            }
        }
    }
    return m_pieces.emplace(multidegree, std::move(fresh)).first->second;
}

const EchelonComponent &PAlgebra::component(const ExpTuple &multidegree)
{
    return *piece(multidegree).echelon;
}

const std::vector<Poly> &PAlgebra::spanning_polys(const ExpTuple &multidegree)
{
    return piece(multidegree).polys;
}

SpanBasis PAlgebra::span(std::uint64_t degree)
{
    SpanBasis basis(m_shape, degree, m_cap);
    for (const auto &md : multidegrees(degree, m_shape.width)) {
        basis.set_component(component(md));
    }
    return basis;
}

SpanBasis PAlgebra::span_at(const ExpTuple &multidegree)
{
    SpanBasis basis(m_shape, multidegree.degree(), m_cap);
    basis.restrict_to(multidegree);
    basis.set_component(component(multidegree));
    return basis;
}

SpanBasis p_algebra_span(std::uint32_t p, std::size_t width, std::uint64_t degree, std::size_t cap)
{
    PAlgebra algebra(p, width, cap);
    return algebra.span(degree);
}

// Square ideal

void fill_square_component(EchelonComponent &component)
{
    const auto &shape = component.shape();
    const auto &md = component.multidegree();
    for (const auto &left : sub_multidegrees(md)) {
        if (component.full()) {
            return;
        }
        if (left.is_zero() || left == md) {
            continue;
        }
        const auto right = md - left;
        if (right < left) {
            continue;
        }
        const auto reps_left = orbit_representatives(shape, left);
        const auto reps_right = orbit_representatives(shape, right);
        for (std::size_t a = 0; a < reps_left.size(); ++a) {
            for (std::size_t b = (left == right ? a : 0); b < reps_right.size(); ++b) {
                component.insert(component.orbit_product_coordinates(reps_left[a], reps_right[b]));
                if (component.full()) {
                    return;
                }
            }
        }
    }
}

std::size_t predicted_generator_count(std::uint32_t p, std::size_t width, std::uint64_t degree)
{
    std::size_t count = 0;
    for (const auto &alpha : tuples_of_degree(degree, width)) {
        const auto &e = alpha.entries();
        if (std::all_of(e.begin(), e.end(), [p](auto v) { return v < p; })) {
            ++count;
        }
    }
    if (degree == p) {
        count += width;
    }
    return count;
}

GradedDimReport square_ideal_quotient(std::uint32_t p, std::size_t width, std::uint64_t degree, std::size_t cap,
                                      PAlgebra *palgebra)
{
    if (degree == 0) {
        throw std::invalid_argument("square_ideal_quotient needs degree >= 1");
    }
    std::unique_ptr<PAlgebra> own;
    if (palgebra == nullptr) {
        own = std::make_unique<PAlgebra>(p, width, cap);
        palgebra = own.get();
    }
    const auto shape = Shape::ring(p, width);
    GradedDimReport report;
    report.p = p;
    report.width = width;
    report.degree = degree;
    report.predicted_count = predicted_generator_count(p, width, degree);
    report.predicted_basis = true;
    std::size_t total_columns = 0;
    for (const auto &md : multidegrees(degree, width)) {
        EchelonComponent square(shape, md, cap);
        total_columns += square.columns();
        if (total_columns > cap) {
            throw CapExceeded(fmt::format("degree {} has more than {} invariant basis elements", degree, cap));
        }
        fill_square_component(square);
        report.dim_gamma += square.columns();
        report.dim_square += square.rank();
        report.dim_p += palgebra->component(md).rank();

        // The predicted elements of this multidegree: M_md when every entry is
        // below p, and E_p(x_j) when md = p e_j.
        std::vector<Poly> predicted;
        const auto &e = md.entries();
        if (std::all_of(e.begin(), e.end(), [p](auto v) { return v < p; })) {
            predicted.push_back(power_sum(md, p, width));
        }
        if (md.length() >= 1 && md.degree() == p && md[md.length() - 1] == p) {
            predicted.push_back(elementary(md, p, width));
        }
        auto extended = square;
        std::size_t grew = 0;
        for (const auto &f : predicted) {
            grew += extended.insert(extended.coordinates(f)) ? 1 : 0;
        }
        if (grew != predicted.size() || extended.rank() != extended.columns()) {
            report.predicted_basis = false;
        }
    }
    report.dim_quotient = report.dim_gamma - report.dim_square;
    return report;
}

std::string csv_header()
{
    return "p,n,degree,dim_gamma,dim_P,dim_square,dim_quotient,predicted_count,match";
}

std::string to_csv_row(const GradedDimReport &r)
{
    return fmt::format("{},{},{},{},{},{},{},{},{}", r.p, r.width, r.degree, r.dim_gamma, r.dim_p, r.dim_square,
                       r.dim_quotient, r.predicted_count, r.match() ? "true" : "false");
}

// GL spans

namespace
{

void gl_closure(SpanBasis &basis, std::vector<Poly> seeds, const GlSpanOptions &options)
{
    std::deque<Poly> work;
    for (auto &s : seeds) {
        for (auto &[key, part] : s.multigraded_components()) {
            if (basis.insert(part)) {
                work.push_back(std::move(part));
            }
        }
    }
    const std::size_t width = basis.width();
    while (!work.empty()) {
        Poly h = std::move(work.front());
        work.pop_front();
        const auto md = *h.multidegree();
        auto offer = [&](Poly g) {
            if (!g.is_zero() && basis.insert(g)) {
                if (basis.dimension() > options.cap) {
                    throw CapExceeded(fmt::format("GL-span closure exceeded dimension cap {}", options.cap));
                }
                work.push_back(std::move(g));
            }
        };
        for (std::size_t a = 0; a < width; ++a) {
            for (std::size_t b = 0; b < width; ++b) {
                if (a == b) {
                    continue;
                }
                std::uint32_t top = md[a];
                if (options.max_divided != 0) {
                    top = std::min(top, options.max_divided);
                }
                for (std::uint32_t i = 1; i <= top; ++i) {
                    offer(polarize(h, PolarizationOp{a, b, i}));
                }
            }
        }
        if (options.column_permutations) {
            for (std::size_t a = 0; a < width; ++a) {
                for (std::size_t b = a + 1; b < width; ++b) {
                    std::vector<std::size_t> perm(width);
                    for (std::size_t c = 0; c < width; ++c) {
                        perm[c] = c;
                    }
                    std::swap(perm[a], perm[b]);
                    offer(permute_columns(h, perm, width));
                }
            }
        }
    }
}

} // namespace

SpanBasis gl_span(const Poly &f, const GlSpanOptions &options)
{
    auto degree = f.homogeneous_degree();
    if (!degree) {
        if (f.is_zero()) {
            return SpanBasis(f.shape(), 0, options.cap);
        }
        throw std::invalid_argument("gl_span: polynomial is not homogeneous");
    }
    SpanBasis basis(f.shape(), *degree, options.cap);
    gl_closure(basis, {f}, options);
    return basis;
}

GlSpanOptions proxy_gl_options(std::uint32_t p, std::size_t cap)
{
    return GlSpanOptions{p - 1, true, cap};
}

SpanBasis pth_power_generators(std::uint32_t p, std::size_t width, std::uint64_t k, std::size_t cap)
{
    SpanBasis basis(Shape::ring(p, width), p * k, cap);
    std::vector<Poly> seeds;
    for (const auto &alpha : tuples_of_degree(k, width)) {
        seeds.push_back(power_sum(alpha.scaled(p), p, width));
    }
    GlSpanOptions options;
    options.cap = cap;
    gl_closure(basis, std::move(seeds), options);
    return basis;
}

SpanBasis ideal_truncation_span(std::uint32_t p, std::size_t width, std::uint64_t generator_degree,
                                std::uint64_t target_degree, Cofactors cofactors,
                                const std::optional<ExpTuple> &multidegree, std::size_t cap, PAlgebra *palgebra)
{
    std::unique_ptr<PAlgebra> own;
    if (palgebra == nullptr) {
        own = std::make_unique<PAlgebra>(p, width, cap);
        palgebra = own.get();
    }
    SpanBasis result(Shape::ring(p, width), target_degree, cap);
    std::vector<ExpTuple> targets;
    if (multidegree) {
        result.restrict_to(*multidegree);
        targets.push_back(*multidegree);
    } else {
        targets = multidegrees(target_degree, width);
    }
    for (std::uint64_t k = 1; k <= generator_degree && p * k <= target_degree; ++k) {
        const auto generators = pth_power_generators(p, width, k, cap);
        for (const auto &[gen_md, gen_comp] : generators.components()) {
            std::vector<Poly> gens;
            for (std::size_t r = 0; r < gen_comp.rank(); ++r) {
                gens.push_back(gen_comp.expand(gen_comp.row(r)));
            }
            for (const auto &md : targets) {
                if (!dominated_by(gen_md, md)) {
                    continue;
                }
                auto &comp = result.component(md);
                const auto rest = md - gen_md;
                if (rest.is_zero()) {
                    if (cofactors == Cofactors::with_generators) {
                        for (const auto &g : gens) {
                            comp.insert(comp.coordinates(g));
                        }
                    }
                    continue;
                }
                for (const auto &g : gens) {
                    for (const auto &f : palgebra->spanning_polys(rest)) {
                        if (comp.full()) {
                            break;
                        }
                        comp.insert(comp.product_coordinates(g, f));
                    }
                }
            }
        }
    }
    // Touch every target so that untouched pieces read as zero, not unknown.
    for (const auto &md : targets) {
        result.component(md);
    }
    return result;
}

} // namespace msym
