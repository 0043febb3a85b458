#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace oracle
{

using msym::Coeff;
using msym::ExpTuple;
using msym::Monomial;
using msym::Poly;
using msym::Shape;
using msym::Term;

Poly naive_mul(const Poly &f, const Poly &g)
{
    const auto p = f.shape().p();
    std::map<std::vector<std::uint16_t>, std::uint64_t> acc;
    const auto rows = f.shape().rows, width = f.shape().width;
    for (const auto &a : f.terms()) {
        for (const auto &b : g.terms()) {
            std::vector<std::uint16_t> e(a.mono.exponents().begin(), a.mono.exponents().end());
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = static_cast<std::uint16_t>(e[k] + b.mono.exponents()[k]);
            }
            acc[e] = (acc[e] + std::uint64_t(a.coeff) * b.coeff) % p;
        }
    }
    std::vector<Term> terms;
    for (const auto &[e, c] : acc) {
        if (c != 0) {
            terms.push_back({Monomial(rows, width, Monomial::storage(e.begin(), e.end())), static_cast<Coeff>(c)});
        }
    }
    return Poly::from_terms(f.shape(), std::move(terms));
}

Poly elementary_by_extraction(const ExpTuple &alpha, std::uint32_t p, std::size_t width)
{
    const auto shape = Shape::ring(p, width);
    // Choose, for every row, either the constant 1 or one column c (contributing t_c x_{r,c}).
    Poly out(shape);
    std::vector<std::size_t> choice(p, 0);  // 0 = constant, c + 1 = column c
    while (true) {
        std::vector<std::uint32_t> count(width, 0);
        for (auto c : choice) {
            if (c > 0) {
                ++count[c - 1];
            }
        }
        bool match = true;
        for (std::size_t c = 0; c < width; ++c) {
            match = match && count[c] == alpha[c];
        }
        if (match && alpha.length() <= width) {
            Monomial m(p, width);
            for (std::size_t r = 0; r < p; ++r) {
                if (choice[r] > 0) {
                    m.set(r, choice[r] - 1, 1);
                }
            }
            out += Poly::monomial(shape, m);
        }
        std::size_t k = 0;
        while (k < p && choice[k] == width) {
            choice[k] = 0;
            ++k;
        }
        if (k == p) {
            break;
        }
        ++choice[k];
    }
    return out;
}

Poly power_sum_by_rows(const ExpTuple &alpha, std::uint32_t p, std::size_t width)
{
    const auto shape = Shape::ring(p, width);
    Poly out(shape);
    for (std::size_t r = 0; r < p; ++r) {
        Poly m = Poly::one(shape);
        for (std::size_t c = 0; c < width; ++c) {
            for (std::uint32_t k = 0; k < alpha[c]; ++k) {
                m = naive_mul(m, Poly::variable(shape, r, c));
            }
        }
        out += m;
    }
    return out;
}

namespace
{

std::int64_t mod(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t r = 1;
    for (std::int64_t k = 0; k < p - 2; ++k) {
        r = r * a % p;
    }
    return r;
}

} // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint32_t p)
{
    const std::int64_t q = p;
    for (auto &r : rows) {
        for (auto &v : r) {
            v = mod(v, q);
        }
    }
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const auto inv = inverse(rows[rank][c], q);
        for (auto &v : rows[rank]) {
            v = v * inv % q;
        }
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k != rank && rows[k][c] != 0) {
                const auto f = rows[k][c];
                for (std::size_t j = 0; j < cols; ++j) {
                    rows[k][j] = mod(rows[k][j] - f * rows[rank][j], q);
                }
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t poly_rank(const std::vector<Poly> &polys)
{
    if (polys.empty()) {
        return 0;
    }
    std::map<Monomial, std::size_t> index;
    for (const auto &f : polys) {
        for (const auto &t : f.terms()) {
            index.emplace(t.mono, 0);
        }
    }
    std::size_t k = 0;
    for (auto &[m, i] : index) {
        i = k++;
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto &f : polys) {
        std::vector<std::int64_t> r(index.size(), 0);
        for (const auto &t : f.terms()) {
            r[index.at(t.mono)] = t.coeff;
        }
        rows.push_back(std::move(r));
    }
    return rank_mod_p(std::move(rows), polys.front().shape().p());
}

bool newton_by_evaluation(std::uint32_t p, int (*sign)(std::uint32_t, std::uint32_t), int points)
{
    std::mt19937_64 rng(p * 7919u);
    std::uniform_int_distribution<int> draw(-4, 4);
    for (int k = 0; k < points; ++k) {
        std::vector<__int128> x(p), t(p);
        for (std::uint32_t j = 0; j < p; ++j) {
            x[j] = draw(rng);
            t[j] = draw(rng);
        }
        // e[m] = elementary symmetric polynomial of degree m in x.
        std::vector<__int128> e(p + 1, 0);
        e[0] = 1;
        for (std::uint32_t j = 0; j < p; ++j) {
            for (std::uint32_t m = j + 1; m >= 1; --m) {
                e[m] += e[m - 1] * x[j];
            }
        }
        auto tilde = [&](std::uint32_t r) {
            __int128 s = 0;
            for (std::uint32_t j = 0; j < p; ++j) {
                __int128 power = 1;
                for (std::uint32_t q = 0; q < r; ++q) {
                    power *= x[j];
                }
                s += t[j] * power;
            }
            return s;
        };
        __int128 rhs = 0;
        for (std::uint32_t i = 0; i < p; ++i) {
            rhs += sign(p, i) * e[p - i] * tilde(i);
        }
        if (tilde(p) != rhs) {
            return false;
        }
    }
    return true;
}

namespace
{

// GF(p^2) = GF(p)[w] / (w^2 - w - 1) for p = 2 and (w^2 + 1) for p = 3.
struct Gf2 {
    std::uint32_t p;
    using E = std::array<std::uint32_t, 2>;

    E add(E a, E b) const
    {
        return {(a[0] + b[0]) % p, (a[1] + b[1]) % p};
    }
    E mul(E a, E b) const
    {
        const std::uint32_t ac = a[0] * b[0], bd = a[1] * b[1], mid = a[0] * b[1] + a[1] * b[0];
        if (p == 2) {
            return {(ac + bd) % p, (mid + bd) % p};  // w^2 = w + 1
        }
        return {(ac + p * p - bd) % p, mid % p};  // w^2 = -1
    }
    E neg(E a) const
    {
        return {(p - a[0]) % p, (p - a[1]) % p};
    }
    E inv(E a) const
    {
        for (std::uint32_t u = 0; u < p; ++u) {
            for (std::uint32_t v = 0; v < p; ++v) {
                auto r = mul(a, {u, v});
                if (r[0] == 1 && r[1] == 0) {
                    return {u, v};
                }
            }
        }
        throw std::domain_error("no inverse");
    }
    std::vector<E> elements() const
    {
        std::vector<E> out;
        for (std::uint32_t u = 0; u < p; ++u) {
            for (std::uint32_t v = 0; v < p; ++v) {
                out.push_back({u, v});
            }
        }
        return out;
    }
};

using Exps = std::vector<std::uint16_t>;
using GPoly = std::map<Exps, Gf2::E>;

std::uint64_t binom(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
    }
    return r;
}

void accumulate(const Gf2 &F, GPoly &acc, const Exps &e, Gf2::E c)
{
    auto &slot = acc[e];
    slot = F.add(slot, c);
    if (slot[0] == 0 && slot[1] == 0) {
        acc.erase(e);
    }
}

// x_{r,a} -> x_{r,a} + t x_{r,b} in every row.
GPoly transvect(const Gf2 &F, const GPoly &f, std::size_t rows, std::size_t width, std::size_t a, std::size_t b,
                Gf2::E t)
{
    GPoly current = f;
    for (std::size_t r = 0; r < rows; ++r) {
        GPoly next;
        for (const auto &[e, c] : current) {
            const auto n = e[r * width + a];
            Gf2::E tk{1, 0};
            for (std::uint32_t k = 0; k <= n; ++k) {
                Exps m = e;
                m[r * width + a] = static_cast<std::uint16_t>(n - k);
                m[r * width + b] = static_cast<std::uint16_t>(m[r * width + b] + k);
                const Gf2::E scale{static_cast<std::uint32_t>(binom(n, k) % F.p), 0};
                accumulate(F, next, m, F.mul(c, F.mul(scale, tk)));
                tk = F.mul(tk, t);
            }
        }
        current = std::move(next);
    }
    return current;
}

GPoly scale_column(const Gf2 &F, const GPoly &f, std::size_t rows, std::size_t width, std::size_t a, Gf2::E t)
{
    GPoly out;
    for (const auto &[e, c] : f) {
        Gf2::E s{1, 0};
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::uint16_t k = 0; k < e[r * width + a]; ++k) {
                s = F.mul(s, t);
            }
        }
        accumulate(F, out, e, F.mul(c, s));
    }
    return out;
}

GPoly swap_columns(const GPoly &f, std::size_t rows, std::size_t width, std::size_t a, std::size_t b)
{
    GPoly out;
    for (const auto &[e, c] : f) {
        Exps m = e;
        for (std::size_t r = 0; r < rows; ++r) {
            std::swap(m[r * width + a], m[r * width + b]);
        }
        out[m] = c;
    }
    return out;
}

// Echelon basis over GF(p^2), keyed by pivot monomial.
struct GEchelon {
    const Gf2 &F;
    std::map<Exps, GPoly> rows;

    bool insert(GPoly v)
    {
        for (auto it = rows.begin(); it != rows.end(); ++it) {
            auto found = v.find(it->first);
            if (found == v.end()) {
                continue;
            }
            const auto c = F.neg(found->second);
            for (const auto &[e, d] : it->second) {
                accumulate(F, v, e, F.mul(c, d));
            }
        }
        if (v.empty()) {
            return false;
        }
        const auto pivot = v.begin()->first;
        const auto inv = F.inv(v.begin()->second);
        for (auto &[e, c] : v) {
            c = F.mul(c, inv);
        }
        for (auto &[key, row] : rows) {
            auto found = row.find(pivot);
            if (found == row.end()) {
                continue;
            }
            const auto c = F.neg(found->second);
            for (const auto &[e, d] : v) {
                accumulate(F, row, e, F.mul(c, d));
            }
        }
        rows.emplace(pivot, std::move(v));
        return true;
    }
};

} // namespace

std::size_t translate_span_dimension(const Poly &f)
{
    const auto p = f.shape().p();
    if (p != 2 && p != 3) {
        throw std::invalid_argument("translate oracle supports p = 2, 3");
    }
    const Gf2 F{p};
    const std::size_t rows = f.shape().rows, width = f.shape().width;
    GPoly start;
    for (const auto &t : f.terms()) {
        start[Exps(t.mono.exponents().begin(), t.mono.exponents().end())] = {t.coeff, 0};
    }
    GEchelon basis{F, {}};
    std::deque<GPoly> work;
    if (basis.insert(start)) {
        work.push_back(start);
    }
    const auto elements = F.elements();
    while (!work.empty()) {
        const auto h = work.front();
        work.pop_front();
        auto offer = [&](GPoly g) {
            if (basis.insert(g)) {
                work.push_back(std::move(g));
            }
        };
        for (std::size_t a = 0; a < width; ++a) {
            for (const auto &t : elements) {
                if (t[0] != 0 || t[1] != 0) {
                    offer(scale_column(F, h, rows, width, a, t));
                }
            }
            for (std::size_t b = 0; b < width; ++b) {
                if (a == b) {
                    continue;
                }
                for (const auto &t : elements) {
                    offer(transvect(F, h, rows, width, a, b, t));
                }
                if (a < b) {
                    offer(swap_columns(h, rows, width, a, b));
                }
            }
        }
    }
    return basis.rows.size();
}

std::size_t rydh_count(std::uint32_t p, std::size_t width, std::uint64_t d)
{
    std::size_t count = 0;
    std::vector<std::uint32_t> a(width, 0);
    // Odometer over entries 0..p-1.
    while (true) {
        std::uint64_t s = 0;
        for (auto v : a) {
            s += v;
        }
        count += s == d ? 1 : 0;
        std::size_t k = 0;
        while (k < width && a[k] == p - 1) {
            a[k] = 0;
            ++k;
        }
        if (k == width) {
            break;
        }
        ++a[k];
    }
    return count + (d == p ? width : 0);
}

} // namespace oracle
