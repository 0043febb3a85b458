#include <multisym/exp_tuple.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace msym
{

ExpTuple::ExpTuple(std::initializer_list<value_type> entries) : m_entries(entries)
{
    normalize();
}

ExpTuple::ExpTuple(std::vector<value_type> entries) : m_entries(std::move(entries))
{
    normalize();
}

void ExpTuple::normalize()
{
    while (!m_entries.empty() && m_entries.back() == 0) {
        m_entries.pop_back();
    }
    m_degree = 0;
    for (auto v : m_entries) {
        m_degree += v;
    }
}

ExpTuple ExpTuple::unit(std::size_t column, value_type multiplicity)
{
    std::vector<value_type> v(column + 1, 0);
    v[column] = multiplicity;
    return ExpTuple(std::move(v));
}

ExpTuple ExpTuple::ones(std::size_t n)
{
    return ExpTuple(std::vector<value_type>(n, 1));
}

ExpTuple ExpTuple::with(std::size_t i, value_type v) const
{
    auto e = m_entries;
    if (e.size() <= i) {
        e.resize(i + 1, 0);
    }
    e[i] = v;
    return ExpTuple(std::move(e));
}

ExpTuple ExpTuple::scaled(value_type factor) const
{
    auto e = m_entries;
    for (auto &v : e) {
        v *= factor;
    }
    return ExpTuple(std::move(e));
}

ExpTuple operator+(const ExpTuple &a, const ExpTuple &b)
{
    std::vector<ExpTuple::value_type> e(std::max(a.length(), b.length()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = a[i] + b[i];
    }
    return ExpTuple(std::move(e));
}

ExpTuple operator-(const ExpTuple &a, const ExpTuple &b)
{
    std::vector<ExpTuple::value_type> e(std::max(a.length(), b.length()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (a[i] < b[i]) {
            throw std::domain_error("tuple subtraction " + a.to_string() + " - " + b.to_string()
                                    + " has a negative entry");
        }
        e[i] = a[i] - b[i];
    }
    return ExpTuple(std::move(e));
}

std::string ExpTuple::to_string() const
{
    if (m_entries.empty()) {
        return "(0)";
    }
    std::string s = "(";
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += std::to_string(m_entries[i]);
    }
    s += ')';
    return s;
}

ExpTuple ExpTuple::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto s = trim(text);
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') {
            throw std::invalid_argument("unbalanced parenthesis in tuple '" + std::string(text) + "'");
        }
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<value_type> entries;
    if (s.empty()) {
        return ExpTuple{};
    }
    while (true) {
        auto comma = s.find(',');
        auto item = trim(s.substr(0, comma));
        value_type v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
            throw std::invalid_argument("malformed tuple entry '" + std::string(item) + "' in '" + std::string(text)
                                        + "'");
        }
        entries.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return ExpTuple(std::move(entries));
}

bool dominated_by(const ExpTuple &a, const ExpTuple &b) noexcept
{
    if (a.length() > b.length()) {
        return false;
    }
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

namespace
{

void tuples_rec(std::vector<ExpTuple::value_type> &cur, std::size_t pos, std::uint64_t remaining,
                std::vector<ExpTuple> &out)
{
    if (pos + 1 == cur.size()) {
        cur[pos] = static_cast<ExpTuple::value_type>(remaining);
        out.emplace_back(cur);
        return;
    }
    for (std::uint64_t v = 0; v <= remaining; ++v) {
        cur[pos] = static_cast<ExpTuple::value_type>(v);
        tuples_rec(cur, pos + 1, remaining - v, out);
    }
}

} // namespace

std::vector<ExpTuple> tuples_of_degree(std::uint64_t degree, std::size_t width)
{
    std::vector<ExpTuple> out;
    if (width == 0) {
        if (degree == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<ExpTuple::value_type> cur(width, 0);
    tuples_rec(cur, 0, degree, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace msym
