#ifndef JACRING_MONOMIAL_HPP
#define JACRING_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "jacring/errors.hpp"

namespace jacring {

inline constexpr long kDefaultDegreeCap = 40;

/// Exponent vector over a fixed variable list.  For the pair ring the last
/// two slots are the auxiliary variables mu and nu; plain polynomial rings
/// use every slot as an ordinary variable.
struct Monomial {
    std::vector<std::uint16_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }

    long degree() const { return std::accumulate(exps.begin(), exps.end(), 0L); }

    /// Total degree of the leading `count` variables.
    long degree_of_first(std::size_t count) const {
        long s = 0;
        for (std::size_t i = 0; i < count && i < exps.size(); ++i) s += exps[i];
        return s;
    }

    Monomial operator*(const Monomial& o) const {
        if (exps.size() != o.exps.size()) throw ContractError("monomial variable sets differ");
        Monomial r(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i)
            r.exps[i] = static_cast<std::uint16_t>(exps[i] + o.exps[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

/// Graded lexicographic order with the first variable largest: compare total
/// degree, then the exponent vectors lexicographically.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (a.exps < b.exps) return -1;
    if (b.exps < a.exps) return 1;
    return 0;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) < 0; }
};

namespace detail {
inline void enumerate_monomials(std::size_t nvars, long degree, std::vector<std::uint16_t>& cur,
                                std::size_t var, std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur[var] = static_cast<std::uint16_t>(degree);
        out.emplace_back(cur);
        return;
    }
    for (long e = degree; e >= 0; --e) {
        cur[var] = static_cast<std::uint16_t>(e);
        enumerate_monomials(nvars, degree - e, cur, var + 1, out);
    }
}
}  // namespace detail

/// All monomials of exact total degree `degree`, listed grlex-descending
/// (so x0^degree comes first).  Negative degree gives the empty list.
inline std::vector<Monomial> monomial_basis(std::size_t num_vars, long degree,
                                            long degree_cap = kDefaultDegreeCap) {
    if (num_vars < 1) throw ContractError("monomial_basis needs at least one variable");
    if (degree > degree_cap) throw DegreeCapError(degree, degree_cap);
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<std::uint16_t> cur(num_vars, 0);
    detail::enumerate_monomials(num_vars, degree, cur, 0, out);
    return out;
}

/// Render with a variable-name callback, e.g. "x0^2*x1".
template <class NameFn>
std::string monomial_to_string(const Monomial& m, NameFn name) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += name(i);
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace jacring

#endif
