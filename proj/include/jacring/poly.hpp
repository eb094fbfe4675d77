#ifndef JACRING_POLY_HPP
#define JACRING_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacring/monomial.hpp"

namespace jacring {

/// Sparse multivariate polynomial over a field context K.  Terms are kept in
/// a canonical ordered map and zero coefficients are never stored, so equal
/// polynomials have identical term maps.
template <class K>
class Poly {
  public:
    using Elem = typename K::Elem;
    using TermMap = std::map<Monomial, Elem, GrlexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly zero(std::size_t nvars) { return Poly(nvars); }

    static Poly term(const K& k, Monomial m, Elem c) {
        Poly p(m.nvars());
        if (!k.is_zero(c)) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    static Poly constant(const K& k, std::size_t nvars, Elem c) {
        return term(k, Monomial(nvars), std::move(c));
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const K& k, const Monomial& m, const Elem& c) {
        if (m.nvars() != nvars_) throw ContractError("term has wrong variable count");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!k.is_zero(c)) terms_.emplace(m, c);
            return;
        }
        it->second = k.add(it->second, c);
        if (k.is_zero(it->second)) terms_.erase(it);
    }

    Elem coeff(const K& k, const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? k.zero() : it->second;
    }

    bool equals(const K& k, const Poly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b) {
            if (a->first != b->first || !k.eq(a->second, b->second)) return false;
        }
        return true;
    }

    /// Total degree of each stored term if they all agree.
    std::optional<long> homogeneous_degree() const {
        std::optional<long> deg;
        for (const auto& [m, c] : terms_) {
            long d = m.degree();
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg;
    }

  private:
    std::size_t nvars_;
    TermMap terms_;
};

template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b) {
    if (a.nvars() != b.nvars()) throw ContractError("polynomial variable sets differ");
    Poly<K> r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(k, m, c);
    return r;
}

template <class K>
Poly<K> poly_neg(const K& k, const Poly<K>& a) {
    Poly<K> r(a.nvars());
    for (const auto& [m, c] : a.terms()) r.add_term(k, m, k.neg(c));
    return r;
}

template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
    return poly_add(k, a, poly_neg(k, b));
}

template <class K>
Poly<K> poly_scale(const K& k, const Poly<K>& a, const typename K::Elem& s) {
    Poly<K> r(a.nvars());
    if (k.is_zero(s)) return r;
    for (const auto& [m, c] : a.terms()) r.add_term(k, m, k.mul(c, s));
    return r;
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
    if (a.nvars() != b.nvars()) throw ContractError("polynomial variable sets differ");
    Poly<K> r(a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(k, ma * mb, k.mul(ca, cb));
    return r;
}

template <class K>
Poly<K> poly_mul_monomial(const K& k, const Poly<K>& a, const Monomial& m,
                          const typename K::Elem& c) {
    Poly<K> r(a.nvars());
    for (const auto& [ma, ca] : a.terms()) r.add_term(k, ma * m, k.mul(ca, c));
    return r;
}

/// Exact formal partial derivative with respect to variable `var`.
template <class K>
Poly<K> partial_derivative(const K& k, const Poly<K>& f, std::size_t var) {
    if (var >= f.nvars()) throw ContractError("derivative variable out of range");
    Poly<K> r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m.exps[var] == 0) continue;
        Monomial mm = m;
        long e = mm.exps[var];
        mm.exps[var] = static_cast<std::uint16_t>(e - 1);
        r.add_term(k, mm, k.mul(c, k.from_int(e)));
    }
    return r;
}

/// Substitute images[i] for variable i.  All images must share one target
/// variable set; the composition is computed exactly.
template <class K>
Poly<K> substitute(const K& k, const Poly<K>& f, const std::vector<Poly<K>>& images) {
    if (images.size() != f.nvars()) throw ContractError("substitution image count mismatch");
    std::size_t target_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != target_vars) throw ContractError("substitution images disagree on variables");

    // per-variable power cache; exponents at desk scale are tiny
    std::vector<std::vector<Poly<K>>> powers(images.size());
    auto power = [&](std::size_t v, std::uint16_t e) -> const Poly<K>& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Poly<K>::constant(k, target_vars, k.one()));
        while (cache.size() <= e) cache.push_back(poly_mul(k, cache.back(), images[v]));
        return cache[e];
    };

    Poly<K> result(target_vars);
    for (const auto& [m, c] : f.terms()) {
        Poly<K> t = Poly<K>::constant(k, target_vars, c);
        for (std::size_t v = 0; v < m.nvars(); ++v)
            if (m.exps[v] > 0) t = poly_mul(k, t, power(v, m.exps[v]));
        result = poly_add(k, result, t);
    }
    return result;
}

/// Linear substitution: row i of `map` expresses old variable i as a linear
/// form in the new variables (one column per new variable).
template <class K>
Poly<K> substitute_linear(const K& k, const Poly<K>& f,
                          const std::vector<std::vector<typename K::Elem>>& map) {
    if (map.size() != f.nvars()) throw ContractError("substitution matrix has wrong row count");
    std::size_t new_vars = map.empty() ? 0 : map[0].size();
    std::vector<Poly<K>> images;
    images.reserve(map.size());
    for (const auto& row : map) {
        if (row.size() != new_vars) throw ContractError("substitution matrix is ragged");
        Poly<K> img(new_vars);
        for (std::size_t j = 0; j < new_vars; ++j) {
            Monomial m(new_vars);
            m.exps[j] = 1;
            img.add_term(k, m, row[j]);
        }
        images.push_back(std::move(img));
    }
    return substitute(k, f, images);
}

/// Evaluate at a point (substitution by constants).
template <class K>
typename K::Elem poly_eval(const K& k, const Poly<K>& f,
                           const std::vector<typename K::Elem>& point) {
    if (point.size() != f.nvars()) throw ContractError("evaluation point has wrong dimension");
    typename K::Elem acc = k.zero();
    for (const auto& [m, c] : f.terms()) {
        typename K::Elem t = c;
        for (std::size_t v = 0; v < m.nvars(); ++v)
            for (std::uint16_t i = 0; i < m.exps[v]; ++i) t = k.mul(t, point[v]);
        acc = k.add(acc, t);
    }
    return acc;
}

template <class K, class NameFn>
std::string poly_to_string(const K& k, const Poly<K>& f, NameFn name) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + k.str(c) + ")*" + monomial_to_string(m, name);
    }
    return s;
}

}  // namespace jacring

#endif
