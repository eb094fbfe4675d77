#ifndef JACRING_FIELDS_HPP
#define JACRING_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "jacring/errors.hpp"

namespace jacring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational from an integer fraction.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw FieldError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "a" or "a/b" (base 10); result is reduced to lowest terms.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ContractError("bad rational literal: " + s);
    if (q.get_den() == 0) throw FieldError("zero denominator in: " + s);
    q.canonicalize();
    return q;
}

/// Element of Q(i).  Both components are kept in lowest terms by GMP.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n = o.norm();
        if (n == 0) throw FieldError("division by zero in Q(i)");
        GaussianRational t = *this * o.conj();
        return {t.re / n, t.im / n};
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

std::string to_string(const Rational& x);
std::string to_string(const GaussianRational& x);

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline std::string to_string(const GaussianRational& x) {
    if (x.im == 0) return x.re.get_str();
    std::string im = x.im == 1 ? "" : x.im == -1 ? "-" : x.im.get_str();
    std::string tail = im + "i";
    if (x.re == 0) return tail;
    if (tail[0] != '-') return x.re.get_str() + "+" + tail;
    return x.re.get_str() + tail;
}

// ---------------------------------------------------------------------------
// Field contexts.  All matrix/polynomial algorithms are templated over one of
// these; elements are plain values and every operation goes through the
// context, so a prime modulus lives in exactly one place.
// ---------------------------------------------------------------------------

class RationalField {
  public:
    using Elem = Rational;

    std::string name() const { return "Q"; }
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    bool is_zero(const Elem& x) const { return sgn(x) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const {
        if (is_zero(b)) throw FieldError("division by zero in Q");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }
    std::string str(const Elem& x) const { return to_string(x); }

    // Scale a row to a primitive integer vector; keeps elimination entries
    // as small as the underlying minors allow.
    void normalize_row(std::vector<Elem>& row) const {
        Integer den_lcm = 1, num_gcd = 0;
        for (const Elem& x : row) {
            if (sgn(x) == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        }
        if (den_lcm == 0) return;
        for (Elem& x : row) x *= Rational(den_lcm);
        for (Elem& x : row) {
            x.canonicalize();
            if (sgn(x) != 0) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        }
        if (num_gcd == 0) return;
        int lead_sign = 0;
        for (const Elem& x : row)
            if (sgn(x) != 0) { lead_sign = sgn(x); break; }
        if (lead_sign < 0) num_gcd = -num_gcd;
        for (Elem& x : row) {
            x /= Rational(num_gcd);
            x.canonicalize();
        }
    }
};

class GaussianRationalField {
  public:
    using Elem = GaussianRational;

    std::string name() const { return "Qi"; }
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem imaginary_unit() const { return Elem::i(); }
    bool is_zero(const Elem& x) const { return x.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem inv(const Elem& a) const { return one() / a; }
    std::string str(const Elem& x) const { return to_string(x); }

    void normalize_row(std::vector<Elem>& row) const {
        Integer den_lcm = 1, num_gcd = 0;
        auto fold_den = [&](const Rational& r) {
            if (sgn(r) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
        };
        for (const Elem& x : row) { fold_den(x.re); fold_den(x.im); }
        Rational scale{den_lcm};
        for (Elem& x : row) { x.re *= scale; x.im *= scale; x.re.canonicalize(); x.im.canonicalize(); }
        auto fold_num = [&](const Rational& r) {
            if (sgn(r) != 0) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
        };
        for (const Elem& x : row) { fold_num(x.re); fold_num(x.im); }
        if (num_gcd == 0) return;
        int lead = 0;
        for (const Elem& x : row) {
            if (sgn(x.re) != 0) { lead = sgn(x.re); break; }
            if (sgn(x.im) != 0) { lead = sgn(x.im); break; }
        }
        if (lead < 0) num_gcd = -num_gcd;
        Rational g{num_gcd};
        for (Elem& x : row) { x.re /= g; x.im /= g; x.re.canonicalize(); x.im.canonicalize(); }
    }
};

/// F_p for an odd prime p < 2^31; elements are residues in [0, p).
class SmallPrimeField {
  public:
    using Elem = std::uint64_t;

    explicit SmallPrimeField(std::uint64_t p) : p_(p) {
        if (p < 3 || p >= (1ull << 31)) throw ContractError("prime out of supported range");
    }

    std::uint64_t modulus() const { return p_; }
    std::string name() const { return "Fp:" + std::to_string(p_); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p_; }
    Elem pow(Elem b, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    Elem inv(const Elem& a) const {
        if (a == 0) throw FieldError("division by zero in " + name());
        return pow(a, p_ - 2);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    std::string str(const Elem& x) const { return std::to_string(x); }
    void normalize_row(std::vector<Elem>&) const {}

  private:
    std::uint64_t p_;
};

/// Residue of an exact rational mod p; throws FieldError when p | denominator.
inline SmallPrimeField::Elem reduce_mod(const SmallPrimeField& k, const Rational& x) {
    Integer num = x.get_num(), den = x.get_den();
    Integer p(static_cast<unsigned long>(k.modulus()));
    Integer dmod = den % p;
    if (dmod == 0) throw FieldError("prime " + std::to_string(k.modulus()) + " divides a denominator");
    Integer nmod = num % p;
    if (nmod < 0) nmod += p;
    std::uint64_t n = mpz_get_ui(nmod.get_mpz_t());
    if (dmod < 0) dmod += p;
    std::uint64_t d = mpz_get_ui(dmod.get_mpz_t());
    return k.mul(n % k.modulus(), k.inv(d % k.modulus()));
}

/// Reduction of a + bi picks the given square root of -1 mod p (p = 1 mod 4).
inline SmallPrimeField::Elem reduce_mod(const SmallPrimeField& k, const GaussianRational& x,
                                        SmallPrimeField::Elem root_of_minus_one) {
    return k.add(reduce_mod(k, x.re), k.mul(reduce_mod(k, x.im), root_of_minus_one));
}

}  // namespace jacring

#endif
