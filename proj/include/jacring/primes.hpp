#ifndef JACRING_PRIMES_HPP
#define JACRING_PRIMES_HPP

#include <cstdint>

namespace jacring {

/// SplitMix64.  All seeded draws in the project go through this generator so
/// that identical seeds give identical results on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ull - (~0ull % bound);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    /// Uniform nonzero integer with 1 <= |value| <= magnitude.
    long small_nonzero(long magnitude = 9) {
        long m = static_cast<long>(below(static_cast<std::uint64_t>(magnitude))) + 1;
        return (next() & 1) ? m : -m;
    }

  private:
    std::uint64_t state_;
};

/// Deterministic Miller-Rabin, valid for all n < 3.3e14.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= n;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Seeded prime > 10^6.  With `mod4_is_1`, restrict to p = 1 (mod 4) so that
/// F_p contains a square root of -1.
inline std::uint64_t draw_prime(SplitMix64& rng, bool mod4_is_1 = false) {
    for (;;) {
        std::uint64_t c = 1'000'001 + rng.below(1'000'000'000);
        if (c % 2 == 0) ++c;
        if (mod4_is_1 && c % 4 != 1) continue;
        if (is_prime(c)) return c;
    }
}

/// Smallest square root of -1 mod p, for p = 1 (mod 4).
inline std::uint64_t sqrt_of_minus_one(std::uint64_t p) {
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return (a * b) % p; };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a = 2; a < p; ++a) {
        std::uint64_t r = powmod(a, (p - 1) / 4);
        if (mulmod(r, r) == p - 1) return std::min(r, p - r);
    }
    return 0;  // unreachable for prime p = 1 mod 4
}

}  // namespace jacring

#endif
