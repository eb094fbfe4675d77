#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/fields.hpp"
#include "jacring/poly.hpp"
#include "jacring/primes.hpp"

using namespace jacring;

namespace {

const RationalField Q;
const GaussianRationalField Qi;

Poly<RationalField> random_poly(const RationalField& k, SplitMix64& rng, std::size_t nvars,
                                long degree, bool homogeneous = true) {
    Poly<RationalField> p(nvars);
    long lo = homogeneous ? degree : 0;
    for (long deg = lo; deg <= degree; ++deg) {
        for (const Monomial& m : monomial_basis(nvars, deg)) {
            if (rng.below(3) == 0) continue;  // keep it sparse
            p.add_term(k, m, k.from_int(rng.small_nonzero()));
        }
    }
    return p;
}

unsigned long long binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and reduced") {
    Rational a = make_rational(1, 2), b = make_rational(1, 3);
    Rational s = a + b;
    CHECK(s.get_num() == 5);
    CHECK(s.get_den() == 6);

    Rational r = parse_rational("28/70");
    CHECK(r.get_num() == 2);
    CHECK(r.get_den() == 5);

    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(make_rational(1, 2), make_rational(-3, 4));
    CHECK(z / z == GaussianRational(1));
}

TEST_CASE("field axioms hold on randomized triples") {
    SplitMix64 rng(11);
    auto rand_q = [&]() { return make_rational(rng.small_nonzero(), rng.small_nonzero()); };
    for (int t = 0; t < 50; ++t) {
        Rational a = rand_q(), b = rand_q(), c = rand_q();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        GaussianRational x(rand_q(), rand_q()), y(rand_q(), rand_q()), z(rand_q(), rand_q());
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
    }
    SmallPrimeField fp(1'000'003);
    for (int t = 0; t < 50; ++t) {
        auto a = fp.from_int(rng.small_nonzero() * 12345), b = fp.from_int(rng.small_nonzero()),
             c = fp.from_int(rng.small_nonzero());
        CHECK(fp.add(fp.add(a, b), c) == fp.add(a, fp.add(b, c)));
        CHECK(fp.mul(a, fp.add(b, c)) == fp.add(fp.mul(a, b), fp.mul(a, c)));
        if (!fp.is_zero(b)) CHECK(fp.mul(fp.div(a, b), b) == a);
    }
}

TEST_CASE("monomial_basis counts and order") {
    auto basis = monomial_basis(3, 2);
    REQUIRE(basis.size() == 6);
    // grlex-descending: x0^2 first, x2^2 last
    CHECK(basis.front().exps == std::vector<std::uint16_t>{2, 0, 0});
    CHECK(basis.back().exps == std::vector<std::uint16_t>{0, 0, 2});

    CHECK(monomial_basis(3, 0).size() == 1);
    CHECK(monomial_basis(3, 0)[0].degree() == 0);
    CHECK(monomial_basis(3, -1).empty());

    CHECK_THROWS_AS(monomial_basis(3, 41), DegreeCapError);
    CHECK(monomial_basis(3, 41, 50).size() == binomial(43, 2));
}

TEST_CASE("monomial_basis size matches stars and bars") {
    for (std::size_t v = 1; v <= 6; ++v)
        for (long m = 0; m <= 12; ++m)
            CHECK(monomial_basis(v, m).size() == binomial(m + v - 1, v - 1));
}

TEST_CASE("partial derivatives") {
    // d/dz0 (z0^3) = 3 z0^2, d/dz1 (z0^3) = 0
    Monomial z0cubed(3);
    z0cubed.exps[0] = 3;
    Poly<RationalField> f = Poly<RationalField>::term(Q, z0cubed, Q.one());
    Poly<RationalField> df = partial_derivative(Q, f, 0);
    REQUIRE(df.term_count() == 1);
    CHECK(df.terms().begin()->first.exps == std::vector<std::uint16_t>{2, 0, 0});
    CHECK(df.terms().begin()->second == 3);
    CHECK(partial_derivative(Q, f, 1).is_zero());
}

TEST_CASE("Euler identity for homogeneous polynomials") {
    // sum_k X_k dF/dX_k = d * F, spot-checked on X0^2 X1 and random cubics
    SplitMix64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Poly<RationalField> f = random_poly(Q, rng, 3, 3);
        Poly<RationalField> acc(3);
        for (std::size_t v = 0; v < 3; ++v) {
            Monomial xv(3);
            xv.exps[v] = 1;
            acc = poly_add(Q, acc, poly_mul_monomial(Q, partial_derivative(Q, f, v), xv, Q.one()));
        }
        CHECK(acc.equals(Q, poly_scale(Q, f, Q.from_int(3))));
    }
}

TEST_CASE("Leibniz rule on random pairs") {
    SplitMix64 rng(7);
    for (int t = 0; t < 10; ++t) {
        Poly<RationalField> f = random_poly(Q, rng, 3, 2, false);
        Poly<RationalField> g = random_poly(Q, rng, 3, 2, false);
        for (std::size_t v = 0; v < 3; ++v) {
            Poly<RationalField> lhs = partial_derivative(Q, poly_mul(Q, f, g), v);
            Poly<RationalField> rhs = poly_add(Q, poly_mul(Q, partial_derivative(Q, f, v), g),
                                               poly_mul(Q, f, partial_derivative(Q, g, v)));
            CHECK(lhs.equals(Q, rhs));
        }
    }
}

TEST_CASE("substitution: diagonal cubic vanishes along the cone line") {
    // F = sum z_i^3 composed with (u, -u, v, -v, 0) is identically zero
    Poly<RationalField> F(5);
    for (int i = 0; i < 5; ++i) {
        Monomial m(5);
        m.exps[i] = 3;
        F.add_term(Q, m, Q.one());
    }
    Monomial u(2), v(2);
    u.exps[0] = 1;
    v.exps[1] = 1;
    std::vector<Poly<RationalField>> images = {
        Poly<RationalField>::term(Q, u, Q.one()),  Poly<RationalField>::term(Q, u, Q.from_int(-1)),
        Poly<RationalField>::term(Q, v, Q.one()),  Poly<RationalField>::term(Q, v, Q.from_int(-1)),
        Poly<RationalField>::zero(2)};
    CHECK(substitute(Q, F, images).is_zero());
}

TEST_CASE("substitute_linear: identity and dimension mismatch") {
    SplitMix64 rng(3);
    Poly<RationalField> f = random_poly(Q, rng, 3, 3, false);
    std::vector<std::vector<Rational>> id = {
        {Q.one(), Q.zero(), Q.zero()}, {Q.zero(), Q.one(), Q.zero()}, {Q.zero(), Q.zero(), Q.one()}};
    CHECK(substitute_linear(Q, f, id).equals(Q, f));

    std::vector<std::vector<Rational>> bad = {{Q.one()}, {Q.zero()}};
    CHECK_THROWS_AS(substitute_linear(Q, f, bad), ContractError);
}

TEST_CASE("substitution is a ring homomorphism") {
    SplitMix64 rng(13);
    for (int t = 0; t < 8; ++t) {
        Poly<RationalField> f = random_poly(Q, rng, 2, 2, false);
        Poly<RationalField> g = random_poly(Q, rng, 2, 2, false);
        std::vector<std::vector<Rational>> map = {
            {Q.from_int(rng.small_nonzero()), Q.from_int(rng.small_nonzero()), Q.from_int(rng.small_nonzero())},
            {Q.from_int(rng.small_nonzero()), Q.from_int(rng.small_nonzero()), Q.from_int(rng.small_nonzero())}};
        Poly<RationalField> lhs = substitute_linear(Q, poly_mul(Q, f, g), map);
        Poly<RationalField> rhs = poly_mul(Q, substitute_linear(Q, f, map), substitute_linear(Q, g, map));
        CHECK(lhs.equals(Q, rhs));
    }
}

TEST_CASE("generic quadric restriction expansion, fully symbolic") {
    // Ring Q[q01..q34, a, b, c, u, v]: 10 quadric coefficients, the base
    // point coordinates, and the line parameters.  Composing
    // sum q_ij z_i z_j with z = (u, -u, av, bv, cv) must give
    //   -q01 u^2 + uv (a(q02-q12) + b(q03-q13) + c(q04-q14))
    //            + v^2 (ab q23 + ac q24 + bc q34).
    const int NV = 15;
    const int A = 10, B = 11, C = 12, U = 13, V = 14;
    auto var = [&](int i) {
        Monomial m(NV);
        m.exps[i] = 1;
        return Poly<RationalField>::term(Q, m, Q.one());
    };
    int slot = 0;
    std::map<std::pair<int, int>, int> qslot;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) qslot[{i, j}] = slot++;

    // images of z_0..z_4
    std::vector<Poly<RationalField>> z = {var(U), poly_neg(Q, var(U)), poly_mul(Q, var(A), var(V)),
                                          poly_mul(Q, var(B), var(V)), poly_mul(Q, var(C), var(V))};
    Poly<RationalField> composed(NV);
    for (auto& [ij, s] : qslot)
        composed = poly_add(Q, composed,
                            poly_mul(Q, var(s), poly_mul(Q, z[ij.first], z[ij.second])));

    auto q = [&](int i, int j) { return var(qslot.at({i, j})); };
    Poly<RationalField> u2_coeff = poly_neg(Q, q(0, 1));
    Poly<RationalField> uv_coeff =
        poly_add(Q, poly_mul(Q, var(A), poly_sub(Q, q(0, 2), q(1, 2))),
                 poly_add(Q, poly_mul(Q, var(B), poly_sub(Q, q(0, 3), q(1, 3))),
                          poly_mul(Q, var(C), poly_sub(Q, q(0, 4), q(1, 4)))));
    Poly<RationalField> v2_coeff =
        poly_add(Q, poly_mul(Q, poly_mul(Q, var(A), var(B)), q(2, 3)),
                 poly_add(Q, poly_mul(Q, poly_mul(Q, var(A), var(C)), q(2, 4)),
                          poly_mul(Q, poly_mul(Q, var(B), var(C)), q(3, 4))));

    Poly<RationalField> expected(NV);
    expected = poly_add(Q, expected, poly_mul(Q, u2_coeff, poly_mul(Q, var(U), var(U))));
    expected = poly_add(Q, expected, poly_mul(Q, uv_coeff, poly_mul(Q, var(U), var(V))));
    expected = poly_add(Q, expected, poly_mul(Q, v2_coeff, poly_mul(Q, var(V), var(V))));

    CHECK(composed.equals(Q, expected));
}

TEST_CASE("rational computations survive reduction mod a prime") {
    SplitMix64 rng(17);
    SmallPrimeField fp(1'000'003);
    for (int t = 0; t < 5; ++t) {
        Poly<RationalField> f = random_poly(Q, rng, 3, 2, false);
        Poly<RationalField> g = random_poly(Q, rng, 3, 2, false);
        Poly<RationalField> prod = poly_mul(Q, f, g);
        auto reduce = [&](const Poly<RationalField>& p) {
            Poly<SmallPrimeField> out(p.nvars());
            for (const auto& [m, c] : p.terms()) out.add_term(fp, m, reduce_mod(fp, c));
            return out;
        };
        CHECK(poly_mul(fp, reduce(f), reduce(g)).equals(fp, reduce(prod)));
    }
    CHECK_THROWS_AS(reduce_mod(fp, make_rational(1, 1'000'003)), FieldError);
}

TEST_CASE("canonical form: add then subtract returns the identical term map") {
    SplitMix64 rng(23);
    for (int t = 0; t < 10; ++t) {
        Poly<RationalField> f = random_poly(Q, rng, 4, 3, false);
        Poly<RationalField> g = random_poly(Q, rng, 4, 3, false);
        Poly<RationalField> back = poly_sub(Q, poly_add(Q, f, g), g);
        CHECK(back.equals(Q, f));
        CHECK(back.term_count() == f.term_count());
    }
}

TEST_CASE("homogeneity bookkeeping") {
    SplitMix64 rng(29);
    Poly<RationalField> f = random_poly(Q, rng, 3, 3);
    CHECK(f.homogeneous_degree() == std::optional<long>(3));
    Monomial one(3);
    f.add_term(Q, one, Q.one());
    CHECK(!f.homogeneous_degree().has_value());
}
