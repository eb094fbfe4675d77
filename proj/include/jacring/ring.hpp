#ifndef JACRING_RING_HPP
#define JACRING_RING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "jacring/fields.hpp"
#include "jacring/matrix.hpp"
#include "jacring/poly.hpp"
#include "jacring/primes.hpp"

namespace jacring {

// Generator sets for the ideal J(F,G) in A = P[mu,nu].  The minimal set
// {w_k = dF/dX_k mu + dG/dX_k nu} provably fails the socle test on desk
// instances, so the extended candidates below are first-class configuration;
// oracles::calibrate measures all of them and selects.
enum class GeneratorVariant { PaperMinimal, PlusFG, PlusMuFNuG, PlusW, PlusF };

inline const std::vector<GeneratorVariant>& all_variants() {
    static const std::vector<GeneratorVariant> v = {
        GeneratorVariant::PaperMinimal, GeneratorVariant::PlusFG, GeneratorVariant::PlusMuFNuG,
        GeneratorVariant::PlusW, GeneratorVariant::PlusF};
    return v;
}

inline std::string variant_name(GeneratorVariant v) {
    switch (v) {
        case GeneratorVariant::PaperMinimal: return "PaperMinimal";
        case GeneratorVariant::PlusFG: return "PlusFG";
        case GeneratorVariant::PlusMuFNuG: return "PlusMuFNuG";
        case GeneratorVariant::PlusW: return "PlusW";
        case GeneratorVariant::PlusF: return "PlusF";
    }
    return "?";
}

inline std::optional<GeneratorVariant> variant_from_string(const std::string& s) {
    for (GeneratorVariant v : all_variants())
        if (variant_name(v) == s) return v;
    return std::nullopt;
}

/// Bigrade (q, l): the piece A_q(l) = sum_{a+b=q} P^{ad+be+l} mu^a nu^b.
struct SliceKey {
    int q = 0;
    long l = 0;
    friend auto operator<=>(const SliceKey&, const SliceKey&) = default;
};

template <class K>
struct RingGenerator {
    std::string name;
    SliceKey bigrade;
    Poly<K> element;  // over X_0..X_n, mu, nu
};

/// One quotient piece B_q(l) = A_q(l) / (J cap A_q(l)): dimension, a
/// pivot-complement monomial basis, and the data needed to reduce arbitrary
/// elements to coordinates in that basis.
template <class K>
struct QuotientPiece {
    SliceKey key;
    std::vector<Monomial> basis;            // monomial basis of A_q(l)
    std::size_t ideal_rank = 0;             // rank of the ideal slice
    RrefResult<K> echelon;                  // echelon basis of the ideal slice
    std::vector<std::size_t> rep_indices;   // non-pivot positions into `basis`
    std::vector<Monomial> representatives;  // basis[rep_indices]

    std::size_t dim() const { return rep_indices.size(); }
};

/// A residue class in B_q(l), as coordinates in the representative basis.
template <class K>
struct RingClass {
    SliceKey key;
    std::vector<typename K::Elem> coords;
};

template <class K>
struct PairingReport {
    int q = 0;
    long l = 0;
    std::size_t left_dim = 0, right_dim = 0, socle_dim = 0;
    Matrix<K> matrix;  // left_dim x right_dim, entries in the socle coordinate
    std::size_t rank = 0;
    bool perfect = false;
    bool in_window = true;
    std::vector<std::string> notes;
};

/// A fully specified pair (n, d, e, F, G) with a generator-set variant.
/// Instances are immutable after construction; the per-instance memo of
/// computed quotient pieces is guarded for single-writer/multi-reader use.
template <class K>
class RingInstance {
  public:
    using Elem = typename K::Elem;

    static RingInstance generic(const K& k, int n, long d, long e, GeneratorVariant variant,
                                std::uint64_t seed, long degree_cap = kDefaultDegreeCap) {
        SplitMix64 rng(seed);
        std::size_t nv = static_cast<std::size_t>(n) + 1;
        auto draw = [&](long deg) {
            Poly<K> p(nv);
            for (const Monomial& m : monomial_basis(nv, deg, degree_cap))
                p.add_term(k, m, k.from_int(rng.small_nonzero()));
            return p;
        };
        Poly<K> F = draw(d);
        Poly<K> G = draw(e);
        return RingInstance(k, n, d, e, variant, std::move(F), std::move(G), seed, degree_cap);
    }

    /// F and G are polynomials in the n+1 projective coordinates.
    RingInstance(const K& k, int n, long d, long e, GeneratorVariant variant, Poly<K> F, Poly<K> G,
                 std::optional<std::uint64_t> seed = std::nullopt,
                 long degree_cap = kDefaultDegreeCap)
        : field_(k), n_(n), d_(d), e_(e), variant_(variant), seed_(seed),
          degree_cap_(degree_cap), F_(std::move(F)), G_(std::move(G)) {
        if (n_ < 2) throw ContractError("ambient projective dimension must be at least 2");
        if (d_ < 1 || e_ < 1) throw ContractError("degrees d, e must be positive");
        std::size_t nv = nx();
        if (F_.nvars() != nv || G_.nvars() != nv)
            throw ContractError("F and G must live in the n+1 projective coordinates");
        if (F_.homogeneous_degree() != std::optional<long>(d_))
            throw ContractError("F is not homogeneous of degree d");
        if (G_.homogeneous_degree() != std::optional<long>(e_))
            throw ContractError("G is not homogeneous of degree e");
        build_generators();
    }

    const K& field() const { return field_; }
    int n() const { return n_; }
    long d() const { return d_; }
    long e() const { return e_; }
    GeneratorVariant variant() const { return variant_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    long degree_cap() const { return degree_cap_; }
    const Poly<K>& F() const { return F_; }
    const Poly<K>& G() const { return G_; }
    const std::vector<RingGenerator<K>>& generators() const { return gens_; }

    std::size_t nx() const { return static_cast<std::size_t>(n_) + 1; }   // X variables
    std::size_t nvars() const { return nx() + 2; }                        // + mu, nu
    std::size_t mu_index() const { return nx(); }
    std::size_t nu_index() const { return nx() + 1; }

    long delta_min() const { return std::min(d_, e_); }
    long sigma() const { return 2 * (d_ - n_ - 1) + e_; }

    /// Bigrade of a monomial in the mu/nu bookkeeping, derived from the
    /// exponents: q = a + b, l = xdeg - a d - b e.
    SliceKey bigrade_of(const Monomial& m) const {
        long a = m.exps[mu_index()], b = m.exps[nu_index()];
        long xdeg = m.degree_of_first(nx());
        return SliceKey{static_cast<int>(a + b), xdeg - a * d_ - b * e_};
    }

    std::optional<SliceKey> bigrade_of(const Poly<K>& p) const {
        std::optional<SliceKey> key;
        for (const auto& [m, c] : p.terms()) {
            SliceKey b = bigrade_of(m);
            if (!key) key = b;
            else if (*key != b) return std::nullopt;
        }
        return key;
    }

    /// Monomial basis of A_q(l): blocks mu^a nu^(q-a) for a = q..0, each block
    /// in grlex order on the X part.
    std::vector<Monomial> slice_basis(SliceKey key) const {
        std::vector<Monomial> out;
        if (key.q < 0) return out;
        for (int a = key.q; a >= 0; --a) {
            int b = key.q - a;
            long deg = a * d_ + b * e_ + key.l;
            if (deg < 0) continue;
            for (const Monomial& xm : monomial_basis(nx(), deg, degree_cap_)) {
                Monomial m(nvars());
                for (std::size_t i = 0; i < nx(); ++i) m.exps[i] = xm.exps[i];
                m.exps[mu_index()] = static_cast<std::uint16_t>(a);
                m.exps[nu_index()] = static_cast<std::uint16_t>(b);
                out.push_back(std::move(m));
            }
        }
        return out;
    }

    /// dim A_q(l) by the stars-and-bars count; agrees with slice_basis().size().
    std::size_t slice_dimension(SliceKey key) const {
        if (key.q < 0) return 0;
        std::size_t total = 0;
        for (int a = key.q; a >= 0; --a) {
            int b = key.q - a;
            long deg = a * d_ + b * e_ + key.l;
            if (deg < 0) continue;
            if (deg > degree_cap_) throw DegreeCapError(deg, degree_cap_);
            total += binom(deg + n_, n_);
        }
        return total;
    }

    /// Columns are the generator multiples g*m spanning J cap A_q(l), in the
    /// monomial coordinates of slice_basis(key).
    Matrix<K> ideal_slice_matrix(SliceKey key) const {
        std::vector<Monomial> basis = slice_basis(key);
        std::map<Monomial, std::size_t, GrlexLess> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

        std::vector<std::vector<Elem>> cols;
        for (const RingGenerator<K>& g : gens_) {
            SliceKey mk{key.q - g.bigrade.q, key.l - g.bigrade.l};
            for (const Monomial& m : slice_basis(mk)) {
                std::vector<Elem> col(basis.size(), field_.zero());
                for (const auto& [gm, gc] : g.element.terms()) {
                    auto it = index.find(gm * m);
                    if (it == index.end()) throw ContractError("generator multiple left the slice");
                    col[it->second] = field_.add(col[it->second], gc);
                }
                cols.push_back(std::move(col));
            }
        }
        Matrix<K> mat(field_, basis.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < basis.size(); ++r) mat.at(r, c) = cols[c][r];
        return mat;
    }

    const QuotientPiece<K>& quotient_piece(SliceKey key) const {
        {
            std::lock_guard<std::mutex> lock(memo_->mutex);
            auto it = memo_->pieces.find(key);
            if (it != memo_->pieces.end()) return *it->second;
        }
        auto piece = std::make_shared<QuotientPiece<K>>(compute_piece(key));
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto [it, inserted] = memo_->pieces.emplace(key, std::move(piece));
        return *it->second;
    }

    std::size_t dim_B(SliceKey key) const {
        if (key.q < 0) return 0;
        return quotient_piece(key).dim();
    }

    /// Coordinates of the class of `element` in the representative basis of
    /// B_q(l); the zero vector exactly when the element lies in the ideal.
    std::vector<Elem> reduce(const Poly<K>& element, SliceKey key) const {
        const QuotientPiece<K>& piece = quotient_piece(key);
        std::map<Monomial, std::size_t, GrlexLess> index;
        for (std::size_t i = 0; i < piece.basis.size(); ++i) index.emplace(piece.basis[i], i);
        std::vector<Elem> v(piece.basis.size(), field_.zero());
        for (const auto& [m, c] : element.terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw ContractError("element is not bigrade-homogeneous of the requested bigrade");
            v[it->second] = field_.add(v[it->second], c);
        }
        v = reduce_against(field_, piece.echelon, v);
        std::vector<Elem> coords;
        coords.reserve(piece.rep_indices.size());
        for (std::size_t i : piece.rep_indices) coords.push_back(v[i]);
        return coords;
    }

    RingClass<K> class_of(const Poly<K>& element, SliceKey key) const {
        return RingClass<K>{key, reduce(element, key)};
    }

    Poly<K> lift(const RingClass<K>& cls) const {
        const QuotientPiece<K>& piece = quotient_piece(cls.key);
        if (cls.coords.size() != piece.dim()) throw ContractError("class coordinate size mismatch");
        Poly<K> p(nvars());
        for (std::size_t i = 0; i < cls.coords.size(); ++i)
            p.add_term(field_, piece.representatives[i], cls.coords[i]);
        return p;
    }

    /// Ring multiplication B_q(l) x B_q'(l') -> B_{q+q'}(l+l'); independent of
    /// the choice of representatives.
    RingClass<K> multiply(const RingClass<K>& x, const RingClass<K>& y) const {
        SliceKey target{x.key.q + y.key.q, x.key.l + y.key.l};
        Poly<K> prod = poly_mul(field_, lift(x), lift(y));
        return class_of(prod, target);
    }

    /// Matrix of the socle-valued pairing B_q(l) x B_{n-1-q}(Sigma-l) ->
    /// B_{n-1}(Sigma).  A socle of dimension != 1 is reported, not fatal.
    PairingReport<K> pairing_report(int q, long l) const {
        PairingReport<K> rep;
        rep.q = q;
        rep.l = l;
        long lo = d_ - n_ - 1, hi = d_ - n_ - 1 + e_;
        rep.in_window = (lo <= l && l <= hi && 0 <= q && q <= n_ - 1);
        if (!rep.in_window)
            rep.notes.push_back("outside the duality window; computed anyway");
        SliceKey left{q, l}, right{n_ - 1 - q, sigma() - l}, socle{n_ - 1, sigma()};
        const QuotientPiece<K>& pl = quotient_piece(left);
        const QuotientPiece<K>& pr = quotient_piece(right);
        const QuotientPiece<K>& ps = quotient_piece(socle);
        rep.left_dim = pl.dim();
        rep.right_dim = pr.dim();
        rep.socle_dim = ps.dim();
        if (rep.socle_dim != 1)
            rep.notes.push_back("socle dimension is " + std::to_string(rep.socle_dim) +
                                ", expected 1 (uncalibrated variant or degenerate pair)");
        rep.matrix = Matrix<K>(field_, rep.left_dim, rep.right_dim * std::max<std::size_t>(rep.socle_dim, 1));
        for (std::size_t i = 0; i < rep.left_dim; ++i) {
            for (std::size_t j = 0; j < rep.right_dim; ++j) {
                Poly<K> prod = poly_mul(field_,
                                        Poly<K>::term(field_, pl.representatives[i], field_.one()),
                                        Poly<K>::term(field_, pr.representatives[j], field_.one()));
                std::vector<Elem> red = reduce(prod, socle);
                for (std::size_t s = 0; s < red.size(); ++s)
                    rep.matrix.at(i, j * rep.socle_dim + s) = red[s];
            }
        }
        rep.rank = (rep.left_dim && rep.matrix.cols) ? jacring::rank(field_, rep.matrix) : 0;
        rep.perfect = (rep.socle_dim == 1 || (rep.left_dim == 0 && rep.right_dim == 0)) &&
                      rep.rank == rep.left_dim && rep.left_dim == rep.right_dim;
        return rep;
    }

    /// dim B_q(d+e-n-1+l) for q = 0..n-1; under the ring/Hodge identification
    /// these are the primitive log Hodge numbers of the complement at twist l.
    std::vector<std::size_t> hodge_numbers(long l) const {
        if (l < 0) throw ContractError("hodge_numbers needs twist l >= 0");
        std::vector<std::size_t> dims;
        for (int q = 0; q <= n_ - 1; ++q) dims.push_back(dim_B(SliceKey{q, d_ + e_ - n_ - 1 + l}));
        return dims;
    }

    /// Kernel dimension of B_p(l) -> Hom(B_p'(l'), B_{p+p'}(l+l')).
    std::size_t mult_map_kernel(int p, long l, int pp, long lp) const {
        SliceKey src{p, l}, arg{pp, lp}, dst{p + pp, l + lp};
        const QuotientPiece<K>& ps = quotient_piece(src);
        if (ps.dim() == 0) return 0;
        const QuotientPiece<K>& pa = quotient_piece(arg);
        const QuotientPiece<K>& pd = quotient_piece(dst);
        if (pa.dim() == 0 || pd.dim() == 0) return ps.dim();  // the zero map
        Matrix<K> flat(field_, ps.dim(), pa.dim() * pd.dim());
        for (std::size_t i = 0; i < ps.dim(); ++i) {
            for (std::size_t j = 0; j < pa.dim(); ++j) {
                Poly<K> prod = poly_mul(field_,
                                        Poly<K>::term(field_, ps.representatives[i], field_.one()),
                                        Poly<K>::term(field_, pa.representatives[j], field_.one()));
                std::vector<Elem> red = reduce(prod, dst);
                for (std::size_t t = 0; t < red.size(); ++t)
                    flat.at(i, j * pd.dim() + t) = red[t];
            }
        }
        return ps.dim() - jacring::rank(field_, flat);
    }

    std::optional<bool> regularity_observed() const {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        return memo_->regularity;
    }
    void note_regularity(bool ok) const {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        memo_->regularity = ok;
    }

  private:
    static std::size_t binom(long top, long bottom) {
        if (bottom < 0 || top < bottom) return 0;
        unsigned long long r = 1;
        for (long i = 1; i <= bottom; ++i) r = r * static_cast<unsigned long long>(top - bottom + i) / i;
        return static_cast<std::size_t>(r);
    }

    void build_generators() {
        const std::size_t nv = nvars();
        auto lift = [&](const Poly<K>& p, int mu, int nu) {
            Poly<K> out(nv);
            for (const auto& [m, c] : p.terms()) {
                Monomial mm(nv);
                for (std::size_t i = 0; i < nx(); ++i) mm.exps[i] = m.exps[i];
                mm.exps[mu_index()] = static_cast<std::uint16_t>(mu);
                mm.exps[nu_index()] = static_cast<std::uint16_t>(nu);
                out.add_term(field_, mm, c);
            }
            return out;
        };
        for (std::size_t kvar = 0; kvar < nx(); ++kvar) {
            Poly<K> w = poly_add(field_, lift(partial_derivative(field_, F_, kvar), 1, 0),
                                 lift(partial_derivative(field_, G_, kvar), 0, 1));
            gens_.push_back({"w" + std::to_string(kvar), SliceKey{1, -1}, std::move(w)});
        }
        switch (variant_) {
            case GeneratorVariant::PaperMinimal:
                break;
            case GeneratorVariant::PlusFG:
                gens_.push_back({"F", SliceKey{0, d_}, lift(F_, 0, 0)});
                gens_.push_back({"G", SliceKey{0, e_}, lift(G_, 0, 0)});
                break;
            case GeneratorVariant::PlusMuFNuG:
                gens_.push_back({"muF", SliceKey{1, 0}, lift(F_, 1, 0)});
                gens_.push_back({"nuG", SliceKey{1, 0}, lift(G_, 0, 1)});
                break;
            case GeneratorVariant::PlusW:
                gens_.push_back({"muF+nuG", SliceKey{1, 0},
                                 poly_add(field_, lift(F_, 1, 0), lift(G_, 0, 1))});
                break;
            case GeneratorVariant::PlusF:
                gens_.push_back({"F", SliceKey{0, d_}, lift(F_, 0, 0)});
                break;
        }
        for (const auto& g : gens_) {
            if (g.element.is_zero()) continue;  // degenerate pairs may kill a partial
            auto bg = bigrade_of(g.element);
            if (!bg || *bg != g.bigrade)
                throw ContractError("generator " + g.name + " is not bigrade-homogeneous");
        }
    }

    QuotientPiece<K> compute_piece(SliceKey key) const {
        QuotientPiece<K> piece;
        piece.key = key;
        piece.basis = slice_basis(key);
        Matrix<K> cols = ideal_slice_matrix(key);
        piece.echelon = rref(field_, cols.transposed(field_));
        piece.ideal_rank = piece.echelon.rank();
        std::vector<bool> is_pivot(piece.basis.size(), false);
        for (std::size_t c : piece.echelon.pivot_cols) is_pivot[c] = true;
        for (std::size_t i = 0; i < piece.basis.size(); ++i) {
            if (!is_pivot[i]) {
                piece.rep_indices.push_back(i);
                piece.representatives.push_back(piece.basis[i]);
            }
        }
        return piece;
    }

    // single-writer/multi-reader memo; behind a pointer so instances stay movable
    struct Memo {
        std::mutex mutex;
        std::map<SliceKey, std::shared_ptr<const QuotientPiece<K>>> pieces;
        std::optional<bool> regularity;
    };

    K field_;
    int n_;
    long d_, e_;
    GeneratorVariant variant_;
    std::optional<std::uint64_t> seed_;
    long degree_cap_;
    Poly<K> F_, G_;
    std::vector<RingGenerator<K>> gens_;
    mutable std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();
};

/// Reduce a rational instance mod p (keeps n, d, e, variant, seed).
inline RingInstance<SmallPrimeField> reduce_instance(const RingInstance<RationalField>& inst,
                                                     std::uint64_t p) {
    SmallPrimeField k(p);
    auto map_poly = [&](const Poly<RationalField>& src) {
        Poly<SmallPrimeField> out(src.nvars());
        for (const auto& [m, c] : src.terms()) out.add_term(k, m, reduce_mod(k, c));
        return out;
    };
    return RingInstance<SmallPrimeField>(k, inst.n(), inst.d(), inst.e(), inst.variant(),
                                         map_poly(inst.F()), map_poly(inst.G()), inst.seed(),
                                         inst.degree_cap());
}

/// Gaussian instances need p = 1 (mod 4); i maps to the smaller root of -1.
inline RingInstance<SmallPrimeField> reduce_instance(const RingInstance<GaussianRationalField>& inst,
                                                     std::uint64_t p) {
    if (p % 4 != 1) throw FieldError("reduction of Q(i) needs a prime p = 1 (mod 4)");
    SmallPrimeField k(p);
    std::uint64_t root = sqrt_of_minus_one(p);
    auto map_poly = [&](const Poly<GaussianRationalField>& src) {
        Poly<SmallPrimeField> out(src.nvars());
        for (const auto& [m, c] : src.terms()) out.add_term(k, m, reduce_mod(k, c, root));
        return out;
    };
    return RingInstance<SmallPrimeField>(k, inst.n(), inst.d(), inst.e(), inst.variant(),
                                         map_poly(inst.F()), map_poly(inst.G()), inst.seed(),
                                         inst.degree_cap());
}

}  // namespace jacring

#endif
