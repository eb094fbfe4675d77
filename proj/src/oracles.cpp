#include "jacring/oracles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jacring::oracles {

namespace {

// Rank of the span of partial-multiples in degree k_deg, assembled directly
// from the partials of F (no mu/nu bookkeeping anywhere in this path).
std::size_t jacobian_slice_dim(const RationalField& k, const std::vector<Poly<RationalField>>& partials,
                               std::size_t nv, long k_deg, long cap) {
    if (k_deg < 0) return 0;
    std::vector<Monomial> basis = monomial_basis(nv, k_deg, cap);
    if (basis.empty()) return 0;
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<std::vector<Rational>> rows;
    for (const Poly<RationalField>& part : partials) {
        auto deg = part.homogeneous_degree();
        if (!deg) continue;
        for (const Monomial& m : monomial_basis(nv, k_deg - *deg, cap)) {
            std::vector<Rational> row(basis.size(), k.zero());
            for (const auto& [pm, pc] : part.terms()) row[index.at(pm * m)] = pc;
            rows.push_back(std::move(row));
        }
    }
    Matrix<RationalField> mat(k, rows.size(), basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r) mat.set_row(r, rows[r]);
    return basis.size() - rank(k, mat);
}

}  // namespace

std::size_t closed_ring_degree_dim(int n, long d, long k_deg, long cap) {
    if (n < 1 || d < 1) throw ContractError("closed ring needs n >= 1, d >= 1");
    RationalField k;
    std::size_t nv = static_cast<std::size_t>(n) + 1;
    std::vector<Poly<RationalField>> partials;
    for (std::size_t i = 0; i < nv; ++i) {
        Monomial m(nv);
        m.exps[i] = static_cast<std::uint16_t>(d - 1);
        partials.push_back(Poly<RationalField>::term(k, m, k.from_int(d)));
    }
    return jacobian_slice_dim(k, partials, nv, k_deg, cap);
}

std::size_t closed_ring_degree_dim_of(const Poly<RationalField>& F, long k_deg, long cap) {
    RationalField k;
    std::vector<Poly<RationalField>> partials;
    for (std::size_t i = 0; i < F.nvars(); ++i) partials.push_back(partial_derivative(k, F, i));
    return jacobian_slice_dim(k, partials, F.nvars(), k_deg, cap);
}

std::size_t closed_griffiths_dim(int n, long d, int q, long cap) {
    return closed_ring_degree_dim(n, d, (q + 1) * d - n - 1, cap);
}

long closed_socle_degree(int n, long d) { return (n + 1) * (d - 2); }

std::size_t fermat_ring_dim(int k) {
    if (k < 0) throw ContractError("fermat_ring_dim needs k >= 0");
    std::size_t count = 0;
    for (const Monomial& m : monomial_basis(5, k, std::max<long>(k, kDefaultDegreeCap))) {
        bool squarefree = true;
        for (auto e : m.exps) squarefree = squarefree && e <= 1;
        if (squarefree) ++count;
    }
    return count;
}

std::pair<std::size_t, std::size_t> curve_open_hodge(long d, long e) {
    if (d < 1 || e < 1) throw ContractError("curve_open_hodge needs d, e >= 1");
    long g = (d - 1) * (d - 2) / 2;
    long first = g + d * e - 1;
    if (first < 0) first = 0;
    return {static_cast<std::size_t>(first), static_cast<std::size_t>(g)};
}

std::size_t expected_q0_dim(int n, long d, long e) {
    if (n == 2) return curve_open_hodge(d, e).first;
    auto binom = [](long top, long bottom) -> long {
        if (bottom < 0 || top < bottom) return 0;
        long r = 1;
        for (long i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
        return r;
    };
    return static_cast<std::size_t>(binom(d + e - 1, n) - binom(e - 1, n));
}

bool dims_agree(const std::vector<std::size_t>& base, const std::vector<std::size_t>& modular) {
    return base == modular;
}

const std::vector<GeneratorVariant>& selection_order() {
    // PlusF first: it is the one candidate observed to pass on every desk
    // instance, including boundary degree e >= 2.
    static const std::vector<GeneratorVariant> order = {
        GeneratorVariant::PlusF, GeneratorVariant::PlusMuFNuG, GeneratorVariant::PlusW,
        GeneratorVariant::PlusFG, GeneratorVariant::PaperMinimal};
    return order;
}

namespace {

VariantMeasurement measure(const RingInstance<RationalField>& inst, std::uint64_t seed) {
    VariantMeasurement m;
    m.variant = inst.variant();
    m.seed = seed;
    int n = inst.n();
    long S = inst.sigma();
    long lo = inst.d() - n - 1, hi = lo + inst.e();

    m.b0_target = expected_q0_dim(n, inst.d(), inst.e());
    m.b0_dim = inst.dim_B(SliceKey{0, inst.d() + inst.e() - n - 1});
    m.socle_dim = inst.dim_B(SliceKey{n - 1, S});

    m.symmetry_ok = true;
    for (long l = lo; l <= hi; ++l) {
        for (int q = 0; q <= n - 1; ++q) {
            std::size_t a = inst.dim_B(SliceKey{q, l});
            std::size_t b = inst.dim_B(SliceKey{n - 1 - q, S - l});
            if (a != b) {
                m.symmetry_ok = false;
                m.asymmetries.emplace_back(q, l, a, b);
            }
        }
    }

    bool targets = (m.b0_dim == m.b0_target) && (m.socle_dim == 1) && m.symmetry_ok;
    if (targets) {
        std::vector<SliceKey> keys;
        for (long l = lo; l <= hi; ++l)
            for (int q = 0; q <= n - 1; ++q) keys.push_back(SliceKey{q, l});
        m.crosscheck_ok = crosscheck_fields(inst, keys, seed ^ 0xC2B2AE3D27D4EB4Full).ok;
    }
    m.passed = targets && m.crosscheck_ok;
    return m;
}

CalibrationReport finish(CalibrationReport rep) {
    for (GeneratorVariant v : all_variants()) {
        bool all_pass = true;
        bool seen = false;
        for (const VariantMeasurement& m : rep.measurements) {
            if (m.variant != v) continue;
            seen = true;
            all_pass = all_pass && m.passed;
        }
        if (seen && all_pass) rep.passing.push_back(v);
    }
    for (GeneratorVariant v : selection_order()) {
        if (std::find(rep.passing.begin(), rep.passing.end(), v) != rep.passing.end()) {
            rep.selected = v;
            break;
        }
    }
    rep.regularity_ok = !rep.passing.empty();
    return rep;
}

}  // namespace

CalibrationReport calibrate(int n, long d, long e, const std::vector<std::uint64_t>& seeds,
                            long degree_cap) {
    if (seeds.empty()) throw ContractError("calibrate needs at least one seed");
    CalibrationReport rep;
    rep.n = n;
    rep.d = d;
    rep.e = e;
    rep.seeds = seeds;
    RationalField k;
    for (std::uint64_t seed : seeds) {
        for (GeneratorVariant v : all_variants()) {
            auto inst = RingInstance<RationalField>::generic(k, n, d, e, v, seed, degree_cap);
            rep.measurements.push_back(measure(inst, seed));
        }
    }
    return finish(std::move(rep));
}

CalibrationReport calibrate_pair(int n, long d, long e, const Poly<RationalField>& F,
                                 const Poly<RationalField>& G, long degree_cap) {
    CalibrationReport rep;
    rep.n = n;
    rep.d = d;
    rep.e = e;
    rep.explicit_pair = true;
    RationalField k;
    for (GeneratorVariant v : all_variants()) {
        RingInstance<RationalField> inst(k, n, d, e, v, F, G, std::nullopt, degree_cap);
        rep.measurements.push_back(measure(inst, 0));
    }
    return finish(std::move(rep));
}

std::string format_calibration(const CalibrationReport& rep) {
    std::ostringstream os;
    os << "calibration on (n,d,e) = (" << rep.n << "," << rep.d << "," << rep.e << ")";
    if (rep.explicit_pair) os << " with an explicit pair";
    else {
        os << " with seeds";
        for (std::uint64_t s : rep.seeds) os << " " << s;
    }
    os << "\n";
    os << "  variant       seed  dimB0  target  socle  symmetric  crosscheck  pass\n";
    for (const VariantMeasurement& m : rep.measurements) {
        std::ostringstream line;
        line << "  " << variant_name(m.variant);
        while (line.str().size() < 16) line << ' ';
        line << m.seed << "  " << m.b0_dim << "  " << m.b0_target << "  " << m.socle_dim << "  "
             << (m.symmetry_ok ? "yes" : "no") << "  "
             << (m.crosscheck_ok ? "yes" : (m.passed || m.socle_dim == 1 ? "no" : "-")) << "  "
             << (m.passed ? "PASS" : "fail");
        os << line.str() << "\n";
        for (auto [q, l, a, b] : m.asymmetries)
            os << "      dim B_" << q << "(" << l << ") = " << a << " but dual dim = " << b << "\n";
    }
    if (rep.selected) os << "  selected variant: " << variant_name(*rep.selected) << "\n";
    else os << "  no variant passes every oracle target\n";
    return os.str();
}

}  // namespace jacring::oracles
