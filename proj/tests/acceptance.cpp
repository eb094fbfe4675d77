// Acceptance suite: every numbered criterion runs at its stated tolerance and
// prints a single PASS/FAIL line; the exit code is nonzero when any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "jacring/criteria.hpp"
#include "jacring/fermat.hpp"
#include "jacring/oracles.hpp"
#include "jacring/ring.hpp"

using namespace jacring;

namespace {

const RationalField Q;
const GaussianRationalField Qi;

struct Outcome {
    int id;
    std::string name;
    bool passed;
    double seconds;
    std::vector<std::string> details;
};

struct Harness {
    std::vector<Outcome> outcomes;
    std::ostringstream trace;  // canonical record of every measured value

    void run(int id, const std::string& name, double budget_seconds,
             const std::function<void(Outcome&)>& body) {
        Outcome o{id, name, true, 0.0, {}};
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(o);
        } catch (const std::exception& ex) {
            o.passed = false;
            o.details.push_back(std::string("exception: ") + ex.what());
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.seconds >= budget_seconds) {
            o.passed = false;
            o.details.push_back("runtime " + std::to_string(o.seconds) + " s exceeded the budget " +
                                std::to_string(budget_seconds) + " s");
        }
        outcomes.push_back(std::move(o));
    }

    int report() {
        bool all = true;
        for (const Outcome& o : outcomes) {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(2);
            line << (o.passed ? "PASS" : "FAIL") << " criterion " << o.id << " (" << o.name << ") ["
                 << o.seconds << " s]";
            std::cout << line.str() << "\n";
            for (const std::string& d : o.details) std::cout << "      " << d << "\n";
            all = all && o.passed;
        }
        std::cout << (all ? "ACCEPTANCE: all criteria passed\n" : "ACCEPTANCE: FAILURES above\n");
        return all ? 0 : 1;
    }
};

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond) {
        o.passed = false;
        o.details.push_back("failed: " + what);
    }
}

// ---------------------------------------------------------------------------
// shared fixtures
// ---------------------------------------------------------------------------

const std::vector<std::uint64_t> kSeeds = {1, 2, 3};
constexpr std::uint64_t kPrimeSeed = 20240817;

RingInstance<RationalField> calibrated(int n, long d, long e, std::uint64_t seed) {
    return RingInstance<RationalField>::generic(Q, n, d, e, GeneratorVariant::PlusF, seed);
}

/// The two calibrated desk instances, shared so quotient pieces computed by
/// one criterion are reused by the next.
struct Fixtures {
    RingInstance<RationalField> c231 = calibrated(2, 3, 1, kSeeds[0]);
    RingInstance<RationalField> c232 = calibrated(2, 3, 2, kSeeds[0]);

    RingInstance<RationalField>& get(long e) { return e == 1 ? c231 : c232; }
};

// keys collected by criteria 3/4 and re-checked mod p by criterion 9
std::vector<std::tuple<int, long, long, SliceKey>> g_checked_keys;  // (n, d, e, key)

// ---------------------------------------------------------------------------
// criterion bodies
// ---------------------------------------------------------------------------

void criterion1_grading(Outcome& o, std::ostringstream& trace) {
    SplitMix64 rng(101);
    const std::vector<std::tuple<int, long, long>> instances = {{2, 3, 1}, {2, 4, 2}, {3, 3, 2}};
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        auto [n, d, e] = instances[rng.below(instances.size())];
        RingInstance<RationalField> inst =
            RingInstance<RationalField>::generic(Q, n, d, e, GeneratorVariant::PlusF, 1);
        int q = static_cast<int>(rng.below(2 * n + 2)) - 1;
        long l = static_cast<long>(rng.below(16)) - 5;
        SliceKey key{q, l};
        std::size_t formula = inst.slice_dimension(key);
        std::size_t enumerated = inst.slice_basis(key).size();
        expect(o, formula == enumerated,
               "slice_dimension disagrees with enumeration at (n,d,e,q,l) = (" + std::to_string(n) +
                   "," + std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(q) + "," +
                   std::to_string(l) + ")");
        trace << "C1 " << n << d << e << " " << q << " " << l << " " << formula << "\n";
        ++checked;
    }
    o.details.push_back(std::to_string(checked) + " random keys checked against enumeration");
}

void criterion2_calibration(Outcome& o, std::ostringstream& trace) {
    oracles::CalibrationReport rep = oracles::calibrate(2, 3, 1, kSeeds);
    std::size_t minimal_socle = 0;
    bool extended_ok = false;
    for (const auto& m : rep.measurements) {
        trace << "C2 " << variant_name(m.variant) << " seed " << m.seed << " b0 " << m.b0_dim
              << " socle " << m.socle_dim << " sym " << m.symmetry_ok << "\n";
        if (m.variant == GeneratorVariant::PaperMinimal) {
            minimal_socle = m.socle_dim;
            expect(o, m.socle_dim >= 3,
                   "minimal-variant socle dimension " + std::to_string(m.socle_dim) + " < 3");
        }
        if (m.variant != GeneratorVariant::PaperMinimal && m.socle_dim == 1 && m.b0_dim == 3 &&
            m.passed)
            extended_ok = true;
    }
    o.details.push_back("minimal-variant socle dimension measured exactly: " +
                        std::to_string(minimal_socle) + " (the duality theorem needs 1)");
    expect(o, extended_ok, "no extended variant reached socle 1 with dim B_0(1) = 3");
    expect(o, rep.selected.has_value(), "calibration selected no variant");
    if (rep.selected) {
        o.details.push_back("calibrate selected " + variant_name(*rep.selected));
        expect(o, *rep.selected != GeneratorVariant::PaperMinimal,
               "calibration selected the minimal variant");
    } else {
        o.details.push_back(oracles::format_calibration(rep));  // the full dim table
    }
}

void criterion3_duality(Outcome& o, std::ostringstream& trace, Fixtures& fx) {
    for (auto [n, d, e] : std::vector<std::tuple<int, long, long>>{{2, 3, 1}, {2, 3, 2}}) {
        RingInstance<RationalField>& inst = fx.get(e);
        long S = inst.sigma();
        long lo = d - n - 1, hi = lo + e;

        // dimension symmetry over Q
        for (long l = lo; l <= hi; ++l) {
            for (int q = 0; q <= n - 1; ++q) {
                std::size_t a = inst.dim_B(SliceKey{q, l});
                std::size_t b = inst.dim_B(SliceKey{n - 1 - q, S - l});
                expect(o, a == b,
                       "dim B_" + std::to_string(q) + "(" + std::to_string(l) + ") = " +
                           std::to_string(a) + " but the dual dimension is " + std::to_string(b) +
                           " on (" + std::to_string(n) + "," + std::to_string(d) + "," +
                           std::to_string(e) + ")");
                trace << "C3 dims " << n << d << e << " " << q << " " << l << " " << a << "\n";
                g_checked_keys.emplace_back(n, d, e, SliceKey{q, l});
            }
        }

        // pairing at full rank over three seeded primes > 10^6
        SplitMix64 rng(kPrimeSeed ^ (static_cast<std::uint64_t>(d) << 8) ^ static_cast<std::uint64_t>(e));
        for (int slot = 0; slot < 3; ++slot) {
            std::uint64_t p = draw_prime(rng);
            RingInstance<SmallPrimeField> red = reduce_instance(inst, p);
            for (long l = lo; l <= hi; ++l) {
                for (int q = 0; q <= n - 1; ++q) {
                    PairingReport<SmallPrimeField> rep = red.pairing_report(q, l);
                    expect(o, rep.socle_dim == 1,
                           "socle dimension " + std::to_string(rep.socle_dim) + " mod " +
                               std::to_string(p));
                    expect(o, rep.perfect,
                           "pairing not perfect at q=" + std::to_string(q) + " l=" +
                               std::to_string(l) + " mod " + std::to_string(p) + " on (" +
                               std::to_string(n) + "," + std::to_string(d) + "," +
                               std::to_string(e) + ")");
                    trace << "C3 pairing " << n << d << e << " p" << p << " " << q << " " << l
                          << " rank " << rep.rank << "\n";
                }
            }
        }
    }
}

void criterion4_hodgefil(Outcome& o, std::ostringstream& trace, Fixtures& fx) {
    int mismatches = 0;
    for (auto [n, d, e] : std::vector<std::tuple<int, long, long>>{{2, 3, 1}, {2, 3, 2}}) {
        RingInstance<RationalField>& inst = fx.get(e);
        long lo = d - n - 1, hi = lo + e;
        for (int p = 0; p <= n - 1; ++p) {
            for (long l = lo; l <= hi; ++l) {
                bool predicted = criteria::hodgefil_predict(n, d, e, p, l);
                bool measured = inst.dim_B(SliceKey{p, l}) > 0;
                if (predicted != measured) ++mismatches;
                trace << "C4 " << n << d << e << " " << p << " " << l << " " << predicted << " "
                      << measured << "\n";
            }
        }
    }
    expect(o, mismatches == 0,
           std::to_string(mismatches) + " prediction/measurement mismatches in the window sweep");
    o.details.push_back("window sweep of the nonvanishing predicate: zero mismatches required");
}

void criterion5_consmac(Outcome& o, std::ostringstream& trace, Fixtures& fx) {
    int true_tuples = 0;
    for (auto [n, d, e] : std::vector<std::tuple<int, long, long>>{{2, 3, 1}, {2, 3, 2}}) {
        RingInstance<RationalField>& inst = fx.get(e);
        long S = inst.sigma();
        long dm = std::min(d, e);
        long lo = d - n - 1, hi = lo + e;
        for (int p = 0; p <= n - 1; ++p) {
            for (int pp = 0; pp <= n - 1; ++pp) {
                for (long l = lo - 2; l <= hi + 2; ++l) {
                    for (long lp = -dm * pp - 2; lp <= S - l + 2; ++lp) {
                        if (!criteria::consmac_conditions(n, d, e, p, pp, l, lp).verdict) continue;
                        ++true_tuples;
                        std::size_t kernel = inst.mult_map_kernel(p, l, pp, lp);
                        expect(o, kernel == 0,
                               "kernel " + std::to_string(kernel) + " at verdict-true (p,p',l,l') = (" +
                                   std::to_string(p) + "," + std::to_string(pp) + "," +
                                   std::to_string(l) + "," + std::to_string(lp) + ") on (" +
                                   std::to_string(n) + "," + std::to_string(d) + "," +
                                   std::to_string(e) + ")");
                        trace << "C5 true " << n << d << e << " " << p << " " << pp << " " << l << " "
                              << lp << " " << kernel << "\n";
                    }
                }
            }
        }
    }
    o.details.push_back(std::to_string(true_tuples) + " verdict-true tuples all gave kernel 0");

    // verdict-false controls: recorded, not asserted; a slice-size guard
    // keeps the sampled pieces at desk scale
    RingInstance<RationalField>& inst = fx.c232;
    SplitMix64 rng(505);
    int controls = 0;
    std::ostringstream control_line;
    while (controls < 20) {
        int p = static_cast<int>(rng.below(2));
        int pp = static_cast<int>(rng.below(2));
        long l = static_cast<long>(rng.below(7)) - 2;
        long lp = static_cast<long>(rng.below(7)) - 3;
        if (criteria::consmac_conditions(2, 3, 2, p, pp, l, lp).verdict) continue;
        if (inst.slice_dimension(SliceKey{p + pp, l + lp}) > 200) continue;
        std::size_t kernel = inst.mult_map_kernel(p, l, pp, lp);
        trace << "C5 ctrl " << p << " " << pp << " " << l << " " << lp << " " << kernel << "\n";
        control_line << kernel << (controls + 1 < 20 ? "," : "");
        ++controls;
    }
    o.details.push_back("20 verdict-false control kernels (recorded): " + control_line.str());
}

void criterion6_closed_oracle(Outcome& o, std::ostringstream& trace) {
    std::size_t v1 = oracles::closed_griffiths_dim(4, 5, 1);
    std::size_t v2 = oracles::closed_griffiths_dim(4, 3, 1);
    std::size_t v3 = oracles::closed_griffiths_dim(4, 5, 0);
    expect(o, v1 == 101, "closed_griffiths_dim(4,5,1) = " + std::to_string(v1) + ", expected 101");
    expect(o, v2 == 5, "closed_griffiths_dim(4,3,1) = " + std::to_string(v2) + ", expected 5");
    expect(o, v3 == 1, "closed_griffiths_dim(4,5,0) = " + std::to_string(v3) + ", expected 1");
    trace << "C6 " << v1 << " " << v2 << " " << v3 << "\n";

    long T = oracles::closed_socle_degree(2, 3);
    for (long k = 0; k <= T; ++k) {
        std::size_t a = oracles::closed_ring_degree_dim(2, 3, k);
        std::size_t b = oracles::closed_ring_degree_dim(2, 3, T - k);
        expect(o, a == b,
               "Macaulay symmetry fails at degree " + std::to_string(k) + ": " + std::to_string(a) +
                   " vs " + std::to_string(b));
        trace << "C6 sym " << k << " " << a << "\n";
    }
    o.details.push_back("quintic 101 / cubic 5 / constants 1, symmetric dims across the full range");
}

void criterion7_fermat(Outcome& o, std::ostringstream& trace) {
    using namespace jacring::fermat;
    const GQ I = GaussianRational::i();
    auto gq = [](long re, long im = 0) { return GQ(Rational(re), Rational(im)); };

    // symbolic restriction: build the composed quadric over
    // Q[q01..q34, a, b, c, u, v] and match every displayed coefficient group
    {
        const int NV = 15, A = 10, B = 11, C = 12, U = 13, V = 14;
        auto var = [&](int i) {
            Monomial m(NV);
            m.exps[i] = 1;
            return Poly<RationalField>::term(Q, m, Q.one());
        };
        std::map<std::pair<int, int>, int> qslot;
        int slot = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) qslot[{i, j}] = slot++;
        std::vector<Poly<RationalField>> z = {var(U), poly_neg(Q, var(U)),
                                              poly_mul(Q, var(A), var(V)),
                                              poly_mul(Q, var(B), var(V)),
                                              poly_mul(Q, var(C), var(V))};
        Poly<RationalField> composed(NV);
        for (auto& [ij, s] : qslot)
            composed = poly_add(Q, composed,
                                poly_mul(Q, var(s), poly_mul(Q, z[ij.first], z[ij.second])));

        // extract the (u-exp, v-exp) = (du, dv) part restricted to the terms
        // containing one of the listed q-variables
        auto part = [&](int du, int dv, std::vector<int> qvars) {
            Poly<RationalField> out(NV);
            for (const auto& [m, c] : composed.terms()) {
                if (m.exps[U] != du || m.exps[V] != dv) continue;
                bool keep = false;
                for (int qv : qvars) keep = keep || m.exps[qv] > 0;
                if (!keep) continue;
                Monomial mm = m;
                mm.exps[U] = 0;
                mm.exps[V] = 0;
                out.add_term(Q, mm, c);
            }
            return out;
        };
        auto q = [&](int i, int j) { return var(qslot.at({i, j})); };
        struct Group {
            const char* label;
            int du, dv;
            std::vector<int> qvars;
            Poly<RationalField> expected;
        };
        std::vector<Group> groups;
        groups.push_back({"u^2: -q01", 2, 0, {qslot[{0, 1}]}, poly_neg(Q, q(0, 1))});
        groups.push_back({"uv: a(q02-q12)", 1, 1, {qslot[{0, 2}], qslot[{1, 2}]},
                          poly_mul(Q, var(A), poly_sub(Q, q(0, 2), q(1, 2)))});
        groups.push_back({"uv: b(q03-q13)", 1, 1, {qslot[{0, 3}], qslot[{1, 3}]},
                          poly_mul(Q, var(B), poly_sub(Q, q(0, 3), q(1, 3)))});
        groups.push_back({"uv: c(q04-q14)", 1, 1, {qslot[{0, 4}], qslot[{1, 4}]},
                          poly_mul(Q, var(C), poly_sub(Q, q(0, 4), q(1, 4)))});
        groups.push_back({"v^2: ab q23", 0, 2, {qslot[{2, 3}]},
                          poly_mul(Q, poly_mul(Q, var(A), var(B)), q(2, 3))});
        groups.push_back({"v^2: ac q24", 0, 2, {qslot[{2, 4}]},
                          poly_mul(Q, poly_mul(Q, var(A), var(C)), q(2, 4))});
        groups.push_back({"v^2: bc q34", 0, 2, {qslot[{3, 4}]},
                          poly_mul(Q, poly_mul(Q, var(B), var(C)), q(3, 4))});
        for (const Group& g : groups) {
            bool match = part(g.du, g.dv, g.qvars).equals(Q, g.expected);
            expect(o, match, std::string("symbolic coefficient group mismatch: ") + g.label);
            trace << "C7 group " << g.label << " " << match << "\n";
        }
    }

    ConeLine line = cone_line(gq(1), gq(-1), gq(0));

    std::vector<GQ> functional = obstruction_functional(line);
    const auto& slots = SymQuadric::offdiagonal_slots();
    for (std::size_t s = 0; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        GQ expected = gq(0);
        if (i == 0 && j == 2) expected = gq(1);
        if (i == 0 && j == 3) expected = gq(-1);
        if (i == 1 && j == 2) expected = gq(-1);
        if (i == 1 && j == 3) expected = gq(1);
        expect(o, functional[s] == expected,
               "functional value at q" + std::to_string(i) + std::to_string(j));
        trace << "C7 r " << i << j << " " << to_string(functional[s]) << "\n";
    }
    std::size_t nonzero = 0;
    for (const GQ& v : functional) nonzero += v.is_zero() ? 0 : 1;
    expect(o, nonzero > 0, "functional vanishes identically");
    expect(o, oracles::fermat_ring_dim(2) == 10, "squarefree quadric model dimension");
    o.details.push_back("functional q02-q03-q12+q13 has kernel codimension 1 in the 10-dim model");

    GammaImage gamma = gamma_image(line);
    expect(o, gamma.cokernel_dim == 1, "square-image cokernel dimension != 1");
    expect(o, gamma.uv_spans_cokernel, "uv does not represent the cokernel");

    NormalKernel nk = normal_kernel(line);
    expect(o, nk.kernel.size() == 1, "twisted normal sections not one-dimensional");
    expect(o, nk.kernel.size() == 1 && nk.kernel[0] == std::array<GQ, 3>{gq(0), gq(0), gq(1)},
           "kernel is not spanned by the fifth coordinate direction");

    Point extra = {gq(0), gq(1), gq(1), gq(0), gq(0)};
    ResidualConic conic = residual_conic(line, extra);
    expect(o,
           conic.q_on_line[0] == gq(3) && conic.q_on_line[1] == gq(0) && conic.q_on_line[2] == gq(3),
           "residual quadric on the line is not 3(lambda^2 + mu^2)");
    Point p0 = {gq(1), gq(-1), I, -I, gq(0)};
    Point p1 = {gq(1), gq(-1), -I, I, gq(0)};
    bool pts = (points_projectively_equal(conic.points[0], p0) &&
                points_projectively_equal(conic.points[1], p1)) ||
               (points_projectively_equal(conic.points[0], p1) &&
                points_projectively_equal(conic.points[1], p0));
    expect(o, pts, "residual intersection points differ from the expected conjugate pair");

    LinearForm ell = {gq(1), gq(0), gq(0), I, gq(0)};
    expect(o, linear_form_qualifies(ell, {p1}, p0), "z0 + i z3 fails the separation conditions");
    auto found = linear_form_search({p1}, p0);
    expect(o, found.has_value(), "linear form search found nothing");

    WedgeDetail wd = wedge_check_detail(line, nk.ambient[0], p0, conic);
    expect(o, wd.nonzero, "wedge determinant vanishes");
    for (unsigned choice : {1u, 2u, 3u}) {
        WedgeDetail alt = wedge_check_detail(line, nk.ambient[0], p0, conic, std::nullopt, choice);
        expect(o, alt.nonzero == wd.nonzero, "wedge verdict depends on the quotient basis");
    }
    trace << "C7 wedge " << to_string(wd.determinant) << "\n";

    FermatReport rep = clemens_certificate(line, extra);
    expect(o, rep.certificate, "certificate is false on the worked configuration");
    o.details.push_back("wedge determinant " + to_string(wd.determinant) +
                        " (component convention " + to_string(wd.component_determinant) + ")");
}

void criterion8_golden(Outcome& o, std::ostringstream& trace) {
    std::ostringstream expected;
    for (auto [m, k] : {std::pair<long, long>{2, 1}, {1, 0}, {0, 0}})
        expected << criteria::format_twists(criteria::twist_exponents(m, k), m, k);
    expected << "\n";
    for (auto [n, m, k] : {std::tuple<int, long, long>{3, 2, 1}, {3, 1, 0}, {3, 1, 2}})
        expected << criteria::format_vanishing(criteria::vanishing_report(n, m, k));
    expected << "\n";
    for (auto [m, k] : {std::pair<long, long>{2, 1}, {4, 2}, {3, 1}})
        expected << criteria::format_symmetric(criteria::duality_symmetric(m, k));

    std::ifstream golden(std::string(JACRING_TEST_DATA_DIR) + "/predicate_tables.golden");
    expect(o, golden.good(), "golden file missing");
    std::stringstream content;
    content << golden.rdbuf();
    expect(o, content.str() == expected.str(), "predicate tables differ from the golden file");
    trace << "C8 golden bytes " << content.str().size() << "\n";
    o.details.push_back("twist, vanishing and duality tables match the golden file byte for byte");
}

void criterion9_determinism(Outcome& o, const std::string& first_trace,
                            const std::string& second_trace) {
    expect(o, first_trace == second_trace,
           "re-running the suite with identical seeds changed some recorded value");
    o.details.push_back("suite trace of " + std::to_string(first_trace.size()) +
                        " bytes is identical across two runs");

    // every key the duality/window sweeps touched agrees with its
    // prime-field reduction
    SplitMix64 rng(kPrimeSeed + 7);
    std::map<std::tuple<int, long, long>, std::vector<SliceKey>> grouped;
    for (auto [n, d, e, key] : g_checked_keys) grouped[{n, d, e}].push_back(key);
    for (auto& [nde, keys] : grouped) {
        auto [n, d, e] = nde;
        RingInstance<RationalField> inst = calibrated(n, d, e, kSeeds[0]);
        std::uint64_t p = draw_prime(rng);
        RingInstance<SmallPrimeField> red = reduce_instance(inst, p);
        for (const SliceKey& key : keys) {
            expect(o, inst.dim_B(key) == red.dim_B(key),
                   "rational and mod-" + std::to_string(p) + " dimensions differ at q=" +
                       std::to_string(key.q) + " l=" + std::to_string(key.l));
        }
    }
    o.details.push_back("rational dims equal prime-field dims on every tested key");
}

void run_measured_criteria(Harness& h, std::ostringstream& trace) {
    Fixtures fx;
    h.run(1, "grading suite", 1.0, [&](Outcome& o) { criterion1_grading(o, trace); });
    h.run(2, "socle and calibration", 5.0, [&](Outcome& o) { criterion2_calibration(o, trace); });
    h.run(3, "duality suite", 30.0, [&](Outcome& o) { criterion3_duality(o, trace, fx); });
    h.run(4, "nonvanishing agreement", 30.0, [&](Outcome& o) { criterion4_hodgefil(o, trace, fx); });
    h.run(5, "injectivity agreement", 60.0, [&](Outcome& o) { criterion5_consmac(o, trace, fx); });
    h.run(6, "closed-ring oracle", 20.0, [&](Outcome& o) { criterion6_closed_oracle(o, trace); });
    h.run(7, "worked example", 2.0, [&](Outcome& o) { criterion7_fermat(o, trace); });
    h.run(8, "predicate tables", 5.0, [&](Outcome& o) { criterion8_golden(o, trace); });
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    Harness h;

    std::ostringstream trace_a;
    run_measured_criteria(h, trace_a);

    // second pass for the determinism criterion: identical seeds, fresh state
    Harness shadow;
    std::ostringstream trace_b;
    g_checked_keys.clear();
    run_measured_criteria(shadow, trace_b);

    h.run(9, "determinism and field agnosticism", 120.0,
          [&](Outcome& o) { criterion9_determinism(o, trace_a.str(), trace_b.str()); });

    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);
    std::cout << "total wall clock: " << total << " s\n";
    int rc = h.report();
    if (total >= 120.0) {
        std::cout << "FAIL whole-suite wall clock exceeded 2 minutes\n";
        rc = 1;
    }
    return rc;
}
