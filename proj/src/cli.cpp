#include "jacring/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "jacring/cache.hpp"
#include "jacring/criteria.hpp"
#include "jacring/fermat.hpp"
#include "jacring/instance_io.hpp"
#include "jacring/oracles.hpp"
#include "jacring/version.hpp"

namespace jacring::cli {

namespace {

using io::json;

long long now_seconds() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

void write_json_report(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ContractError("cannot write report to " + path);
    out << j.dump(2) << "\n";
}

json report_skeleton(const std::string& command) {
    json j;
    j["command"] = command;
    j["engine_version"] = kEngineVersion;
    j["timestamp"] = now_seconds();
    return j;
}

/// Gaussian rational literals: "3", "-1/2", "i", "-i", "2i", "1+2i", "1-2/3i".
GaussianRational parse_gaussian(const std::string& s) {
    if (s.empty()) throw ContractError("empty coefficient literal");
    auto parse_im_chunk = [](std::string chunk) -> Rational {
        if (chunk.empty() || chunk.back() != 'i') throw ContractError("bad imaginary chunk: " + chunk);
        chunk.pop_back();
        if (chunk.empty() || chunk == "+") return Rational(1);
        if (chunk == "-") return Rational(-1);
        return parse_rational(chunk);
    };
    // split at a sign that separates the two components
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
            std::string re = s.substr(0, i), im = s.substr(i);
            if (im.back() == 'i') return {parse_rational(re), parse_im_chunk(im)};
        }
    }
    if (s.back() == 'i') return {Rational(0), parse_im_chunk(s)};
    return {parse_rational(s), Rational(0)};
}

struct InstanceOptions {
    std::string instance_path;
    int n = 0;
    long d = 0, e = 0;
    std::string field;
    std::string variant;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long degree_cap = 0;

    io::InstanceSpec resolve() const {
        io::InstanceSpec spec;
        if (!instance_path.empty()) {
            spec = io::parse_instance_file(instance_path);
        } else {
            if (n == 0) throw ContractError("need --instance or --n/--d/--e");
            spec.n = n;
            spec.d = d;
            spec.e = e;
            spec.seed = 1;
        }
        if (n != 0 && instance_path.empty()) {
            if (d == 0 || e == 0) throw ContractError("need --d and --e together with --n");
        }
        if (!field.empty()) spec.field = io::parse_field(field);
        if (!variant.empty()) {
            auto v = variant_from_string(variant);
            if (!v) throw ContractError("unknown variant '" + variant + "'");
            spec.variant = *v;
        }
        if (seed_set) {
            spec.seed = seed;
            spec.explicit_coeffs.reset();
        }
        if (degree_cap > 0) spec.degree_cap = degree_cap;
        return spec;
    }

    void attach(CLI::App* cmd, bool allow_inline = true) {
        cmd->add_option("--instance", instance_path, "instance file (JSON)");
        if (allow_inline) {
            cmd->add_option("--n", n, "ambient projective dimension");
            cmd->add_option("--d", d, "degree of the hypersurface form F");
            cmd->add_option("--e", e, "degree of the boundary form G");
        }
        cmd->add_option("--field", field, "Q | Qi | Fp:<prime>");
        cmd->add_option("--variant", variant, "generator-set variant");
        cmd->add_option("--seed", seed, "seed for generic coefficients")->each([this](const std::string&) {
            seed_set = true;
        });
        cmd->add_option("--degree-cap", degree_cap, "combinatorial degree guard");
    }
};

struct DimsRow {
    int q;
    long l;
    std::size_t dim;
    std::size_t rank;
    bool cached;
};

template <class K>
std::vector<DimsRow> collect_dims(const RingInstance<K>& inst, int qmin, int qmax, long lmin,
                                  long lmax, const std::string& hash,
                                  const std::optional<cache::SliceCache>& slice_cache) {
    std::vector<DimsRow> rows;
    for (int q = qmin; q <= qmax; ++q) {
        for (long l = lmin; l <= lmax; ++l) {
            DimsRow row{q, l, 0, 0, false};
            if (slice_cache) {
                if (auto hit = slice_cache->get(hash, q, l)) {
                    row.dim = hit->dim;
                    row.rank = hit->rank;
                    row.cached = true;
                }
            }
            if (!row.cached) {
                const QuotientPiece<K>& piece = inst.quotient_piece(SliceKey{q, l});
                row.dim = piece.dim();
                row.rank = piece.ideal_rank;
                if (slice_cache)
                    slice_cache->put(cache::CacheEntry{hash, q, l, row.dim, row.rank, 0, kEngineVersion});
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void print_dims_table(std::ostream& out, const std::vector<DimsRow>& rows, int qmin, int qmax,
                      long lmin, long lmax) {
    out << std::setw(6) << "";
    for (long l = lmin; l <= lmax; ++l) out << std::setw(8) << ("l=" + std::to_string(l));
    out << "\n";
    for (int q = qmin; q <= qmax; ++q) {
        out << std::setw(6) << ("q=" + std::to_string(q));
        for (long l = lmin; l <= lmax; ++l) {
            for (const DimsRow& r : rows)
                if (r.q == q && r.l == l) out << std::setw(8) << r.dim;
        }
        out << "\n";
    }
}

int cmd_ring_dims(const InstanceOptions& opts, std::optional<long> lmin_opt,
                  std::optional<long> lmax_opt, std::optional<int> qmax_opt,
                  const std::string& json_path, const std::string& cache_dir, std::ostream& out) {
    io::InstanceSpec spec = opts.resolve();
    io::AnyInstance any = io::build_instance(spec);
    std::string hash = io::instance_hash(spec);
    std::optional<cache::SliceCache> slice_cache;
    if (!cache_dir.empty()) slice_cache.emplace(cache_dir);

    criteria::Window w = criteria::duality_window(spec.n, spec.d, spec.e);
    long lmin = lmin_opt.value_or(w.lo), lmax = lmax_opt.value_or(w.hi);
    int qmin = 0, qmax = qmax_opt.value_or(spec.n - 1);

    std::vector<DimsRow> rows = std::visit(
        [&](const auto& inst) { return collect_dims(inst, qmin, qmax, lmin, lmax, hash, slice_cache); },
        any);

    out << "instance n=" << spec.n << " d=" << spec.d << " e=" << spec.e
        << " field=" << io::field_to_string(spec.field) << " variant=" << variant_name(spec.variant)
        << " (hash " << hash << ")\n";
    out << "Sigma = " << criteria::sigma(spec.n, spec.d, spec.e) << "   window = [" << w.lo << ", "
        << w.hi << "]\n";
    out << "dim B_q(l):\n";
    print_dims_table(out, rows, qmin, qmax, lmin, lmax);

    if (!json_path.empty()) {
        json j = report_skeleton("ring dims");
        j["instance"] = io::instance_echo(spec);
        json data = json::array();
        for (const DimsRow& r : rows)
            data.push_back({{"q", r.q}, {"l", r.l}, {"dim", r.dim}, {"ideal_rank", r.rank},
                            {"from_cache", r.cached}});
        j["dims"] = std::move(data);
        write_json_report(j, json_path);
    }
    return 0;
}

int cmd_ring_pairing(const InstanceOptions& opts, const std::string& json_path, std::ostream& out) {
    io::InstanceSpec spec = opts.resolve();
    io::AnyInstance any = io::build_instance(spec);
    criteria::Window w = criteria::duality_window(spec.n, spec.d, spec.e);

    bool all_perfect = true;
    json reports = json::array();
    out << "pairing B_q(l) x B_{n-1-q}(Sigma-l) -> B_{n-1}(Sigma) on n=" << spec.n
        << " d=" << spec.d << " e=" << spec.e << " variant=" << variant_name(spec.variant) << "\n";
    std::visit(
        [&](const auto& inst) {
            using KF = std::decay_t<decltype(inst.field())>;
            for (long l = w.lo; l <= w.hi; ++l) {
                for (int q = 0; q <= spec.n - 1; ++q) {
                    PairingReport<KF> rep = inst.pairing_report(q, l);
                    all_perfect = all_perfect && rep.perfect;
                    out << "  q=" << q << " l=" << l << "  dims " << rep.left_dim << " x "
                        << rep.right_dim << "  socle " << rep.socle_dim << "  rank " << rep.rank
                        << "  " << (rep.perfect ? "perfect" : "NOT perfect") << "\n";
                    for (const std::string& n : rep.notes) out << "    note: " << n << "\n";
                    reports.push_back(io::pairing_to_json(inst.field(), rep));
                }
            }
        },
        any);
    if (!json_path.empty()) {
        json j = report_skeleton("ring pairing");
        j["instance"] = io::instance_echo(spec);
        j["pairings"] = std::move(reports);
        j["all_perfect"] = all_perfect;
        write_json_report(j, json_path);
    }
    out << (all_perfect ? "all pairings perfect\n" : "pairing check FAILED\n");
    return all_perfect ? 0 : 1;
}

int cmd_ring_hodge(const InstanceOptions& opts, long twist, const std::string& json_path,
                   std::ostream& out) {
    io::InstanceSpec spec = opts.resolve();
    io::AnyInstance any = io::build_instance(spec);
    std::vector<std::size_t> dims =
        std::visit([&](const auto& inst) { return inst.hodge_numbers(twist); }, any);
    out << "open hypersurface Hodge numbers at twist " << twist << " (q = 0.." << spec.n - 1
        << "): [";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? ", " : "") << dims[i];
    out << "]\n";
    if (!json_path.empty()) {
        json j = report_skeleton("ring hodge");
        j["instance"] = io::instance_echo(spec);
        j["twist"] = twist;
        j["dims"] = dims;
        write_json_report(j, json_path);
    }
    return 0;
}

int cmd_ring_calibrate(const InstanceOptions& opts, const std::string& seeds_csv,
                       const std::string& json_path, std::ostream& out) {
    io::InstanceSpec spec = opts.resolve();
    oracles::CalibrationReport rep;
    if (spec.explicit_coeffs) {
        RationalField k;
        std::size_t nv = static_cast<std::size_t>(spec.n) + 1;
        auto F = io::poly_from_json(k, spec.explicit_coeffs->at("F"), nv);
        auto G = io::poly_from_json(k, spec.explicit_coeffs->at("G"), nv);
        rep = oracles::calibrate_pair(spec.n, spec.d, spec.e, F, G, spec.degree_cap);
    } else {
        std::vector<std::uint64_t> seeds;
        std::stringstream ss(seeds_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) seeds.push_back(std::stoull(item));
        }
        if (seeds.empty()) seeds = {1, 2, 3};
        rep = oracles::calibrate(spec.n, spec.d, spec.e, seeds, spec.degree_cap);
    }
    out << oracles::format_calibration(rep);
    if (!json_path.empty()) {
        json j = report_skeleton("ring calibrate");
        j["instance"] = io::instance_echo(spec);
        j["calibration"] = io::calibration_to_json(rep);
        write_json_report(j, json_path);
    }
    return rep.selected ? 0 : 1;
}

int cmd_oracle_compare(const InstanceOptions& opts, const std::string& json_path,
                       std::ostream& out) {
    io::InstanceSpec spec = opts.resolve();
    if (spec.field.tag == io::FieldSpec::Tag::Fp)
        throw ContractError("oracle compare reduces to primes itself; give a Q or Qi instance");
    io::AnyInstance any = io::build_instance(spec);

    long t = spec.d + spec.e - spec.n - 1;
    std::size_t b0 = 0, socle = 0;
    oracles::CrosscheckReport cc;
    std::visit(
        [&](const auto& inst) {
            using KF = std::decay_t<decltype(inst.field())>;
            if constexpr (!std::is_same_v<KF, SmallPrimeField>) {
                b0 = inst.dim_B(SliceKey{0, t});
                socle = inst.dim_B(SliceKey{spec.n - 1, inst.sigma()});
                criteria::Window w = criteria::duality_window(spec.n, spec.d, spec.e);
                std::vector<SliceKey> keys;
                for (long l = w.lo; l <= w.hi; ++l)
                    for (int q = 0; q <= spec.n - 1; ++q) keys.push_back(SliceKey{q, l});
                cc = oracles::crosscheck_fields(inst, keys, spec.seed.value_or(1));
            }
        },
        any);

    std::size_t b0_target = oracles::expected_q0_dim(spec.n, spec.d, spec.e);
    bool ok = (b0 == b0_target) && (socle == 1) && cc.ok;
    out << "oracle comparison on n=" << spec.n << " d=" << spec.d << " e=" << spec.e << "\n";
    out << "  dim B_0(" << t << ") = " << b0 << "  oracle " << b0_target << "  "
        << (b0 == b0_target ? "ok" : "MISMATCH") << "\n";
    out << "  socle dim = " << socle << "  expected 1  " << (socle == 1 ? "ok" : "MISMATCH") << "\n";
    out << "  cross-field dims over primes";
    for (auto p : cc.primes) out << " " << p;
    out << ": " << (cc.ok ? "agree" : "DISAGREE") << " (" << cc.redraws << " redraws)\n";
    if (!json_path.empty()) {
        json j = report_skeleton("oracle compare");
        j["instance"] = io::instance_echo(spec);
        j["dim_B0"] = b0;
        j["target_B0"] = b0_target;
        j["socle_dim"] = socle;
        j["crosscheck"] = io::crosscheck_to_json(cc);
        j["ok"] = ok;
        write_json_report(j, json_path);
    }
    return ok ? 0 : 1;
}

int cmd_criteria_scan(int n, long d, long e, std::optional<int> pmin, std::optional<int> pmax,
                      std::optional<long> lmin, std::optional<long> lmax, std::optional<int> pp,
                      std::optional<long> lp, const std::string& json_path, std::ostream& out) {
    if (n < 2) throw ContractError("criteria scan needs n >= 2");
    criteria::Window w = criteria::duality_window(n, d, e);
    int p0 = pmin.value_or(0), p1 = pmax.value_or(n - 1);
    long l0 = lmin.value_or(w.lo), l1 = lmax.value_or(w.hi);

    json cells = json::array();
    out << "criteria scan on (n,d,e) = (" << n << "," << d << "," << e
        << "), Sigma = " << criteria::sigma(n, d, e) << ", window = [" << w.lo << ", " << w.hi
        << "]\n";
    for (int p = p0; p <= p1; ++p) {
        for (long l = l0; l <= l1; ++l) {
            criteria::CriterionReport rep = criteria::hodgefil_report(n, d, e, p, l);
            out << criteria::format_report(rep);
            json cell;
            cell["nonvanishing"] = {{"p", p}, {"l", l}, {"verdict", rep.verdict}};
            if (pp && lp) {
                criteria::CriterionReport cm = criteria::consmac_conditions(n, d, e, p, *pp, l, *lp);
                out << criteria::format_report(cm);
                cell["injectivity"] = {{"p'", *pp}, {"l'", *lp}, {"verdict", cm.verdict}};
            }
            cells.push_back(std::move(cell));
        }
        criteria::CriterionReport loci = criteria::hodge_loci_proper(n, d, e, p);
        out << criteria::format_report(loci);
        cells.push_back({{"properness", {{"p", p}, {"verdict", loci.verdict}}}});
    }
    if (!json_path.empty()) {
        json j = report_skeleton("criteria scan");
        j["inputs"] = {{"n", n}, {"d", d}, {"e", e}};
        j["cells"] = std::move(cells);
        write_json_report(j, json_path);
    }
    return 0;
}

int cmd_vanishing(int n, long m, long k, const std::string& json_path, std::ostream& out) {
    criteria::VanishingReport rep = criteria::vanishing_report(n, m, k);
    out << criteria::format_vanishing(rep);
    if (!json_path.empty()) {
        json j = report_skeleton("vanishing");
        j["inputs"] = {{"n", n}, {"m", m}, {"k", k}};
        json entries = json::array();
        for (const auto& en : rep.entries) {
            entries.push_back({{"j", en.j},
                               {"s", en.s},
                               {"rule", en.rule == criteria::VanishingCase::AmpleTwist    ? "ample_twist"
                                        : en.rule == criteria::VanishingCase::BoundaryZero ? "boundary_zero"
                                                                                           : "no_claim"},
                               {"vanishing", en.vanishing}});
        }
        j["entries"] = std::move(entries);
        j["h2_vanishes"] = rep.h2_vanishes;
        write_json_report(j, json_path);
    }
    return 0;
}

int cmd_duality(long m, long k, const std::string& json_path, std::ostream& out) {
    criteria::SymmetricDuality rep = criteria::duality_symmetric(m, k);
    out << criteria::format_symmetric(rep);
    criteria::TwistExponents tw = criteria::twist_exponents(m, k);
    out << criteria::format_twists(tw, m, k);
    if (!json_path.empty()) {
        json j = report_skeleton("duality");
        j["inputs"] = {{"m", m}, {"k", k}};
        j["holds"] = rep.holds;
        j["fano_table"] = rep.fano_table;
        j["note"] = rep.note;
        j["twist_exponents"] = {tw.s0, tw.s1, tw.s2, tw.s3};
        j["identifications"] = tw.identifications;
        write_json_report(j, json_path);
    }
    return 0;
}

int cmd_fermat_verify(const std::string& a_str, const std::string& b_str, const std::string& c_str,
                      const std::string& extra_csv, const std::string& json_path,
                      std::ostream& out) {
    GaussianRational a = parse_gaussian(a_str), b = parse_gaussian(b_str), c = parse_gaussian(c_str);
    fermat::Point extra = {GaussianRational(0), GaussianRational(1), GaussianRational(1),
                           GaussianRational(0), GaussianRational(0)};
    if (!extra_csv.empty()) {
        std::stringstream ss(extra_csv);
        std::string item;
        int idx = 0;
        while (std::getline(ss, item, ',') && idx < 5) extra[idx++] = parse_gaussian(item);
        if (idx != 5) throw ContractError("--extra needs five comma-separated coordinates");
    }
    fermat::ConeLine line = fermat::cone_line(a, b, c);
    fermat::FermatReport rep = fermat::clemens_certificate(line, extra);
    out << fermat::format_report(rep);
    if (!json_path.empty()) {
        json j = report_skeleton("fermat verify");
        j["line"] = {{"a", to_string(rep.a)}, {"b", to_string(rep.b)}, {"c", to_string(rep.c)}};
        j["cubic_condition"] = rep.cubic_condition;
        j["linear_sum_zero"] = rep.linear_sum_zero;
        json functional = json::array();
        for (const auto& v : rep.functional) functional.push_back(to_string(v));
        j["obstruction_functional"] = std::move(functional);
        j["functional_kernel_codim"] = rep.functional_kernel_codim;
        j["gamma_dim"] = rep.gamma_dim;
        j["gamma_cokernel_dim"] = rep.gamma_cokernel_dim;
        auto point_json = [](const fermat::Point& p) {
            json arr = json::array();
            for (const auto& x : p) arr.push_back(to_string(x));
            return arr;
        };
        json sections = json::array();
        for (const auto& s : rep.normal_sections) sections.push_back(point_json(s));
        j["normal_sections"] = std::move(sections);
        j["q_on_line"] = {to_string(rep.q_on_line[0]), to_string(rep.q_on_line[1]),
                          to_string(rep.q_on_line[2])};
        j["p0"] = point_json(rep.p0);
        j["p1"] = point_json(rep.p1);
        j["linear_form"] = rep.form ? json(fermat::linear_form_to_string(*rep.form)) : json(nullptr);
        j["wedge_determinant"] = to_string(rep.wedge_determinant);
        j["component_determinant"] = to_string(rep.component_determinant);
        j["certificate"] = rep.certificate;
        j["notes"] = rep.notes;
        write_json_report(j, json_path);
    }
    return rep.certificate ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations in generalized Jacobian rings of hypersurface pairs"};
    app.require_subcommand(1);

    std::string json_path, cache_dir;
    app.add_option("--json", json_path, "write a machine-readable report here")->take_last();
    app.add_option("--cache-dir", cache_dir, "on-disk slice cache directory")->take_last();

    // ring
    CLI::App* ring = app.add_subcommand("ring", "pair-ring computations");
    ring->require_subcommand(1);
    InstanceOptions dims_opts, pairing_opts, hodge_opts, calib_opts;

    CLI::App* dims = ring->add_subcommand("dims", "quotient dimensions over a (q,l) grid");
    dims_opts.attach(dims);
    std::optional<long> dims_lmin, dims_lmax;
    std::optional<int> dims_qmax;
    dims->add_option("--lmin", dims_lmin, "lowest twist (default: window)");
    dims->add_option("--lmax", dims_lmax, "highest twist (default: window)");
    dims->add_option("--qmax", dims_qmax, "highest q (default: n-1)");

    CLI::App* pairing = ring->add_subcommand("pairing", "duality pairing reports on the window");
    pairing_opts.attach(pairing);

    CLI::App* hodge = ring->add_subcommand("hodge", "open-hypersurface Hodge numbers");
    hodge_opts.attach(hodge);
    long hodge_twist = 0;
    hodge->add_option("--twist", hodge_twist, "twist l >= 0 (default 0)");

    CLI::App* calibrate = ring->add_subcommand("calibrate", "select a generator variant by oracles");
    calib_opts.attach(calibrate);
    std::string seeds_csv = "1,2,3";
    calibrate->add_option("--seeds", seeds_csv, "comma-separated seeds (default 1,2,3)");

    // criteria
    CLI::App* crit = app.add_subcommand("criteria", "arithmetic criteria");
    crit->require_subcommand(1);
    CLI::App* scan = crit->add_subcommand("scan", "predicate reports over a (p,l) grid");
    int scan_n = 0;
    long scan_d = 0, scan_e = 0;
    std::optional<int> scan_pmin, scan_pmax, scan_pp;
    std::optional<long> scan_lmin, scan_lmax, scan_lp;
    scan->add_option("--n", scan_n)->required();
    scan->add_option("--d", scan_d)->required();
    scan->add_option("--e", scan_e)->required();
    scan->add_option("--pmin", scan_pmin);
    scan->add_option("--pmax", scan_pmax);
    scan->add_option("--lmin", scan_lmin);
    scan->add_option("--lmax", scan_lmax);
    scan->add_option("--pprime", scan_pp, "also report injectivity against (p', l')");
    scan->add_option("--lprime", scan_lp);

    // vanishing
    CLI::App* vanishing = app.add_subcommand("vanishing", "twisted vanishing case analysis");
    int van_n = 3;
    long van_m = 0, van_k = 0;
    vanishing->add_option("--n", van_n)->required();
    vanishing->add_option("--m", van_m)->required();
    vanishing->add_option("--k", van_k)->required();

    // duality
    CLI::App* duality = app.add_subcommand("duality", "symmetric duality predicate and twists");
    long dual_m = 0, dual_k = 0;
    duality->add_option("--m", dual_m)->required();
    duality->add_option("--k", dual_k)->required();

    // fermat
    CLI::App* fermat_cmd = app.add_subcommand("fermat", "diagonal-cubic worked example");
    fermat_cmd->require_subcommand(1);
    CLI::App* verify = fermat_cmd->add_subcommand("verify", "run the non-triviality certificate");
    std::string fa = "1", fb = "-1", fc = "0", fextra;
    verify->add_option("--a", fa, "base point coordinate a");
    verify->add_option("--b", fb, "base point coordinate b");
    verify->add_option("--c", fc, "base point coordinate c");
    verify->add_option("--extra", fextra, "extra plane point, five comma-separated coordinates");

    // oracle
    CLI::App* oracle = app.add_subcommand("oracle", "independent cross-checks");
    oracle->require_subcommand(1);
    CLI::App* compare = oracle->add_subcommand("compare", "engine dims against oracle values");
    InstanceOptions compare_opts;
    compare_opts.attach(compare);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "jacring");
    for (std::string& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (dims->parsed()) return cmd_ring_dims(dims_opts, dims_lmin, dims_lmax, dims_qmax, json_path, cache_dir, out);
        if (pairing->parsed()) return cmd_ring_pairing(pairing_opts, json_path, out);
        if (hodge->parsed()) return cmd_ring_hodge(hodge_opts, hodge_twist, json_path, out);
        if (calibrate->parsed()) return cmd_ring_calibrate(calib_opts, seeds_csv, json_path, out);
        if (scan->parsed())
            return cmd_criteria_scan(scan_n, scan_d, scan_e, scan_pmin, scan_pmax, scan_lmin,
                                     scan_lmax, scan_pp, scan_lp, json_path, out);
        if (vanishing->parsed()) return cmd_vanishing(van_n, van_m, van_k, json_path, out);
        if (duality->parsed()) return cmd_duality(dual_m, dual_k, json_path, out);
        if (verify->parsed()) return cmd_fermat_verify(fa, fb, fc, fextra, json_path, out);
        if (compare->parsed()) return cmd_oracle_compare(compare_opts, json_path, out);
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
    err << "no command executed\n";
    return 2;
}

}  // namespace jacring::cli
