#include "jacring/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace jacring::io {

FieldSpec parse_field(const std::string& s) {
    if (s == "Q") return {FieldSpec::Tag::Q, 0};
    if (s == "Qi") return {FieldSpec::Tag::Qi, 0};
    if (s.rfind("Fp:", 0) == 0) {
        FieldSpec f{FieldSpec::Tag::Fp, 0};
        try {
            f.prime = std::stoull(s.substr(3));
        } catch (const std::exception&) {
            throw ContractError("field: bad prime in '" + s + "'");
        }
        if (!is_prime(f.prime)) throw ContractError("field: " + std::to_string(f.prime) + " is not prime");
        return f;
    }
    throw ContractError("field: expected Q, Qi or Fp:<prime>, got '" + s + "'");
}

std::string field_to_string(const FieldSpec& f) {
    switch (f.tag) {
        case FieldSpec::Tag::Q: return "Q";
        case FieldSpec::Tag::Qi: return "Qi";
        case FieldSpec::Tag::Fp: return "Fp:" + std::to_string(f.prime);
    }
    return "?";
}

json term_record(const std::vector<std::uint16_t>& exps, const Rational& re,
                 const GaussianRational* full) {
    json j;
    j["exp"] = exps;
    if (full) {
        j["num"] = full->re.get_num().get_str();
        j["den"] = full->re.get_den().get_str();
        j["im_num"] = full->im.get_num().get_str();
        j["im_den"] = full->im.get_den().get_str();
    } else {
        j["num"] = re.get_num().get_str();
        j["den"] = re.get_den().get_str();
    }
    return j;
}

json poly_to_json(const RationalField&, const Poly<RationalField>& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint16_t> exps(m.exps.begin(), m.exps.end());
        arr.push_back(term_record(exps, c));
    }
    return arr;
}

json poly_to_json(const GaussianRationalField&, const Poly<GaussianRationalField>& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint16_t> exps(m.exps.begin(), m.exps.end());
        arr.push_back(term_record(exps, c.re, &c));
    }
    return arr;
}

json poly_to_json(const SmallPrimeField&, const Poly<SmallPrimeField>& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json j;
        j["exp"] = std::vector<std::uint16_t>(m.exps.begin(), m.exps.end());
        j["num"] = std::to_string(c);
        j["den"] = "1";
        arr.push_back(std::move(j));
    }
    return arr;
}

namespace {

struct TermParts {
    Monomial mono;
    Rational re, im;
};

TermParts parse_term(const json& rec, std::size_t nvars) {
    if (!rec.is_object() || !rec.contains("exp"))
        throw ContractError("coefficients: each term needs an 'exp' array");
    TermParts t;
    std::vector<std::uint16_t> exps = rec.at("exp").get<std::vector<std::uint16_t>>();
    if (exps.size() != nvars)
        throw ContractError("coefficients: exponent vector length " + std::to_string(exps.size()) +
                            ", expected " + std::to_string(nvars));
    t.mono = Monomial(std::move(exps));
    std::string num = rec.value("num", "0");
    std::string den = rec.value("den", "1");
    t.re = parse_rational(num + "/" + den);
    if (rec.contains("im_num")) {
        t.im = parse_rational(rec.value("im_num", "0") + "/" + rec.value("im_den", "1"));
    } else {
        t.im = 0;
    }
    return t;
}

}  // namespace

Poly<RationalField> poly_from_json(const RationalField& k, const json& j, std::size_t nvars) {
    Poly<RationalField> p(nvars);
    for (const json& rec : j) {
        TermParts t = parse_term(rec, nvars);
        if (t.im != 0) throw ContractError("coefficients: imaginary part in a rational instance");
        p.add_term(k, t.mono, t.re);
    }
    return p;
}

Poly<GaussianRationalField> poly_from_json(const GaussianRationalField& k, const json& j,
                                           std::size_t nvars) {
    Poly<GaussianRationalField> p(nvars);
    for (const json& rec : j) {
        TermParts t = parse_term(rec, nvars);
        p.add_term(k, t.mono, GaussianRational(t.re, t.im));
    }
    return p;
}

Poly<SmallPrimeField> poly_from_json(const SmallPrimeField& k, const json& j, std::size_t nvars) {
    Poly<SmallPrimeField> p(nvars);
    for (const json& rec : j) {
        TermParts t = parse_term(rec, nvars);
        if (t.im != 0) throw ContractError("coefficients: imaginary part in a prime-field instance");
        p.add_term(k, t.mono, reduce_mod(k, t.re));
    }
    return p;
}

InstanceSpec parse_instance_json(const json& j) {
    InstanceSpec spec;
    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw ContractError(std::string("instance file: missing field '") + field + "'");
        return j.at(field);
    };
    try {
        spec.n = need("n").get<int>();
        spec.d = need("d").get<long>();
        spec.e = need("e").get<long>();
    } catch (const json::exception& ex) {
        throw ContractError(std::string("instance file: n, d, e must be integers (") + ex.what() + ")");
    }
    spec.field = parse_field(j.value("field", "Q"));
    std::string vname = j.value("variant", "PlusF");
    auto v = variant_from_string(vname);
    if (!v) throw ContractError("instance file: unknown variant '" + vname + "'");
    spec.variant = *v;
    spec.degree_cap = j.value("degree_cap", kDefaultDegreeCap);

    const json& coeffs = need("coefficients");
    if (coeffs.contains("generic")) {
        if (!coeffs.at("generic").contains("seed"))
            throw ContractError("instance file: coefficients.generic needs a 'seed'");
        spec.seed = coeffs.at("generic").at("seed").get<std::uint64_t>();
    } else if (coeffs.contains("F") && coeffs.contains("G")) {
        spec.explicit_coeffs = coeffs;
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    } else {
        throw ContractError("instance file: coefficients must be {generic:{seed}} or {F:[..],G:[..]}");
    }
    return spec;
}

InstanceSpec parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open instance file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& ex) {
        throw ContractError("instance file " + path + ": " + ex.what());
    }
    return parse_instance_json(j);
}

json instance_to_json(const InstanceSpec& spec) {
    json j;
    j["n"] = spec.n;
    j["d"] = spec.d;
    j["e"] = spec.e;
    j["field"] = field_to_string(spec.field);
    j["variant"] = variant_name(spec.variant);
    j["degree_cap"] = spec.degree_cap;
    if (spec.explicit_coeffs) {
        j["coefficients"] = *spec.explicit_coeffs;
    } else {
        j["coefficients"] = {{"generic", {{"seed", spec.seed.value_or(0)}}}};
    }
    return j;
}

std::string instance_hash(const InstanceSpec& spec) {
    json key;
    key["n"] = spec.n;
    key["d"] = spec.d;
    key["e"] = spec.e;
    key["field"] = field_to_string(spec.field);
    key["variant"] = variant_name(spec.variant);
    if (spec.explicit_coeffs) key["coefficients"] = *spec.explicit_coeffs;
    else key["coefficients"] = {{"generic", {{"seed", spec.seed.value_or(0)}}}};
    std::string s = key.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

AnyInstance build_instance(const InstanceSpec& spec) {
    std::size_t nv = static_cast<std::size_t>(spec.n) + 1;
    switch (spec.field.tag) {
        case FieldSpec::Tag::Q: {
            RationalField k;
            if (spec.explicit_coeffs) {
                auto F = poly_from_json(k, spec.explicit_coeffs->at("F"), nv);
                auto G = poly_from_json(k, spec.explicit_coeffs->at("G"), nv);
                return RingInstance<RationalField>(k, spec.n, spec.d, spec.e, spec.variant, F, G,
                                                   spec.seed, spec.degree_cap);
            }
            return RingInstance<RationalField>::generic(k, spec.n, spec.d, spec.e, spec.variant,
                                                        spec.seed.value_or(0), spec.degree_cap);
        }
        case FieldSpec::Tag::Qi: {
            GaussianRationalField k;
            if (spec.explicit_coeffs) {
                auto F = poly_from_json(k, spec.explicit_coeffs->at("F"), nv);
                auto G = poly_from_json(k, spec.explicit_coeffs->at("G"), nv);
                return RingInstance<GaussianRationalField>(k, spec.n, spec.d, spec.e, spec.variant,
                                                           F, G, spec.seed, spec.degree_cap);
            }
            return RingInstance<GaussianRationalField>::generic(
                k, spec.n, spec.d, spec.e, spec.variant, spec.seed.value_or(0), spec.degree_cap);
        }
        case FieldSpec::Tag::Fp: {
            SmallPrimeField k(spec.field.prime);
            if (spec.explicit_coeffs) {
                auto F = poly_from_json(k, spec.explicit_coeffs->at("F"), nv);
                auto G = poly_from_json(k, spec.explicit_coeffs->at("G"), nv);
                return RingInstance<SmallPrimeField>(k, spec.n, spec.d, spec.e, spec.variant, F, G,
                                                     spec.seed, spec.degree_cap);
            }
            return RingInstance<SmallPrimeField>::generic(k, spec.n, spec.d, spec.e, spec.variant,
                                                          spec.seed.value_or(0), spec.degree_cap);
        }
    }
    throw ContractError("unreachable field tag");
}

json instance_echo(const InstanceSpec& spec) {
    json j = instance_to_json(spec);
    j["hash"] = instance_hash(spec);
    return j;
}

json calibration_to_json(const oracles::CalibrationReport& rep) {
    json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["e"] = rep.e;
    j["seeds"] = rep.seeds;
    j["explicit_pair"] = rep.explicit_pair;
    json rows = json::array();
    for (const auto& m : rep.measurements) {
        json r;
        r["variant"] = variant_name(m.variant);
        r["seed"] = m.seed;
        r["dim_B0"] = m.b0_dim;
        r["target_B0"] = m.b0_target;
        r["socle_dim"] = m.socle_dim;
        r["symmetry_ok"] = m.symmetry_ok;
        json asym = json::array();
        for (auto [q, l, a, b] : m.asymmetries)
            asym.push_back({{"q", q}, {"l", l}, {"dim", a}, {"dual_dim", b}});
        r["asymmetries"] = std::move(asym);
        r["crosscheck_ok"] = m.crosscheck_ok;
        r["passed"] = m.passed;
        rows.push_back(std::move(r));
    }
    j["measurements"] = std::move(rows);
    json passing = json::array();
    for (GeneratorVariant v : rep.passing) passing.push_back(variant_name(v));
    j["passing"] = std::move(passing);
    j["selected"] = rep.selected ? json(variant_name(*rep.selected)) : json(nullptr);
    j["regularity_ok"] = rep.regularity_ok;
    return j;
}

json crosscheck_to_json(const oracles::CrosscheckReport& rep) {
    json j;
    j["primes"] = rep.primes;
    j["redraws"] = rep.redraws;
    j["events"] = rep.events;
    j["ok"] = rep.ok;
    return j;
}

}  // namespace jacring::io
