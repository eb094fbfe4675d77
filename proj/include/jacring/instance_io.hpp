#ifndef JACRING_INSTANCE_IO_HPP
#define JACRING_INSTANCE_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

#include "jacring/oracles.hpp"
#include "jacring/ring.hpp"

namespace jacring::io {

using json = nlohmann::ordered_json;

struct FieldSpec {
    enum class Tag { Q, Qi, Fp };
    Tag tag = Tag::Q;
    std::uint64_t prime = 0;
};

FieldSpec parse_field(const std::string& s);
std::string field_to_string(const FieldSpec& f);

/// Serialized form of a ring instance plus output options; the unit the CLI
/// and the cache key off of.
struct InstanceSpec {
    int n = 2;
    long d = 3, e = 1;
    FieldSpec field;
    GeneratorVariant variant = GeneratorVariant::PlusF;
    std::optional<std::uint64_t> seed;  // generic coefficients
    std::optional<json> explicit_coeffs;  // {"F": [terms], "G": [terms]}
    long degree_cap = kDefaultDegreeCap;
};

/// Term records are (exponent vector, numerator, denominator, and imaginary
/// parts when present); integers are decimal strings so round-trips are exact.
json term_record(const std::vector<std::uint16_t>& exps, const Rational& re,
                 const GaussianRational* full = nullptr);

json poly_to_json(const RationalField& k, const Poly<RationalField>& p);
json poly_to_json(const GaussianRationalField& k, const Poly<GaussianRationalField>& p);
json poly_to_json(const SmallPrimeField& k, const Poly<SmallPrimeField>& p);

Poly<RationalField> poly_from_json(const RationalField& k, const json& j, std::size_t nvars);
Poly<GaussianRationalField> poly_from_json(const GaussianRationalField& k, const json& j,
                                           std::size_t nvars);
Poly<SmallPrimeField> poly_from_json(const SmallPrimeField& k, const json& j, std::size_t nvars);

InstanceSpec parse_instance_json(const json& j);
InstanceSpec parse_instance_file(const std::string& path);
json instance_to_json(const InstanceSpec& spec);

/// FNV-1a content hash of (n, d, e, field, variant, coefficients); identical
/// specs give identical keys on every platform.
std::string instance_hash(const InstanceSpec& spec);

using AnyInstance = std::variant<RingInstance<RationalField>, RingInstance<GaussianRationalField>,
                                 RingInstance<SmallPrimeField>>;

AnyInstance build_instance(const InstanceSpec& spec);

/// Input echo block embedded in every report.
json instance_echo(const InstanceSpec& spec);

template <class K>
json pairing_to_json(const K& k, const PairingReport<K>& rep) {
    json j;
    j["q"] = rep.q;
    j["l"] = rep.l;
    j["left_dim"] = rep.left_dim;
    j["right_dim"] = rep.right_dim;
    j["socle_dim"] = rep.socle_dim;
    j["rank"] = rep.rank;
    j["perfect"] = rep.perfect;
    j["in_window"] = rep.in_window;
    json rows = json::array();
    for (std::size_t r = 0; r < rep.matrix.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rep.matrix.cols; ++c) row.push_back(k.str(rep.matrix.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    j["notes"] = rep.notes;
    return j;
}

json calibration_to_json(const oracles::CalibrationReport& rep);
json crosscheck_to_json(const oracles::CrosscheckReport& rep);

}  // namespace jacring::io

#endif
