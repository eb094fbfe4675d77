#ifndef JACRING_CRITERIA_HPP
#define JACRING_CRITERIA_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jacring::criteria {

// Pure integer predicates for the numerical hypotheses of the theory.  None
// of these consult ring computations; acceptance tests compare prediction
// against measurement.

struct Condition {
    std::string text;
    bool holds = false;
};

struct CriterionReport {
    std::string criterion;
    std::map<std::string, long> inputs;
    std::vector<Condition> conditions;
    std::vector<std::string> warnings;
    bool verdict = false;
};

struct Window {
    long lo = 0, hi = 0;
    bool contains(long l) const { return lo <= l && l <= hi; }
    long length() const { return hi - lo; }
};

long sigma(int n, long d, long e);
long delta_min(long d, long e);
Window duality_window(int n, long d, long e);

/// Nonvanishing of B_p(l): delta_min*p + l >= 0 and l <= Sigma + delta_min*(n-1-p).
bool hodgefil_predict(int n, long d, long e, int p, long l);
CriterionReport hodgefil_report(int n, long d, long e, int p, long l);

/// The five inequalities under which B_p(l) -> Hom(B_p'(l'), B_{p+p'}(l+l'))
/// is injective.
CriterionReport consmac_conditions(int n, long d, long e, int p, int pp, long l, long lp);

/// Properness of the twist-(d+e-n-1) Hodge locus at filtration step p.
CriterionReport hodge_loci_proper(int n, long d, long e, int p);

struct TwistExponents {
    long s0, s1, s2, s3;
    // Bundle identifications S_j in terms of twisted (log-)forms, rendered
    // with the concrete exponents.
    std::array<std::string, 4> identifications;
};

TwistExponents twist_exponents(long m, long k);

enum class VanishingCase { AmpleTwist, BoundaryZero, NoClaim };

struct VanishingEntry {
    int j;
    long s;
    VanishingCase rule;
    std::string vanishing;  // the guaranteed range of q, empty if none
};

struct VanishingReport {
    int n;
    long m, k;
    std::vector<VanishingEntry> entries;
    bool h2_vanishes = false;
    std::string assumption;  // ampleness hypothesis stated, not checked
};

VanishingReport vanishing_report(int n, long m, long k);

struct SymmetricDuality {
    long m, k;
    bool holds;  // m == 2k
    std::vector<std::pair<long, long>> fano_table;
    std::string note;
};

SymmetricDuality duality_symmetric(long m, long k);

std::string format_report(const CriterionReport& rep);
std::string format_twists(const TwistExponents& t, long m, long k);
std::string format_vanishing(const VanishingReport& rep);
std::string format_symmetric(const SymmetricDuality& rep);

}  // namespace jacring::criteria

#endif
