#include "jacring/criteria.hpp"

#include <algorithm>
#include <sstream>

namespace jacring::criteria {

long sigma(int n, long d, long e) { return 2 * (d - n - 1) + e; }

long delta_min(long d, long e) { return std::min(d, e); }

Window duality_window(int n, long d, long e) { return Window{d - n - 1, d - n - 1 + e}; }

namespace {

std::string ineq(long lhs, const std::string& rel, long rhs) {
    std::ostringstream os;
    os << lhs << " " << rel << " " << rhs;
    return os.str();
}

Condition cond(std::string label, long lhs, const std::string& rel, long rhs, bool holds) {
    return Condition{std::move(label) + ": " + ineq(lhs, rel, rhs), holds};
}

}  // namespace

bool hodgefil_predict(int n, long d, long e, int p, long l) {
    long dm = delta_min(d, e);
    long S = sigma(n, d, e);
    return dm * p + l >= 0 && l <= S + dm * (n - 1 - p);
}

CriterionReport hodgefil_report(int n, long d, long e, int p, long l) {
    CriterionReport rep;
    rep.criterion = "hodge_piece_nonvanishing";
    rep.inputs = {{"n", n}, {"d", d}, {"e", e}, {"p", p}, {"l", l}};
    long dm = delta_min(d, e);
    long S = sigma(n, d, e);
    rep.conditions.push_back(cond("delta_min*p + l >= 0", dm * p + l, ">=", 0, dm * p + l >= 0));
    rep.conditions.push_back(cond("l <= Sigma + delta_min*(n-1-p)", l, "<=", S + dm * (n - 1 - p),
                                  l <= S + dm * (n - 1 - p)));
    rep.verdict = rep.conditions[0].holds && rep.conditions[1].holds;
    if (!duality_window(n, d, e).contains(l))
        rep.warnings.push_back("l is outside the duality window [" +
                               std::to_string(duality_window(n, d, e).lo) + ", " +
                               std::to_string(duality_window(n, d, e).hi) +
                               "]; the prediction is only certified inside it");
    return rep;
}

CriterionReport consmac_conditions(int n, long d, long e, int p, int pp, long l, long lp) {
    CriterionReport rep;
    rep.criterion = "multiplication_map_injectivity";
    rep.inputs = {{"n", n}, {"d", d}, {"e", e}, {"p", p}, {"p'", pp}, {"l", l}, {"l'", lp}};
    long dm = delta_min(d, e);
    long S = sigma(n, d, e);
    long lhs1 = dm * (n - 1 - p - pp) + S - (l + lp);
    rep.conditions.push_back(
        cond("delta_min*(n-1-p-p') + Sigma - (l+l') >= 0", lhs1, ">=", 0, lhs1 >= 0));
    rep.conditions.push_back(cond("delta_min*p' + l' >= 0", dm * pp + lp, ">=", 0, dm * pp + lp >= 0));
    rep.conditions.push_back(cond("p + p' <= n-1", p + pp, "<=", n - 1, p + pp <= n - 1));
    rep.conditions.push_back(cond("l + l' <= Sigma", l + lp, "<=", S, l + lp <= S));
    Window w = duality_window(n, d, e);
    rep.conditions.push_back(Condition{
        "d-n-1 <= l <= d-n-1+e: " + std::to_string(w.lo) + " <= " + std::to_string(l) +
            " <= " + std::to_string(w.hi),
        w.contains(l)});
    rep.verdict = true;
    for (const Condition& c : rep.conditions) rep.verdict = rep.verdict && c.holds;
    return rep;
}

CriterionReport hodge_loci_proper(int n, long d, long e, int p) {
    CriterionReport rep;
    rep.criterion = "hodge_locus_properness";
    rep.inputs = {{"n", n}, {"d", d}, {"e", e}, {"p", p}};
    long dm = delta_min(d, e);
    long S = sigma(n, d, e);
    long t = d + e - n - 1;
    rep.conditions.push_back(
        cond("delta_min*(n-p) + d+e-n-1 >= 0", dm * (n - p) + t, ">=", 0, dm * (n - p) + t >= 0));
    rep.conditions.push_back(cond("d+e-n-1 <= Sigma + delta_min*(p-1)", t, "<=", S + dm * (p - 1),
                                  t <= S + dm * (p - 1)));
    rep.verdict = rep.conditions[0].holds && rep.conditions[1].holds;
    return rep;
}

TwistExponents twist_exponents(long m, long k) {
    TwistExponents t{m, m - 1, m - k, m - k - 1, {}};
    auto twist = [](long s) { return "(" + std::to_string(s) + "Y)"; };
    t.identifications = {
        "S0 = T_X = Omega^(n-1)" + twist(t.s0),
        "S1 = T_X(-log Y) = Omega^(n-1)(log Y)" + twist(t.s1),
        "S2 = T_X(-" + std::to_string(k) + "Y) = Omega^(n-1)" + twist(t.s2),
        "S3 = T_X(-log Y)(-" + std::to_string(k) + "Y) = Omega^(n-1)(log Y)" + twist(t.s3),
    };
    return t;
}

VanishingReport vanishing_report(int n, long m, long k) {
    VanishingReport rep;
    rep.n = n;
    rep.m = m;
    rep.k = k;
    rep.assumption =
        "assumes X Fano and O_X(s_j Y) ample whenever s_j >= 1; the ampleness is stated, not checked";
    TwistExponents t = twist_exponents(m, k);
    std::array<long, 4> s = {t.s0, t.s1, t.s2, t.s3};
    bool any_fired = false, all_cover_h2 = true;
    for (int j = 0; j < 4; ++j) {
        VanishingEntry entry{j, s[j], VanishingCase::NoClaim, ""};
        if (s[j] >= 1) {
            entry.rule = VanishingCase::AmpleTwist;
            entry.vanishing = "H^q(S" + std::to_string(j) + ") = 0 for all q > 1";
            any_fired = true;
        } else if (j >= 1 && s[j] == 0) {
            entry.rule = VanishingCase::BoundaryZero;
            any_fired = true;
            if (n >= 3) {
                entry.vanishing =
                    "H^q(S" + std::to_string(j) + ") = 0 for q = 2.." + std::to_string(n - 1);
            } else {
                entry.vanishing = "vacuous range q = 2.." + std::to_string(n - 1);
                all_cover_h2 = false;
            }
        }
        rep.entries.push_back(std::move(entry));
    }
    rep.h2_vanishes = any_fired && all_cover_h2;
    return rep;
}

SymmetricDuality duality_symmetric(long m, long k) {
    SymmetricDuality rep;
    rep.m = m;
    rep.k = k;
    rep.holds = (m == 2 * k);
    rep.fano_table = {{0, 0}, {2, 1}, {4, 2}};
    if (m == 4 && k == 2) rep.note = "X = P^3, Y a plane";
    else if (m == 0 && k == 0) rep.note = "absolute Calabi-Yau case";
    else if (m == 2 && k == 1) rep.note = "half-log Calabi-Yau case";
    return rep;
}

std::string format_report(const CriterionReport& rep) {
    std::ostringstream os;
    os << rep.criterion << " (";
    bool first = true;
    for (const auto& [k, v] : rep.inputs) {
        if (!first) os << ", ";
        os << k << "=" << v;
        first = false;
    }
    os << ")\n";
    for (const Condition& c : rep.conditions)
        os << "  [" << (c.holds ? "ok" : "fail") << "] " << c.text << "\n";
    for (const std::string& w : rep.warnings) os << "  warning: " << w << "\n";
    os << "  verdict: " << (rep.verdict ? "true" : "false") << "\n";
    return os.str();
}

std::string format_twists(const TwistExponents& t, long m, long k) {
    std::ostringstream os;
    os << "twist exponents for (m,k) = (" << m << "," << k << "): (s0,s1,s2,s3) = (" << t.s0 << ","
       << t.s1 << "," << t.s2 << "," << t.s3 << ")\n";
    for (const std::string& id : t.identifications) os << "  " << id << "\n";
    return os.str();
}

std::string format_vanishing(const VanishingReport& rep) {
    std::ostringstream os;
    os << "vanishing cases for (n,m,k) = (" << rep.n << "," << rep.m << "," << rep.k << ")\n";
    for (const VanishingEntry& e : rep.entries) {
        os << "  j=" << e.j << " s_j=" << e.s << ": ";
        switch (e.rule) {
            case VanishingCase::AmpleTwist: os << "ample twist: " << e.vanishing; break;
            case VanishingCase::BoundaryZero: os << "zero twist: " << e.vanishing; break;
            case VanishingCase::NoClaim: os << "no claim"; break;
        }
        os << "\n";
    }
    os << "  H^2 vanishing guaranteed: " << (rep.h2_vanishes ? "yes" : "no") << "\n";
    os << "  note: " << rep.assumption << "\n";
    return os.str();
}

std::string format_symmetric(const SymmetricDuality& rep) {
    std::ostringstream os;
    os << "symmetric normal-bundle duality for (m,k) = (" << rep.m << "," << rep.k
       << "): " << (rep.holds ? "holds (m = 2k)" : "fails (m != 2k)") << "\n";
    os << "  Fano table of admissible pairs:";
    for (auto [m, k] : rep.fano_table) os << " (" << m << "," << k << ")";
    os << "\n";
    if (!rep.note.empty()) os << "  " << rep.note << "\n";
    return os.str();
}

}  // namespace jacring::criteria
