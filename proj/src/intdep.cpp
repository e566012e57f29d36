#include "segrelab/intdep.hpp"

namespace segrelab {

namespace {

void require_pair(const Ideal& I, const Ideal& J) {
    if (I.ring.signature() != J.ring.signature())
        throw ComputationError("the two ideals must live in the same ring");
    if (!contains(I, J)) throw ComputationError("the first ideal must be contained in the second");
}

std::string seq_str(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

bool contains(const Ideal& I, const Ideal& J) {
    for (const Poly& g : I.gens)
        if (!ideal_contains(J, g)) return false;
    return true;
}

CriterionVerdict segre_criterion(const Ideal& I, const Ideal& J, const InvariantOptions& opts) {
    require_pair(I, J);
    CriterionVerdict v;
    v.criterion = "segre";
    try {
        InvariantTable tI = invariant_table(I, opts);
        InvariantTable tJ = invariant_table(J, opts);
        v.evidence = {tI, tJ};
        v.applicable = true;
        if (tI.c == tJ.c) {
            v.conclusion = Conclusion::Integral;
            v.reasons.push_back("Segre sequences agree: " + seq_str(tI.c));
        } else {
            v.conclusion = Conclusion::NotIntegral;
            v.reasons.push_back("Segre sequences differ (equality is necessary): " +
                                seq_str(tI.c) + " vs " + seq_str(tJ.c));
        }
    } catch (const GenericityFailure& e) {
        v.reasons.push_back(std::string("certification failed: ") + e.what());
    }
    return v;
}

CriterionVerdict polar_nu_criterion(const Ideal& I, const Ideal& J, const InvariantOptions& opts) {
    require_pair(I, J);
    CriterionVerdict v;
    v.criterion = "polar-nu";
    std::int64_t oI = ideal_order(I), oJ = ideal_order(J);
    if (oI != oJ) {
        v.reasons.push_back("order gate fails: o(I) = " + std::to_string(oI) +
                            " != " + std::to_string(oJ) + " = o(J)");
        return v;
    }
    v.reasons.push_back("order gate passes: o(I) = o(J) = " + std::to_string(oI));
    try {
        InvariantTable tI = invariant_table(I, opts);
        v.evidence.push_back(tI);
        if (!tI.gparam_generic) {
            v.reasons.push_back(
                "parameter-condition gate fails for I: delta*m_{i-1} != nu_i somewhere");
            return v;
        }
        v.reasons.push_back("parameter-condition gate passes for I");
        InvariantTable tJ = invariant_table(J, opts);
        v.evidence.push_back(tJ);
        v.applicable = true;
        bool m_eq = std::vector<std::int64_t>(tI.m.begin(), tI.m.end() - 1) ==
                    std::vector<std::int64_t>(tJ.m.begin(), tJ.m.end() - 1);
        bool nu_eq = tI.nu == tJ.nu;
        if (m_eq && nu_eq) {
            v.conclusion = Conclusion::Integral;
            v.reasons.push_back("polar and polar-Segre sequences both agree");
        } else if (!m_eq && !nu_eq) {
            v.conclusion = Conclusion::NotIntegral;
            v.reasons.push_back("polar sequences differ: " + seq_str(tI.m) + " vs " +
                                seq_str(tJ.m));
        } else {
            v.applicable = false;
            v.reasons.push_back(
                "defect: the equivalent tests disagree (m " + std::string(m_eq ? "equal" : "differ") +
                ", nu " + std::string(nu_eq ? "equal" : "differ") + ")");
        }
    } catch (const GenericityFailure& e) {
        v.applicable = false;
        v.conclusion = Conclusion::Inconclusive;
        v.reasons.push_back(std::string("certification failed: ") + e.what());
    }
    return v;
}

LexVerdict lex_dominance(const Ideal& I, const Ideal& J, const InvariantOptions& opts) {
    require_pair(I, J);
    LexVerdict v;
    v.c_small = invariant_table(I, opts).c;
    v.c_large = invariant_table(J, opts).c;
    v.holds = !std::lexicographical_compare(v.c_small.begin(), v.c_small.end(),
                                            v.c_large.begin(), v.c_large.end());
    return v;
}

PsidReport psid_hypotheses(const Ideal& I, const Poly& t, const InvariantOptions& opts) {
    const Ring& R = I.ring;
    PsidReport rep;
    int d = krull_dim(make_ideal(R, {}));

    rep.t_vanishes = ideal_contains(coordinate_ideal(R), t);
    if (!rep.t_vanishes) rep.reasons.push_back("t does not vanish at the distinguished point");

    rep.dim_drops = krull_dim(make_ideal(R, {t})) == d - 1;
    if (!rep.dim_drops) rep.reasons.push_back("dim R/tR != dim R - 1");

    rep.height = d - krull_dim(ideal_sum(I, make_ideal(R, {t})));
    rep.height_ok = rep.height >= 2;
    if (!rep.height_ok)
        rep.reasons.push_back("ht(I + tR) = " + std::to_string(rep.height) + " < 2");

    if (!(rep.t_vanishes && rep.dim_drops && rep.height_ok)) return rep;

    rep.c_ring = invariant_table(I, opts).c;
    std::vector<Poly> mod = R.modulus;
    mod.push_back(t);
    Ring Rq = R.with_modulus(mod);
    Ideal Iq = make_ideal(Rq, I.gens);
    rep.c_quotient = invariant_table(Iq, opts).c;

    rep.c_match = true;
    for (int i = 1; i <= d - 1; ++i)
        if (rep.c_ring[i] != rep.c_quotient[i]) rep.c_match = false;
    if (!rep.c_match)
        rep.reasons.push_back("Segre numbers change when passing to R/tR: " +
                              seq_str(rep.c_ring) + " vs " + seq_str(rep.c_quotient));
    rep.hypotheses_hold = rep.c_match;
    return rep;
}

}  // namespace segrelab
