#pragma once

#include "segrelab/invariants.hpp"

namespace segrelab {

enum class Conclusion { Integral, NotIntegral, Inconclusive };

struct CriterionVerdict {
    std::string criterion;
    bool applicable = false;
    std::vector<std::string> reasons;
    Conclusion conclusion = Conclusion::Inconclusive;
    // tables actually computed: I first, then J when present
    std::vector<InvariantTable> evidence;
    // equidimensionality and universal catenarity are carried as a user
    // assertion, never verified
    bool asserted_hypotheses = true;
};

// I <= J, generator by generator.
bool contains(const Ideal& I, const Ideal& J);

// Equality of the two Segre number sequences c_0..c_d; equality is necessary
// and (under the asserted hypotheses) sufficient for J integral over I.
CriterionVerdict segre_criterion(const Ideal& I, const Ideal& J,
                                 const InvariantOptions& opts = {});

// Polar/polar-Segre comparison, gated on (a) o(I) = o(J) and (b) the
// parameter condition holding for I. Gated-out pairs are inconclusive with
// the failing gate named; the gates block the known false signals.
CriterionVerdict polar_nu_criterion(const Ideal& I, const Ideal& J,
                                    const InvariantOptions& opts = {});

struct LexVerdict {
    bool holds = false;
    std::vector<std::int64_t> c_small, c_large;  // c(I), c(J)
};

// c(I) >=_lex c(J) whenever I <= J; a violation certifies a defect.
LexVerdict lex_dominance(const Ideal& I, const Ideal& J, const InvariantOptions& opts = {});

struct PsidReport {
    bool t_vanishes = false;   // t lies in the coordinate maximal ideal
    bool dim_drops = false;    // dim R/tR = d - 1
    std::int64_t height = -1;  // ht(I + tR)
    bool height_ok = false;    // >= 2
    std::vector<std::int64_t> c_ring;      // c(I, R)
    std::vector<std::int64_t> c_quotient;  // c(I, R/tR)
    bool c_match = false;  // c_i agree for 1 <= i <= d-1
    bool hypotheses_hold = false;
    std::vector<std::string> reasons;
};

// Hypothesis check for specializing integral dependence along t; the
// conclusion of the underlying theorem is quotable when all parts hold.
PsidReport psid_hypotheses(const Ideal& I, const Poly& t, const InvariantOptions& opts = {});

}  // namespace segrelab
