#pragma once

#include "segrelab/ratmap.hpp"

namespace segrelab {

// Fiber value with the dimension conventions made explicit, so a literal 0 is
// never conflated with "zero because |n| exceeds the fiber dimension".
struct TaggedValue {
    enum class Tag { Finite, ZeroByDimension, InfiniteByDimension, Degenerate, Error };
    Tag tag = Tag::Finite;
    std::vector<std::int64_t> values;
    std::string note;
};

bool tagged_eq(const TaggedValue& a, const TaggedValue& b);

enum class ScanInvariant {
    MixedMult,
    Multidegree,
    DegImage,
    ProjDegrees,
    MapDegree,
    JMult,
    SegreSeq,
    PolarSeq,
    NuSeq,
};

struct InvariantKind {
    ScanInvariant name = ScanInvariant::Multidegree;
    NVec n;  // for MixedMult / Multidegree
};

// A payload over k[a_1..a_t][x_0..x_r] (parameter variables carry the family)
// together with the fiber points to inspect.
struct FamilyScenario {
    bool has_map = false;
    Ideal ideal;      // parametric ideal payload
    RationalMap map;  // parametric map payload
    std::vector<std::vector<Coeff>> points;
    int trials = 5;
    std::uint64_t seed = 0;
    InvariantOptions inv;
};

FamilyScenario ideal_family(Ideal I, std::vector<std::vector<Coeff>> points);
FamilyScenario map_family(RationalMap F, std::vector<std::vector<Coeff>> points);

// Plug scalars into the parameter variables; result lives in the pure
// coordinate ring.
Ideal specialize_ideal(const Ideal& I, const std::vector<Coeff>& values);

TaggedValue evaluate_at(const FamilyScenario& sc, const InvariantKind& kind,
                        const std::vector<Coeff>& point);

// Consensus over `trials` random fiber points, combined along the known
// semicontinuity direction (min for upper, max for lower). Needs at least two
// agreeing trials to be conclusive.
struct GenericEstimate {
    TaggedValue value;
    int disagreements = 0;
    bool conclusive = false;
};
GenericEstimate pseudo_generic(const FamilyScenario& sc, const InvariantKind& kind);

enum class Direction { Upper, Lower, LexUpper, None };
Direction direction_of(const FamilyScenario& sc, const InvariantKind& kind);

struct PointResult {
    std::vector<Coeff> point;
    TaggedValue value;
};

struct ScanReport {
    InvariantKind kind;
    std::vector<PointResult> points;
    GenericEstimate generic;
    Direction direction = Direction::None;
    // one of: equal, consistent, violation, not-governed, degenerate, error,
    // skipped
    std::vector<std::string> verdicts;
    bool any_violation = false;
    std::string hypothesis_note;
};

// Fiber evaluations only (run in parallel); verdicts left empty.
ScanReport scan(const FamilyScenario& sc, const InvariantKind& kind);

// scan + pseudo-generic comparison at every sampled point.
ScanReport semicontinuity_report(const FamilyScenario& sc, const InvariantKind& kind);

}  // namespace segrelab
