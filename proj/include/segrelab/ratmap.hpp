#pragma once

#include "segrelab/invariants.hpp"

namespace segrelab {

// All forms of a fiber specialize to zero; callers report a status instead of
// numbers.
struct DegenerateFiber : ComputationError {
    using ComputationError::ComputationError;
};

// A rational map P^r --> P^s given by s+1 forms of a common degree delta > 0
// in the coordinate variables, possibly with scalar parameters (degree 0).
struct RationalMap {
    Ring source;
    std::vector<Poly> forms;
    int r = 0;
    int s = 0;
    std::int64_t delta = 0;
};

RationalMap make_map(const Ring& source, std::vector<Poly> forms);
RationalMap parse_map(const Ring& source, const std::vector<std::string>& forms);

// Plug scalars into the parameter variables, in ring order; the result lives
// in the pure coordinate ring.
RationalMap specialize_map(const RationalMap& F, const std::vector<Coeff>& values);

Ideal base_ideal(const RationalMap& F);

// Defining ideal of the closure of the image, in a fresh ring k[y_0..y_s].
Ideal image_ideal(const RationalMap& F);

// Degree of the image when it has the full dimension r, else 0.
std::int64_t deg_image(const RationalMap& F);

struct ProjDegOptions {
    InvariantOptions inv;
    // also run the bigraded Rees-algebra path and require agreement
    bool cross_check = false;
};

// d_0..d_r, via polar multiplicities of the base ideal: d_i = m_{r-i}.
std::vector<std::int64_t> projective_degrees(const RationalMap& F,
                                             const ProjDegOptions& opts = {});
// Same numbers read off as the mixed multiplicities of the bigraded
// coordinate ring of the graph.
std::vector<std::int64_t> projective_degrees_rees(const RationalMap& F);

// d_0 / deg_image when the image has full dimension, else 0.
std::int64_t map_degree(const RationalMap& F, const ProjDegOptions& opts = {});

bool is_birational(const RationalMap& F, const ProjDegOptions& opts = {});

// delta * d_0.
std::int64_t j_multiplicity(const RationalMap& F, const ProjDegOptions& opts = {});

// Structure metadata is trusted input; it selects which bound formula to
// evaluate against the computed projective degrees.
struct BoundSpec {
    enum class Kind { Generic, HilbertBurch, Gorenstein3 };
    Kind kind = Kind::Generic;
    std::vector<std::int64_t> mu;  // Hilbert-Burch syzygy column degrees mu_1..mu_s
    std::int64_t D = 1;            // entry degree of the alternating presentation
};

struct BoundReport {
    std::vector<std::int64_t> degrees;
    std::vector<std::int64_t> bounds;
    std::vector<bool> satisfied;
    bool all_satisfied = false;
};

BoundReport degree_bounds(const RationalMap& F, const BoundSpec& spec,
                          const ProjDegOptions& opts = {});

}  // namespace segrelab
