#pragma once

#include "segrelab/hilbert.hpp"

namespace segrelab {

struct GenericityFailure : ComputationError {
    using ComputationError::ComputationError;
};

struct InvariantOptions {
    std::uint64_t seed = 0;
    int retries = 2;
    long long coeff_bound = 1000;
    LocalOptions local;
};

// Random scalar-coefficient combinations g_j of the generators of I, with the
// dimension bounds dim R/((g_1..g_i):I^inf) <= d-i verified.
struct GeneralSequence {
    std::vector<std::vector<long long>> rows;  // coefficient rows, one per g_j
    std::vector<Poly> elems;
    std::uint64_t seed = 0;
    int retries_used = 0;
    bool dim_checks_passed = false;
};

struct InvariantTable {
    int d = 0;               // dimension of the ring
    std::int64_t delta = 0;  // order of the ideal
    std::vector<std::int64_t> m, c, nu;
    bool gparam_generic = false;
    bool height_zero = false;  // degenerate ht(I) = 0 input
    std::uint64_t seed = 0;
    int retries_used = 0;
    bool near_cap = false;
};

// Largest b with I contained in m^b; needs a homogeneous modulus.
std::int64_t ideal_order(const Ideal& I);

// I^inf-saturation K : I^inf, split over the generators of I.
Ideal saturate_wrt(const Ideal& K, const Ideal& I);

GeneralSequence general_sequence(const Ideal& I, int k, const InvariantOptions& opts = {});

std::vector<std::int64_t> polar_sequence(const Ideal& I, const GeneralSequence& G,
                                         const InvariantOptions& opts = {});
std::vector<std::int64_t> nu_sequence(const Ideal& I, const GeneralSequence& G,
                                      const InvariantOptions& opts = {});
std::vector<std::int64_t> segre_sequence(const Ideal& I, const GeneralSequence& G,
                                         const InvariantOptions& opts = {});

// True iff delta * m_{i-1} = nu_i for every 1 <= i <= d.
bool gparam_check(const InvariantTable& t);

// Full certified table; two independent draws must agree before a value is
// reported.
InvariantTable invariant_table(const Ideal& I, const InvariantOptions& opts = {});

// Brute-force polar/Segre sequences straight from length counts of
// I^v/m^{n+1}I^v and I^v/(m^{n+1}I^v + I^{v+1}) on a (v,n) grid.
struct OracleResult {
    std::vector<std::int64_t> m, c;
};
OracleResult kleiman_thorup_oracle(const Ideal& I, int v_max, int n_max);

}  // namespace segrelab
