#pragma once

#include <map>
#include <vector>

#include "segrelab/ideal.hpp"

namespace segrelab {

using NVec = std::vector<std::int32_t>;

// Series numerator over prod_v (1 - t^{deg v}); one denominator factor per
// ring variable.
struct HilbertSeries {
    std::map<NVec, mpz_class> numer;
    std::vector<NVec> denom;
    std::int32_t blocks = 1;
};

// Coefficients e(n) of P(t) = sum_n e(n) prod_i binom(t_i + n_i, n_i).
struct HilbertPolynomial {
    std::map<NVec, mpz_class> e;
    std::int64_t degree = -1;  // max |n| over nonzero e(n)
};

// The graded module H/K for nested ideals K <= H of the same ring; H is the
// unit ideal for R/K.
struct ModulePresentation {
    Ideal H;
    Ideal K;
};

ModulePresentation module_quotient(Ideal K);
// Verifies K <= H generator by generator.
ModulePresentation module_pair(Ideal H, Ideal K);

HilbertSeries hilbert_series(const ModulePresentation& M);
// Graded dimensions on the box [0,sz_1) x ... x [0,sz_p), row-major.
std::vector<mpz_class> series_box(const HilbertSeries& S, const std::vector<int>& sz);

struct HPOptions {
    int band = 2;  // width of the agreement band checked beyond the window
};
HilbertPolynomial hilbert_polynomial(const ModulePresentation& M, const HPOptions& opts = {});

// e(n;M) for |n| = deg P; all values are nonnegative.
std::map<NVec, mpz_class> mixed_multiplicities(const ModulePresentation& M);

// Krull dimension of the support of H/K (affine).
std::int64_t module_dim(const ModulePresentation& M);

// Multiplicity of the k-cycle of H/K: 0 if dim < k, the top binomial-basis
// coefficient if dim = k >= 1, and the total vector-space dimension if k = 0.
std::int64_t graded_degree(const ModulePresentation& M, int k);

struct LocalOptions {
    int window = 3;
    int cap = 60;
    // accept ideals not contained in m; components away from the origin are
    // then ignored, matching multiplicity in the localization
    bool localize = false;
    // set to the first index where the difference window closed; a value near
    // cap means the answer should be treated with suspicion
    int* stabilized_at = nullptr;
};

// dim_k R/(K + m^{n+1}), m the coordinate maximal ideal.
std::int64_t local_quotient_dim(const Ideal& K, int n);

// Hilbert-Samuel multiplicity of dimension j of R/K at the coordinate origin,
// from j-th finite differences of n -> dim_k R/(K + m^{n+1}).
std::int64_t local_multiplicity(const Ideal& K, int j, const LocalOptions& opts = {});

// Length of R/K when it is finite; stabilized dim_k R/(K + m^N).
std::int64_t local_length(const Ideal& K, const LocalOptions& opts = {});

}  // namespace segrelab
