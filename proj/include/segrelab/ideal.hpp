#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segrelab/poly.hpp"

namespace segrelab {

// An ideal of R (or of R/modulus: the modulus is adjoined by every basis
// computation, so all ideal-theoretic answers are relative to the quotient).
struct Ideal {
    Ring ring;
    std::vector<Poly> gens;
};

Ideal make_ideal(Ring R, std::vector<Poly> gens);
Ideal parse_ideal(const Ring& R, const std::vector<std::string>& gens);
// Stable textual identity of (ring, generators); used for caching and seeding.
std::string ideal_key(const Ideal& I);

struct GBOptions {
    // Drop all terms of total degree > trunc during the run. Only sound when
    // the ideal is known to contain every monomial of degree trunc+1.
    std::int64_t trunc_total_deg = -1;
};

// Reduced basis of gens alone in the ambient polynomial ring (no modulus).
std::vector<Poly> buchberger(const Ring& R, const MonomialOrder& ord, std::vector<Poly> gens,
                             const GBOptions& opts = {});

// Reduced basis of I + modulus under ord; memoized per process and optionally
// on disk.
std::vector<Poly> reduced_gb(const Ideal& I, const MonomialOrder& ord);

Poly normal_form(const Ring& R, const MonomialOrder& ord, const Poly& f,
                 const std::vector<Poly>& G);
// Normal form of f modulo I + modulus, grevlex.
Poly nf_mod(const Ideal& I, const Poly& f);

bool ideal_contains(const Ideal& I, const Poly& f);
bool ideal_eq(const Ideal& I, const Ideal& J);
bool ideal_is_unit(const Ideal& I);
bool ideal_is_zero(const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, std::int64_t n);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_colon(const Ideal& I, const Ideal& J);
// I : J^infinity, stabilization detected by basis equality.
Ideal ideal_saturate(const Ideal& I, const Ideal& J);

// Generators of I + modulus not involving masked variables. Result stays in
// the same ring.
Ideal ideal_eliminate(const Ideal& I, const std::vector<char>& mask);

// Krull dimension of R/(I + modulus) as an affine ring; unit ideal gives -1.
int krull_dim(const Ideal& I);

// The irrelevant ideal: all coordinate variables of I's ring.
Ideal coordinate_ideal(const Ring& R);

// Kernel of k[y_names] -> target/modulus, y_j -> forms[j]. Returned in the
// fresh polynomial ring k[y_names].
Ideal kernel_of_map(const Ring& target, const std::vector<Poly>& forms,
                    const std::vector<std::string>& y_names);

// Defining ideal of the Rees algebra of I, in I.ring extended by one y per
// generator. Generators are bihomogeneous when I is.
Ideal rees_ideal(const Ideal& I, const std::vector<std::string>& y_names);

// GB cache control (cli wires the disk layer).
struct GBCacheStats {
    std::uint64_t memo_hits = 0;
    std::uint64_t disk_hits = 0;
    std::uint64_t misses = 0;
};
GBCacheStats gb_cache_stats();
void gb_cache_reset_stats();
void gb_memo_clear();
void gb_set_disk_cache(std::string dir);  // empty string disables
std::uint64_t fnv1a64(const std::string& s);

struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace segrelab
