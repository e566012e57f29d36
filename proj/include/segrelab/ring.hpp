#pragma once

#include <memory>
#include <string>
#include <vector>

#include "segrelab/field.hpp"
#include "segrelab/monomial.hpp"

namespace segrelab {

struct Poly;

enum class VarRole { Coordinate, Parameter, Auxiliary };

// A polynomial ring over Field, optionally multigraded and optionally a
// quotient by the ideal generated by `modulus`. Quotient arithmetic always
// reduces modulo the grevlex basis of `modulus`, cached in `modulus_gb`.
struct Ring {
    Field field;
    std::vector<std::string> vars;
    std::vector<VarRole> roles;
    // Multidegree of each variable, one entry per grading block.
    std::vector<std::vector<std::int32_t>> var_deg;
    std::int32_t num_blocks = 1;
    std::vector<Poly> modulus;

    // Reduced grevlex basis of `modulus`, filled lazily by the ideal layer.
    mutable std::shared_ptr<const std::vector<Poly>> modulus_gb;

    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
    bool is_quotient() const { return !modulus.empty(); }
    // Indices of the coordinate variables; these span the irrelevant maximal
    // ideal at the distinguished point.
    std::vector<int> coordinate_vars() const;

    static Ring polynomial(Field f, std::vector<std::string> names);

    Ring with_modulus(std::vector<Poly> gens) const;
    // Same ring with `names` appended in the given role; new variables get
    // multidegree zero in every block.
    Ring extended(const std::vector<std::string>& names, VarRole role) const;

    // Stable textual identity used for cache keys and deterministic seeding.
    std::string signature() const;
};

}  // namespace segrelab
