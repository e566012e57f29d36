#pragma once

#include <string>
#include <vector>

#include "segrelab/monomial.hpp"

namespace segrelab {

// Total multiplicative monomial order with 1 minimal on each degree-bounded set.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Block, WGrevlex };

    Kind kind = Kind::Grevlex;
    // Block elimination: variables with elim_mask[i] != 0 form the leading block.
    std::vector<char> elim_mask;
    // Weighted grevlex weights (positive).
    std::vector<std::int32_t> weights;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, {}, {}}; }
    static MonomialOrder block_elim(std::vector<char> mask) {
        return {Kind::Block, std::move(mask), {}};
    }
    static MonomialOrder wgrevlex(std::vector<std::int32_t> w) {
        return {Kind::WGrevlex, {}, std::move(w)};
    }

    // >0 if a > b, <0 if a < b, 0 if equal.
    int cmp(const Mono& a, const Mono& b) const;

    std::string descriptor() const;
    bool operator==(const MonomialOrder&) const = default;
};

}  // namespace segrelab
