#include "segrelab/order.hpp"

namespace segrelab {

namespace {

// grevlex: higher total degree wins; on ties the last variable where the
// exponents differ decides, smaller exponent winning.
int grevlex_cmp(const Mono& a, const Mono& b) {
    std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int grevlex_cmp_masked(const Mono& a, const Mono& b, const std::vector<char>& mask, bool in_mask) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (static_cast<bool>(mask[i]) == in_mask) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (static_cast<bool>(mask[i]) == in_mask && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
    switch (kind) {
        case Kind::Grevlex:
            return grevlex_cmp(a, b);
        case Kind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case Kind::Block: {
            if (int c = grevlex_cmp_masked(a, b, elim_mask, true)) return c;
            return grevlex_cmp_masked(a, b, elim_mask, false);
        }
        case Kind::WGrevlex: {
            std::int64_t da = 0, db = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                da += std::int64_t{weights[i]} * a[i];
                db += std::int64_t{weights[i]} * b[i];
            }
            if (da != db) return da < db ? -1 : 1;
            return grevlex_cmp(a, b);
        }
    }
    return 0;
}

std::string MonomialOrder::descriptor() const {
    switch (kind) {
        case Kind::Grevlex:
            return "grevlex";
        case Kind::Lex:
            return "lex";
        case Kind::Block: {
            std::string s = "block[";
            for (char c : elim_mask) s += c ? '1' : '0';
            return s + "]";
        }
        case Kind::WGrevlex: {
            std::string s = "wgrevlex[";
            for (std::size_t i = 0; i < weights.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(weights[i]);
            }
            return s + "]";
        }
    }
    return "?";
}

}  // namespace segrelab
