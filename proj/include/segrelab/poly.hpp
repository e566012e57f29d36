#pragma once

#include <string>
#include <vector>

#include "segrelab/field.hpp"
#include "segrelab/monomial.hpp"
#include "segrelab/order.hpp"
#include "segrelab/ring.hpp"

namespace segrelab {

struct Term {
    Mono mono;
    Coeff coeff;
};

// Terms are kept strictly descending under the order the poly was built with
// (grevlex unless stated otherwise), with no zero coefficients.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
};

Poly p_normalize(const Ring& R, const MonomialOrder& ord, std::vector<Term> ts);
Poly p_resort(const Ring& R, const MonomialOrder& ord, const Poly& p);

Poly p_zero();
Poly p_const(const Ring& R, const Coeff& c);
Poly p_one(const Ring& R);
Poly p_from_int(const Ring& R, long long n);
Poly p_var(const Ring& R, int i, std::int32_t e = 1);
Poly p_monomial(const Ring& R, Mono m);

Poly p_add(const Ring& R, const MonomialOrder& ord, const Poly& a, const Poly& b);
Poly p_sub(const Ring& R, const MonomialOrder& ord, const Poly& a, const Poly& b);
Poly p_neg(const Ring& R, const Poly& a);
Poly p_mul(const Ring& R, const MonomialOrder& ord, const Poly& a, const Poly& b);
Poly p_scale(const Ring& R, const Poly& a, const Coeff& c);
Poly p_mul_term(const Ring& R, const Poly& a, const Mono& m, const Coeff& c);
Poly p_pow(const Ring& R, const MonomialOrder& ord, const Poly& a, std::int64_t e);
Poly p_monic(const Ring& R, const Poly& a);

bool p_eq(const Ring& R, const Poly& a, const Poly& b);

std::vector<std::int32_t> mono_multidegree(const Ring& R, const Mono& m);
// True when every term has the same multidegree (zero poly counts).
bool p_is_homogeneous(const Ring& R, const Poly& p);
std::int64_t p_total_degree(const Poly& p);  // -1 for zero
std::int64_t p_min_degree(const Poly& p);    // min term degree, -1 for zero

Poly p_specialize(const Ring& R, const MonomialOrder& ord, const Poly& p, int var,
                  const Coeff& val);
// Pads exponent vectors to fit `bigger`, which must extend p's ring by
// appending variables.
Poly p_lift(const Ring& bigger, const Poly& p);
// Drops trailing exponents down to smaller.nvars(); the dropped exponents
// must all be zero.
Poly p_restrict(const Ring& smaller, const Poly& p);

std::string p_to_string(const Ring& R, const Poly& p);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Infix expression over the ring's variables: + - * ^ ( ), integer or a/b
// coefficients. Result is grevlex canonical.
Poly p_parse(const Ring& R, const std::string& text);

}  // namespace segrelab
