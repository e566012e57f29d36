#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace segrelab {

// Coefficient field: the rationals, or a prime field GF(p) with p > 2.
struct Field {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Prime;
    std::uint64_t p = 2147483647;  // modulus, when kind == Prime

    static Field rationals() { return Field{Kind::Rationals, 0}; }
    static Field prime(std::uint64_t p);

    bool operator==(const Field&) const = default;
    std::string to_string() const;
};

// A field element. Prime-field values are stored reduced to [0, p); rational
// values are kept in canonical form.
using Coeff = std::variant<std::uint64_t, mpq_class>;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FieldOps {
public:
    explicit FieldOps(Field f) : f_(f) {}

    const Field& field() const { return f_; }

    Coeff zero() const;
    Coeff one() const;
    Coeff from_int(long long n) const;
    // Accepts an optionally signed integer, or "a/b" over the rationals.
    Coeff parse(const std::string& s) const;

    bool is_zero(const Coeff& a) const;
    bool is_one(const Coeff& a) const;
    bool eq(const Coeff& a, const Coeff& b) const;

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;
    Coeff div(const Coeff& a, const Coeff& b) const;

    std::string to_string(const Coeff& a) const;

private:
    Field f_;

    std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) const;
};

}  // namespace segrelab
