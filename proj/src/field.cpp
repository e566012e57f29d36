#include "segrelab/field.hpp"

namespace segrelab {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p <= 2 || p >= (1ull << 31))
        throw FieldError("prime modulus must satisfy 2 < p < 2^31");
    if (!is_prime_u64(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    return Field{Kind::Prime, p};
}

std::string Field::to_string() const {
    return kind == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

Coeff FieldOps::zero() const {
    if (f_.kind == Field::Kind::Prime) return Coeff{std::uint64_t{0}};
    return Coeff{mpq_class(0)};
}

Coeff FieldOps::one() const {
    if (f_.kind == Field::Kind::Prime) return Coeff{std::uint64_t{1}};
    return Coeff{mpq_class(1)};
}

Coeff FieldOps::from_int(long long n) const {
    if (f_.kind == Field::Kind::Prime) {
        long long r = n % static_cast<long long>(f_.p);
        if (r < 0) r += static_cast<long long>(f_.p);
        return Coeff{static_cast<std::uint64_t>(r)};
    }
    return Coeff{mpq_class(static_cast<long>(n))};
}

Coeff FieldOps::parse(const std::string& s) const {
    if (f_.kind == Field::Kind::Rationals) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw FieldError("cannot parse rational '" + s + "'");
        q.canonicalize();
        return Coeff{q};
    }
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw FieldError("cannot parse integer '" + s + "'");
    mpz_class r = z % mpz_class(static_cast<unsigned long>(f_.p));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(f_.p));
    return Coeff{static_cast<std::uint64_t>(r.get_ui())};
}

bool FieldOps::is_zero(const Coeff& a) const {
    if (auto* u = std::get_if<std::uint64_t>(&a)) return *u == 0;
    return std::get<mpq_class>(a) == 0;
}

bool FieldOps::is_one(const Coeff& a) const {
    if (auto* u = std::get_if<std::uint64_t>(&a)) return *u == 1;
    return std::get<mpq_class>(a) == 1;
}

bool FieldOps::eq(const Coeff& a, const Coeff& b) const {
    if (auto* u = std::get_if<std::uint64_t>(&a)) return *u == std::get<std::uint64_t>(b);
    return std::get<mpq_class>(a) == std::get<mpq_class>(b);
}

std::uint64_t FieldOps::mod_mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % f_.p;  // a, b < 2^31, product fits in 64 bits
}

std::uint64_t FieldOps::mod_pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}

Coeff FieldOps::add(const Coeff& a, const Coeff& b) const {
    if (f_.kind == Field::Kind::Prime) {
        std::uint64_t s = std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b);
        if (s >= f_.p) s -= f_.p;
        return Coeff{s};
    }
    return Coeff{mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b))};
}

Coeff FieldOps::sub(const Coeff& a, const Coeff& b) const {
    if (f_.kind == Field::Kind::Prime) {
        std::uint64_t x = std::get<std::uint64_t>(a), y = std::get<std::uint64_t>(b);
        return Coeff{x >= y ? x - y : x + f_.p - y};
    }
    return Coeff{mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b))};
}

Coeff FieldOps::mul(const Coeff& a, const Coeff& b) const {
    if (f_.kind == Field::Kind::Prime)
        return Coeff{mod_mul(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b))};
    return Coeff{mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b))};
}

Coeff FieldOps::neg(const Coeff& a) const {
    if (f_.kind == Field::Kind::Prime) {
        std::uint64_t x = std::get<std::uint64_t>(a);
        return Coeff{x == 0 ? 0 : f_.p - x};
    }
    return Coeff{mpq_class(-std::get<mpq_class>(a))};
}

Coeff FieldOps::inv(const Coeff& a) const {
    if (is_zero(a)) throw FieldError("division by zero");
    if (f_.kind == Field::Kind::Prime)
        return Coeff{mod_pow(std::get<std::uint64_t>(a), f_.p - 2)};
    return Coeff{mpq_class(1 / std::get<mpq_class>(a))};
}

Coeff FieldOps::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

std::string FieldOps::to_string(const Coeff& a) const {
    if (auto* u = std::get_if<std::uint64_t>(&a)) return std::to_string(*u);
    return std::get<mpq_class>(a).get_str();
}

}  // namespace segrelab
