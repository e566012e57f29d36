#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "segrelab/poly.hpp"

using namespace segrelab;

namespace {

Ring std_ring(std::vector<std::string> names, Field f = Field::prime(2147483647)) {
    return Ring::polynomial(f, std::move(names));
}

Poly rnd_poly(const Ring& R, std::mt19937_64& rng, int max_terms = 5, int max_exp = 3) {
    FieldOps ops(R.field);
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ex(0, max_exp);
    std::uniform_int_distribution<long long> cf(-50, 50);
    std::vector<Term> ts;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        Mono m(R.nvars());
        for (auto& e : m) e = ex(rng);
        ts.push_back(Term{std::move(m), ops.from_int(cf(rng))});
    }
    return p_normalize(R, MonomialOrder::grevlex(), std::move(ts));
}

}  // namespace

TEST_CASE("field arithmetic laws hold on random triples") {
    for (Field f : {Field::prime(2147483647), Field::prime(5), Field::rationals()}) {
        FieldOps ops(f);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long long> d(-1000, 1000);
        for (int i = 0; i < 1200; ++i) {
            Coeff a = ops.from_int(d(rng)), b = ops.from_int(d(rng)), c = ops.from_int(d(rng));
            CHECK(ops.eq(ops.add(a, b), ops.add(b, a)));
            CHECK(ops.eq(ops.mul(a, b), ops.mul(b, a)));
            CHECK(ops.eq(ops.add(ops.add(a, b), c), ops.add(a, ops.add(b, c))));
            CHECK(ops.eq(ops.mul(ops.mul(a, b), c), ops.mul(a, ops.mul(b, c))));
            CHECK(ops.eq(ops.mul(a, ops.add(b, c)), ops.add(ops.mul(a, b), ops.mul(a, c))));
            CHECK(ops.is_zero(ops.sub(a, a)));
            if (!ops.is_zero(b)) CHECK(ops.is_one(ops.mul(b, ops.inv(b))));
        }
    }
}

TEST_CASE("field parse and bounds") {
    FieldOps q(Field::rationals());
    CHECK(q.eq(q.parse("3/6"), q.parse("1/2")));
    CHECK(q.eq(q.parse("-4"), q.from_int(-4)));
    FieldOps p(Field::prime(7));
    CHECK(p.eq(p.parse("-1"), p.from_int(6)));
    CHECK_THROWS_AS((void)Field::prime(6), FieldError);
    CHECK_THROWS_AS((void)Field::prime(2), FieldError);
    CHECK_THROWS_AS((void)q.inv(q.zero()), FieldError);
}

TEST_CASE("grevlex and lex comparisons") {
    MonomialOrder g = MonomialOrder::grevlex();
    MonomialOrder l = MonomialOrder::lex();
    // x^2 vs xy vs y^2 in k[x,y]
    Mono x2{2, 0}, xy{1, 1}, y2{0, 2}, x{1, 0}, one{0, 0};
    CHECK(g.cmp(x2, xy) > 0);
    CHECK(g.cmp(xy, y2) > 0);
    CHECK(g.cmp(x2, x) > 0);
    CHECK(g.cmp(x, one) > 0);
    CHECK(l.cmp(x, y2) > 0);  // lex ignores total degree
    // grevlex in 3 vars: xz < y^2 is false; standard: x*z vs y^2 have equal
    // degree, last differing exponent decides. a=(1,0,1), b=(0,2,0): last diff
    // index 2, a has 1 > 0 so a < b.
    Mono xz{1, 0, 1}, yy{0, 2, 0};
    CHECK(g.cmp(xz, yy) < 0);
    // block order eliminates masked vars first
    MonomialOrder b = MonomialOrder::block_elim({1, 0, 0});
    Mono xv{1, 0, 0}, y5{0, 5, 0};
    CHECK(b.cmp(xv, y5) > 0);
}

TEST_CASE("polynomial arithmetic identities") {
    Ring R = std_ring({"x", "y"});
    MonomialOrder g = MonomialOrder::grevlex();
    Poly f = p_parse(R, "(x+y)*(x-y)");
    CHECK(p_eq(R, f, p_parse(R, "x^2-y^2")));
    Poly h = p_parse(R, "x^3-2*x*y+7");
    CHECK(p_eq(R, p_add(R, g, h, p_zero()), h));
    CHECK(p_eq(R, p_mul(R, g, h, p_one(R)), h));

    Ring R5 = std_ring({"x"}, Field::prime(5));
    CHECK(p_eq(R5, p_parse(R5, "(x+2)*(x+3)"), p_parse(R5, "x^2+1")));
}

TEST_CASE("polynomial ring laws on random triples") {
    for (Field f : {Field::prime(2147483647), Field::rationals()}) {
        Ring R = std_ring({"x", "y", "z"}, f);
        MonomialOrder g = MonomialOrder::grevlex();
        std::mt19937_64 rng(11);
        int n = f.kind == Field::Kind::Rationals ? 60 : 400;
        for (int i = 0; i < n; ++i) {
            Poly a = rnd_poly(R, rng), b = rnd_poly(R, rng), c = rnd_poly(R, rng);
            CHECK(p_eq(R, p_add(R, g, a, b), p_add(R, g, b, a)));
            CHECK(p_eq(R, p_mul(R, g, a, b), p_mul(R, g, b, a)));
            CHECK(p_eq(R, p_mul(R, g, p_mul(R, g, a, b), c), p_mul(R, g, a, p_mul(R, g, b, c))));
            CHECK(p_eq(R, p_mul(R, g, a, p_add(R, g, b, c)),
                       p_add(R, g, p_mul(R, g, a, b), p_mul(R, g, a, c))));
            CHECK(p_eq(R, p_sub(R, g, p_add(R, g, a, b), b), a));
        }
    }
}

TEST_CASE("multidegree over a bigrading") {
    Ring R = std_ring({"x0", "x1", "y0", "y1"});
    R.num_blocks = 2;
    R.var_deg = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
    Poly f = p_parse(R, "x0*y1 - x1*y0");
    CHECK(p_is_homogeneous(R, f));
    CHECK(mono_multidegree(R, f.lt().mono) == std::vector<std::int32_t>{1, 1});

    Ring S = std_ring({"x0", "x1"});
    Poly g = p_parse(S, "x0^2 + x0*x1^2");
    CHECK_FALSE(p_is_homogeneous(S, g));
    Poly c = p_from_int(S, 7);
    CHECK(p_is_homogeneous(S, c));
    CHECK(mono_multidegree(S, c.lt().mono) == std::vector<std::int32_t>{0});
}

TEST_CASE("multidegree is additive under multiplication") {
    Ring R = std_ring({"x0", "x1", "y0", "y1"});
    R.num_blocks = 2;
    R.var_deg = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
    MonomialOrder g = MonomialOrder::grevlex();
    Poly f = p_parse(R, "x0*y1 - x1*y0");
    Poly h = p_parse(R, "x0^2 + x1^2");
    Poly prod = p_mul(R, g, f, h);
    CHECK(p_is_homogeneous(R, prod));
    CHECK(mono_multidegree(R, prod.lt().mono) == std::vector<std::int32_t>{3, 1});
}

TEST_CASE("specialization of parameters") {
    Ring R = Ring::polynomial(Field::prime(2147483647), {"a", "x0", "x1"});
    R.roles[0] = VarRole::Parameter;
    MonomialOrder g = MonomialOrder::grevlex();
    FieldOps ops(R.field);

    Poly f = p_parse(R, "a*x0 + x1");
    CHECK(p_eq(R, p_specialize(R, g, f, 0, ops.zero()), p_parse(R, "x1")));

    Poly az = p_parse(R, "a*x0");
    Coeff beta = ops.from_int(17);
    CHECK(p_eq(R, p_specialize(R, g, az, 0, beta), p_parse(R, "17*x0")));

    Poly c = p_from_int(R, 9);
    CHECK(p_eq(R, p_specialize(R, g, c, 0, beta), c));

    // specialize commutes with products
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Poly u = rnd_poly(R, rng), v = rnd_poly(R, rng);
        Coeff val = ops.from_int(static_cast<long long>(rng() % 97));
        Poly lhs = p_specialize(R, g, p_mul(R, g, u, v), 0, val);
        Poly rhs = p_mul(R, g, p_specialize(R, g, u, 0, val), p_specialize(R, g, v, 0, val));
        CHECK(p_eq(R, lhs, rhs));
    }
}

TEST_CASE("printing and parsing round-trip") {
    Ring R = std_ring({"x", "y", "z"});
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        Poly f = rnd_poly(R, rng);
        Poly g = p_parse(R, p_to_string(R, f));
        CHECK(p_eq(R, f, g));
    }
    CHECK(p_to_string(R, p_zero()) == "0");
    CHECK_THROWS_AS((void)p_parse(R, "x + w"), ParseError);
    CHECK_THROWS_AS((void)p_parse(R, "x + "), ParseError);
}

TEST_CASE("ring extension lifts polynomials consistently") {
    Ring R = std_ring({"x", "y"});
    Ring E = R.extended({"t"}, VarRole::Auxiliary);
    CHECK(E.nvars() == 3);
    CHECK(E.roles[2] == VarRole::Auxiliary);
    Poly f = p_parse(R, "x^2 - y");
    Poly lf = p_lift(E, f);
    CHECK(p_eq(E, lf, p_parse(E, "x^2 - y")));
    CHECK(p_eq(R, p_restrict(R, lf), f));
    CHECK(R.signature() != E.signature());
}
