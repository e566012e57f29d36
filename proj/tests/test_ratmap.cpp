#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "segrelab/ratmap.hpp"

using namespace segrelab;

namespace {

const Field F = Field::prime(2147483647);

Ring P1() { return Ring::polynomial(F, {"x0", "x1"}); }
Ring P2() { return Ring::polynomial(F, {"x0", "x1", "x2"}); }

RationalMap cremona() { return parse_map(P2(), {"x1*x2", "x0*x2", "x0*x1"}); }

RationalMap conic_net(std::uint64_t seed) {
    Ring R = P2();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> cf(1, 200);
    std::vector<std::string> mons = {"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"};
    std::vector<Poly> forms;
    for (int j = 0; j < 3; ++j) {
        std::string s;
        for (const auto& m : mons) s += (s.empty() ? "" : " + ") + std::to_string(cf(rng)) + "*" + m;
        forms.push_back(p_parse(R, s));
    }
    return make_map(R, forms);
}

// plane-to-space parametrized map, quartic forms linear in the parameter a
RationalMap minors_map() {
    Ring A = Ring::polynomial(F, {"a", "x0", "x1", "x2"});
    A.roles[0] = VarRole::Parameter;
    return parse_map(A, {"x0^2*x1^2 + a*x0*x1^2*x2 - x0*x1*x2^2", "-x0^4 - a*x0^3*x2 + x0^2*x2^2",
                         "x0^3*x1 - x0^2*x1^2",
                         "x0^4 - x0^2*x1^2 + a*x0^3*x2 - a*x1^3*x2 - x0^2*x2^2 + x1^2*x2^2"});
}

using Seq = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("map construction and validation") {
    RationalMap C = cremona();
    CHECK(C.r == 2);
    CHECK(C.s == 2);
    CHECK(C.delta == 2);

    Ring R = P1();
    CHECK_THROWS_AS((void)parse_map(R, {"x0", "x1^2"}), ComputationError);
    CHECK_THROWS_AS((void)parse_map(R, {"x0 + x1^2"}), ComputationError);
    CHECK_THROWS_AS((void)parse_map(R, {"0", "0"}), DegenerateFiber);
    CHECK_THROWS_AS((void)parse_map(R, {"1", "x0"}), ComputationError);

    // zero forms are kept, only the common degree of the rest is checked
    RationalMap Z = parse_map(R, {"x0^2", "0", "x1^2"});
    CHECK(Z.s == 2);
    CHECK(Z.delta == 2);
}

TEST_CASE("parameter specialization") {
    RationalMap M = minors_map();
    CHECK(M.r == 2);
    CHECK(M.delta == 4);
    CHECK_THROWS_AS((void)deg_image(M), ComputationError);  // not parameter-free

    FieldOps ops(F);
    RationalMap M0 = specialize_map(M, {ops.zero()});
    CHECK(M0.source.nvars() == 3);
    CHECK(M0.delta == 4);
    CHECK(p_eq(M0.source, M0.forms[1], p_parse(M0.source, "-x0^4 + x0^2*x2^2")));
}

TEST_CASE("image ideals") {
    CHECK(ideal_is_zero(image_ideal(cremona())));

    RationalMap Q = parse_map(P1(), {"x0^4", "x0^3*x1", "x0*x1^3", "x1^4"});
    Ideal img = image_ideal(Q);
    CHECK(ideal_contains(img, p_parse(img.ring, "y0*y3 - y1*y2")));
    CHECK(krull_dim(img) == 2);

    CHECK(ideal_is_zero(image_ideal(parse_map(P1(), {"x0^2", "x1^2"}))));
}

TEST_CASE("image degrees") {
    CHECK(deg_image(cremona()) == 1);
    CHECK(deg_image(parse_map(P1(), {"x0^4", "x0^3*x1", "x0*x1^3", "x1^4"})) == 4);
    CHECK(deg_image(parse_map(P2(), {"x0^2", "x0^2", "x0^2"})) == 0);
}

TEST_CASE("projective degrees, both code paths") {
    ProjDegOptions xc;
    xc.cross_check = true;

    CHECK(projective_degrees(cremona(), xc) == Seq{1, 2, 1});
    CHECK(projective_degrees(parse_map(P2(), {"x0", "x1", "x2"}), xc) == Seq{1, 1, 1});
    CHECK(projective_degrees(conic_net(2), xc) == Seq{4, 2, 1});

    // base locus is a double line; the graph misses the y-general fibers
    RationalMap L = parse_map(P1(), {"x0^2", "x0^2"});
    CHECK(projective_degrees(L) == Seq{0, 1});
    CHECK(projective_degrees_rees(L) == Seq{0, 1});
}

TEST_CASE("map degrees and birationality") {
    CHECK(map_degree(cremona()) == 1);
    CHECK(is_birational(cremona()));
    CHECK(map_degree(parse_map(P2(), {"x0^2", "x0^2", "x0^2"})) == 0);

    FieldOps ops(F);
    RationalMap M0 = specialize_map(minors_map(), {ops.zero()});
    CHECK(map_degree(M0) == 2);
    RationalMap M7 = specialize_map(minors_map(), {ops.from_int(7)});
    CHECK(map_degree(M7) == 1);
    CHECK(is_birational(M7));
    CHECK_FALSE(is_birational(M0));
}

TEST_CASE("j-multiplicity") {
    CHECK(j_multiplicity(cremona()) == 2);
    CHECK(j_multiplicity(conic_net(5)) == 8);
    CHECK(j_multiplicity(parse_map(P2(), {"x0", "x1", "x2"})) == 1);
}

TEST_CASE("degree identities across sampled maps") {
    std::vector<RationalMap> maps = {cremona(), conic_net(11),
                                     parse_map(P2(), {"x0", "x1", "x2"}),
                                     parse_map(P1(), {"x0^4", "x0^3*x1", "x0*x1^3", "x1^4"})};
    for (const auto& M : maps) {
        Seq d = projective_degrees(M);
        CHECK(d[M.r] == 1);
        std::int64_t dy = deg_image(M);
        if (dy > 0) CHECK(d[0] == map_degree(M) * dy);
        for (int i = 0; i <= M.r; ++i) {
            std::int64_t b = 1;
            for (int t = 0; t < M.r - i; ++t) b *= M.delta;
            CHECK(d[i] <= b);
        }
        CHECK(projective_degrees_rees(M) == d);
    }
}

TEST_CASE("degree bound reports") {
    BoundSpec gen;
    BoundReport rg = degree_bounds(cremona(), gen);
    CHECK(rg.bounds == Seq{4, 2, 1});
    CHECK(rg.all_satisfied);

    BoundSpec hb;
    hb.kind = BoundSpec::Kind::HilbertBurch;
    hb.mu = {1, 1};
    BoundReport rh = degree_bounds(cremona(), hb);
    CHECK(rh.bounds == Seq{1, 2, 1});
    CHECK(rh.all_satisfied);

    // wrong structure metadata is reported, not thrown
    BoundReport bad = degree_bounds(conic_net(3), hb);
    CHECK(bad.degrees == Seq{4, 2, 1});
    CHECK_FALSE(bad.all_satisfied);
    CHECK_FALSE(bad.satisfied[0]);

    Ring R3 = Ring::polynomial(F, {"x0", "x1", "x2", "x3"});
    BoundSpec g3;
    g3.kind = BoundSpec::Kind::Gorenstein3;
    g3.D = 1;
    BoundReport r3 = degree_bounds(parse_map(R3, {"x0", "x1", "x2", "x3"}), g3);
    CHECK(r3.degrees == Seq{1, 1, 1, 1});
    CHECK(r3.bounds[0] == 1);  // D^3 * binom(2,2)
    CHECK(r3.all_satisfied);
}
