#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segrelab/family.hpp"

using namespace segrelab;

namespace {

const Field F = Field::prime(2147483647);
const FieldOps ops(F);

std::vector<Coeff> pt(long long a) { return {ops.from_int(a)}; }

Ring param_plane() {
    Ring A = Ring::polynomial(F, {"a", "x0", "x1"});
    A.roles[0] = VarRole::Parameter;
    return A;
}

Ring param_space() {
    Ring A = Ring::polynomial(F, {"a", "x0", "x1", "x2"});
    A.roles[0] = VarRole::Parameter;
    return A;
}

// plane-to-space map whose degree jumps up at a = 0
RationalMap jumping_map() {
    return parse_map(param_space(),
                     {"x0^2*x1^2 + a*x0*x1^2*x2 - x0*x1*x2^2", "-x0^4 - a*x0^3*x2 + x0^2*x2^2",
                      "x0^3*x1 - x0^2*x1^2",
                      "x0^4 - x0^2*x1^2 + a*x0^3*x2 - a*x1^3*x2 - x0^2*x2^2 + x1^2*x2^2"});
}

// plane self-map of generic degree m = 3 that drops to degree 1 at a = 0
RationalMap dropping_map() {
    return parse_map(param_space(),
                     {"x2*x0^3 + x0*x1^3 + x2*x1^3", "x2*x0^3 - a*x2^2*x1^2",
                      "-x1*x2*x0^2 - a*x2^2*x0^2 - a*x2*x1^3"});
}

using Seq = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("fiber specialization of ideal payloads") {
    Ring A = param_plane();
    Ideal I = parse_ideal(A, {"x0^2 + a*x0*x1", "a*x1^3"});
    Ideal I0 = specialize_ideal(I, pt(0));
    CHECK(I0.ring.nvars() == 2);
    CHECK(I0.gens.size() == 1);
    CHECK(p_eq(I0.ring, I0.gens[0], p_parse(I0.ring, "x0^2")));
    Ideal I2 = specialize_ideal(I, pt(2));
    CHECK(I2.gens.size() == 2);
    CHECK(ideal_contains(I2, p_parse(I2.ring, "x1^3")));

    CHECK_THROWS_AS((void)specialize_ideal(I, {}), ComputationError);
}

TEST_CASE("map degree can jump up, outside the semicontinuity regime") {
    FamilyScenario sc = map_family(jumping_map(), {pt(0), pt(1), pt(2)});
    sc.trials = 3;
    InvariantKind kind{ScanInvariant::MapDegree, {}};
    CHECK(direction_of(sc, kind) == Direction::None);  // r = 2, s = 3

    ScanReport rep = semicontinuity_report(sc, kind);
    REQUIRE(rep.points.size() == 3);
    CHECK(rep.points[0].value.values == Seq{2});
    CHECK(rep.points[1].value.values == Seq{1});
    CHECK(rep.points[2].value.values == Seq{1});
    CHECK(rep.generic.conclusive);
    CHECK(rep.generic.value.values == Seq{1});
    CHECK(rep.verdicts == std::vector<std::string>{"not-governed", "equal", "equal"});
    CHECK_FALSE(rep.any_violation);
}

TEST_CASE("map degree drop obeys lower semicontinuity for self-maps") {
    FamilyScenario sc = map_family(dropping_map(), {pt(0), pt(1)});
    sc.trials = 2;
    InvariantKind kind{ScanInvariant::MapDegree, {}};
    CHECK(direction_of(sc, kind) == Direction::Lower);  // r = s = 2

    ScanReport rep = semicontinuity_report(sc, kind);
    CHECK(rep.points[0].value.values == Seq{1});
    CHECK(rep.points[1].value.values == Seq{3});
    CHECK(rep.generic.value.values == Seq{3});
    CHECK(rep.verdicts == std::vector<std::string>{"consistent", "equal"});
    CHECK_FALSE(rep.any_violation);
}

TEST_CASE("projective degrees are lower semicontinuous across the sampled family") {
    FamilyScenario sc = map_family(jumping_map(), {pt(0), pt(1)});
    sc.trials = 2;
    ScanReport rep = semicontinuity_report(sc, {ScanInvariant::ProjDegrees, {}});
    CHECK(rep.generic.conclusive);
    for (const auto& v : rep.verdicts) CHECK(v != "violation");
    CHECK_FALSE(rep.any_violation);
    // d_2 = 1 on every fiber
    for (const auto& p : rep.points) CHECK(p.value.values.back() == 1);
}

TEST_CASE("multidegree tags encode the dimension conventions") {
    Ring A = param_plane();
    FamilyScenario sc = ideal_family(parse_ideal(A, {"a*x0"}), {pt(0), pt(1)});
    sc.trials = 3;

    ScanReport low = scan(sc, {ScanInvariant::Multidegree, {0}});
    CHECK(low.points[0].value.tag == TaggedValue::Tag::InfiniteByDimension);  // fiber is all of P^1
    CHECK(low.points[1].value.tag == TaggedValue::Tag::Finite);
    CHECK(low.points[1].value.values == Seq{1});
    CHECK(low.generic.value.values == Seq{1});

    ScanReport high = scan(sc, {ScanInvariant::Multidegree, {1}});
    CHECK(high.points[0].value.values == Seq{1});  // degree of the line P^1
    CHECK(high.points[0].value.tag == TaggedValue::Tag::Finite);
    CHECK(high.points[1].value.tag == TaggedValue::Tag::ZeroByDimension);

    // upper semicontinuity holds for both choices of n
    CHECK_FALSE(semicontinuity_report(sc, {ScanInvariant::Multidegree, {0}}).any_violation);
    CHECK_FALSE(semicontinuity_report(sc, {ScanInvariant::Multidegree, {1}}).any_violation);
}

TEST_CASE("Segre sequences lex-compare against the pseudo-generic fiber") {
    Ring A = param_plane();
    FamilyScenario sc = ideal_family(parse_ideal(A, {"x0^2", "x0*x1^2 + a*x0*x1"}), {pt(0), pt(9)});
    sc.trials = 3;
    ScanReport rep = semicontinuity_report(sc, {ScanInvariant::SegreSeq, {}});
    CHECK(rep.direction == Direction::LexUpper);
    CHECK(rep.points[0].value.values == Seq{0, 1, 4});
    CHECK(rep.points[1].value.values == Seq{0, 1, 2});
    CHECK(rep.generic.value.values == Seq{0, 1, 2});
    CHECK(rep.verdicts == std::vector<std::string>{"consistent", "equal"});
    CHECK(rep.hypothesis_note.find("equidimensional") != std::string::npos);
}

TEST_CASE("equigenerated fibers satisfy the difference identity") {
    Ring A = param_plane();
    FamilyScenario sc =
        ideal_family(parse_ideal(A, {"x0^2", "x1^2 + a*x0*x1"}), {pt(0), pt(3), pt(11)});
    sc.trials = 2;
    std::int64_t delta = 2;
    ScanReport cs = scan(sc, {ScanInvariant::SegreSeq, {}});
    ScanReport ms = scan(sc, {ScanInvariant::PolarSeq, {}});
    for (std::size_t p = 0; p < sc.points.size(); ++p) {
        const Seq& c = cs.points[p].value.values;
        const Seq& m = ms.points[p].value.values;
        REQUIRE(c.size() == m.size());
        for (std::size_t i = 1; i < c.size(); ++i)
            CHECK(c[i] == delta * m[i - 1] - m[i]);
    }
}

TEST_CASE("degenerate fibers are tagged, not fatal") {
    Ring A = param_plane();
    RationalMap M = parse_map(A, {"a*x0^2", "a*x1^2"});
    FamilyScenario sc = map_family(M, {pt(0), pt(4)});
    sc.trials = 2;
    ScanReport rep = semicontinuity_report(sc, {ScanInvariant::MapDegree, {}});
    CHECK(rep.points[0].value.tag == TaggedValue::Tag::Degenerate);
    CHECK(rep.points[1].value.values == Seq{2});
    CHECK(rep.verdicts[0] == "degenerate");
    CHECK(rep.verdicts[1] == "equal");
}

TEST_CASE("per-point errors are recorded in-report") {
    Ring A = param_plane();
    FamilyScenario sc = ideal_family(parse_ideal(A, {"x0^2"}), {pt(0)});
    sc.trials = 2;
    ScanReport rep = semicontinuity_report(sc, {ScanInvariant::DegImage, {}});
    CHECK(rep.points[0].value.tag == TaggedValue::Tag::Error);
    CHECK(rep.verdicts[0] == "error");
    CHECK_FALSE(rep.generic.conclusive);
}

TEST_CASE("constant families scan to the constant") {
    Ring A = param_plane();
    FamilyScenario sc = ideal_family(parse_ideal(A, {"x0^2"}), {pt(0), pt(1), pt(7)});
    sc.trials = 3;
    ScanReport rep = semicontinuity_report(sc, {ScanInvariant::PolarSeq, {}});
    for (const auto& p : rep.points) CHECK(p.value.values == Seq{1, 0, 0});
    CHECK(rep.generic.value.values == Seq{1, 0, 0});
    for (const auto& v : rep.verdicts) CHECK(v == "equal");
}

TEST_CASE("scans are deterministic for a fixed seed and point list") {
    FamilyScenario sc = map_family(jumping_map(), {pt(0), pt(5)});
    sc.trials = 3;
    sc.seed = 42;
    ScanReport a = semicontinuity_report(sc, {ScanInvariant::MapDegree, {}});
    ScanReport b = semicontinuity_report(sc, {ScanInvariant::MapDegree, {}});
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i)
        CHECK(tagged_eq(a.points[i].value, b.points[i].value));
    CHECK(tagged_eq(a.generic.value, b.generic.value));
    CHECK(a.verdicts == b.verdicts);
}
