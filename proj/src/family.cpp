#include "segrelab/family.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace segrelab {

namespace {

std::vector<int> roles_of(const Ring& R, VarRole role) {
    std::vector<int> out;
    for (std::size_t i = 0; i < R.nvars(); ++i)
        if (R.roles[i] == role) out.push_back(static_cast<int>(i));
    return out;
}

const Ring& payload_ring(const FamilyScenario& sc) {
    return sc.has_map ? sc.map.source : sc.ideal.ring;
}

std::string payload_key(const FamilyScenario& sc) {
    if (!sc.has_map) return ideal_key(sc.ideal);
    std::string k = sc.map.source.signature();
    for (const Poly& f : sc.map.forms) {
        k += '\x1f';
        k += p_to_string(sc.map.source, f);
    }
    return k;
}

void check_points(const FamilyScenario& sc) {
    std::size_t t = roles_of(payload_ring(sc), VarRole::Parameter).size();
    for (const auto& pt : sc.points)
        if (pt.size() != t)
            throw ComputationError("fiber point must assign every parameter variable");
}

// comparison key: infinity dominates, otherwise lexicographic on the values
struct Cmp {
    bool inf = false;
    std::vector<std::int64_t> v;
};

Cmp cmp_key(const TaggedValue& t) {
    switch (t.tag) {
        case TaggedValue::Tag::InfiniteByDimension:
            return {true, {}};
        case TaggedValue::Tag::ZeroByDimension:
            return {false, {0}};
        case TaggedValue::Tag::Finite:
            return {false, t.values};
        default:
            throw ComputationError("cannot order an errored fiber value");
    }
}

int cmp(const TaggedValue& a, const TaggedValue& b) {
    Cmp x = cmp_key(a), y = cmp_key(b);
    if (x.inf || y.inf) return x.inf == y.inf ? 0 : (x.inf ? 1 : -1);
    if (x.v == y.v) return 0;
    return std::lexicographical_compare(x.v.begin(), x.v.end(), y.v.begin(), y.v.end()) ? -1 : 1;
}

bool componentwise_le(const TaggedValue& a, const TaggedValue& b) {
    Cmp x = cmp_key(a), y = cmp_key(b);
    if (y.inf) return true;
    if (x.inf) return false;
    if (x.v.size() != y.v.size()) throw ComputationError("fiber values have mixed lengths");
    for (std::size_t i = 0; i < x.v.size(); ++i)
        if (x.v[i] > y.v[i]) return false;
    return true;
}

bool comparable(const TaggedValue& t) {
    return t.tag != TaggedValue::Tag::Degenerate && t.tag != TaggedValue::Tag::Error;
}

std::vector<TaggedValue> eval_many(const FamilyScenario& sc, const InvariantKind& kind,
                                   const std::vector<std::vector<Coeff>>& pts) {
    std::vector<std::future<TaggedValue>> fut;
    for (const auto& pt : pts)
        fut.push_back(std::async(std::launch::async,
                                 [&sc, &kind, pt] { return evaluate_at(sc, kind, pt); }));
    std::vector<TaggedValue> out;
    for (auto& f : fut) out.push_back(f.get());
    return out;
}

}  // namespace

bool tagged_eq(const TaggedValue& a, const TaggedValue& b) {
    return a.tag == b.tag && a.values == b.values;
}

FamilyScenario ideal_family(Ideal I, std::vector<std::vector<Coeff>> points) {
    FamilyScenario sc;
    sc.ideal = std::move(I);
    sc.points = std::move(points);
    check_points(sc);
    return sc;
}

FamilyScenario map_family(RationalMap F, std::vector<std::vector<Coeff>> points) {
    FamilyScenario sc;
    sc.has_map = true;
    sc.map = std::move(F);
    sc.points = std::move(points);
    check_points(sc);
    return sc;
}

Ideal specialize_ideal(const Ideal& I, const std::vector<Coeff>& values) {
    const Ring& R = I.ring;
    if (R.is_quotient())
        throw ComputationError("family payloads must live in a polynomial ring");
    MonomialOrder g = MonomialOrder::grevlex();
    std::vector<int> params = roles_of(R, VarRole::Parameter);
    std::vector<int> coords = roles_of(R, VarRole::Coordinate);
    if (params.size() + coords.size() != R.nvars())
        throw ComputationError("family payloads cannot carry auxiliary variables");
    if (values.size() != params.size())
        throw ComputationError("expected one value per parameter variable");

    std::vector<std::string> names;
    for (int i : coords) names.push_back(R.vars[i]);
    Ring P = Ring::polynomial(R.field, names);
    P.num_blocks = R.num_blocks;
    for (std::size_t j = 0; j < coords.size(); ++j) P.var_deg[j] = R.var_deg[coords[j]];

    std::vector<Poly> out;
    for (Poly f : I.gens) {
        for (std::size_t j = 0; j < params.size(); ++j)
            f = p_specialize(R, g, f, params[j], values[j]);
        std::vector<Term> ts;
        for (const Term& t : f.terms) {
            Mono m(coords.size(), 0);
            for (std::size_t j = 0; j < coords.size(); ++j) m[j] = t.mono[coords[j]];
            ts.push_back({std::move(m), t.coeff});
        }
        out.push_back(p_normalize(P, g, std::move(ts)));
    }
    return make_ideal(P, std::move(out));
}

Direction direction_of(const FamilyScenario& sc, const InvariantKind& kind) {
    switch (kind.name) {
        case ScanInvariant::MixedMult:
        case ScanInvariant::Multidegree:
            return Direction::Upper;
        case ScanInvariant::SegreSeq:
            return Direction::LexUpper;
        case ScanInvariant::DegImage:
        case ScanInvariant::ProjDegrees:
        case ScanInvariant::JMult:
            return Direction::Lower;
        case ScanInvariant::MapDegree:
            return sc.has_map && sc.map.r == sc.map.s ? Direction::Lower : Direction::None;
        default:
            return Direction::None;
    }
}

TaggedValue evaluate_at(const FamilyScenario& sc, const InvariantKind& kind,
                        const std::vector<Coeff>& point) {
    TaggedValue out;
    bool need_map = kind.name == ScanInvariant::DegImage ||
                    kind.name == ScanInvariant::ProjDegrees ||
                    kind.name == ScanInvariant::MapDegree || kind.name == ScanInvariant::JMult;
    try {
        RationalMap Fp;
        Ideal Ip;
        if (sc.has_map) {
            Fp = specialize_map(sc.map, point);
            if (!need_map) Ip = base_ideal(Fp);
        } else {
            if (need_map) throw ComputationError("this invariant needs a map payload");
            Ip = specialize_ideal(sc.ideal, point);
        }

        ProjDegOptions pd;
        pd.inv = sc.inv;
        switch (kind.name) {
            case ScanInvariant::MixedMult:
            case ScanInvariant::Multidegree: {
                if (static_cast<std::int32_t>(kind.n.size()) != Ip.ring.num_blocks)
                    throw ComputationError("expected one entry of n per grading block");
                HilbertPolynomial P = hilbert_polynomial(module_quotient(Ip));
                std::int64_t tot = 0;
                for (auto v : kind.n) tot += v;
                if (tot == P.degree) {
                    auto it = P.e.find(kind.n);
                    out.values = {it == P.e.end()
                                      ? 0
                                      : static_cast<std::int64_t>(it->second.get_si())};
                } else if (tot > P.degree) {
                    out.tag = TaggedValue::Tag::ZeroByDimension;
                    out.values = {0};
                } else {
                    out.tag = TaggedValue::Tag::InfiniteByDimension;
                }
                break;
            }
            case ScanInvariant::DegImage:
                out.values = {deg_image(Fp)};
                break;
            case ScanInvariant::ProjDegrees:
                out.values = projective_degrees(Fp, pd);
                break;
            case ScanInvariant::MapDegree:
                out.values = {map_degree(Fp, pd)};
                break;
            case ScanInvariant::JMult:
                out.values = {j_multiplicity(Fp, pd)};
                break;
            case ScanInvariant::SegreSeq:
            case ScanInvariant::PolarSeq:
            case ScanInvariant::NuSeq: {
                if (Ip.gens.empty()) throw DegenerateFiber("ideal specializes to zero");
                InvariantTable t = invariant_table(Ip, sc.inv);
                out.values = kind.name == ScanInvariant::SegreSeq
                                 ? t.c
                                 : (kind.name == ScanInvariant::PolarSeq ? t.m : t.nu);
                break;
            }
        }
    } catch (const DegenerateFiber& e) {
        out.tag = TaggedValue::Tag::Degenerate;
        out.values.clear();
        out.note = e.what();
    } catch (const std::exception& e) {
        out.tag = TaggedValue::Tag::Error;
        out.values.clear();
        out.note = e.what();
    }
    return out;
}

GenericEstimate pseudo_generic(const FamilyScenario& sc, const InvariantKind& kind) {
    if (sc.trials < 2) throw ComputationError("pseudo-generic estimation needs >= 2 trials");
    std::size_t np = roles_of(payload_ring(sc), VarRole::Parameter).size();
    FieldOps ops(payload_ring(sc).field);
    std::mt19937_64 rng(fnv1a64(payload_key(sc)) ^ sc.seed);
    std::uniform_int_distribution<long long> dist(1, 1000000);
    std::vector<std::vector<Coeff>> pts;
    for (int t = 0; t < sc.trials; ++t) {
        std::vector<Coeff> pt;
        for (std::size_t j = 0; j < np; ++j) pt.push_back(ops.from_int(dist(rng)));
        pts.push_back(std::move(pt));
    }
    std::vector<TaggedValue> vals;
    for (const TaggedValue& v : eval_many(sc, kind, pts))
        if (comparable(v)) vals.push_back(v);

    GenericEstimate est;
    if (vals.size() < 2) {
        est.value.tag = TaggedValue::Tag::Error;
        est.value.note = "fewer than two usable trials";
        return est;
    }
    Direction dir = direction_of(sc, kind);
    std::size_t best = 0;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        int c = cmp(vals[i], vals[best]);
        switch (dir) {
            case Direction::Upper:
            case Direction::LexUpper:
                if (c < 0) best = i;
                break;
            case Direction::Lower:
                if (c > 0) best = i;
                break;
            case Direction::None: {
                auto count = [&](std::size_t k) {
                    int n = 0;
                    for (const auto& v : vals) n += tagged_eq(v, vals[k]);
                    return n;
                };
                if (count(i) > count(best)) best = i;
                break;
            }
        }
    }
    est.value = vals[best];
    int agree = 0;
    for (const auto& v : vals) agree += tagged_eq(v, est.value);
    est.disagreements = static_cast<int>(vals.size()) - agree;
    est.conclusive = agree >= 2;
    if (!est.conclusive) {
        est.value.tag = TaggedValue::Tag::Error;
        est.value.note = "no two trials agree";
    }
    return est;
}

ScanReport scan(const FamilyScenario& sc, const InvariantKind& kind) {
    check_points(sc);
    ScanReport rep;
    rep.kind = kind;
    rep.direction = direction_of(sc, kind);
    std::vector<TaggedValue> vals = eval_many(sc, kind, sc.points);
    for (std::size_t i = 0; i < sc.points.size(); ++i)
        rep.points.push_back({sc.points[i], vals[i]});
    rep.generic = pseudo_generic(sc, kind);
    if (kind.name == ScanInvariant::SegreSeq || kind.name == ScanInvariant::PolarSeq ||
        kind.name == ScanInvariant::NuSeq)
        rep.hypothesis_note = "fibers assumed equidimensional of a common dimension";
    return rep;
}

ScanReport semicontinuity_report(const FamilyScenario& sc, const InvariantKind& kind) {
    ScanReport rep = scan(sc, kind);
    for (const PointResult& pr : rep.points) {
        const TaggedValue& v = pr.value;
        if (v.tag == TaggedValue::Tag::Error) {
            rep.verdicts.push_back("error");
            continue;
        }
        if (v.tag == TaggedValue::Tag::Degenerate) {
            rep.verdicts.push_back("degenerate");
            continue;
        }
        if (!rep.generic.conclusive) {
            rep.verdicts.push_back("skipped");
            continue;
        }
        if (tagged_eq(v, rep.generic.value)) {
            rep.verdicts.push_back("equal");
            continue;
        }
        bool ok = true;
        switch (rep.direction) {
            case Direction::Upper:
            case Direction::LexUpper:
                ok = cmp(v, rep.generic.value) >= 0;
                break;
            case Direction::Lower:
                ok = componentwise_le(v, rep.generic.value);
                break;
            case Direction::None:
                rep.verdicts.push_back("not-governed");
                continue;
        }
        rep.verdicts.push_back(ok ? "consistent" : "violation");
        if (!ok) rep.any_violation = true;
    }
    return rep;
}

}  // namespace segrelab
