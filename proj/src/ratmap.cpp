#include "segrelab/ratmap.hpp"

#include <algorithm>

namespace segrelab {

namespace {

void require_pure(const RationalMap& F, const char* op) {
    for (VarRole r : F.source.roles)
        if (r != VarRole::Coordinate)
            throw ComputationError(std::string(op) +
                                   " needs a parameter-free map; specialize first");
}

std::vector<std::string> y_names(std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < count; ++j) out.push_back("y" + std::to_string(j));
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

std::int64_t binom_ll(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (std::int64_t t = 0; t < k; ++t) out = out * (n - t) / (t + 1);
    return out;
}

// e_k(mu_1..mu_s) for all k at once
std::vector<std::int64_t> elementary_symmetric(const std::vector<std::int64_t>& mu) {
    std::vector<std::int64_t> e(mu.size() + 1, 0);
    e[0] = 1;
    for (std::size_t j = 0; j < mu.size(); ++j)
        for (std::size_t k = j + 1; k-- > 0;) e[k + 1] += e[k] * mu[j];
    return e;
}

}  // namespace

RationalMap make_map(const Ring& source, std::vector<Poly> forms) {
    if (source.is_quotient())
        throw ComputationError("rational maps need a polynomial source ring");
    if (source.num_blocks != 1)
        throw ComputationError("rational maps need a single grading block");
    if (forms.empty()) throw ComputationError("a rational map needs at least one form");

    Ring R = source;
    int ncoord = 0;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        if (R.roles[i] == VarRole::Auxiliary)
            throw ComputationError("auxiliary variables are not allowed in a map source");
        if (R.roles[i] == VarRole::Parameter) {
            R.var_deg[i] = {0};
        } else {
            if (R.var_deg[i] != std::vector<std::int32_t>{1})
                throw ComputationError("map source must be standard graded");
            ++ncoord;
        }
    }
    if (ncoord < 2) throw ComputationError("map source needs projective dimension >= 1");

    std::int64_t delta = -1;
    for (const Poly& f : forms) {
        if (f.is_zero()) continue;
        if (!p_is_homogeneous(R, f))
            throw ComputationError("map forms must be homogeneous in the coordinates");
        std::int64_t d = mono_multidegree(R, f.lt().mono)[0];
        if (delta < 0)
            delta = d;
        else if (d != delta)
            throw ComputationError("map forms must share a common degree");
    }
    if (delta < 0) throw DegenerateFiber("all forms vanish");
    if (delta == 0) throw ComputationError("map forms must have positive degree");

    RationalMap F;
    F.source = std::move(R);
    F.forms = std::move(forms);
    F.r = ncoord - 1;
    F.s = static_cast<int>(F.forms.size()) - 1;
    F.delta = delta;
    return F;
}

RationalMap parse_map(const Ring& source, const std::vector<std::string>& forms) {
    std::vector<Poly> fs;
    for (const auto& t : forms) fs.push_back(p_parse(source, t));
    return make_map(source, std::move(fs));
}

RationalMap specialize_map(const RationalMap& F, const std::vector<Coeff>& values) {
    const Ring& R = F.source;
    MonomialOrder g = MonomialOrder::grevlex();
    std::vector<int> params, coords;
    for (std::size_t i = 0; i < R.nvars(); ++i)
        (R.roles[i] == VarRole::Parameter ? params : coords).push_back(static_cast<int>(i));
    if (values.size() != params.size())
        throw ComputationError("expected one value per parameter variable");

    std::vector<std::string> names;
    for (int i : coords) names.push_back(R.vars[i]);
    Ring P = Ring::polynomial(R.field, names);

    std::vector<Poly> out;
    for (Poly f : F.forms) {
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
    return make_map(P, std::move(out));
}

Ideal base_ideal(const RationalMap& F) { return make_ideal(F.source, F.forms); }

Ideal image_ideal(const RationalMap& F) {
    require_pure(F, "image_ideal");
    return kernel_of_map(F.source, F.forms, y_names(F.forms.size()));
}

std::int64_t deg_image(const RationalMap& F) {
    require_pure(F, "deg_image");
    Ideal img = image_ideal(F);
    int dim = krull_dim(img);
    if (dim > F.r + 1) throw ComputationError("image dimension exceeds the source dimension");
    if (dim < F.r + 1) return 0;
    return graded_degree(module_quotient(img), F.r + 1);
}

std::vector<std::int64_t> projective_degrees(const RationalMap& F, const ProjDegOptions& opts) {
    require_pure(F, "projective_degrees");
    Ideal I = base_ideal(F);
    if (ideal_is_zero(I)) throw DegenerateFiber("all forms vanish");
    InvariantOptions inv = opts.inv;
    for (int attempt = 0;; ++attempt) {
        InvariantTable t = invariant_table(I, inv);
        std::vector<std::int64_t> d(F.r + 1);
        for (int i = 0; i <= F.r; ++i) d[i] = t.m[F.r - i];
        if (!opts.cross_check) return d;
        if (projective_degrees_rees(F) == d) return d;
        if (attempt >= 1)
            throw ComputationError(
                "projective degrees: general-element and Rees paths disagree");
        inv.seed += 1;  // resample once
    }
}

std::vector<std::int64_t> projective_degrees_rees(const RationalMap& F) {
    require_pure(F, "projective_degrees");
    Ideal I = base_ideal(F);
    if (ideal_is_zero(I)) throw DegenerateFiber("all forms vanish");
    Ideal RI = rees_ideal(I, y_names(I.gens.size()));

    // bigraded coordinate ring of the graph: deg y = (1,0), deg x = (0,1)
    Ring T = RI.ring;
    T.num_blocks = 2;
    std::size_t nx = F.source.nvars();
    for (std::size_t i = 0; i < T.nvars(); ++i) {
        T.roles[i] = VarRole::Coordinate;
        T.var_deg[i] = i < nx ? std::vector<std::int32_t>{0, 1} : std::vector<std::int32_t>{1, 0};
    }
    auto mm = mixed_multiplicities(module_quotient(make_ideal(T, RI.gens)));
    std::vector<std::int64_t> d(F.r + 1, 0);
    for (int i = 0; i <= F.r; ++i) {
        auto it = mm.find(NVec{F.r - i, i});
        if (it != mm.end()) d[i] = static_cast<std::int64_t>(it->second.get_si());
    }
    return d;
}

std::int64_t map_degree(const RationalMap& F, const ProjDegOptions& opts) {
    std::int64_t deg_y = deg_image(F);
    if (deg_y == 0) return 0;
    std::int64_t d0 = projective_degrees(F, opts)[0];
    if (d0 % deg_y != 0)
        throw ComputationError("d_0 is not a multiple of the image degree");
    return d0 / deg_y;
}

bool is_birational(const RationalMap& F, const ProjDegOptions& opts) {
    return deg_image(F) != 0 && map_degree(F, opts) == 1;
}

std::int64_t j_multiplicity(const RationalMap& F, const ProjDegOptions& opts) {
    return F.delta * projective_degrees(F, opts)[0];
}

BoundReport degree_bounds(const RationalMap& F, const BoundSpec& spec,
                          const ProjDegOptions& opts) {
    BoundReport rep;
    rep.degrees = projective_degrees(F, opts);
    int r = F.r, s = F.s;
    for (int i = 0; i <= r; ++i) {
        std::int64_t b = 0;
        switch (spec.kind) {
            case BoundSpec::Kind::Generic:
                b = ipow(F.delta, r - i);
                break;
            case BoundSpec::Kind::HilbertBurch: {
                if (static_cast<int>(spec.mu.size()) != s)
                    throw ComputationError("expected s syzygy degrees mu_1..mu_s");
                auto e = elementary_symmetric(spec.mu);
                b = r - i <= s ? e[r - i] : 0;
                break;
            }
            case BoundSpec::Kind::Gorenstein3: {
                if (spec.D < 1) throw ComputationError("presentation degree D must be >= 1");
                if (i >= r - 2) {
                    b = ipow(F.delta, r - i);
                } else {
                    for (std::int64_t k = 0; k <= (s - r + i) / 2; ++k)
                        b += binom_ll(s - 1 - 2 * k, r - i - 1);
                    b *= ipow(spec.D, r - i);
                }
                break;
            }
        }
        rep.bounds.push_back(b);
        rep.satisfied.push_back(rep.degrees[i] <= b);
    }
    rep.all_satisfied = std::all_of(rep.satisfied.begin(), rep.satisfied.end(),
                                    [](bool v) { return v; });
    return rep;
}

}  // namespace segrelab
