#include "segrelab/invariants.hpp"

#include <algorithm>
#include <random>

namespace segrelab {

namespace {

std::uint64_t mix_seed(const Ideal& I, std::uint64_t seed, std::uint64_t salt) {
    return (seed ^ fnv1a64(ideal_key(I))) + salt * 0x9e3779b97f4a7c15ull;
}

int ring_dim(const Ring& R) { return krull_dim(make_ideal(R, {})); }

Poly combine(const Ideal& I, const std::vector<long long>& row) {
    const Ring& R = I.ring;
    FieldOps ops(R.field);
    Poly g = p_zero();
    for (std::size_t i = 0; i < I.gens.size(); ++i)
        g = p_add(R, MonomialOrder::grevlex(), g,
                  p_scale(R, I.gens[i], ops.from_int(row[i])));
    return g;
}

std::vector<std::vector<long long>> draw_rows(std::mt19937_64& rng, std::size_t k, std::size_t e,
                                              long long bound) {
    std::uniform_int_distribution<long long> dist(1, bound);
    std::vector<std::vector<long long>> rows(k, std::vector<long long>(e));
    for (auto& row : rows)
        for (auto& a : row) a = dist(rng);
    return rows;
}

struct SatChain {
    std::vector<Ideal> S;    // S[i] = (g_1..g_i) : I^inf
    std::vector<Poly> cuts;  // g_1..g_k
};

SatChain build_chain(const Ideal& I, const std::vector<Poly>& g, int d) {
    SatChain ch;
    ch.cuts = g;
    std::vector<Poly> prefix;
    for (int i = 0; i <= static_cast<int>(g.size()); ++i) {
        if (i > 0) prefix.push_back(g[i - 1]);
        Ideal Si = saturate_wrt(make_ideal(I.ring, prefix), I);
        if (krull_dim(Si) > d - i)
            throw GenericityFailure("dimension bound dim R/((g_1..g_" + std::to_string(i) +
                                    "):I^inf) <= " + std::to_string(d - i) + " failed");
        ch.S.push_back(std::move(Si));
    }
    return ch;
}

struct RawTable {
    std::vector<std::int64_t> m, nu, c;
    bool near_cap = false;
};

RawTable sequences_from_chain(const Ideal& I, const SatChain& ch, int d, std::int64_t eR,
                              const InvariantOptions& opts) {
    LocalOptions lo = opts.local;
    lo.localize = true;
    int stab = 0;
    lo.stabilized_at = &stab;
    RawTable t;
    t.m.assign(d + 1, 0);
    t.nu.assign(d + 1, 0);
    t.c.assign(d + 1, 0);
    auto lm = [&](const Ideal& K, int j) {
        std::int64_t v = local_multiplicity(K, j, lo);
        if (stab >= lo.cap - lo.window - 2) t.near_cap = true;
        return v;
    };
    for (int i = 0; i < d; ++i) t.m[i] = lm(ch.S[i], d - i);
    if (lm(ch.S[d], 0) != 0)
        throw GenericityFailure("top polar multiplicity is nonzero: general elements not generic");
    t.m[d] = 0;
    t.nu[0] = t.m[0];
    for (int i = 1; i <= d; ++i) {
        Ideal Ki = ideal_sum(ch.S[i - 1], make_ideal(I.ring, {ch.cuts[i - 1]}));
        t.nu[i] = lm(Ki, d - i);
    }
    t.c[0] = eR - t.m[0];
    if (t.c[0] < 0) throw GenericityFailure("negative c_0: general elements not generic");
    for (int i = 1; i <= d; ++i) {
        t.c[i] = t.nu[i] - t.m[i];
        if (t.c[i] < 0)
            throw GenericityFailure("negative c_" + std::to_string(i) +
                                    ": general elements not generic");
    }
    return t;
}

std::int64_t finite_length(const ModulePresentation& M) {
    HilbertSeries S = hilbert_series(M);
    if (S.numer.empty()) return 0;
    int nd = 0;
    for (const auto& [k, v] : S.numer) nd = std::max(nd, k[0]);
    auto HF = series_box(S, {nd + 2});
    if (HF[nd + 1] != 0) throw ComputationError("length is not finite");
    mpz_class total = 0;
    for (const auto& v : HF) total += v;
    return static_cast<std::int64_t>(total.get_si());
}

}  // namespace

std::int64_t ideal_order(const Ideal& I) {
    if (I.gens.empty()) throw ComputationError("order of the zero ideal is undefined");
    std::int64_t o = -1;
    for (const Poly& g : I.gens) {
        std::int64_t v = p_min_degree(g);
        if (o < 0 || v < o) o = v;
    }
    return o;
}

Ideal saturate_wrt(const Ideal& K, const Ideal& I) {
    if (I.gens.empty()) return make_ideal(K.ring, {p_one(K.ring)});
    Ideal out = ideal_saturate(K, make_ideal(K.ring, {I.gens[0]}));
    for (std::size_t j = 1; j < I.gens.size(); ++j)
        out = ideal_intersect(out, ideal_saturate(K, make_ideal(K.ring, {I.gens[j]})));
    return out;
}

GeneralSequence general_sequence(const Ideal& I, int k, const InvariantOptions& opts) {
    int d = ring_dim(I.ring);
    if (k > d) throw ComputationError("cannot cut more times than the ring dimension");
    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        std::uint64_t s = mix_seed(I, opts.seed, static_cast<std::uint64_t>(attempt));
        std::mt19937_64 rng(s);
        GeneralSequence G;
        G.seed = s;
        G.retries_used = attempt;
        G.rows = draw_rows(rng, static_cast<std::size_t>(k), I.gens.size(), opts.coeff_bound);
        for (const auto& row : G.rows) G.elems.push_back(combine(I, row));
        try {
            build_chain(I, G.elems, d);
        } catch (const GenericityFailure&) {
            continue;
        }
        G.dim_checks_passed = true;
        return G;
    }
    throw GenericityFailure("no certified general sequence within the retry cap (seed " +
                            std::to_string(opts.seed) + ")");
}

std::vector<std::int64_t> polar_sequence(const Ideal& I, const GeneralSequence& G,
                                         const InvariantOptions& opts) {
    int d = ring_dim(I.ring);
    std::int64_t eR = graded_degree(module_quotient(make_ideal(I.ring, {})), d);
    return sequences_from_chain(I, build_chain(I, G.elems, d), d, eR, opts).m;
}

std::vector<std::int64_t> nu_sequence(const Ideal& I, const GeneralSequence& G,
                                      const InvariantOptions& opts) {
    int d = ring_dim(I.ring);
    std::int64_t eR = graded_degree(module_quotient(make_ideal(I.ring, {})), d);
    return sequences_from_chain(I, build_chain(I, G.elems, d), d, eR, opts).nu;
}

std::vector<std::int64_t> segre_sequence(const Ideal& I, const GeneralSequence& G,
                                         const InvariantOptions& opts) {
    int d = ring_dim(I.ring);
    std::int64_t eR = graded_degree(module_quotient(make_ideal(I.ring, {})), d);
    return sequences_from_chain(I, build_chain(I, G.elems, d), d, eR, opts).c;
}

bool gparam_check(const InvariantTable& t) {
    for (int i = 1; i <= t.d; ++i)
        if (t.delta * t.m[i - 1] != t.nu[i]) return false;
    return true;
}

InvariantTable invariant_table(const Ideal& I, const InvariantOptions& opts) {
    if (I.gens.empty()) throw ComputationError("invariants of the zero ideal are undefined");
    if (ideal_is_unit(I)) throw ComputationError("invariants require a proper ideal");
    const Ring& R = I.ring;
    int d = ring_dim(R);
    std::int64_t delta = ideal_order(I);
    std::int64_t eR = graded_degree(module_quotient(make_ideal(R, {})), d);

    std::string last_error = "no attempt made";
    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        try {
            RawTable a, b;
            std::uint64_t sa = 0;
            for (int draw = 0; draw < 2; ++draw) {
                std::uint64_t s = mix_seed(I, opts.seed,
                                           static_cast<std::uint64_t>(2 * attempt + draw + 1));
                std::mt19937_64 rng(s);
                auto rows = draw_rows(rng, static_cast<std::size_t>(d), I.gens.size(),
                                      opts.coeff_bound);
                std::vector<Poly> g;
                for (const auto& row : rows) g.push_back(combine(I, row));
                RawTable t = sequences_from_chain(I, build_chain(I, g, d), d, eR, opts);
                if (draw == 0) {
                    a = std::move(t);
                    sa = s;
                } else {
                    b = std::move(t);
                }
            }
            if (a.m != b.m || a.nu != b.nu || a.c != b.c) {
                last_error = "independent draws disagree";
                continue;
            }
            InvariantTable out;
            out.d = d;
            out.delta = delta;
            out.m = a.m;
            out.nu = a.nu;
            out.c = a.c;
            out.height_zero = (krull_dim(I) == d);
            out.seed = sa;
            out.retries_used = attempt;
            out.near_cap = a.near_cap || b.near_cap;
            for (int i = 1; i <= d; ++i)
                if (delta * out.m[i - 1] > out.nu[i])
                    throw GenericityFailure("delta * m_{i-1} <= nu_i violated");
            out.gparam_generic = gparam_check(out);
            return out;
        } catch (const ComputationError& e) {
            last_error = e.what();
        }
    }
    throw GenericityFailure("no certified invariant table within the retry cap (seed " +
                            std::to_string(opts.seed) + "): " + last_error);
}

OracleResult kleiman_thorup_oracle(const Ideal& I, int v_max, int n_max) {
    const Ring& R = I.ring;
    if (R.num_blocks != 1) throw ComputationError("oracle requires a single grading block");
    {
        Ring S1 = R;
        for (const Poly& g : I.gens)
            if (!p_is_homogeneous(S1, g))
                throw ComputationError("oracle requires homogeneous generators");
        for (const Poly& g : R.modulus)
            if (!p_is_homogeneous(S1, g))
                throw ComputationError("oracle requires a homogeneous modulus");
    }
    int d = ring_dim(R);
    if (v_max < d + 1 || n_max < d + 1)
        throw ComputationError("oracle grid too small: need v_max, n_max > dim");

    std::vector<Ideal> Iv;  // I^v
    for (int v = 0; v <= v_max + 1; ++v) Iv.push_back(ideal_power(I, v));
    Ideal m = coordinate_ideal(R);
    std::vector<Ideal> mp;  // m^{n+1}
    for (int n = 0; n <= n_max; ++n) mp.push_back(ideal_power(m, n + 1));

    auto F = [&](int v, int n) {
        return finite_length(ModulePresentation{Iv[v], ideal_product(mp[n], Iv[v])});
    };
    auto Hlen = [&](int v, int n) {
        Ideal K = ideal_sum(ideal_product(mp[n], Iv[v]), Iv[v + 1]);
        return finite_length(ModulePresentation{Iv[v], K});
    };
    std::vector<std::vector<std::int64_t>> f(v_max + 1, std::vector<std::int64_t>(n_max + 1));
    std::vector<std::vector<std::int64_t>> H2(v_max + 1, std::vector<std::int64_t>(n_max + 1));
    for (int v = 0; v <= v_max; ++v)
        for (int n = 0; n <= n_max; ++n) {
            f[v][n] = F(v, n);
            H2[v][n] = Hlen(v, n) + (v > 0 ? H2[v - 1][n] : 0);
        }

    auto corner = [&](const std::vector<std::vector<std::int64_t>>& grid, int i, int V, int N) {
        // backward difference d_v^i d_n^{d-i} at (V, N)
        std::int64_t acc = 0;
        for (int a = 0; a <= i; ++a) {
            std::int64_t ca = 1;
            for (int t = 0; t < a; ++t) ca = ca * (i - t) / (t + 1);
            for (int b = 0; b <= d - i; ++b) {
                std::int64_t cb = 1;
                for (int t = 0; t < b; ++t) cb = cb * (d - i - t) / (t + 1);
                std::int64_t sgn = ((a + b) % 2) ? -1 : 1;
                acc += sgn * ca * cb * grid[V - a][N - b];
            }
        }
        return acc;
    };
    OracleResult out, prev;
    for (int i = 0; i <= d; ++i) {
        out.m.push_back(corner(f, i, v_max, n_max));
        out.c.push_back(corner(H2, i, v_max, n_max));
        prev.m.push_back(corner(f, i, v_max - 1, n_max - 1));
        prev.c.push_back(corner(H2, i, v_max - 1, n_max - 1));
    }
    if (out.m != prev.m || out.c != prev.c)
        throw ComputationError("oracle grid too small: corner differences have not stabilized");
    return out;
}

}  // namespace segrelab
