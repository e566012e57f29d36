#include "segrelab/hilbert.hpp"

#include <algorithm>
#include <functional>

namespace segrelab {

namespace {

const MonomialOrder kG = MonomialOrder::grevlex();

void check_positive_grading(const Ring& R) {
    for (std::size_t v = 0; v < R.nvars(); ++v) {
        bool nonzero = false;
        for (std::int32_t b = 0; b < R.num_blocks; ++b) {
            if (R.var_deg[v][b] < 0) throw ComputationError("negative variable degree");
            if (R.var_deg[v][b] > 0) nonzero = true;
        }
        if (!nonzero)
            throw ComputationError("variable '" + R.vars[v] + "' has degree zero: grading not positive");
    }
}

using NPoly = std::map<NVec, mpz_class>;

void npoly_add(NPoly& a, const NPoly& b, int sign) {
    for (const auto& [k, v] : b) {
        a[k] += sign * v;
        if (a[k] == 0) a.erase(k);
    }
}

NPoly npoly_mul(const NPoly& a, const NPoly& b) {
    NPoly r;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            NVec k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            r[k] += va * vb;
            if (r[k] == 0) r.erase(k);
        }
    }
    return r;
}

std::vector<Mono> minimal_monomials(std::vector<Mono> v) {
    std::vector<Mono> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < v.size() && !dominated; ++j) {
            if (i == j) continue;
            if (mono_divides(v[j], v[i]) && (v[j] != v[i] || j < i)) dominated = true;
        }
        if (!dominated) out.push_back(v[i]);
    }
    return out;
}

std::string monos_key(const std::vector<Mono>& v) {
    std::string k;
    for (const Mono& m : v) {
        for (auto e : m) {
            k += std::to_string(e);
            k += ',';
        }
        k += ';';
    }
    return k;
}

// Numerator of the series of R/(monomial ideal), by pivot splitting
// N(I) = N(I + (x)) + t^{deg x} N(I : x).
NPoly lt_numerator(const Ring& R, std::vector<Mono> gens, std::map<std::string, NPoly>& memo) {
    NVec zero(R.num_blocks, 0);
    for (const Mono& g : gens)
        if (mono_is_one(g)) return {};
    if (gens.empty()) return {{zero, 1}};
    gens = minimal_monomials(std::move(gens));
    std::sort(gens.begin(), gens.end());
    std::string key = monos_key(gens);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    NPoly result;
    // pivot variable: occurs in the most generators
    std::vector<int> freq(R.nvars(), 0);
    for (const Mono& g : gens)
        for (std::size_t v = 0; v < R.nvars(); ++v)
            if (g[v] > 0) ++freq[v];
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    if (freq[pivot] <= 1) {
        // pairwise coprime generators: product of (1 - t^{deg g})
        result = {{zero, 1}};
        for (const Mono& g : gens) {
            NPoly f = {{zero, 1}};
            f[mono_multidegree(R, g)] -= 1;
            result = npoly_mul(result, f);
        }
    } else {
        std::vector<Mono> plus, colon;
        Mono xv(R.nvars(), 0);
        xv[pivot] = 1;
        plus.push_back(xv);
        for (const Mono& g : gens) {
            if (g[pivot] == 0) plus.push_back(g);
            Mono c = g;
            if (c[pivot] > 0) --c[pivot];
            colon.push_back(std::move(c));
        }
        result = lt_numerator(R, std::move(plus), memo);
        NPoly shifted;
        NVec d = mono_multidegree(R, xv);
        for (const auto& [k, v] : lt_numerator(R, std::move(colon), memo)) {
            NVec nk(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) nk[i] = k[i] + d[i];
            shifted[nk] = v;
        }
        npoly_add(result, shifted, 1);
    }
    memo[key] = result;
    return result;
}

NPoly quotient_numerator(const Ideal& I) {
    auto gb = reduced_gb(I, kG);
    std::vector<Mono> lts;
    for (const Poly& g : gb) lts.push_back(g.lt().mono);
    std::map<std::string, NPoly> memo;
    return lt_numerator(I.ring, std::move(lts), memo);
}

mpz_class binom_z(long long top, long long k) {
    if (k < 0 || top < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    return r;
}

// odometer over a box, row-major ascending
bool next_index(NVec& idx, const std::vector<int>& sz) {
    for (int i = static_cast<int>(sz.size()) - 1; i >= 0; --i) {
        if (++idx[i] < sz[i]) return true;
        idx[i] = 0;
    }
    return false;
}

Ring standard_regrade(const Ring& R) {
    Ring S = R;
    S.num_blocks = 1;
    S.var_deg.assign(R.nvars(), {1});
    return S;
}

}  // namespace

ModulePresentation module_quotient(Ideal K) {
    Ideal H = make_ideal(K.ring, {p_one(K.ring)});
    return ModulePresentation{std::move(H), std::move(K)};
}

ModulePresentation module_pair(Ideal H, Ideal K) {
    for (const Poly& g : K.gens)
        if (!ideal_contains(H, g))
            throw ComputationError("module presentation requires K inside H");
    return ModulePresentation{std::move(H), std::move(K)};
}

HilbertSeries hilbert_series(const ModulePresentation& M) {
    const Ring& R = M.K.ring;
    check_positive_grading(R);
    HilbertSeries S;
    S.blocks = R.num_blocks;
    S.numer = quotient_numerator(M.K);
    npoly_add(S.numer, quotient_numerator(M.H), -1);
    for (std::size_t v = 0; v < R.nvars(); ++v) S.denom.push_back(R.var_deg[v]);
    return S;
}

std::vector<mpz_class> series_box(const HilbertSeries& S, const std::vector<int>& sz) {
    std::size_t p = sz.size();
    std::vector<std::size_t> stride(p, 1);
    for (int i = static_cast<int>(p) - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * static_cast<std::size_t>(sz[i + 1]);
    std::size_t total = stride[0] * static_cast<std::size_t>(sz[0]);
    std::vector<mpz_class> C(total, 0);
    for (const auto& [k, v] : S.numer) {
        bool inside = true;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < p; ++i) {
            if (k[i] < 0 || k[i] >= sz[i]) {
                inside = false;
                break;
            }
            pos += stride[i] * static_cast<std::size_t>(k[i]);
        }
        if (inside) C[pos] += v;
    }
    for (const NVec& d : S.denom) {
        std::size_t shift = 0;
        for (std::size_t i = 0; i < p; ++i) shift += stride[i] * static_cast<std::size_t>(d[i]);
        NVec idx(p, 0);
        std::size_t pos = 0;
        do {
            bool ok = true;
            for (std::size_t i = 0; i < p; ++i)
                if (idx[i] < d[i]) {
                    ok = false;
                    break;
                }
            if (ok) C[pos] += C[pos - shift];
            ++pos;
        } while (next_index(idx, sz));
    }
    return C;
}

HilbertPolynomial hilbert_polynomial(const ModulePresentation& M, const HPOptions& opts) {
    const Ring& R = M.K.ring;
    std::int32_t p = R.num_blocks;
    std::vector<int> caps(p, 0);
    for (std::size_t v = 0; v < R.nvars(); ++v) {
        int hot = -1;
        for (std::int32_t b = 0; b < p; ++b) {
            if (R.var_deg[v][b] == 1 && hot < 0)
                hot = b;
            else if (R.var_deg[v][b] != 0)
                hot = -2;
        }
        if (hot < 0) throw ComputationError("ring is not standard multigraded");
        ++caps[hot];
    }

    HilbertSeries S = hilbert_series(M);
    HilbertPolynomial P;
    if (S.numer.empty()) return P;  // zero module

    std::vector<int> numdeg(p, 0);
    for (const auto& [k, v] : S.numer)
        for (std::int32_t i = 0; i < p; ++i) numdeg[i] = std::max(numdeg[i], k[i]);

    std::vector<int> base(p), ext(p), sz(p);
    for (std::int32_t i = 0; i < p; ++i) {
        base[i] = numdeg[i] + 1;
        ext[i] = caps[i] + opts.band;
        sz[i] = base[i] + ext[i] + 1;
    }
    std::vector<mpz_class> HF = series_box(S, sz);
    std::vector<std::size_t> stride(p, 1);
    for (int i = p - 2; i >= 0; --i) stride[i] = stride[i + 1] * static_cast<std::size_t>(sz[i + 1]);
    auto hf_at = [&](const NVec& off) -> const mpz_class& {
        std::size_t pos = 0;
        for (std::int32_t i = 0; i < p; ++i)
            pos += stride[i] * static_cast<std::size_t>(base[i] + off[i]);
        return HF[pos];
    };

    // enumerate n inside caps, largest |n| first, and peel coefficients
    std::vector<NVec> ns;
    {
        std::vector<int> nsz(p);
        for (std::int32_t i = 0; i < p; ++i) nsz[i] = caps[i] + 1;
        NVec idx(p, 0);
        do {
            ns.push_back(idx);
        } while (next_index(idx, nsz));
        std::sort(ns.begin(), ns.end(), [](const NVec& a, const NVec& b) {
            long long sa = 0, sb = 0;
            for (auto x : a) sa += x;
            for (auto x : b) sb += x;
            if (sa != sb) return sa > sb;
            return a < b;
        });
    }
    std::map<NVec, mpz_class> e;
    for (const NVec& n : ns) {
        // D = (forward difference)^n of the Hilbert function at base
        mpz_class D = 0;
        std::vector<int> ksz(p);
        for (std::int32_t i = 0; i < p; ++i) ksz[i] = n[i] + 1;
        NVec k(p, 0);
        do {
            long long drop = 0;
            mpz_class w = 1;
            for (std::int32_t i = 0; i < p; ++i) {
                drop += n[i] - k[i];
                w *= binom_z(n[i], k[i]);
            }
            if (drop % 2) w = -w;
            D += w * hf_at(k);
        } while (next_index(k, ksz));
        for (const auto& [m, em] : e) {
            bool ge = true, eqn = true;
            for (std::int32_t i = 0; i < p; ++i) {
                if (m[i] < n[i]) ge = false;
                if (m[i] != n[i]) eqn = false;
            }
            if (!ge || eqn) continue;
            // n-th difference of binom(t+m, m) is binom(t+m, m-n)
            mpz_class B = 1;
            for (std::int32_t i = 0; i < p; ++i) B *= binom_z(base[i] + m[i], m[i] - n[i]);
            D -= em * B;
        }
        if (D != 0) e[n] = D;
    }

    P.e = std::move(e);
    for (const auto& [n, v] : P.e) {
        long long s = 0;
        for (auto x : n) s += x;
        P.degree = std::max(P.degree, static_cast<std::int64_t>(s));
    }
    for (const auto& [n, v] : P.e) {
        long long s = 0;
        for (auto x : n) s += x;
        if (s == P.degree && v < 0)
            throw ComputationError("negative top coefficient: input is not a standard graded module");
    }

    // agreement band: the interpolant must reproduce the Hilbert function on
    // the whole evaluation window
    {
        std::vector<int> osz(p);
        for (std::int32_t i = 0; i < p; ++i) osz[i] = ext[i] + 1;
        NVec off(p, 0);
        do {
            mpz_class val = 0;
            for (const auto& [n, v] : P.e) {
                mpz_class B = 1;
                for (std::int32_t i = 0; i < p; ++i)
                    B *= binom_z(base[i] + off[i] + n[i], n[i]);
                val += v * B;
            }
            if (val != hf_at(off))
                throw ComputationError("interpolated polynomial disagrees with the function on the validation band");
        } while (next_index(off, osz));
    }
    return P;
}

std::map<NVec, mpz_class> mixed_multiplicities(const ModulePresentation& M) {
    HilbertPolynomial P = hilbert_polynomial(M);
    std::map<NVec, mpz_class> out;
    for (const auto& [n, v] : P.e) {
        long long s = 0;
        for (auto x : n) s += x;
        if (s == P.degree) out[n] = v;
    }
    return out;
}

std::int64_t module_dim(const ModulePresentation& M) {
    if (ideal_is_unit(M.H)) return krull_dim(M.K);
    return krull_dim(ideal_colon(M.K, M.H));
}

std::int64_t graded_degree(const ModulePresentation& M, int k) {
    if (M.K.ring.num_blocks != 1)
        throw ComputationError("graded_degree requires a single grading block");
    std::int64_t d = module_dim(M);
    if (d > k) throw ComputationError("cycle class undefined: module dimension exceeds k");
    if (d < k) return 0;
    if (k == 0) {
        HilbertSeries S = hilbert_series(M);
        if (S.numer.empty()) return 0;
        int nd = 0;
        for (const auto& [kk, v] : S.numer) nd = std::max(nd, kk[0]);
        auto HF = series_box(S, {nd + 2});
        mpz_class total = 0;
        for (const auto& v : HF) total += v;
        return static_cast<std::int64_t>(total.get_si());
    }
    HilbertPolynomial P = hilbert_polynomial(M);
    NVec top{static_cast<std::int32_t>(k - 1)};
    auto it = P.e.find(top);
    if (it == P.e.end()) throw ComputationError("missing top coefficient in graded degree");
    return static_cast<std::int64_t>(it->second.get_si());
}

std::int64_t local_quotient_dim(const Ideal& K, int n) {
    const Ring& R = K.ring;
    for (auto r : R.roles)
        if (r != VarRole::Coordinate)
            throw ComputationError("local computations require a pure coordinate ring");
    Ring A = R;
    A.modulus.clear();
    A.modulus_gb.reset();
    std::vector<Poly> gens = K.gens;
    for (const Poly& m : R.modulus) gens.push_back(m);
    // adjoin every monomial of degree n+1; together with term truncation at
    // n+1 this realizes arithmetic modulo m^{n+1}
    std::function<void(Mono&, std::size_t, int)> emit = [&](Mono& m, std::size_t v, int rem) {
        if (v + 1 == R.nvars()) {
            m[v] = rem;
            gens.push_back(p_monomial(A, m));
            m[v] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            m[v] = e;
            emit(m, v + 1, rem - e);
        }
        m[v] = 0;
    };
    Mono scratch(R.nvars(), 0);
    emit(scratch, 0, n + 1);

    GBOptions opts;
    opts.trunc_total_deg = n + 1;
    auto G = buchberger(A, kG, std::move(gens), opts);
    if (G.size() == 1 && total_degree(G[0].lt().mono) == 0) return 0;
    std::vector<Mono> lts;
    for (const Poly& g : G) lts.push_back(g.lt().mono);

    // count standard monomials of degree <= n
    std::int64_t count = 0;
    std::function<void(Mono&, std::size_t, int)> walk = [&](Mono& m, std::size_t v, int rem) {
        if (v == R.nvars()) {
            for (const Mono& l : lts)
                if (mono_divides(l, m)) return;
            ++count;
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            m[v] = e;
            walk(m, v + 1, rem - e);
        }
        m[v] = 0;
    };
    Mono w(R.nvars(), 0);
    walk(w, 0, n);
    return count;
}

std::int64_t local_multiplicity(const Ideal& K, int j, const LocalOptions& opts) {
    if (j < 0) throw ComputationError("negative dimension request");
    if (!K.gens.empty() && ideal_is_unit(K)) return 0;
    const Ring& R = K.ring;
    if (!opts.localize) {
        for (const Poly& g : K.gens)
            for (const auto& t : g.terms)
                if (total_degree(t.mono) == 0)
                    throw ComputationError("ideal does not vanish at the coordinate origin");
    }

    // homogeneous inputs reduce to one graded computation
    bool homog = true;
    {
        Ring S1 = standard_regrade(R);
        for (const Poly& g : K.gens)
            if (!p_is_homogeneous(S1, g)) homog = false;
        for (const Poly& g : R.modulus)
            if (!p_is_homogeneous(S1, g)) homog = false;
    }
    std::vector<std::int64_t> L;
    std::vector<mpz_class> HF;
    if (homog) {
        Ideal K1 = K;
        K1.ring = standard_regrade(R);
        for (auto r : K1.ring.roles)
            if (r != VarRole::Coordinate)
                throw ComputationError("local computations require a pure coordinate ring");
        HF = series_box(hilbert_series(module_quotient(K1)), {opts.cap + 2});
    }
    auto value = [&](int n) -> std::int64_t {
        if (homog) {
            mpz_class s = 0;
            for (int m = 0; m <= n; ++m) s += HF[m];
            return static_cast<std::int64_t>(s.get_si());
        }
        return local_quotient_dim(K, n);
    };

    std::int64_t run_val = 0;
    int run_len = 0;
    for (int n = 0; n <= opts.cap; ++n) {
        L.push_back(value(n));
        if (static_cast<int>(L.size()) < j + 1) continue;
        // j-th forward difference ending at n
        std::int64_t d = 0;
        for (int k = 0; k <= j; ++k) {
            std::int64_t c = 1;
            for (int i = 0; i < k; ++i) c = c * (j - i) / (i + 1);
            d += ((j - k) % 2 ? -1 : 1) * c * L[L.size() - 1 - (j - k)];
        }
        if (run_len > 0 && d == run_val) {
            ++run_len;
        } else {
            run_val = d;
            run_len = 1;
        }
        if (run_len >= opts.window) {
            if (opts.stabilized_at) *opts.stabilized_at = n;
            return run_val;
        }
    }
    throw ComputationError(
        "Hilbert-Samuel differences did not stabilize within the cap; the local dimension likely exceeds " +
        std::to_string(j));
}

std::int64_t local_length(const Ideal& K, const LocalOptions& opts) {
    return local_multiplicity(K, 0, opts);
}

}  // namespace segrelab
