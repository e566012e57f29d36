#include "segrelab/ideal.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <unordered_map>

namespace segrelab {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

Ring ambient(const Ring& R) {
    Ring A = R;
    A.modulus.clear();
    A.modulus_gb.reset();
    return A;
}

std::string fresh_var_name(const Ring& R, const std::string& base) {
    if (R.var_index(base) < 0) return base;
    for (int k = 0;; ++k) {
        std::string n = base + std::to_string(k);
        if (R.var_index(n) < 0) return n;
    }
}

Poly truncate_deg(const Poly& p, std::int64_t cap) {
    if (cap < 0) return p;
    Poly out;
    for (const auto& t : p.terms)
        if (total_degree(t.mono) <= cap) out.terms.push_back(t);
    return out;
}

// One reduction step: cancel the leading term of p against g.
Poly reduce_step(const Ring& R, const MonomialOrder& ord, const Poly& p, const Poly& g,
                 std::int64_t cap) {
    FieldOps ops(R.field);
    Mono q = mono_div(p.lt().mono, g.lt().mono);
    Coeff c = ops.neg(ops.div(p.lt().coeff, g.lt().coeff));
    Poly m = p_mul_term(R, g, q, c);
    if (cap >= 0) m = truncate_deg(m, cap);
    return p_add(R, ord, p, m);
}

Poly reduce_full_ptrs(const Ring& R, const MonomialOrder& ord, Poly p,
                      const std::vector<const Poly*>& G, std::int64_t cap) {
    Poly rem;
    while (!p.is_zero()) {
        bool hit = false;
        for (const Poly* g : G) {
            if (mono_divides(g->lt().mono, p.lt().mono)) {
                p = reduce_step(R, ord, p, *g, cap);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.terms.push_back(p.lt());
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

Poly reduce_full(const Ring& R, const MonomialOrder& ord, Poly p, const std::vector<Poly>& G,
                 std::int64_t cap) {
    std::vector<const Poly*> ptrs;
    ptrs.reserve(G.size());
    for (const Poly& g : G) ptrs.push_back(&g);
    return reduce_full_ptrs(R, ord, std::move(p), ptrs, cap);
}

struct SPair {
    int i, j;
    Mono lcm;
    std::int64_t sugar;
    std::int64_t deg;
};

}  // namespace

Poly normal_form(const Ring& R, const MonomialOrder& ord, const Poly& f,
                 const std::vector<Poly>& G) {
    return reduce_full(R, ord, p_resort(R, ord, f), G, -1);
}

std::vector<Poly> buchberger(const Ring& R, const MonomialOrder& ord, std::vector<Poly> gens,
                             const GBOptions& opts) {
    // completion is pure, so results are memoized on the exact input
    static std::mutex memo_mu;
    static std::unordered_map<std::string, std::shared_ptr<const std::vector<Poly>>> memo;
    std::string key = R.signature();
    key += '\x1f';
    key += ord.descriptor();
    key += '\x1f';
    key += std::to_string(opts.trunc_total_deg);
    for (const Poly& g : gens) {
        key += '\x1f';
        key += p_to_string(R, g);
    }
    {
        std::lock_guard lk(memo_mu);
        if (auto it = memo.find(key); it != memo.end()) return *it->second;
    }

    FieldOps ops(R.field);
    const std::int64_t cap = opts.trunc_total_deg;

    std::vector<Poly> G;
    std::vector<std::int64_t> sugar;
    std::vector<SPair> pairs;

    auto pair_of = [&](int i, int j) {
        SPair p;
        p.i = i;
        p.j = j;
        p.lcm = mono_lcm(G[i].lt().mono, G[j].lt().mono);
        p.deg = total_degree(p.lcm);
        std::int64_t si = sugar[i] + p.deg - total_degree(G[i].lt().mono);
        std::int64_t sj = sugar[j] + p.deg - total_degree(G[j].lt().mono);
        p.sugar = std::max(si, sj);
        return p;
    };

    // Gebauer-Moeller update on arrival of element t.
    auto add_element = [&](Poly h, std::int64_t s) {
        int t = static_cast<int>(G.size());
        G.push_back(std::move(h));
        sugar.push_back(s);
        std::vector<SPair> fresh;
        bool t_mono = G[t].terms.size() == 1;
        for (int i = 0; i < t; ++i) {
            // two monomials have a vanishing S-polynomial
            if (t_mono && G[i].terms.size() == 1) continue;
            fresh.push_back(pair_of(i, t));
        }
        std::vector<char> drop(fresh.size(), 0);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm != fresh[a].lcm && mono_divides(fresh[b].lcm, fresh[a].lcm)) {
                    drop[a] = 1;
                    break;
                }
            }
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                if (!drop[b] && fresh[b].lcm == fresh[a].lcm) drop[b] = 1;
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            if (mono_coprime(G[fresh[a].i].lt().mono, G[t].lt().mono)) drop[a] = 1;
        }
        std::erase_if(pairs, [&](const SPair& p) {
            const Mono& lt_t = G[t].lt().mono;
            if (!mono_divides(lt_t, p.lcm)) return false;
            Mono lit = mono_lcm(G[p.i].lt().mono, lt_t);
            Mono ljt = mono_lcm(G[p.j].lt().mono, lt_t);
            return lit != p.lcm && ljt != p.lcm;
        });
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(std::move(fresh[a]));
    };

    for (const Poly& g : gens) {
        Poly h = truncate_deg(p_resort(R, ord, g), cap);
        if (!h.is_zero()) add_element(p_monic(R, h), p_total_degree(h));
    }

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [&](const SPair& a, const SPair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (a.deg != b.deg) return a.deg < b.deg;
            return ord.cmp(a.lcm, b.lcm) < 0;
        });
        SPair p = *it;
        pairs.erase(it);
        const Poly& f = G[p.i];
        const Poly& g = G[p.j];
        if (f.terms.size() == 1 && g.terms.size() == 1) continue;
        Poly sp = p_sub(R, ord,
                        p_mul_term(R, f, mono_div(p.lcm, f.lt().mono), ops.inv(f.lt().coeff)),
                        p_mul_term(R, g, mono_div(p.lcm, g.lt().mono), ops.inv(g.lt().coeff)));
        if (cap >= 0) sp = truncate_deg(sp, cap);
        Poly h = reduce_full(R, ord, std::move(sp), G, cap);
        if (!h.is_zero()) add_element(p_monic(R, h), std::max(p.sugar, p_total_degree(h)));
    }

    // minimalize
    std::vector<Poly> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            if (!mono_divides(G[j].lt().mono, G[i].lt().mono)) continue;
            if (G[j].lt().mono != G[i].lt().mono || j < i) {
                redundant = true;
                break;
            }
        }
        if (!redundant) M.push_back(G[i]);
    }
    // inter-reduce tails
    std::vector<Poly> out;
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<const Poly*> others;
        others.reserve(M.size() - 1);
        for (std::size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(&M[j]);
        Poly r = reduce_full_ptrs(R, ord, M[i], others, cap);
        if (!r.is_zero()) out.push_back(p_monic(R, r));
    }
    for (const Poly& g : out) {
        if (total_degree(g.lt().mono) == 0) return {p_one(R)};
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return ord.cmp(a.lt().mono, b.lt().mono) > 0; });
    {
        std::lock_guard lk(memo_mu);
        memo[key] = std::make_shared<const std::vector<Poly>>(out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// GB memoization, with an optional on-disk layer.

namespace {

std::mutex g_cache_mu;
std::unordered_map<std::string, std::shared_ptr<const std::vector<Poly>>> g_memo;
GBCacheStats g_stats;
std::string g_disk_dir;

std::string hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::filesystem::path disk_path(const std::string& dir, const std::string& key) {
    std::string h = hex16(fnv1a64(key));
    return std::filesystem::path(dir) / h.substr(0, 2) / (h + ".gb");
}

bool disk_load(const Ring& R, const std::string& dir, const std::string& key,
               std::vector<Poly>& out) {
    std::ifstream in(disk_path(dir, key));
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != "SEGRELAB-GB v1") return false;
    if (!std::getline(in, line) || line != key) return false;
    std::size_t n = 0;
    if (!(in >> n)) return false;
    std::getline(in, line);
    out.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) return false;
        try {
            out.push_back(p_parse(R, line));
        } catch (const ParseError&) {
            return false;
        }
    }
    return true;
}

void disk_store(const Ring& R, const std::string& dir, const std::string& key,
                const std::vector<Poly>& gb) {
    std::error_code ec;
    auto path = disk_path(dir, key);
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return;
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "SEGRELAB-GB v1\n" << key << "\n" << gb.size() << "\n";
        for (const Poly& g : gb) out << p_to_string(R, g) << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
}

const std::vector<Poly>& ring_modulus_gb(const Ring& R) {
    if (!R.modulus_gb) {
        Ideal M{ambient(R), R.modulus};
        R.modulus_gb = std::make_shared<const std::vector<Poly>>(reduced_gb(M, kGrevlex));
    }
    return *R.modulus_gb;
}

std::vector<Poly> eliminate_raw(const Ring& Ramb, const std::vector<Poly>& gens,
                                const std::vector<char>& mask) {
    auto G = buchberger(Ramb, MonomialOrder::block_elim(mask), gens);
    std::vector<Poly> kept;
    for (const Poly& g : G) {
        bool free = true;
        for (const auto& t : g.terms)
            for (std::size_t v = 0; v < mask.size() && free; ++v)
                if (mask[v] && t.mono[v] != 0) free = false;
        if (free) kept.push_back(g);
    }
    return kept;
}

// A cap B in the ambient polynomial ring, via t*A + (1-t)*B.
std::vector<Poly> intersect_raw(const Ring& Ramb, const std::vector<Poly>& A,
                                const std::vector<Poly>& B) {
    Ring E = Ramb.extended({fresh_var_name(Ramb, "tt")}, VarRole::Auxiliary);
    int ti = static_cast<int>(E.nvars()) - 1;
    Poly t = p_var(E, ti);
    Poly omt = p_sub(E, kGrevlex, p_one(E), t);
    std::vector<Poly> H;
    for (const Poly& a : A) H.push_back(p_mul(E, kGrevlex, t, p_lift(E, a)));
    for (const Poly& b : B) H.push_back(p_mul(E, kGrevlex, omt, p_lift(E, b)));
    std::vector<char> mask(E.nvars(), 0);
    mask[ti] = 1;
    std::vector<Poly> kept = eliminate_raw(E, H, mask);
    std::vector<Poly> out;
    for (const Poly& g : kept) out.push_back(p_restrict(Ramb, g));
    return out;
}

Poly p_div_exact(const Ring& R, const Poly& g, const Poly& f) {
    FieldOps ops(R.field);
    Poly p = g, q;
    while (!p.is_zero()) {
        if (!mono_divides(f.lt().mono, p.lt().mono))
            throw ComputationError("inexact division in colon computation");
        Mono m = mono_div(p.lt().mono, f.lt().mono);
        Coeff c = ops.div(p.lt().coeff, f.lt().coeff);
        q.terms.push_back(Term{m, c});
        p = p_add(R, kGrevlex, p, p_mul_term(R, f, m, ops.neg(c)));
    }
    return p_normalize(R, kGrevlex, q.terms);
}

std::vector<Poly> with_modulus_gens(const Ideal& I) {
    std::vector<Poly> v = I.gens;
    for (const Poly& m : I.ring.modulus) v.push_back(m);
    return v;
}

Ideal colon_single(const Ideal& I, const Poly& f) {
    Ring A = ambient(I.ring);
    std::vector<Poly> K = intersect_raw(A, with_modulus_gens(I), {f});
    std::vector<Poly> gens;
    for (const Poly& k : K) gens.push_back(p_div_exact(A, k, f));
    return make_ideal(I.ring, std::move(gens));
}

}  // namespace

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

GBCacheStats gb_cache_stats() {
    std::lock_guard lk(g_cache_mu);
    return g_stats;
}

void gb_cache_reset_stats() {
    std::lock_guard lk(g_cache_mu);
    g_stats = {};
}

void gb_memo_clear() {
    std::lock_guard lk(g_cache_mu);
    g_memo.clear();
}

void gb_set_disk_cache(std::string dir) {
    std::lock_guard lk(g_cache_mu);
    g_disk_dir = std::move(dir);
}

Ideal make_ideal(Ring R, std::vector<Poly> gens) {
    std::vector<Poly> nf;
    if (R.is_quotient()) {
        const auto& P = ring_modulus_gb(R);
        for (const Poly& g : gens) {
            Poly h = reduce_full(R, kGrevlex, p_resort(R, kGrevlex, g), P, -1);
            if (!h.is_zero()) nf.push_back(std::move(h));
        }
    } else {
        for (Poly& g : gens)
            if (!g.is_zero()) nf.push_back(p_resort(R, kGrevlex, g));
    }
    return Ideal{std::move(R), std::move(nf)};
}

Ideal parse_ideal(const Ring& R, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(p_parse(R, s));
    return make_ideal(R, std::move(ps));
}

std::string ideal_key(const Ideal& I) {
    std::string k = I.ring.signature() + "(";
    for (std::size_t i = 0; i < I.gens.size(); ++i) {
        if (i) k += ",";
        k += p_to_string(I.ring, I.gens[i]);
    }
    return k + ")";
}

std::vector<Poly> reduced_gb(const Ideal& I, const MonomialOrder& ord) {
    std::string key = ideal_key(I) + "\x1f" + ord.descriptor();
    std::string disk_dir;
    {
        std::lock_guard lk(g_cache_mu);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) {
            ++g_stats.memo_hits;
            return *it->second;
        }
        disk_dir = g_disk_dir;
    }
    if (!disk_dir.empty()) {
        std::vector<Poly> gb;
        if (disk_load(I.ring, disk_dir, key, gb)) {
            std::lock_guard lk(g_cache_mu);
            ++g_stats.disk_hits;
            g_memo[key] = std::make_shared<const std::vector<Poly>>(gb);
            return gb;
        }
    }
    std::vector<Poly> gb = buchberger(ambient(I.ring), ord, with_modulus_gens(I));
    {
        std::lock_guard lk(g_cache_mu);
        ++g_stats.misses;
        g_memo[key] = std::make_shared<const std::vector<Poly>>(gb);
    }
    if (!disk_dir.empty()) disk_store(I.ring, disk_dir, key, gb);
    return gb;
}

Poly nf_mod(const Ideal& I, const Poly& f) {
    return normal_form(I.ring, kGrevlex, f, reduced_gb(I, kGrevlex));
}

bool ideal_contains(const Ideal& I, const Poly& f) { return nf_mod(I, f).is_zero(); }

bool ideal_eq(const Ideal& I, const Ideal& J) {
    auto A = reduced_gb(I, kGrevlex);
    auto B = reduced_gb(J, kGrevlex);
    if (A.size() != B.size()) return false;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (!p_eq(I.ring, A[i], B[i])) return false;
    return true;
}

bool ideal_is_unit(const Ideal& I) {
    auto G = reduced_gb(I, kGrevlex);
    return G.size() == 1 && total_degree(G[0].lt().mono) == 0;
}

bool ideal_is_zero(const Ideal& I) { return reduced_gb(I, kGrevlex).empty(); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    std::vector<Poly> g = I.gens;
    g.insert(g.end(), J.gens.begin(), J.gens.end());
    return make_ideal(I.ring, std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    std::vector<Poly> g;
    for (const Poly& a : I.gens)
        for (const Poly& b : J.gens) g.push_back(p_mul(I.ring, kGrevlex, a, b));
    return make_ideal(I.ring, std::move(g));
}

Ideal ideal_power(const Ideal& I, std::int64_t n) {
    if (n < 0) throw ComputationError("negative ideal power");
    if (n == 0) return make_ideal(I.ring, {p_one(I.ring)});
    // products over multisets of size n of the generators
    std::vector<Poly> out;
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t rem, const Poly& acc) -> void {
        if (rem == 0) {
            out.push_back(acc);
            return;
        }
        if (idx + 1 == I.gens.size()) {
            out.push_back(p_mul(I.ring, kGrevlex, acc, p_pow(I.ring, kGrevlex, I.gens[idx], rem)));
            return;
        }
        for (std::int64_t k = 0; k <= rem; ++k) {
            Poly next = k == 0 ? acc
                               : p_mul(I.ring, kGrevlex, acc,
                                       p_pow(I.ring, kGrevlex, I.gens[idx], k));
            self(self, idx + 1, rem - k, next);
        }
    };
    if (I.gens.empty()) return make_ideal(I.ring, {});
    rec(rec, 0, n, p_one(I.ring));
    return make_ideal(I.ring, std::move(out));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    Ring A = ambient(I.ring);
    return make_ideal(I.ring, intersect_raw(A, with_modulus_gens(I), with_modulus_gens(J)));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    std::vector<Poly> fs;
    for (const Poly& f : J.gens)
        if (!f.is_zero()) fs.push_back(f);
    if (fs.empty()) return make_ideal(I.ring, {p_one(I.ring)});
    Ideal out = colon_single(I, fs[0]);
    for (std::size_t j = 1; j < fs.size(); ++j)
        out = ideal_intersect(out, colon_single(I, fs[j]));
    return out;
}

Ideal ideal_saturate(const Ideal& I, const Ideal& J) {
    std::vector<Poly> fs;
    for (const Poly& f : J.gens)
        if (!f.is_zero()) fs.push_back(f);
    if (fs.empty()) return make_ideal(I.ring, {p_one(I.ring)});
    if (fs.size() == 1) {
        // Rabinowitsch trick: (I + (1 - w f)) cap R
        Ring A = ambient(I.ring);
        Ring E = A.extended({fresh_var_name(A, "ww")}, VarRole::Auxiliary);
        int wi = static_cast<int>(E.nvars()) - 1;
        std::vector<Poly> H;
        for (const Poly& g : with_modulus_gens(I)) H.push_back(p_lift(E, g));
        Poly wf = p_mul(E, kGrevlex, p_var(E, wi), p_lift(E, fs[0]));
        H.push_back(p_sub(E, kGrevlex, p_one(E), wf));
        std::vector<char> mask(E.nvars(), 0);
        mask[wi] = 1;
        std::vector<Poly> kept = eliminate_raw(E, H, mask);
        std::vector<Poly> gens;
        for (const Poly& g : kept) gens.push_back(p_restrict(A, g));
        return make_ideal(I.ring, std::move(gens));
    }
    Ideal K = I;
    for (int iter = 0; iter < 50; ++iter) {
        Ideal next = ideal_colon(K, J);
        if (ideal_eq(next, K)) return K;
        K = std::move(next);
    }
    throw ComputationError("saturation did not stabilize within the iteration cap");
}

Ideal ideal_eliminate(const Ideal& I, const std::vector<char>& mask) {
    Ring A = ambient(I.ring);
    return make_ideal(I.ring, eliminate_raw(A, with_modulus_gens(I), mask));
}

int krull_dim(const Ideal& I) {
    auto G = reduced_gb(I, kGrevlex);
    std::size_t n = I.ring.nvars();
    if (G.size() == 1 && total_degree(G[0].lt().mono) == 0) return -1;
    if (n > 24) throw ComputationError("too many variables for dimension enumeration");
    std::vector<std::uint32_t> supports;
    for (const Poly& g : G) {
        std::uint32_t s = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.lt().mono[v] > 0) s |= (1u << v);
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        bool indep = true;
        for (std::uint32_t sup : supports) {
            if ((sup & ~S) == 0) {
                indep = false;
                break;
            }
        }
        if (indep) best = std::max(best, static_cast<int>(std::popcount(S)));
    }
    return best;
}

Ideal coordinate_ideal(const Ring& R) {
    std::vector<Poly> gens;
    for (int v : R.coordinate_vars()) gens.push_back(p_var(R, v));
    return make_ideal(R, std::move(gens));
}

Ideal kernel_of_map(const Ring& target, const std::vector<Poly>& forms,
                    const std::vector<std::string>& y_names) {
    if (forms.size() != y_names.size())
        throw ComputationError("kernel_of_map: one name per form required");
    Ring A = ambient(target);
    Ring E = A.extended(y_names, VarRole::Auxiliary);
    std::size_t base = A.nvars();
    std::vector<Poly> H;
    for (const Poly& m : target.modulus) H.push_back(p_lift(E, m));
    for (std::size_t j = 0; j < forms.size(); ++j)
        H.push_back(p_sub(E, kGrevlex, p_var(E, static_cast<int>(base + j)), p_lift(E, forms[j])));
    std::vector<char> mask(E.nvars(), 0);
    for (std::size_t v = 0; v < base; ++v) mask[v] = 1;
    std::vector<Poly> kept = eliminate_raw(E, H, mask);

    Ring Ry = Ring::polynomial(target.field, y_names);
    std::vector<Poly> gens;
    for (const Poly& g : kept) {
        Poly h;
        for (const auto& t : g.terms) {
            Mono m(y_names.size());
            for (std::size_t j = 0; j < y_names.size(); ++j) m[j] = t.mono[base + j];
            h.terms.push_back(Term{std::move(m), t.coeff});
        }
        gens.push_back(p_normalize(Ry, kGrevlex, h.terms));
    }
    return make_ideal(Ry, std::move(gens));
}

Ideal rees_ideal(const Ideal& I, const std::vector<std::string>& y_names) {
    if (y_names.size() != I.gens.size())
        throw ComputationError("rees_ideal: one y-name per generator required");
    const Ring& R = I.ring;
    Ring Ry = R.extended(y_names, VarRole::Auxiliary);
    Ring A = ambient(Ry);
    Ring E = A.extended({fresh_var_name(A, "tr")}, VarRole::Auxiliary);
    int ti = static_cast<int>(E.nvars()) - 1;
    std::size_t base = R.nvars();
    std::vector<Poly> H;
    for (const Poly& m : R.modulus) H.push_back(p_lift(E, m));
    for (std::size_t j = 0; j < I.gens.size(); ++j) {
        Poly tf = p_mul(E, kGrevlex, p_var(E, ti), p_lift(E, I.gens[j]));
        H.push_back(p_sub(E, kGrevlex, p_var(E, static_cast<int>(base + j)), tf));
    }
    std::vector<char> mask(E.nvars(), 0);
    mask[ti] = 1;
    std::vector<Poly> kept = eliminate_raw(E, H, mask);
    std::vector<Poly> gens;
    for (const Poly& g : kept) gens.push_back(p_restrict(A, g));
    return make_ideal(Ry, std::move(gens));
}

}  // namespace segrelab
