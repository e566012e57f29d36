#include "segrelab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace segrelab {

Poly p_normalize(const Ring& R, const MonomialOrder& ord, std::vector<Term> ts) {
    FieldOps ops(R.field);
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
    Poly out;
    for (auto& t : ts) {
        if (!out.terms.empty() && out.terms.back().mono == t.mono) {
            out.terms.back().coeff = ops.add(out.terms.back().coeff, t.coeff);
            if (ops.is_zero(out.terms.back().coeff)) out.terms.pop_back();
        } else if (!ops.is_zero(t.coeff)) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

Poly p_resort(const Ring& R, const MonomialOrder& ord, const Poly& p) {
    return p_normalize(R, ord, p.terms);
}

Poly p_zero() { return {}; }

Poly p_const(const Ring& R, const Coeff& c) {
    FieldOps ops(R.field);
    if (ops.is_zero(c)) return {};
    return Poly{{Term{Mono(R.nvars(), 0), c}}};
}

Poly p_one(const Ring& R) { return p_const(R, FieldOps(R.field).one()); }

Poly p_from_int(const Ring& R, long long n) { return p_const(R, FieldOps(R.field).from_int(n)); }

Poly p_var(const Ring& R, int i, std::int32_t e) {
    Mono m(R.nvars(), 0);
    m[i] = e;
    return Poly{{Term{std::move(m), FieldOps(R.field).one()}}};
}

Poly p_monomial(const Ring& R, Mono m) {
    return Poly{{Term{std::move(m), FieldOps(R.field).one()}}};
}

Poly p_add(const Ring& R, const MonomialOrder& ord, const Poly& a, const Poly& b) {
    FieldOps ops(R.field);
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = ord.cmp(a.terms[i].mono, b.terms[j].mono);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Coeff s = ops.add(a.terms[i].coeff, b.terms[j].coeff);
            if (!ops.is_zero(s)) out.terms.push_back(Term{a.terms[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

Poly p_neg(const Ring& R, const Poly& a) {
    FieldOps ops(R.field);
    Poly out = a;
    for (auto& t : out.terms) t.coeff = ops.neg(t.coeff);
    return out;
}

Poly p_sub(const Ring& R, const MonomialOrder& ord, const Poly& a, const Poly& b) {
    return p_add(R, ord, a, p_neg(R, b));
}

Poly p_scale(const Ring& R, const Poly& a, const Coeff& c) {
    FieldOps ops(R.field);
    if (ops.is_zero(c)) return {};
    Poly out = a;
    for (auto& t : out.terms) t.coeff = ops.mul(t.coeff, c);
    return out;
}

Poly p_mul_term(const Ring& R, const Poly& a, const Mono& m, const Coeff& c) {
    FieldOps ops(R.field);
    if (ops.is_zero(c)) return {};
    Poly out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) out.terms.push_back(Term{mono_mul(t.mono, m), ops.mul(t.coeff, c)});
    return out;
}

Poly p_mul(const Ring& R, const MonomialOrder& ord, const Poly& a, const Poly& b) {
    FieldOps ops(R.field);
    // Map keyed descending so the result comes out already sorted.
    auto cmp = [&](const Mono& x, const Mono& y) { return ord.cmp(x, y) > 0; };
    std::map<Mono, Coeff, decltype(cmp)> acc(cmp);
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            Mono m = mono_mul(ta.mono, tb.mono);
            Coeff c = ops.mul(ta.coeff, tb.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(c));
            } else {
                it->second = ops.add(it->second, c);
                if (ops.is_zero(it->second)) acc.erase(it);
            }
        }
    }
    Poly out;
    out.terms.reserve(acc.size());
    for (auto& [m, c] : acc) out.terms.push_back(Term{m, c});
    return out;
}

Poly p_pow(const Ring& R, const MonomialOrder& ord, const Poly& a, std::int64_t e) {
    Poly r = p_one(R);
    Poly base = a;
    while (e > 0) {
        if (e & 1) r = p_mul(R, ord, r, base);
        e >>= 1;
        if (e) base = p_mul(R, ord, base, base);
    }
    return r;
}

Poly p_monic(const Ring& R, const Poly& a) {
    if (a.is_zero()) return a;
    FieldOps ops(R.field);
    return p_scale(R, a, ops.inv(a.lt().coeff));
}

bool p_eq(const Ring& R, const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    FieldOps ops(R.field);
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].mono != b.terms[i].mono) return false;
        if (!ops.eq(a.terms[i].coeff, b.terms[i].coeff)) return false;
    }
    return true;
}

std::vector<std::int32_t> mono_multidegree(const Ring& R, const Mono& m) {
    std::vector<std::int32_t> d(R.num_blocks, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        for (std::int32_t b = 0; b < R.num_blocks; ++b) d[b] += R.var_deg[i][b] * m[i];
    }
    return d;
}

bool p_is_homogeneous(const Ring& R, const Poly& p) {
    if (p.terms.size() <= 1) return true;
    auto d0 = mono_multidegree(R, p.terms[0].mono);
    for (std::size_t i = 1; i < p.terms.size(); ++i)
        if (mono_multidegree(R, p.terms[i].mono) != d0) return false;
    return true;
}

std::int64_t p_total_degree(const Poly& p) {
    std::int64_t d = -1;
    for (const auto& t : p.terms) d = std::max(d, total_degree(t.mono));
    return d;
}

std::int64_t p_min_degree(const Poly& p) {
    if (p.is_zero()) return -1;
    std::int64_t d = total_degree(p.terms[0].mono);
    for (const auto& t : p.terms) d = std::min(d, total_degree(t.mono));
    return d;
}

Poly p_specialize(const Ring& R, const MonomialOrder& ord, const Poly& p, int var,
                  const Coeff& val) {
    FieldOps ops(R.field);
    std::vector<Term> ts;
    ts.reserve(p.terms.size());
    for (const auto& t : p.terms) {
        Term u = t;
        if (u.mono[var] > 0) {
            Coeff v = ops.one();
            for (std::int32_t k = 0; k < u.mono[var]; ++k) v = ops.mul(v, val);
            u.coeff = ops.mul(u.coeff, v);
            u.mono[var] = 0;
        }
        ts.push_back(std::move(u));
    }
    return p_normalize(R, ord, std::move(ts));
}

Poly p_lift(const Ring& bigger, const Poly& p) {
    Poly out = p;
    for (auto& t : out.terms) t.mono.resize(bigger.nvars(), 0);
    return out;
}

Poly p_restrict(const Ring& smaller, const Poly& p) {
    Poly out = p;
    for (auto& t : out.terms) {
        for (std::size_t i = smaller.nvars(); i < t.mono.size(); ++i)
            if (t.mono[i] != 0) throw FieldError("restriction drops a live variable");
        t.mono.resize(smaller.nvars());
    }
    return out;
}

std::string p_to_string(const Ring& R, const Poly& p) {
    if (p.is_zero()) return "0";
    FieldOps ops(R.field);
    std::string s;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        const Term& t = p.terms[i];
        std::string c = ops.to_string(t.coeff);
        bool neg = !c.empty() && c[0] == '-';
        if (i == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (neg) c = c.substr(1);
        std::string m;
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (!m.empty()) m += "*";
            m += R.vars[v];
            if (t.mono[v] > 1) m += "^" + std::to_string(t.mono[v]);
        }
        if (m.empty()) {
            s += c;
        } else if (c == "1") {
            s += m;
        } else {
            s += c + "*" + m;
        }
    }
    return s;
}

namespace {

struct Parser {
    const Ring& R;
    FieldOps ops;
    const std::string& text;
    std::size_t pos = 0;

    Parser(const Ring& r, const std::string& t) : R(r), ops(r.field), text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in '" + text + "'");
    }

    std::int64_t parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    Poly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t num = parse_uint();
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                std::int64_t den = parse_uint();
                if (den == 0) fail("zero denominator");
                Coeff q = ops.div(ops.from_int(num), ops.from_int(den));
                return p_const(R, q);
            }
            return p_from_int(R, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            int vi = R.var_index(name);
            if (vi < 0) fail("unknown variable '" + name + "'");
            return p_var(R, vi);
        }
        fail("expected a factor");
    }

    Poly parse_factor() {
        if (peek() == '-') {
            ++pos;
            return p_neg(R, parse_factor());
        }
        Poly b = parse_base();
        if (peek() == '^') {
            ++pos;
            std::int64_t e = parse_uint();
            return p_pow(R, MonomialOrder::grevlex(), b, e);
        }
        return b;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (peek() == '*') {
            ++pos;
            p = p_mul(R, MonomialOrder::grevlex(), p, parse_factor());
        }
        return p;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                p = p_add(R, MonomialOrder::grevlex(), p, parse_term());
            } else if (c == '-') {
                ++pos;
                p = p_sub(R, MonomialOrder::grevlex(), p, parse_term());
            } else {
                return p;
            }
        }
    }
};

}  // namespace

Poly p_parse(const Ring& R, const std::string& text) {
    Parser P(R, text);
    Poly p = P.parse_expr();
    P.skip_ws();
    if (P.pos != text.size()) P.fail("trailing input");
    return p;
}

}  // namespace segrelab
