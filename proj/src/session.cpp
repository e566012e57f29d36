#include "segrelab/session.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace segrelab {

namespace {

using nlohmann::json;

const std::set<std::string> kIdealVerbs = {"segre", "polar", "nu", "table", "order"};
const std::set<std::string> kMapVerbs = {"projdeg", "degim", "mapdeg", "jmult"};
const std::set<std::string> kScanKinds = {"mixedmult", "multideg", "degim", "projdeg",
                                          "mapdeg",    "jmult",    "segre", "polar",
                                          "nu"};

struct Parser {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1, col = 1;
    Session out;
    // name -> kind: 'r' ring, 'i' ideal, 'm' map, 'f' family
    std::map<std::string, char> kinds;
    // ring name -> validation ring (declared field, or the default prime field)
    std::map<std::string, Ring> check_rings;
    std::string active_ring;

    explicit Parser(const std::string& s) : src(s) {}

    [[noreturn]] void err(const std::string& expected) const {
        throw SessionError(line, col, "expected " + expected);
    }
    [[noreturn]] void err_at(int l, int c, const std::string& msg) const {
        throw SessionError(l, c, msg);
    }

    bool at_end() const { return pos >= src.size(); }
    char peek() const { return at_end() ? '\0' : src[pos]; }

    void advance() {
        if (at_end()) return;
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        for (;;) {
            while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
            if (peek() == '#' || (peek() == '/' && pos + 1 < src.size() && src[pos + 1] == '/')) {
                while (!at_end() && peek() != '\n') advance();
                continue;
            }
            return;
        }
    }

    void expect_char(char c, const std::string& what) {
        skip_ws();
        if (peek() != c) err(what);
        advance();
    }

    bool try_char(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    std::string ident(const std::string& what) {
        skip_ws();
        if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) err(what);
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            s += peek();
            advance();
        }
        return s;
    }

    long long integer(const std::string& what) {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) err(what);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            advance();
        }
        return neg ? -v : v;
    }

    // A raw expression span, balanced in parentheses, up to a top-level ','
    // or ')'. Empty spans are grammar errors.
    SrcExpr expr_span() {
        skip_ws();
        SrcExpr e;
        e.line = line;
        e.col = col;
        int depth = 0;
        std::size_t start = pos;
        while (!at_end()) {
            char c = peek();
            if (depth == 0 && (c == ',' || c == ')' || c == ';')) break;
            if (c == '(') ++depth;
            if (c == ')') --depth;
            advance();
        }
        e.text = src.substr(start, pos - start);
        while (!e.text.empty() && std::isspace(static_cast<unsigned char>(e.text.back())))
            e.text.pop_back();
        if (e.text.empty()) err("expression or ')'");
        return e;
    }

    // "(" expr ("," expr)* ")" with an empty list "()" allowed.
    std::vector<SrcExpr> expr_list() {
        expect_char('(', "'('");
        std::vector<SrcExpr> list;
        skip_ws();
        if (peek() == ')') {
            advance();
            return list;
        }
        for (;;) {
            list.push_back(expr_span());
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            if (peek() == ')') {
                advance();
                return list;
            }
            err("',' or ')'");
        }
    }

    // x3 or x0..x3; ranges need matching prefixes and numeric suffixes.
    void names_or_range(std::vector<std::string>& into) {
        int l = line, c = col;
        std::string a = ident("variable name");
        skip_ws();
        if (!(peek() == '.' && pos + 1 < src.size() && src[pos + 1] == '.')) {
            into.push_back(a);
            return;
        }
        advance();
        advance();
        std::string b = ident("variable name after '..'");
        auto split = [](const std::string& s) -> std::pair<std::string, long long> {
            std::size_t i = s.size();
            while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
            if (i == s.size()) return {s, -1};
            return {s.substr(0, i), std::stoll(s.substr(i))};
        };
        auto [pa, na] = split(a);
        auto [pb, nb] = split(b);
        if (na < 0 || nb < 0 || pa != pb || nb < na || nb - na > 999)
            err_at(l, c, "malformed range '" + a + ".." + b + "'");
        for (long long i = na; i <= nb; ++i) into.push_back(pa + std::to_string(i));
    }

    // "[" names ("," names)* (";" names ...)* "]"
    std::vector<std::vector<std::string>> bracket_group() {
        expect_char('[', "'['");
        std::vector<std::vector<std::string>> groups(1);
        for (;;) {
            names_or_range(groups.back());
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            if (peek() == ';') {
                advance();
                groups.emplace_back();
                continue;
            }
            if (peek() == ']') {
                advance();
                return groups;
            }
            err("',', ';', or ']'");
        }
    }

    void declare(const std::string& name, char kind, int l, int c) {
        if (!kinds.emplace(name, kind).second) err_at(l, c, "'" + name + "' is already defined");
    }

    const Ring& check_ring(const std::string& name) const { return check_rings.at(name); }

    Poly checked_parse(const Ring& R, const SrcExpr& e) const {
        try {
            return p_parse(R, e.text);
        } catch (const std::exception& ex) {
            throw SessionError(e.line, e.col, ex.what());
        }
    }

    void parse_ring() {
        int nl = line, nc = col;
        RingDecl rd;
        rd.name = ident("ring name");
        declare(rd.name, 'r', nl, nc);
        expect_char('=', "'='");
        skip_ws();
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            int fl = line, fc = col;
            std::string f = ident("field");
            if (f == "QQ") {
                rd.field = Field::rationals();
            } else if (f == "GF") {
                expect_char('(', "'('");
                long long p = integer("prime modulus");
                expect_char(')', "')'");
                try {
                    rd.field = Field::prime(static_cast<std::uint64_t>(p));
                } catch (const std::exception& ex) {
                    err_at(fl, fc, ex.what());
                }
            } else {
                err_at(fl, fc, "expected QQ, GF(p), or '['");
            }
            rd.field_given = true;
        }
        skip_ws();
        if (peek() != '[') err("QQ, GF(p), or '['");
        auto first = bracket_group();
        skip_ws();
        if (peek() == '[') {
            if (first.size() != 1) err("a single parameter list before the variable block");
            rd.params = first[0];
            rd.blocks = bracket_group();
        } else {
            rd.blocks = first;
        }
        skip_ws();
        if (peek() == '/') {
            advance();
            rd.modulus = expr_list();
        }
        expect_char(';', "';'");

        std::set<std::string> seen;
        for (const auto& v : rd.params)
            if (!seen.insert(v).second) err_at(nl, nc, "duplicate variable '" + v + "'");
        for (const auto& blk : rd.blocks)
            for (const auto& v : blk)
                if (!seen.insert(v).second) err_at(nl, nc, "duplicate variable '" + v + "'");

        Field check = rd.field_given ? rd.field : Field::prime(2147483647);
        Ring base = build_base(rd, check);
        std::vector<Poly> mod;
        for (const auto& e : rd.modulus) mod.push_back(checked_parse(base, e));
        check_rings.emplace(rd.name, mod.empty() ? base : base.with_modulus(mod));

        active_ring = rd.name;
        out.order.push_back({Session::Item::K::Ring, out.rings.size()});
        out.rings.push_back(std::move(rd));
    }

    static Ring build_base(const RingDecl& rd, const Field& f) {
        std::vector<std::string> vars = rd.params;
        for (const auto& blk : rd.blocks) vars.insert(vars.end(), blk.begin(), blk.end());
        Ring R = Ring::polynomial(f, vars);
        auto nb = static_cast<std::int32_t>(rd.blocks.size());
        R.num_blocks = nb;
        std::size_t i = 0;
        for (; i < rd.params.size(); ++i) {
            R.roles[i] = VarRole::Parameter;
            R.var_deg[i].assign(nb, 0);
        }
        for (std::size_t b = 0; b < rd.blocks.size(); ++b)
            for (std::size_t k = 0; k < rd.blocks[b].size(); ++k, ++i) {
                R.var_deg[i].assign(nb, 0);
                R.var_deg[i][b] = 1;
            }
        return R;
    }

    std::string require_active_ring() {
        if (active_ring.empty()) err("a ring declaration before ideals or maps");
        return active_ring;
    }

    void parse_body_decl(char kind) {
        int nl = line, nc = col;
        std::string name = ident(kind == 'i' ? "ideal name" : "map name");
        declare(name, kind, nl, nc);
        expect_char('=', "'='");
        std::string ring = require_active_ring();
        auto gens = expr_list();
        expect_char(';', "';'");
        const Ring& R = check_ring(ring);
        for (const auto& e : gens) checked_parse(R, e);
        if (kind == 'i') {
            out.order.push_back({Session::Item::K::Ideal, out.ideals.size()});
            out.ideals.push_back({name, ring, std::move(gens)});
        } else {
            out.order.push_back({Session::Item::K::Map, out.maps.size()});
            out.maps.push_back({name, ring, std::move(gens)});
        }
    }

    std::string resolve(const std::string& what, const std::string& want) {
        int nl = line, nc = col;
        std::string name = ident(what + " name");
        auto it = kinds.find(name);
        if (it == kinds.end()) err_at(nl, nc, "'" + name + "' is not defined");
        if (want.find(it->second) == std::string::npos) {
            bool vowel = what.front() == 'a' || what.front() == 'e' || what.front() == 'i' ||
                         what.front() == 'o' || what.front() == 'u';
            err_at(nl, nc, "'" + name + "' is not " + (vowel ? "an " : "a ") + what);
        }
        return name;
    }

    std::string ring_of_payload(const std::string& name) const {
        for (const auto& d : out.ideals)
            if (d.name == name) return d.ring;
        for (const auto& d : out.maps)
            if (d.name == name) return d.ring;
        return {};
    }

    void parse_family() {
        int nl = line, nc = col;
        FamilyDecl fd;
        fd.name = ident("family name");
        declare(fd.name, 'f', nl, nc);
        expect_char('=', "'='");
        fd.payload = resolve("ideal or map", "im");
        int al = line, ac = col;
        if (ident("'at'") != "at") err_at(al, ac, "expected 'at'");
        expect_char('(', "'('");
        const Ring& R = check_ring(ring_of_payload(fd.payload));
        std::size_t nparams = 0;
        for (auto r : R.roles)
            if (r == VarRole::Parameter) ++nparams;
        FieldOps ops(R.field);
        for (;;) {
            skip_ws();
            int pl = line, pc = col;
            std::vector<SrcExpr> pt;
            if (peek() == '(') {
                advance();
                for (;;) {
                    pt.push_back(expr_span());
                    skip_ws();
                    if (peek() == ',') {
                        advance();
                        continue;
                    }
                    expect_char(')', "',' or ')'");
                    break;
                }
            } else {
                pt.push_back(expr_span());
            }
            if (pt.size() != nparams)
                err_at(pl, pc,
                       "point has " + std::to_string(pt.size()) + " values but '" + fd.payload +
                           "' has " + std::to_string(nparams) + " parameters");
            for (const auto& e : pt) {
                try {
                    ops.parse(e.text);
                } catch (const std::exception& ex) {
                    throw SessionError(e.line, e.col, ex.what());
                }
            }
            fd.points.push_back(std::move(pt));
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            expect_char(')', "',' or ')'");
            break;
        }
        expect_char(';', "';'");
        out.order.push_back({Session::Item::K::Family, out.families.size()});
        out.families.push_back(std::move(fd));
    }

    void parse_command(const std::string& verb, int vl, int vc) {
        Command cmd;
        cmd.verb = verb;
        cmd.line = vl;
        cmd.col = vc;
        if (kIdealVerbs.count(verb)) {
            cmd.args.push_back(resolve("ideal", "i"));
        } else if (kMapVerbs.count(verb)) {
            cmd.args.push_back(resolve("map", "m"));
        } else if (verb == "intdep") {
            cmd.args.push_back(resolve("ideal", "i"));
            cmd.args.push_back(resolve("ideal", "i"));
        } else {
            cmd.args.push_back(resolve("family", "f"));
            int kl = line, kc = col;
            cmd.kind = ident("invariant kind");
            if (!kScanKinds.count(cmd.kind))
                err_at(kl, kc, "unknown invariant kind '" + cmd.kind + "'");
            bool wants_n = cmd.kind == "mixedmult" || cmd.kind == "multideg";
            skip_ws();
            if (wants_n) {
                expect_char('(', "'(' with the degree tuple");
                for (;;) {
                    cmd.n.push_back(static_cast<std::int32_t>(integer("integer")));
                    skip_ws();
                    if (peek() == ',') {
                        advance();
                        continue;
                    }
                    expect_char(')', "',' or ')'");
                    break;
                }
            } else if (peek() == '(') {
                err_at(kl, kc, "'" + cmd.kind + "' does not take a degree tuple");
            }
        }
        expect_char(';', "';'");
        out.order.push_back({Session::Item::K::Cmd, out.commands.size()});
        out.commands.push_back(std::move(cmd));
    }

    Session parse() {
        for (;;) {
            skip_ws();
            if (at_end()) return std::move(out);
            int kl = line, kc = col;
            std::string kw = ident("a declaration or command");
            if (kw == "ring")
                parse_ring();
            else if (kw == "ideal")
                parse_body_decl('i');
            else if (kw == "map")
                parse_body_decl('m');
            else if (kw == "family")
                parse_family();
            else if (kIdealVerbs.count(kw) || kMapVerbs.count(kw) || kw == "intdep" ||
                     kw == "scan" || kw == "report")
                parse_command(kw, kl, kc);
            else
                err_at(kl, kc, "unknown keyword '" + kw + "'");
        }
    }
};

// ---- execution ----

json seq_json(const std::vector<std::int64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

std::string conclusion_str(Conclusion c) {
    switch (c) {
        case Conclusion::Integral: return "integral";
        case Conclusion::NotIntegral: return "not-integral";
        default: return "inconclusive";
    }
}

std::string tag_str(TaggedValue::Tag t) {
    switch (t) {
        case TaggedValue::Tag::Finite: return "finite";
        case TaggedValue::Tag::ZeroByDimension: return "zero-by-dimension";
        case TaggedValue::Tag::InfiniteByDimension: return "infinite-by-dimension";
        case TaggedValue::Tag::Degenerate: return "degenerate";
        default: return "error";
    }
}

std::string direction_str(Direction d) {
    switch (d) {
        case Direction::Upper: return "upper";
        case Direction::Lower: return "lower";
        case Direction::LexUpper: return "lex-upper";
        default: return "none";
    }
}

json tagged_json(const TaggedValue& v) {
    json j;
    j["tag"] = tag_str(v.tag);
    j["values"] = seq_json(v.values);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json criterion_json(const CriterionVerdict& v) {
    json j;
    j["applicable"] = v.applicable;
    j["verdict"] = conclusion_str(v.conclusion);
    j["reasons"] = v.reasons;
    return j;
}

ScanInvariant kind_of(const std::string& k) {
    if (k == "mixedmult") return ScanInvariant::MixedMult;
    if (k == "multideg") return ScanInvariant::Multidegree;
    if (k == "degim") return ScanInvariant::DegImage;
    if (k == "projdeg") return ScanInvariant::ProjDegrees;
    if (k == "mapdeg") return ScanInvariant::MapDegree;
    if (k == "jmult") return ScanInvariant::JMult;
    if (k == "segre") return ScanInvariant::SegreSeq;
    if (k == "polar") return ScanInvariant::PolarSeq;
    return ScanInvariant::NuSeq;
}

struct Env {
    std::map<std::string, Ring> rings;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, RationalMap> maps;
    std::map<std::string, FamilyScenario> fams;
    std::map<std::string, std::string> field_of;  // object name -> field string
};

void render_entry(std::ostream& os, const json& e) {
    os << "== " << e.at("command").get<std::string>() << " " << e.at("input").get<std::string>()
       << " ==\n";
    if (e.contains("error")) {
        os << "  error: " << e.at("error").get<std::string>() << "\n";
        return;
    }
    for (const auto& [k, v] : e.at("result").items()) os << "  " << k << " = " << v.dump() << "\n";
    const json& m = e.at("meta");
    os << "  [field " << m.at("field").get<std::string>() << ", seed " << m.at("seed")
       << ", retries " << m.at("retries") << "]\n";
}

}  // namespace

Session parse_session(const std::string& text) { return Parser(text).parse(); }

RunOutcome run_session(const Session& s, const RunConfig& cfg) {
    Env env;
    InvariantOptions inv;
    inv.seed = cfg.seed;
    inv.retries = cfg.retries;
    inv.coeff_bound = cfg.coeff_bound;
    inv.local.window = cfg.hs_window;
    inv.local.cap = cfg.hs_cap;

    json report = json::array();
    bool any_failed = false;

    for (const auto& item : s.order) {
        switch (item.k) {
            case Session::Item::K::Ring: {
                const RingDecl& rd = s.rings[item.idx];
                Field f = cfg.field_overridden ? cfg.field
                                               : (rd.field_given ? rd.field : cfg.field);
                Ring base = Parser::build_base(rd, f);
                if (!rd.modulus.empty()) {
                    std::vector<Poly> mod;
                    for (const auto& e : rd.modulus) {
                        try {
                            mod.push_back(p_parse(base, e.text));
                        } catch (const std::exception& ex) {
                            throw SessionError(e.line, e.col, ex.what());
                        }
                    }
                    base = base.with_modulus(mod);
                }
                env.rings.insert_or_assign(rd.name, std::move(base));
                break;
            }
            case Session::Item::K::Ideal: {
                const IdealDecl& d = s.ideals[item.idx];
                const Ring& R = env.rings.at(d.ring);
                std::vector<Poly> gens;
                for (const auto& e : d.gens) {
                    try {
                        gens.push_back(p_parse(R, e.text));
                    } catch (const std::exception& ex) {
                        throw SessionError(e.line, e.col, ex.what());
                    }
                }
                env.ideals.insert_or_assign(d.name, make_ideal(R, std::move(gens)));
                env.field_of[d.name] = R.field.to_string();
                break;
            }
            case Session::Item::K::Map: {
                const MapDecl& d = s.maps[item.idx];
                const Ring& R = env.rings.at(d.ring);
                std::vector<Poly> forms;
                for (const auto& e : d.forms) {
                    try {
                        forms.push_back(p_parse(R, e.text));
                    } catch (const std::exception& ex) {
                        throw SessionError(e.line, e.col, ex.what());
                    }
                }
                env.maps.insert_or_assign(d.name, make_map(R, std::move(forms)));
                env.field_of[d.name] = R.field.to_string();
                break;
            }
            case Session::Item::K::Family: {
                const FamilyDecl& d = s.families[item.idx];
                bool is_map = env.maps.count(d.payload) > 0;
                const Ring& R = is_map ? env.maps.at(d.payload).source
                                       : env.ideals.at(d.payload).ring;
                FieldOps ops(R.field);
                std::vector<std::vector<Coeff>> pts;
                for (const auto& p : d.points) {
                    std::vector<Coeff> pt;
                    for (const auto& e : p) {
                        try {
                            pt.push_back(ops.parse(e.text));
                        } catch (const std::exception& ex) {
                            throw SessionError(e.line, e.col, ex.what());
                        }
                    }
                    pts.push_back(std::move(pt));
                }
                FamilyScenario sc = is_map ? map_family(env.maps.at(d.payload), std::move(pts))
                                           : ideal_family(env.ideals.at(d.payload), std::move(pts));
                sc.trials = cfg.trials;
                sc.seed = cfg.seed;
                sc.inv = inv;
                env.fams.insert_or_assign(d.name, std::move(sc));
                env.field_of[d.name] = R.field.to_string();
                break;
            }
            case Session::Item::K::Cmd: {
                const Command& cmd = s.commands[item.idx];
                json entry;
                entry["command"] = cmd.verb;
                std::string input = cmd.args[0];
                for (std::size_t i = 1; i < cmd.args.size(); ++i) input += " " + cmd.args[i];
                if (!cmd.kind.empty()) input += " " + cmd.kind;
                entry["input"] = input;
                json meta;
                meta["field"] = env.field_of.count(cmd.args[0])
                                    ? env.field_of.at(cmd.args[0])
                                    : cfg.field.to_string();
                meta["seed"] = cfg.seed;
                meta["retries"] = cfg.retries;
                try {
                    json res;
                    if (kIdealVerbs.count(cmd.verb)) {
                        const Ideal& I = env.ideals.at(cmd.args[0]);
                        if (cmd.verb == "order") {
                            res["order"] = ideal_order(I);
                        } else {
                            InvariantTable t = invariant_table(I, inv);
                            meta["near_cap"] = t.near_cap;
                            if (cmd.verb == "segre") {
                                res["c"] = seq_json(t.c);
                            } else if (cmd.verb == "polar") {
                                res["m"] = seq_json(t.m);
                            } else if (cmd.verb == "nu") {
                                res["nu"] = seq_json(t.nu);
                            } else {
                                res["d"] = t.d;
                                res["delta"] = t.delta;
                                res["m"] = seq_json(t.m);
                                res["c"] = seq_json(t.c);
                                res["nu"] = seq_json(t.nu);
                                res["gparam_generic"] = t.gparam_generic;
                                res["height_zero"] = t.height_zero;
                            }
                        }
                    } else if (cmd.verb == "intdep") {
                        const Ideal& I = env.ideals.at(cmd.args[0]);
                        const Ideal& J = env.ideals.at(cmd.args[1]);
                        CriterionVerdict sv = segre_criterion(I, J, inv);
                        CriterionVerdict pv = polar_nu_criterion(I, J, inv);
                        LexVerdict lv = lex_dominance(I, J, inv);
                        res["segre"] = criterion_json(sv);
                        res["polar_nu"] = criterion_json(pv);
                        json lex;
                        lex["holds"] = lv.holds;
                        lex["c_small"] = seq_json(lv.c_small);
                        lex["c_large"] = seq_json(lv.c_large);
                        res["lex"] = lex;
                        // the Segre comparison is the authoritative one
                        res["verdict"] = conclusion_str(sv.conclusion);
                        bool near = false;
                        for (const auto& t : sv.evidence) near = near || t.near_cap;
                        meta["near_cap"] = near;
                    } else if (kMapVerbs.count(cmd.verb)) {
                        const RationalMap& F = env.maps.at(cmd.args[0]);
                        ProjDegOptions po;
                        po.inv = inv;
                        if (cmd.verb == "projdeg")
                            res["d"] = seq_json(projective_degrees(F, po));
                        else if (cmd.verb == "degim")
                            res["deg_image"] = deg_image(F);
                        else if (cmd.verb == "jmult")
                            res["j"] = j_multiplicity(F, po);
                        else {
                            std::int64_t deg = map_degree(F, po);
                            res["map_degree"] = deg;
                            res["birational"] = (deg == 1);
                        }
                    } else {  // scan | report
                        const FamilyScenario& sc = env.fams.at(cmd.args[0]);
                        InvariantKind kind{kind_of(cmd.kind), cmd.n};
                        ScanReport rep = cmd.verb == "report" ? semicontinuity_report(sc, kind)
                                                              : scan(sc, kind);
                        res["invariant"] = cmd.kind;
                        if (!cmd.n.empty()) {
                            json n = json::array();
                            for (auto x : cmd.n) n.push_back(x);
                            res["n"] = n;
                        }
                        res["direction"] = direction_str(rep.direction);
                        FieldOps ops(sc.has_map ? sc.map.source.field : sc.ideal.ring.field);
                        json pts = json::array();
                        for (const auto& pr : rep.points) {
                            json p = tagged_json(pr.value);
                            json coords = json::array();
                            for (const auto& c : pr.point) coords.push_back(ops.to_string(c));
                            p["point"] = coords;
                            pts.push_back(p);
                        }
                        res["points"] = pts;
                        json gen = tagged_json(rep.generic.value);
                        gen["conclusive"] = rep.generic.conclusive;
                        gen["disagreements"] = rep.generic.disagreements;
                        res["generic"] = gen;
                        if (cmd.verb == "report") {
                            res["verdicts"] = rep.verdicts;
                            res["any_violation"] = rep.any_violation;
                            if (!rep.hypothesis_note.empty())
                                res["hypothesis_note"] = rep.hypothesis_note;
                        }
                    }
                    entry["result"] = res;
                    entry["meta"] = meta;
                } catch (const std::exception& ex) {
                    entry["error"] = ex.what();
                    entry["meta"] = meta;
                    any_failed = true;
                }
                report.push_back(entry);
                break;
            }
        }
    }

    RunOutcome out;
    out.any_failed = any_failed;
    out.json = report.dump(2) + "\n";
    std::ostringstream table;
    for (const auto& e : report) render_entry(table, e);
    out.table = table.str();
    return out;
}

}  // namespace segrelab
