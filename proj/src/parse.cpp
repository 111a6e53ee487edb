#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "motivic/error.hpp"
#include "motivic/variety.hpp"

namespace motivic {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("(),;:+-*^").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + static_cast<char>(c) + "'", i);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const std::set<std::string, std::less<>> kReserved = {"point", "A",    "P",    "T",    "union", "product",
                                                      "complement", "affine", "proj", "over", "vars"};

struct Node {
    VarietyExpr::Kind kind = VarietyExpr::Kind::Point;
    unsigned n = 0;
    std::optional<std::uint64_t> tag;
    std::optional<std::uint64_t> inner_tag;  // `affine over p ...`
    std::size_t pos = 0;
    Flavor flavor = Flavor::Affine;
    std::vector<std::string> vars;
    std::vector<IntPoly> polys;
    std::vector<Node> children;
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    Node parse_top() {
        Node n = parse_expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return n;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
    bool is_ident(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }

    [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorCode::SyntaxError, msg, peek().pos); }

    void expect(const char* p) {
        if (!is_punct(p)) fail(std::string("expected '") + p + "'");
        ++i_;
    }

    std::uint64_t parse_uint() {
        if (peek().kind != Tok::Int) fail("expected an integer");
        const Token& t = next();
        if (t.text.size() > 18) throw Error(ErrorCode::SyntaxError, "integer too large", t.pos);
        return std::stoull(t.text);
    }

    Node parse_expr() {
        Node n = parse_primary();
        if (is_ident("over")) {
            ++i_;
            n.tag = parse_uint();
        }
        return n;
    }

    Node parse_primary() {
        using K = VarietyExpr::Kind;
        Node n;
        n.pos = peek().pos;
        if (peek().kind != Tok::Ident) fail("expected a variety");
        const std::string word = next().text;
        if (word == "point") {
            n.kind = K::Point;
        } else if (word == "A" || word == "P" || word == "T") {
            n.kind = word == "A" ? K::Affine : word == "P" ? K::Projective : K::Torus;
            expect("(");
            const std::uint64_t dim = parse_uint();
            if (dim > 1000) throw Error(ErrorCode::ValidationError, "dimension too large", n.pos);
            n.n = static_cast<unsigned>(dim);
            expect(")");
        } else if (word == "union") {
            n.kind = K::Union;
            expect("(");
            n.children.push_back(parse_expr());
            while (is_punct(",")) {
                ++i_;
                n.children.push_back(parse_expr());
            }
            expect(")");
        } else if (word == "product" || word == "complement") {
            n.kind = word == "product" ? K::Product : K::Complement;
            expect("(");
            n.children.push_back(parse_expr());
            expect(",");
            n.children.push_back(parse_expr());
            expect(")");
        } else if (word == "affine" || word == "proj") {
            n.kind = K::Concrete;
            n.flavor = word == "affine" ? Flavor::Affine : Flavor::Projective;
            if (is_ident("over")) {
                ++i_;
                n.inner_tag = parse_uint();
            }
            if (!is_ident("vars")) fail("expected 'vars'");
            ++i_;
            parse_var_list(n);
            expect(":");
            if (starts_poly(n)) {
                n.polys.push_back(parse_sum(n));
                while (is_punct(";")) {
                    ++i_;
                    n.polys.push_back(parse_sum(n));
                }
            }
        } else {
            throw Error(ErrorCode::SyntaxError, "unknown variety '" + word + "'", n.pos);
        }
        return n;
    }

    void parse_var_list(Node& n) {
        for (;;) {
            if (peek().kind != Tok::Ident) fail("expected a variable name");
            const Token& t = next();
            if (kReserved.count(t.text)) throw Error(ErrorCode::SyntaxError, "reserved word '" + t.text + "'", t.pos);
            if (std::find(n.vars.begin(), n.vars.end(), t.text) != n.vars.end()) {
                throw Error(ErrorCode::SyntaxError, "duplicate variable '" + t.text + "'", t.pos);
            }
            n.vars.push_back(t.text);
            if (!is_punct(",")) break;
            ++i_;
        }
    }

    int var_index(const Node& n, const std::string& name) const {
        auto it = std::find(n.vars.begin(), n.vars.end(), name);
        return it == n.vars.end() ? -1 : static_cast<int>(it - n.vars.begin());
    }

    bool starts_poly(const Node& n) const {
        const Token& t = peek();
        if (t.kind == Tok::Int) return true;
        if (t.kind == Tok::Ident) return var_index(n, t.text) >= 0;
        return t.kind == Tok::Punct && (t.text == "(" || t.text == "-" || t.text == "+");
    }

    IntPoly parse_sum(const Node& n) {
        bool negate = false;
        if (is_punct("-") || is_punct("+")) negate = next().text == "-";
        IntPoly acc = parse_term(n);
        if (negate) acc = -acc;
        while (is_punct("+") || is_punct("-")) {
            const bool minus = next().text == "-";
            IntPoly t = parse_term(n);
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    IntPoly parse_term(const Node& n) {
        IntPoly acc = parse_factor(n);
        while (is_punct("*")) {
            ++i_;
            acc = acc * parse_factor(n);
        }
        return acc;
    }

    IntPoly parse_factor(const Node& n) {
        IntPoly base = parse_base(n);
        if (is_punct("^")) {
            ++i_;
            const std::uint64_t e = parse_uint();
            if (e > 4096) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    IntPoly parse_base(const Node& n) {
        const std::size_t nv = n.vars.size();
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            ++i_;
            return IntPoly::constant(BigInt(t.text), nv);
        }
        if (t.kind == Tok::Ident) {
            const int idx = var_index(n, t.text);
            if (idx < 0) fail("unknown variable '" + t.text + "'");
            ++i_;
            return IntPoly::variable(static_cast<std::size_t>(idx), nv);
        }
        if (is_punct("(")) {
            ++i_;
            IntPoly inner = parse_sum(n);
            expect(")");
            return inner;
        }
        if (is_punct("-")) {
            ++i_;
            return -parse_factor(n);
        }
        fail("expected a polynomial term");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

void collect_tags(const Node& n, std::vector<std::pair<std::uint64_t, std::size_t>>& tags) {
    if (n.tag) tags.emplace_back(*n.tag, n.pos);
    if (n.inner_tag) tags.emplace_back(*n.inner_tag, n.pos);
    for (const auto& c : n.children) collect_tags(c, tags);
}

VarietyExpr build(const Node& n, std::uint64_t q) {
    using K = VarietyExpr::Kind;
    try {
        switch (n.kind) {
            case K::Point: return VarietyExpr::point(q);
            case K::Affine: return VarietyExpr::affine(n.n, q);
            case K::Projective: return VarietyExpr::projective(n.n, q);
            case K::Torus: return VarietyExpr::torus(n.n, q);
            case K::Concrete: {
                if (!is_prime(q)) {
                    throw Error(ErrorCode::ValidationError,
                                "equations need a prime base field, got q = " + std::to_string(q));
                }
                PolySystem sys;
                sys.p = q;
                sys.vars = n.vars;
                sys.flavor = n.flavor;
                for (const auto& f : n.polys) {
                    // widen constants parsed before all variables were known
                    const ModPoly reduced = ModPoly::reduce(f, q);
                    ModPoly r(q, n.vars.size());
                    for (const auto& [e, c] : reduced.terms()) {
                        Exponents full(n.vars.size(), 0);
                        std::copy(e.begin(), e.end(), full.begin());
                        r.add_term(full, c);
                    }
                    sys.polys.push_back(std::move(r));
                }
                return VarietyExpr::concrete(std::move(sys));
            }
            case K::Union: {
                std::vector<VarietyExpr> parts;
                for (const auto& c : n.children) parts.push_back(build(c, q));
                return VarietyExpr::disjoint_union(std::move(parts));
            }
            case K::Product: return VarietyExpr::product(build(n.children[0], q), build(n.children[1], q));
            case K::Complement: return VarietyExpr::complement(build(n.children[0], q), build(n.children[1], q));
        }
    } catch (const Error& e) {
        if (e.position()) throw;
        throw Error(e.code(), e.what(), n.pos);
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

std::string join_vars(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out;
}

}  // namespace

VarietyExpr parse_variety(std::string_view text, std::optional<std::uint64_t> default_q) {
    Parser parser(text);
    const Node root = parser.parse_top();
    std::vector<std::pair<std::uint64_t, std::size_t>> tags;
    collect_tags(root, tags);
    std::uint64_t q = 0;
    if (!tags.empty()) {
        q = tags.front().first;
        for (const auto& [t, pos] : tags) {
            if (t != q) {
                throw Error(ErrorCode::ValidationError,
                            "base-field tags disagree: " + std::to_string(q) + " vs " + std::to_string(t), pos);
            }
        }
    } else if (default_q) {
        q = *default_q;
    } else {
        throw Error(ErrorCode::ValidationError, "missing base field (`over q`)", text.size());
    }
    if (prime_power_base(q) == 0) {
        throw Error(ErrorCode::ValidationError, std::to_string(q) + " is not a prime power", tags.empty() ? 0 : tags.front().second);
    }
    return build(root, q);
}

std::string print_variety_body(const VarietyExpr& x) {
    using K = VarietyExpr::Kind;
    switch (x.kind()) {
        case K::Point: return "point";
        case K::Affine: return "A(" + std::to_string(x.dim()) + ")";
        case K::Projective: return "P(" + std::to_string(x.dim()) + ")";
        case K::Torus: return "T(" + std::to_string(x.dim()) + ")";
        case K::Concrete: {
            const auto& s = x.system();
            std::string out = (s.flavor == Flavor::Affine ? "affine vars " : "proj vars ") + join_vars(s.vars) + " :";
            for (std::size_t i = 0; i < s.polys.size(); ++i) out += (i ? " ; " : " ") + format_poly(s.polys[i], s.vars);
            return out;
        }
        case K::Union: {
            std::string out = "union(";
            const auto parts = x.children();
            for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + print_variety_body(parts[i]);
            return out + ")";
        }
        case K::Product:
        case K::Complement: {
            const auto c = x.children();
            return std::string(x.kind() == K::Product ? "product(" : "complement(") + print_variety_body(c[0]) + ", " +
                   print_variety_body(c[1]) + ")";
        }
    }
    return {};
}

std::string print_variety(const VarietyExpr& x) { return print_variety_body(x) + " over " + std::to_string(x.q()); }

}  // namespace motivic
