#include "motivic/h2.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "motivic/error.hpp"

namespace motivic {

namespace {

using WeightMap = std::map<std::pair<unsigned, unsigned>, long>;

WeightMap weights_of(const VarietyExpr& x) {
    using K = VarietyExpr::Kind;
    WeightMap out;
    switch (x.kind()) {
        case K::Point: out[{0, 0}] = 1; return out;
        case K::Affine: out[{2 * x.dim(), x.dim()}] = 1; return out;
        case K::Projective:
            for (unsigned i = 0; i <= x.dim(); ++i) out[{2 * i, i}] = 1;
            return out;
        case K::Torus: {
            out[{0, 0}] = 1;
            for (unsigned k = 0; k < x.dim(); ++k) {
                WeightMap next;
                for (const auto& [dw, m] : out) {
                    next[{dw.first + 1, dw.second}] += m;
                    next[{dw.first + 2, dw.second + 1}] += m;
                }
                out = std::move(next);
            }
            return out;
        }
        case K::Product: {
            const WeightMap a = weights_of(x.children()[0]), b = weights_of(x.children()[1]);
            for (const auto& [da, ma] : a)
                for (const auto& [db, mb] : b) out[{da.first + db.first, da.second + db.second}] += ma * mb;
            return out;
        }
        case K::Union:
            for (const auto& c : x.children())
                for (const auto& [dw, m] : weights_of(c)) out[dw] += m;
            return out;
        case K::Concrete:
        case K::Complement: break;
    }
    throw Error(ErrorCode::UnsupportedSpace, "no catalog cohomology for " + print_variety_body(x));
}

Rational galois_eigenvalue(unsigned weight, const Galois& g, std::uint64_t fallback_q) {
    if (g.kind == GaloisKind::Conjugation) return weight % 2 == 0 ? Rational(1) : Rational(-1);
    const std::uint64_t q = g.q ? g.q : fallback_q;
    return Rational(pow_big(q, weight));
}

void flatten_union(const VarietyExpr& x, std::vector<VarietyExpr>& out) {
    if (x.kind() == VarietyExpr::Kind::Union) {
        for (const auto& c : x.children()) flatten_union(c, out);
    } else {
        out.push_back(x);
    }
}

}  // namespace

std::vector<WeightEntry> cohomology_weights(const VarietyExpr& space) {
    std::vector<WeightEntry> out;
    for (const auto& [dw, m] : weights_of(space)) {
        if (m != 0) out.push_back({dw.first, dw.second, m});
    }
    return out;
}

std::vector<CohEntry> cohomology_table(const VarietyExpr& space, const Galois& galois) {
    std::vector<CohEntry> out;
    for (const auto& w : cohomology_weights(space)) {
        out.push_back({w.degree, galois_eigenvalue(w.weight, galois, space.q()), w.multiplicity});
    }
    return out;
}

RationalFn catalog_zeta(const VarietyExpr& space) {
    std::vector<std::pair<BigInt, long>> factors;
    for (const auto& w : cohomology_weights(space)) {
        const long e = w.degree % 2 == 1 ? w.multiplicity : -w.multiplicity;
        factors.emplace_back(pow_big(space.q(), w.weight), e);
    }
    return from_linear_factors(factors);
}

LefschetzReport lefschetz_check(const VarietyExpr& space, unsigned m_max) {
    const auto weights = cohomology_weights(space);
    LefschetzReport rep;
    for (unsigned m = 1; m <= m_max; ++m) {
        BigInt trace = 0;
        for (const auto& w : weights) {
            const BigInt t = pow_big(space.q(), w.weight * m) * w.multiplicity;
            trace += w.degree % 2 == 0 ? t : BigInt(-t);
        }
        const BigInt count = point_count(space, m);
        if (trace != count) {
            rep.passed = false;
            rep.failed_m = m;
            rep.trace = trace;
            rep.count = count;
            return rep;
        }
        rep.trace = trace;
        rep.count = count;
    }
    return rep;
}

std::vector<std::size_t> parse_cycles(std::string_view text, std::size_t size) {
    std::vector<std::size_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> used(size, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw Error(ErrorCode::SyntaxError, "expected '(' in cycle notation", i);
        ++i;
        std::vector<std::size_t> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw Error(ErrorCode::SyntaxError, "expected a component number", i);
            const std::size_t v = std::stoul(std::string(text.substr(i, j - i)));
            if (v < 1 || v > size) {
                throw Error(ErrorCode::ValidationError,
                            "component " + std::to_string(v) + " out of range 1.." + std::to_string(size), i);
            }
            if (used[v - 1]) throw Error(ErrorCode::ValidationError, "component repeated in cycles", i);
            used[v - 1] = true;
            cycle.push_back(v - 1);
            i = j;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    return perm;
}

Scenario make_scenario(const VarietyExpr& space, std::vector<std::size_t> permutation, const Galois& galois) {
    Scenario s;
    flatten_union(space, s.components);
    const std::size_t k = s.components.size();
    if (permutation.empty()) {
        permutation.resize(k);
        std::iota(permutation.begin(), permutation.end(), 0);
    }
    if (permutation.size() != k) {
        throw Error(ErrorCode::ValidationError, "permutation acts on " + std::to_string(permutation.size()) +
                                                    " components, space has " + std::to_string(k));
    }
    std::vector<bool> hit(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (permutation[i] >= k || hit[permutation[i]]) {
            throw Error(ErrorCode::ValidationError, "permutation is not a bijection");
        }
        hit[permutation[i]] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = permutation[i];
        if (!(s.components[i] == s.components[j])) {
            throw Error(ErrorCode::UnsupportedScenario, "automorphism maps component " + std::to_string(i + 1) +
                                                            " to a different shape");
        }
        if (permutation[j] != i) {
            throw Error(ErrorCode::UnsupportedCycleLength,
                        "cycles longer than 2 have non-rational eigenvalues");
        }
        cohomology_weights(s.components[i]);  // throws UnsupportedSpace
    }
    if (galois.kind == GaloisKind::Frobenius) {
        unsigned e = 0;
        if (prime_power_base(galois.q, &e) == 0 || galois.q % 2 == 0) {
            throw Error(ErrorCode::UnsupportedScenario, "Frobenius scenarios need an odd prime power q");
        }
        if (space.q() != galois.q) {
            throw Error(ErrorCode::BaseFieldMismatch, "variety is over " + std::to_string(space.q()) +
                                                          " but Frobenius is over " + std::to_string(galois.q));
        }
    }
    s.permutation = std::move(permutation);
    s.galois = galois;
    return s;
}

Scenario parse_scenario(std::string_view text) {
    const auto open = text.find('"');
    const auto close = open == std::string_view::npos ? open : text.find('"', open + 1);
    if (open == std::string_view::npos || close == std::string_view::npos) {
        throw Error(ErrorCode::SyntaxError, "scenario needs a quoted variety", 0);
    }
    const std::string_view variety = text.substr(open + 1, close - open - 1);
    std::string cycles;
    std::optional<GaloisKind> kind;
    std::optional<std::uint64_t> q;
    std::size_t i = close + 1;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const auto eq = text.find('=', i);
        if (eq == std::string_view::npos) throw Error(ErrorCode::SyntaxError, "expected key=value", i);
        const std::string key(text.substr(i, eq - i));
        i = eq + 1;
        std::size_t end = i;
        if (key == "swap" || key == "perm") {
            // cycles may contain spaces: consume parenthesized groups
            while (end < text.size() && text[end] == '(') {
                const auto rp = text.find(')', end);
                if (rp == std::string_view::npos) throw Error(ErrorCode::SyntaxError, "unterminated cycle", end);
                end = rp + 1;
            }
            cycles += std::string(text.substr(i, end - i));
        } else {
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
            const std::string value(text.substr(i, end - i));
            if (key == "galois") {
                if (value == "frob") {
                    kind = GaloisKind::Frobenius;
                } else if (value == "conj") {
                    kind = GaloisKind::Conjugation;
                } else {
                    throw Error(ErrorCode::SyntaxError, "galois must be frob or conj", i);
                }
            } else if (key == "q") {
                if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
                    throw Error(ErrorCode::SyntaxError, "q must be a positive integer", i);
                }
                q = std::stoull(value);
            } else {
                throw Error(ErrorCode::SyntaxError, "unknown key '" + key + "'", i);
            }
        }
        i = end;
    }
    if (!kind) throw Error(ErrorCode::SyntaxError, "missing galois=frob|conj", text.size());
    if (*kind == GaloisKind::Frobenius && !q) throw Error(ErrorCode::SyntaxError, "galois=frob needs q=", text.size());
    const Galois g = *kind == GaloisKind::Frobenius ? Galois::frobenius(*q) : Galois::conjugation();
    const VarietyExpr space = parse_variety(variety, q ? *q : std::uint64_t{3});
    std::vector<VarietyExpr> comps;
    flatten_union(space, comps);
    return make_scenario(space, parse_cycles(cycles, comps.size()), g);
}

Scenario combine(const Scenario& a, const Scenario& b) {
    if (a.galois.kind != b.galois.kind || a.galois.q != b.galois.q) {
        throw Error(ErrorCode::UnsupportedScenario, "scenarios use different Galois elements");
    }
    Scenario s = a;
    const std::size_t off = a.components.size();
    s.components.insert(s.components.end(), b.components.begin(), b.components.end());
    for (std::size_t j : b.permutation) s.permutation.push_back(j + off);
    return s;
}

CommutingPair scenario_pairs(const Scenario& s) {
    CommutingPair out;
    auto add = [&](const Rational& lambda, const Rational& mu, long mult) {
        for (auto& e : out.summands) {
            if (e.lambda == lambda && e.mu == mu) {
                e.multiplicity += mult;
                return;
            }
        }
        out.summands.push_back({lambda, mu, mult});
    };
    std::vector<bool> seen(s.components.size(), false);
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        if (seen[i]) continue;
        const std::size_t j = s.permutation[i];
        seen[i] = seen[j] = true;
        if (j != i && s.permutation[j] != i) {
            throw Error(ErrorCode::UnsupportedCycleLength, "cycles longer than 2 have non-rational eigenvalues");
        }
        for (const auto& e : cohomology_table(s.components[i], s.galois)) {
            const long mult = e.degree % 2 == 0 ? e.multiplicity : -e.multiplicity;
            add(1, e.eigenvalue, mult);
            if (j != i) add(-1, e.eigenvalue, mult);
        }
    }
    std::erase_if(out.summands, [](const PairSummand& p) { return p.multiplicity == 0; });
    return out;
}

int h2_eval(const Scenario& s) { return moore_h2(sigma2(scenario_pairs(s))); }

int h_odd_eval(const Scenario& s, std::uint64_t ell) {
    if (s.galois.kind == GaloisKind::Frobenius && s.galois.q % ell == 0) {
        throw Error(ErrorCode::UnsupportedScenario,
                    "l-adic cohomology needs l != char: " + std::to_string(ell) + " divides q = " +
                        std::to_string(s.galois.q));
    }
    return moore_odd(sigma2(scenario_pairs(s)), ell);
}

}  // namespace motivic
