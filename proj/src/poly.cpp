#include "motivic/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace motivic {

IntPoly IntPoly::constant(const BigInt& c, std::size_t nvars) {
    IntPoly f;
    f.nvars_ = nvars;
    f.add_term(Exponents(nvars, 0), c);
    return f;
}

IntPoly IntPoly::variable(std::size_t index, std::size_t nvars) {
    IntPoly f;
    f.nvars_ = nvars;
    Exponents e(nvars, 0);
    e[index] = 1;
    f.add_term(e, 1);
    return f;
}

void IntPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(r.nvars_, 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = constant(1, nvars_);
    IntPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

ModPoly ModPoly::reduce(const IntPoly& f, std::uint64_t p) {
    ModPoly r(p, f.nvars());
    const BigInt pb(static_cast<unsigned long>(p));
    for (const auto& [e, c] : f.terms()) {
        BigInt m = c % pb;
        if (m < 0) m += pb;
        r.add_term(e, m.get_ui());
    }
    return r;
}

void ModPoly::add_term(const Exponents& e, std::uint64_t c) {
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0) terms_.erase(it);
    }
}

int ModPoly::total_degree() const noexcept {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    }
    return deg;
}

bool ModPoly::is_homogeneous() const noexcept {
    const int deg = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [deg](const auto& t) {
        return static_cast<int>(std::accumulate(t.first.begin(), t.first.end(), 0u)) == deg;
    });
}

bool ModPoly::uses_variable(std::size_t i) const noexcept { return max_exponent(i) > 0; }

unsigned ModPoly::max_exponent(std::size_t i) const noexcept {
    unsigned m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, i < e.size() ? e[i] : 0u);
    return m;
}

bool ModPoly::is_nonzero_constant() const noexcept { return total_degree() == 0; }

std::string format_poly(const ModPoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Exponents, std::uint64_t>> terms(f.terms().begin(), f.terms().end());
    auto deg = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (deg(a.first) != deg(b.first)) return deg(a.first) > deg(b.first);
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) out << " + ";
        first = false;
        std::vector<std::string> factors;
        if (c != 1 || deg(e) == 0) factors.push_back(std::to_string(c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
    }
    return out.str();
}

}  // namespace motivic
