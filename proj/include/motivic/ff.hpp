#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace motivic::ff {

inline constexpr unsigned kMaxDegree = 24;
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;
/// Characteristics are limited so residues fit in 32 bits.
inline constexpr std::uint64_t kMaxCharacteristic = (std::uint64_t{1} << 31) - 1;

/// An element of F_p[x]/(modulus), stored as n residues low-to-high. The
/// context id is derived from (p, n): two contexts with the same (p, n) are
/// the same field because the modulus choice is deterministic.
class FieldElem {
public:
    FieldElem() = default;

    std::uint64_t ctx_id() const noexcept { return ctx_; }
    unsigned size() const noexcept { return n_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return c_[i]; }
    std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), n_}; }
    bool is_zero() const noexcept;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

private:
    friend class FieldCtx;
    std::uint64_t ctx_ = 0;
    unsigned n_ = 0;
    std::array<std::uint32_t, kMaxDegree> c_{};
};

enum class FieldOp { Add, Sub, Mul, Inv };

class FieldCtx {
public:
    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return n_; }
    std::uint64_t id() const noexcept { return (p_ << 5) | n_; }
    /// Monic modulus, n + 1 coefficients low-to-high. For n = 1 this is x.
    std::span<const std::uint32_t> modulus() const noexcept { return {mod_.data(), n_ + 1u}; }
    /// p^n, saturating at UINT64_MAX.
    std::uint64_t size() const noexcept { return size_; }

    FieldElem zero() const noexcept;
    FieldElem one() const noexcept;
    FieldElem from_int(std::int64_t v) const noexcept;
    /// Residues low-to-high; missing high coefficients are zero. Values are reduced mod p.
    FieldElem element(std::span<const std::int64_t> coeffs) const;
    /// The class of x.
    FieldElem gen() const noexcept;
    /// Base-p digits of `index`, low-degree coordinate least significant.
    FieldElem from_index(std::uint64_t index) const noexcept;
    std::uint64_t to_index(const FieldElem& a) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, std::uint64_t e) const;
    FieldElem frobenius(const FieldElem& a) const { return pow(a, p_); }

    bool owns(const FieldElem& a) const noexcept { return a.ctx_ == id() && a.n_ == n_; }

private:
    friend FieldCtx make_field_ctx(std::uint64_t p, std::span<const std::uint32_t> modulus);

    void check(const FieldElem& a) const;
    FieldElem blank() const noexcept;

    std::uint64_t p_ = 2;
    unsigned n_ = 1;
    std::uint64_t size_ = 2;
    std::array<std::uint32_t, kMaxDegree + 1> mod_{};
    // reduce_[k][j]: coefficient j of x^(n+k) mod modulus, k < n - 1.
    std::vector<std::uint32_t> reduce_;
};

/// F_{p^n} with the lexicographically least (low-degree coefficient first)
/// monic irreducible modulus of degree n. Results are cached.
FieldCtx build_extension(std::uint64_t p, unsigned n);

/// Rabin's irreducibility test over F_p. `f` is low-to-high and need not be monic.
bool is_irreducible(std::span<const std::uint64_t> f, std::uint64_t p);

FieldElem ff_op(const FieldCtx& ctx, FieldOp kind, const FieldElem& a,
                const std::optional<FieldElem>& b = std::nullopt);
FieldElem ff_pow(const FieldCtx& ctx, const FieldElem& a, std::uint64_t e);
FieldElem frobenius(const FieldCtx& ctx, const FieldElem& a);

/// All p^n elements in index order (low-degree coordinate fastest).
std::vector<FieldElem> enumerate_field(const FieldCtx& ctx, std::uint64_t budget = kDefaultBudget);

}  // namespace motivic::ff
