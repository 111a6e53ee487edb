#include "motivic/oracle.hpp"

#include "motivic/error.hpp"

namespace motivic::oracle {

namespace {

constexpr unsigned kMask = 255;

// a*d^2 ~ a*d = n*d, then drop factors of 4
unsigned residue(const Rational& a) {
    if (a == 0) throw Error(ErrorCode::ZeroInput, "Hilbert symbol of zero");
    BigInt v = a.get_num() * a.get_den();
    while (mpz_divisible_ui_p(v.get_mpz_t(), 4)) v /= 4;
    BigInt r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), 8);
    return static_cast<unsigned>(r.get_ui());
}

bool solvable(unsigned a, unsigned b) {
    auto zero = [&](unsigned x, unsigned y, unsigned z) { return ((a * x * x + b * y * y - z * z) & kMask) == 0; };
    // scale so the first odd coordinate among z, x, y is 1
    for (unsigned x = 0; x < 256; ++x)
        for (unsigned y = 0; y < 256; ++y)
            if (zero(x, y, 1)) return true;
    for (unsigned z = 0; z < 256; z += 2)
        for (unsigned y = 0; y < 256; ++y)
            if (zero(1, y, z)) return true;
    for (unsigned z = 0; z < 256; z += 2)
        for (unsigned x = 0; x < 256; x += 2)
            if (zero(x, 1, z)) return true;
    return false;
}

}  // namespace

int hilbert2_mod256(const Rational& a, const Rational& b) { return solvable(residue(a), residue(b)) ? 0 : 1; }

}  // namespace motivic::oracle
