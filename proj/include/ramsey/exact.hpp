#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ramsey {

/// Arbitrary-precision integer used for every count. Counts such as
/// t^C(n,r) overflow fixed-width types almost immediately, so all engine
/// arithmetic stays exact in GMP and is serialized as decimal strings.
using ExactCount = mpz_class;

inline ExactCount exact_pow(unsigned long base, unsigned long exp) {
    ExactCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

inline ExactCount factorial(unsigned long n) {
    ExactCount out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline std::string to_decimal(const ExactCount& x) { return x.get_str(10); }

inline ExactCount from_decimal(const std::string& s) { return ExactCount(s, 10); }

static_assert(sizeof(unsigned long) >= 8, "64-bit unsigned long expected");

/// True iff x fits in an unsigned 64-bit value.
inline bool fits_u64(const ExactCount& x) {
    return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const ExactCount& x) { return mpz_get_ui(x.get_mpz_t()); }

}  // namespace ramsey
