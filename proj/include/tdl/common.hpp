#ifndef TDL_COMMON_HPP
#define TDL_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tdl {

/// A GF(3) symbol; always one of {0, 1, 2}.
using Trit = std::uint8_t;

/// Exact arbitrary-precision integer. All combinatorial counts use this type;
/// no floating point is used anywhere in the counting paths.
using BigInt = mpz_class;

/// Raised when an operation would exceed its enumeration/size budget.
class size_error : public std::runtime_error {
public:
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an exact identity that must hold (integrality, nonnegativity,
/// divisibility) is violated. Signals corrupted input or a transcription bug,
/// never a legitimate runtime condition.
class inconsistency_error : public std::runtime_error {
public:
    explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

inline Trit trit_add(Trit a, Trit b) { return static_cast<Trit>((a + b) % 3); }
inline Trit trit_sub(Trit a, Trit b) { return static_cast<Trit>((a + 3 - b) % 3); }
inline Trit trit_mul(Trit a, Trit b) { return static_cast<Trit>((a * b) % 3); }
inline Trit trit_neg(Trit a) { return static_cast<Trit>((3 - a) % 3); }

/// 3^e as a machine word; valid for e <= 40.
std::uint64_t pow3(int e);

/// 3^e exactly.
BigInt big_pow3(int e);

/// Binomial coefficient C(n, k), exactly; 0 for k < 0 or k > n.
BigInt binom(long n, long k);

}  // namespace tdl

#endif
