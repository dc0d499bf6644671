#ifndef TDL_FIELD_HPP
#define TDL_FIELD_HPP

#include <cstdint>
#include <vector>

#include "tdl/common.hpp"

namespace tdl {

/// An element of GF(3^m) in the polynomial basis {1, alpha, ..., alpha^{m-1}},
/// encoded as the base-3 integer of its coefficient vector (low-degree digit
/// least significant). 0 encodes the zero element, 1 the unit.
using FieldElement = std::uint32_t;

/// Exact arithmetic in GF(3^m).
///
/// The modulus is the lexicographically smallest primitive polynomial of
/// degree m over GF(3), coefficients compared low-degree first, so every
/// context for a given m is byte-for-byte reproducible. alpha (the residue
/// class of x) is a generator of the multiplicative group; log/exp tables
/// are built eagerly at construction. Immutable afterwards and safe to share
/// across threads.
class FieldContext {
public:
    static FieldContext build(int m);

    int m() const { return m_; }
    std::uint32_t field_order() const { return q_; }        // 3^m
    std::uint32_t group_order() const { return q_ - 1; }    // 3^m - 1
    std::uint32_t code_length() const { return (q_ - 1) / 2; }

    /// Modulus coefficients, low degree first, length m+1, monic.
    const std::vector<Trit>& modulus() const { return modulus_; }

    FieldElement alpha() const { return alpha_; }

    /// alpha^e; e may be any nonnegative integer (reduced mod 3^m - 1).
    FieldElement exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

    /// Discrete log base alpha, in [0, 3^m - 1). Throws std::domain_error on 0.
    std::uint32_t log(FieldElement x) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// Trace to GF(3): x + x^3 + ... + x^{3^{m-1}}.
    Trit trace(FieldElement x) const;

    /// True iff x is a nonzero square, i.e. log(x) is even.
    bool is_square(FieldElement x) const { return (log(x) & 1u) == 0; }

    /// Coefficient of alpha^i in x.
    Trit coeff(FieldElement x, int i) const {
        return static_cast<Trit>((x / p3_[i]) % 3);
    }
    std::vector<Trit> coeffs(FieldElement x) const;

private:
    FieldContext() = default;

    int m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Trit> modulus_;
    FieldElement alpha_ = 0;
    std::vector<std::uint32_t> exp_;       // size q-1
    std::vector<std::uint32_t> log_;       // size q, log_[0] unused
    std::vector<std::uint32_t> p3_;        // powers of 3
    std::vector<Trit> trace_basis_;        // trace(alpha^i), i < m
};

}  // namespace tdl

#endif
