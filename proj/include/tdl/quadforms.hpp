#ifndef TDL_QUADFORMS_HPP
#define TDL_QUADFORMS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tdl/cyclic.hpp"
#include "tdl/field.hpp"

namespace tdl {

/// An m-variable quadratic form over GF(3), F(x) = x S x^T with S symmetric.
struct QuadraticForm {
    int m = 0;
    std::vector<Trit> s;  // m*m, row-major, s[i*m+j] == s[j*m+i]

    Trit at(int i, int j) const { return s[i * m + j]; }
};

/// The symmetrized Gram matrix of the form x -> Tr(sum_t a_t x^{3^t+1}) in
/// the polynomial basis: S = 2 (B + B^T) with B_ij = Tr(sum_t a_t
/// alpha^{i 3^t} alpha^j). Requires |a| = floor(m/2) + 1.
QuadraticForm gram_matrix(const FieldContext& ctx, std::span<const FieldElement> a);

Trit evaluate(const QuadraticForm& F, std::span<const Trit> x);

/// Diagonal of a congruent diagonal form (zeros included), via symmetric
/// Gaussian congruence: first nonzero diagonal pivot, with the
/// x_i -> x_i + x_j transform when the whole diagonal vanishes.
std::vector<Trit> diagonalize(const QuadraticForm& F);

int form_rank(const QuadraticForm& F);

/// #{x in GF(3)^m : F(x) = 0} from rank and discriminant:
/// 3^{m-1} for odd rank s; 3^{m-1} + eta(prod) eta(-1)^{s/2} 2 3^{m-(s+2)/2}
/// for even s, with eta(-1) = -1 over GF(3).
std::uint64_t zero_count(const QuadraticForm& F);

/// (3^m - zero_count)/2: the Hamming weight of the trace-code codeword whose
/// form this is.
int predicted_weight(const QuadraticForm& F);

struct OracleSweepReport {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::map<int, std::uint64_t> rank_histogram;
    std::map<int, std::uint64_t> weight_histogram;
};

/// Sweeps codewords of the trace code for E, comparing the enumerated
/// Hamming weight of each against the Gram-matrix prediction. sample = 0
/// runs the full 3^dim sweep (Gray walk, 9 deterministic chunks); a positive
/// sample draws that many information vectors from a fixed-seed generator.
OracleSweepReport oracle_sweep(const FieldContext& ctx, const ExponentSet& E,
                               std::uint64_t sample = 0, int threads = 0);

}  // namespace tdl

#endif
