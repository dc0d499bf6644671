#ifndef TDL_CYCLIC_HPP
#define TDL_CYCLIC_HPP

#include <string>
#include <vector>

#include "tdl/field.hpp"
#include "tdl/linalg.hpp"

namespace tdl {

/// Trace exponent set E = {k_0 < k_1 < ... < k_l}, 0 <= k_0, k_l <= m/2
/// (the top value m/2 itself only when m is even).
struct ExponentSet {
    std::vector<int> ks;

    int top() const { return ks.back(); }
    std::size_t size() const { return ks.size(); }
};

/// Throws std::domain_error unless E is valid for extension degree m.
void validate(const ExponentSet& E, int m);

/// E = {0, 1, ..., floor(m/2)}.
ExponentSet full_exponent_set(int m);

/// A linear code over GF(3) given by a generator matrix with independent
/// rows. Immutable after construction.
struct TernaryCode {
    int n = 0;
    TernaryMatrix gen;
    std::string label;

    int dim() const { return gen.row_count(); }
};

/// Degree of the minimal polynomial of alpha^{-(3^k+1)} over GF(3): computed
/// as the least d >= 1 with (3^k+1)*3^d = 3^k+1 mod 3^m-1 and checked against
/// the closed form (m for k < m/2; m/2 for even m, k = m/2).
int minimal_poly_degree(int m, int k);

/// Dimension of the trace code for exponent set E:
/// (l+1)m when k_l < m/2, (2l+1)m/2 when m even and k_l = m/2.
int code_dimension(int m, const ExponentSet& E);

/// The cyclic code of length (3^m-1)/2 whose codewords are
///   ( Tr( sum_j a_j alpha^{(3^{k_j}+1) i} ) )_i,  a_j in GF(3^m).
/// Generator rows evaluate the polynomial-basis choices of each a_j, ordered
/// j ascending then basis index ascending, reduced to an independent subset
/// in that order. Throws inconsistency_error if the rank does not match
/// code_dimension (a rank deficit means a field/trace bug, not bad input).
TernaryCode build_code(const FieldContext& ctx, const ExponentSet& E);

/// True iff the cyclic shift of every generator row stays in the row space.
bool shift_closure_check(const TernaryCode& code);

}  // namespace tdl

#endif
