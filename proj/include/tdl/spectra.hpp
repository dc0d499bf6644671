#ifndef TDL_SPECTRA_HPP
#define TDL_SPECTRA_HPP

#include <functional>
#include <map>
#include <vector>

#include "tdl/cyclic.hpp"

namespace tdl {

/// Exact codeword-count-per-weight table.
struct WeightDistribution {
    int n = 0;
    int dim = 0;
    std::map<int, BigInt> counts;  // weight -> count, zero counts omitted

    BigInt total() const;
    BigInt at(int w) const;

    /// Checks sum == 3^dim, counts[0] == 1, keys within [0, n].
    void check_valid() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// A sorted set of coordinate positions.
struct PositionSet {
    std::vector<int> positions;

    static PositionSet of(std::vector<int> idx);
    std::size_t size() const { return positions.size(); }
};

struct EnumerationOptions {
    int threads = 0;      // 0 = hardware concurrency
    int budget_dim = 26;  // refuse enumerations beyond 3^budget_dim codewords
};

/// Exact weight distribution by enumerating all 3^dim codewords. The walk
/// visits information vectors in a modular ternary Gray order (one generator
/// row added per step) and fans out over 9 fixed-prefix chunks merged in a
/// fixed order, so the result is independent of the thread count.
WeightDistribution enumerate_distribution(const TernaryCode& code,
                                          const EnumerationOptions& opt = {});

/// Single-threaded visit of every codeword (zero word first). The reference
/// passed to the callback is reused between calls.
void for_each_codeword(const TernaryCode& code,
                       const std::function<void(const TernaryVector&)>& fn);

/// Codewords of `code` vanishing on T, with the T coordinates deleted.
TernaryCode shorten(const TernaryCode& code, const PositionSet& T);

/// All codewords of `code` with the T coordinates deleted. Requires |T| less
/// than the minimum distance for the dimension to survive; if rows become
/// dependent the generator is reduced to an independent subset.
TernaryCode puncture(const TernaryCode& code, const PositionSet& T);

/// #W_i(C,T): codewords of weight i that are nonzero on every position of T,
/// via inclusion-exclusion over shortened distributions (valid when those are
/// T-independent, |T| <= 2).
BigInt count_nonzero_on(const TernaryCode& code, const PositionSet& T, int weight,
                        const EnumerationOptions& opt = {});

/// Same count by direct filtration during enumeration.
BigInt count_nonzero_on_direct(const TernaryCode& code, const PositionSet& T, int weight,
                               const EnumerationOptions& opt = {});

/// Exact dual distribution via the q=3 Krawtchouk transform. A negative or
/// fractional entry signals corrupted input and raises inconsistency_error.
WeightDistribution macwilliams_transform(const WeightDistribution& dist);

/// A_k of the dual of any [.,2m] code with the three-weight distribution of
/// the trace-code family (m odd): the closed triple-sum form.
BigInt dual_closed_form(int m, int k);

/// Solves the first s Pless power moments for the s unknown frequencies
/// A_{w_1},...,A_{w_s}, given A^perp_1..A^perp_{s-1} (s <= 4). Exact
/// rational solve; non-integral or negative solutions raise
/// inconsistency_error.
WeightDistribution pless_solve(int n, int dim, const std::vector<int>& weights,
                               const std::vector<BigInt>& dual_prefix);

/// The three-weight distribution of the [.,2m] trace codes (m odd >= 3).
WeightDistribution predicted_three_weight(int m);

/// Closed-form distributions of the shortened (t positions removed,
/// t in {1,2}) and punctured codes of any code with the predicted_three_weight
/// distribution.
WeightDistribution predicted_shortened(int m, int t);
WeightDistribution predicted_punctured(int m, int t);

}  // namespace tdl

#endif
