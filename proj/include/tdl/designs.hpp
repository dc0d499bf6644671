#ifndef TDL_DESIGNS_HPP
#define TDL_DESIGNS_HPP

#include <cstdint>
#include <optional>

#include "tdl/geometry.hpp"
#include "tdl/spectra.hpp"

namespace tdl {

/// Distinct supports of the weight-w codewords, with the codeword count and
/// the range of codewords-per-support multiplicities (2 throughout whenever
/// d <= w <= 2d-1, where supports only collide under negation).
struct SupportExtraction {
    BlockSet blocks;
    std::uint64_t codewords = 0;
    std::uint32_t min_multiplicity = 0;
    std::uint32_t max_multiplicity = 0;
};

SupportExtraction supports_of_weight(const TernaryCode& code, int w,
                                     const EnumerationOptions& opt = {});

struct DesignCheck {
    bool is_design = false;
    std::uint64_t lambda = 0;  // meaningful only when is_design
};

/// Counts pair coverage over all C(v,2) point pairs; a 2-design iff the count
/// is a single constant. Also asserts b*C(k,2) = lambda*C(v,2) exactly.
/// All blocks must share one size.
DesignCheck verify_2_design(const BlockSet& blocks);

/// A block set together with its verified parameters (or the refutation).
struct Design {
    BlockSet blocks;
    int t = 2;
    DesignCheck check;

    int v() const { return blocks.v; }
    int k() const { return blocks.blocks.empty() ? 0 : static_cast<int>(blocks.blocks.front().size()); }
    std::uint64_t b() const { return blocks.blocks.size(); }
};

/// Runs the pair-coverage verification and packages the result.
Design analyze_design(BlockSet blocks);

/// lambda of the weight-k primal design: (A_k + A_k(C_{{0,1}}))/2 - A_k(C_{{0}}).
/// Must match the closed forms 3^{m-2}(3^{m-1}-3^{(m-1)/2}-1),
/// 2 3^{m-2}(2 3^{m-1}+1), 3^{m-2}(3^{m-1}+3^{(m-1)/2}-1) for the three
/// respective weights; non-integral input raises inconsistency_error.
BigInt lambda_primal(int m, int weight, const BigInt& a_k, const BigInt& a_k_short1,
                     const BigInt& a_k_short2);

/// Closed form of the primal-design lambda for one of the three weights.
BigInt lambda_primal_closed_form(int m, int weight);

/// The dual-design lambda column exactly as tabulated, k in 4..7:
/// 1, 3^{m-1}-9, (3/4)(3^{2m-2}-38 3^{m-2}+53),
/// (1/20)(3^{3m-2}-5 3^{2m}+1006 3^{m-2}-1000).
BigInt lambda_dual(int m, int k);

/// One row of the lambda/count reconciliation: the tabulated lambda, the
/// count it implies through lambda_k = 2k(k-1) A_k / ((3^m-1)(3^m-3)), the
/// count from the closed-form dual distribution, and whether they agree.
/// Disagreement is reported, never patched.
struct DualCountCheck {
    int k = 0;
    BigInt lambda_tabulated;
    BigInt count_from_lambda;
    BigInt count_closed_form;
    bool matches = false;
};

DualCountCheck dual_count_check(int m, int k);

/// The three machine checks behind the Steiner claim for a code whose dual
/// should hold PG lines as its weight-4 supports.
struct SteinerReport {
    std::uint64_t block_count = 0;
    BigInt a4_dual;                       // from the MacWilliams transform
    bool char_vectors_in_dual = false;    // +-1_B orthogonal to every generator row
    bool a4_matches_blocks = false;       // a4_dual == 2 * block_count
    bool is_steiner = false;              // pair coverage exactly 1
    bool all_pass() const { return char_vectors_in_dual && a4_matches_blocks && is_steiner; }
};

SteinerReport verify_steiner_claim(const TernaryCode& code, const FieldContext& ctx,
                                   const EnumerationOptions& opt = {});

}  // namespace tdl

#endif
