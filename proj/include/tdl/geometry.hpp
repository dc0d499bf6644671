#ifndef TDL_GEOMETRY_HPP
#define TDL_GEOMETRY_HPP

#include <vector>

#include "tdl/cyclic.hpp"
#include "tdl/field.hpp"

namespace tdl {

/// A block design's block list over points {0..v-1}. Each block is sorted;
/// the list itself is sorted lexicographically and free of repeats.
struct BlockSet {
    int v = 0;
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const BlockSet&, const BlockSet&) = default;
};

/// The points of PG(m-1,3) in the fixed order point i = rho(alpha^i),
/// i = 0..(3^m-1)/2 - 1, together with the canonical map sending any nonzero
/// vector to its point index.
class ProjectivePointSet {
public:
    explicit ProjectivePointSet(const FieldContext& ctx);

    int count() const { return n_; }

    /// Homogeneous coordinates of point i (the coefficient vector of alpha^i).
    std::vector<Trit> point(int i) const { return ctx_->coeffs(ctx_->exp(i)); }

    /// alpha^i as a field element.
    FieldElement element(int i) const { return ctx_->exp(i); }

    /// Point index of a nonzero x: log(x) mod N collapses x and -x.
    int index_of(FieldElement x) const { return static_cast<int>(ctx_->log(x) % n_); }

    /// The representative with first nonzero coordinate 1.
    FieldElement canonical_rep(FieldElement x) const;

    const FieldContext& ctx() const { return *ctx_; }

private:
    const FieldContext* ctx_;
    int n_;
};

/// All lines of PG(m-1,3): blocks {u, v, u+v, u-v} over unordered point
/// pairs, 4 points each, every point pair on exactly one line.
BlockSet pg_lines(const FieldContext& ctx);

/// The same block set built from field squares: {a^2, b^2, (a+b)^2, (a-b)^2}
/// over a != +-b, square alpha^{2i} mapped to point index i.
BlockSet steiner_blocks_squares(const FieldContext& ctx);

/// Projective generalized Reed-Muller codes over GF(3) at the fixed point
/// order: evaluation span of the monomials of even total degree in (0, 2r]
/// (exponents per variable at most 2); prm() additionally spans the all-ones
/// vector.
TernaryCode prm_star(int r, const FieldContext& ctx);
TernaryCode prm(int r, const FieldContext& ctx);

/// Dimension of the code spanned by characteristic vectors of the projective
/// (r-1)-flats of PG(m-1,p): the alternating binomial sum. Validated against
/// ground truth only for r = 2, where it reduces to
/// (p^m-1)/(p-1) - m(m+1)/2 at p = 3; other r are evaluated as printed.
long long pd_code_dimension(int r, int m, int p = 3);

}  // namespace tdl

#endif
