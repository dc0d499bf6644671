#ifndef TDL_LINALG_HPP
#define TDL_LINALG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "tdl/common.hpp"

namespace tdl {

/// A length-n vector over GF(3), packed two bits per symbol (32 symbols per
/// 64-bit word, the value 3 never occurs). Weight is a popcount over the OR
/// of the two bit planes, which is what makes exhaustive codeword
/// enumeration cheap.
class TernaryVector {
public:
    TernaryVector() = default;
    explicit TernaryVector(int n) : n_(n), words_((n + 31) / 32, 0) {}

    static TernaryVector from_symbols(std::span<const Trit> symbols);

    int size() const { return n_; }

    Trit get(int i) const {
        return static_cast<Trit>((words_[i >> 5] >> (2 * (i & 31))) & 3u);
    }
    void set(int i, Trit v);

    int weight() const;
    std::vector<int> support() const;
    bool is_zero() const;

    /// this += other (symbol-wise mod 3); sizes must match.
    void add_in_place(const TernaryVector& other);
    /// this += c * other.
    void add_scaled(const TernaryVector& other, Trit c);

    TernaryVector negated() const;
    TernaryVector scaled(Trit c) const;

    /// Standard inner product over GF(3).
    Trit dot(const TernaryVector& other) const;

    /// Cyclic coordinate shift i -> i+1 mod n.
    TernaryVector rotated_right() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const TernaryVector&, const TernaryVector&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A rectangular matrix over GF(3), stored as rows.
class TernaryMatrix {
public:
    TernaryMatrix() = default;
    TernaryMatrix(int rows, int cols);
    static TernaryMatrix from_rows(std::vector<TernaryVector> rows);

    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return cols_; }

    const TernaryVector& row(int r) const { return rows_[r]; }
    TernaryVector& row(int r) { return rows_[r]; }
    const std::vector<TernaryVector>& rows() const { return rows_; }

    Trit at(int r, int c) const { return rows_[r].get(c); }
    void set(int r, int c, Trit v) { rows_[r].set(c, v); }

    void append_row(TernaryVector v);

    friend bool operator==(const TernaryMatrix&, const TernaryMatrix&) = default;

private:
    std::vector<TernaryVector> rows_;
    int cols_ = 0;
};

int rank(const TernaryMatrix& M);

/// Unique reduced row-echelon form: leftmost pivots, pivots scaled to 1,
/// zero rows dropped.
TernaryMatrix rref(const TernaryMatrix& M);

/// Basis of {w : M w^T = 0}, one row per free column of rref(M), ordered by
/// free column index. rank(M) + rows(null_space(M)) == cols(M).
TernaryMatrix null_space(const TernaryMatrix& M);

/// True iff v is a combination of the rows of R, where R is in rref form.
bool in_row_space(const TernaryMatrix& R, TernaryVector v);

}  // namespace tdl

#endif
