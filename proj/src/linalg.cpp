#include "tdl/linalg.hpp"

#include <bit>
#include <stdexcept>

namespace tdl {

namespace {

constexpr std::uint64_t kLoBits = 0x5555555555555555ull;  // low bit of each lane
constexpr std::uint64_t kNibLo = 0x3333333333333333ull;   // even lanes of each nibble
constexpr std::uint64_t kNibOne = 0x1111111111111111ull;

// Lane-wise a + b mod 3. Lanes are split into the even/odd halves of each
// nibble so each 2-bit sum (<= 4) has room; s mod 3 = s - 3*[s >= 3].
inline std::uint64_t word_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (int shift = 0; shift <= 2; shift += 2) {
        std::uint64_t s = ((a >> shift) & kNibLo) + ((b >> shift) & kNibLo);
        std::uint64_t ge3 = ((s + kNibOne) >> 2) & kNibOne;
        s -= (ge3 << 1) + ge3;
        r |= s << shift;
    }
    return r;
}

// Lane-wise negation: swaps 1 <-> 2, i.e. swaps the two bits of each lane.
inline std::uint64_t word_neg(std::uint64_t a) {
    return ((a & kLoBits) << 1) | ((a >> 1) & kLoBits);
}

inline int word_weight(std::uint64_t a) {
    return std::popcount((a | (a >> 1)) & kLoBits);
}

}  // namespace

TernaryVector TernaryVector::from_symbols(std::span<const Trit> symbols) {
    TernaryVector v(static_cast<int>(symbols.size()));
    for (int i = 0; i < v.n_; ++i) v.set(i, symbols[i]);
    return v;
}

void TernaryVector::set(int i, Trit v) {
    std::uint64_t& w = words_[i >> 5];
    int sh = 2 * (i & 31);
    w = (w & ~(3ull << sh)) | (static_cast<std::uint64_t>(v) << sh);
}

int TernaryVector::weight() const {
    int w = 0;
    for (std::uint64_t word : words_) w += word_weight(word);
    return w;
}

std::vector<int> TernaryVector::support() const {
    std::vector<int> s;
    for (int i = 0; i < n_; ++i)
        if (get(i)) s.push_back(i);
    return s;
}

bool TernaryVector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

void TernaryVector::add_in_place(const TernaryVector& other) {
    if (other.n_ != n_) throw std::invalid_argument("linalg: vector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] = word_add(words_[i], other.words_[i]);
}

void TernaryVector::add_scaled(const TernaryVector& other, Trit c) {
    if (c == 0) return;
    if (other.n_ != n_) throw std::invalid_argument("linalg: vector length mismatch");
    if (c == 1) {
        add_in_place(other);
    } else {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = word_add(words_[i], word_neg(other.words_[i]));
    }
}

TernaryVector TernaryVector::negated() const {
    TernaryVector r = *this;
    for (auto& w : r.words_) w = word_neg(w);
    return r;
}

TernaryVector TernaryVector::scaled(Trit c) const {
    if (c == 0) return TernaryVector(n_);
    if (c == 1) return *this;
    return negated();
}

Trit TernaryVector::dot(const TernaryVector& other) const {
    if (other.n_ != n_) throw std::invalid_argument("linalg: vector length mismatch");
    // per-lane products over {0,1,2}: 1*1=1, 1*2=2, 2*2=1 (mod 3)
    int n11 = 0, n12 = 0, n22 = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t a = words_[i], b = other.words_[i];
        std::uint64_t a1 = a & ~(a >> 1) & kLoBits, a2 = (a >> 1) & kLoBits;
        std::uint64_t b1 = b & ~(b >> 1) & kLoBits, b2 = (b >> 1) & kLoBits;
        n11 += std::popcount(a1 & b1);
        n22 += std::popcount(a2 & b2);
        n12 += std::popcount(a1 & b2) + std::popcount(a2 & b1);
    }
    return static_cast<Trit>((n11 + 2 * n12 + n22) % 3);
}

TernaryVector TernaryVector::rotated_right() const {
    TernaryVector r(n_);
    for (int i = 0; i < n_; ++i) r.set((i + 1) % n_, get(i));
    return r;
}

TernaryMatrix::TernaryMatrix(int rows, int cols) : cols_(cols) {
    rows_.assign(rows, TernaryVector(cols));
}

TernaryMatrix TernaryMatrix::from_rows(std::vector<TernaryVector> rows) {
    TernaryMatrix M;
    if (!rows.empty()) M.cols_ = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != M.cols_) throw std::invalid_argument("linalg: ragged rows");
    M.rows_ = std::move(rows);
    return M;
}

void TernaryMatrix::append_row(TernaryVector v) {
    if (rows_.empty()) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("linalg: ragged rows");
    rows_.push_back(std::move(v));
}

namespace {

struct Echelon {
    std::vector<TernaryVector> rows;
    std::vector<int> pivot_cols;
};

Echelon reduce(const TernaryMatrix& M) {
    Echelon e;
    std::vector<TernaryVector> work = M.rows();
    int nr = static_cast<int>(work.size());
    int nc = M.col_count();
    int top = 0;
    for (int c = 0; c < nc && top < nr; ++c) {
        int pivot = -1;
        for (int r = top; r < nr; ++r) {
            if (work[r].get(c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(work[top], work[pivot]);
        if (work[top].get(c) == 2) work[top] = work[top].negated();  // scale pivot to 1
        for (int r = 0; r < nr; ++r) {
            if (r == top) continue;
            Trit f = work[r].get(c);
            if (f) work[r].add_scaled(work[top], trit_neg(f));
        }
        e.pivot_cols.push_back(c);
        ++top;
    }
    e.rows.assign(work.begin(), work.begin() + top);
    return e;
}

}  // namespace

int rank(const TernaryMatrix& M) {
    if (M.row_count() == 0) return 0;
    return static_cast<int>(reduce(M).pivot_cols.size());
}

TernaryMatrix rref(const TernaryMatrix& M) {
    Echelon e = reduce(M);
    TernaryMatrix R = TernaryMatrix::from_rows(std::move(e.rows));
    if (R.row_count() == 0) R = TernaryMatrix(0, M.col_count());
    return R;
}

TernaryMatrix null_space(const TernaryMatrix& M) {
    Echelon e = reduce(M);
    int nc = M.col_count();
    std::vector<bool> is_pivot(nc, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<TernaryVector> basis;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        TernaryVector v(nc);
        v.set(f, 1);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            Trit coeff = e.rows[i].get(f);
            if (coeff) v.set(e.pivot_cols[i], trit_neg(coeff));
        }
        basis.push_back(std::move(v));
    }
    TernaryMatrix N = TernaryMatrix::from_rows(std::move(basis));
    if (N.row_count() == 0) N = TernaryMatrix(0, nc);
    return N;
}

bool in_row_space(const TernaryMatrix& R, TernaryVector v) {
    for (int r = 0; r < R.row_count(); ++r) {
        // pivot column of row r = first nonzero entry
        int c = -1;
        for (int j = 0; j < R.col_count(); ++j) {
            if (R.at(r, j)) {
                c = j;
                break;
            }
        }
        if (c < 0) continue;
        Trit f = v.get(c);
        if (f) v.add_scaled(R.row(r), trit_neg(f));
    }
    return v.is_zero();
}

}  // namespace tdl
