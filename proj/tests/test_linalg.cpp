#include <doctest.h>

#include <random>

#include "tdl/cyclic.hpp"
#include "tdl/linalg.hpp"

using namespace tdl;

namespace {

TernaryVector random_vector(int n, std::mt19937& rng) {
    TernaryVector v(n);
    for (int i = 0; i < n; ++i) v.set(i, static_cast<Trit>(rng() % 3));
    return v;
}

}  // namespace

TEST_CASE("weight and support") {
    TernaryVector z(5);
    CHECK(z.weight() == 0);
    CHECK(z.support().empty());

    const Trit sym[] = {1, 0, 2, 0, 1};
    auto v = TernaryVector::from_symbols(sym);
    CHECK(v.weight() == 3);
    CHECK(v.support() == std::vector<int>{0, 2, 4});
    CHECK(v.negated().weight() == 3);
}

TEST_CASE("packed kernels against symbol-by-symbol reference") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 200);
        auto a = random_vector(n, rng);
        auto b = random_vector(n, rng);

        int wref = 0;
        for (int i = 0; i < n; ++i)
            if (a.get(i)) ++wref;
        CHECK(a.weight() == wref);

        auto sum = a;
        sum.add_in_place(b);
        int dotref = 0;
        for (int i = 0; i < n; ++i) {
            CHECK(sum.get(i) == trit_add(a.get(i), b.get(i)));
            dotref += a.get(i) * b.get(i);
        }
        CHECK(a.dot(b) == dotref % 3);

        auto neg = a.negated();
        for (int i = 0; i < n; ++i) CHECK(neg.get(i) == trit_neg(a.get(i)));
    }
}

TEST_CASE("dot product bilinearity fuzz") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 120);
        auto u = random_vector(n, rng);
        auto v = random_vector(n, rng);
        auto w = random_vector(n, rng);
        auto uv = u;
        uv.add_in_place(v);
        CHECK(uv.dot(w) == trit_add(u.dot(w), v.dot(w)));
    }
}

TEST_CASE("rank of identity and trivial null space") {
    const int k = 6;
    TernaryMatrix I(k, k);
    for (int i = 0; i < k; ++i) I.set(i, i, 1);
    CHECK(rank(I) == k);
    CHECK(null_space(I).row_count() == 0);
    CHECK(rref(I) == I);
}

TEST_CASE("single all-ones row") {
    TernaryMatrix M(1, 3);
    for (int c = 0; c < 3; ++c) M.set(0, c, 1);
    CHECK(rank(M) == 1);
    auto N = null_space(M);
    CHECK(N.row_count() == 2);
    const Trit target[] = {1, 2, 0};
    CHECK(in_row_space(rref(N), TernaryVector::from_symbols(target)));
}

TEST_CASE("null space pairs with generator dimension") {
    auto ctx = FieldContext::build(3);
    auto code = build_code(ctx, ExponentSet{{0, 1}});
    CHECK(rank(code.gen) == 6);
    auto N = null_space(code.gen);
    CHECK(N.row_count() == 7);  // (3^m-1)/2 - 2m at m=3
    for (int i = 0; i < N.row_count(); ++i)
        for (int r = 0; r < code.gen.row_count(); ++r)
            CHECK(N.row(i).dot(code.gen.row(r)) == 0);
}

TEST_CASE("rank/rref/null space invariants on random matrices") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 12);
        TernaryMatrix M(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) M.set(r, c, static_cast<Trit>(rng() % 3));

        auto R = rref(M);
        CHECK(rank(M) == R.row_count());
        CHECK(rank(R) == R.row_count());
        CHECK(rref(R) == R);

        auto N = null_space(M);
        CHECK(rank(M) + N.row_count() == cols);
        for (int i = 0; i < N.row_count(); ++i)
            for (int r = 0; r < rows; ++r) CHECK(N.row(i).dot(M.row(r)) == 0);
    }
}

TEST_CASE("rotation") {
    const Trit sym[] = {1, 2, 0, 0};
    auto v = TernaryVector::from_symbols(sym);
    auto r = v.rotated_right();
    CHECK(r.get(0) == 0);
    CHECK(r.get(1) == 1);
    CHECK(r.get(2) == 2);
    CHECK(r.get(3) == 0);
}
