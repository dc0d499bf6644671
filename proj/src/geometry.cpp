#include "tdl/geometry.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace tdl {

ProjectivePointSet::ProjectivePointSet(const FieldContext& ctx)
    : ctx_(&ctx), n_(static_cast<int>(ctx.code_length())) {
    if (ctx.m() < 2) throw std::domain_error("geometry: PG needs m >= 2");
}

FieldElement ProjectivePointSet::canonical_rep(FieldElement x) const {
    if (x == 0) throw std::domain_error("geometry: zero vector has no point");
    for (int i = 0; i < ctx_->m(); ++i) {
        Trit c = ctx_->coeff(x, i);
        if (c == 0) continue;
        return c == 1 ? x : ctx_->neg(x);
    }
    return x;
}

namespace {

BlockSet blocks_from_set(int v, const std::set<std::array<int, 4>>& raw) {
    BlockSet out;
    out.v = v;
    out.blocks.reserve(raw.size());
    for (const auto& b : raw) out.blocks.push_back({b[0], b[1], b[2], b[3]});
    return out;  // std::set iteration is already lexicographic
}

}  // namespace

BlockSet pg_lines(const FieldContext& ctx) {
    ProjectivePointSet pts(ctx);
    const int n = pts.count();
    std::set<std::array<int, 4>> raw;
    for (int i = 0; i < n; ++i) {
        const FieldElement u = pts.element(i);
        for (int j = i + 1; j < n; ++j) {
            const FieldElement v = pts.element(j);
            std::array<int, 4> b{i, j, pts.index_of(ctx.add(u, v)), pts.index_of(ctx.sub(u, v))};
            std::sort(b.begin(), b.end());
            raw.insert(b);
        }
    }
    return blocks_from_set(n, raw);
}

BlockSet steiner_blocks_squares(const FieldContext& ctx) {
    if (ctx.m() < 2) throw std::domain_error("geometry: needs m >= 2");
    const int n = static_cast<int>(ctx.code_length());
    const std::uint32_t group = ctx.group_order();

    // square alpha^{2i} -> point i; log of a square is even
    auto square_index = [&](FieldElement s) {
        return static_cast<int>((ctx.log(s) / 2) % static_cast<std::uint32_t>(n));
    };

    std::set<std::array<int, 4>> raw;
    for (std::uint32_t ea = 0; ea < group; ++ea) {
        const FieldElement a = ctx.exp(ea);
        const FieldElement na = ctx.neg(a);
        for (std::uint32_t eb = 0; eb < group; ++eb) {
            const FieldElement b = ctx.exp(eb);
            if (b == a || b == na) continue;  // (a-b)^2 or (a+b)^2 would vanish
            const FieldElement apb = ctx.add(a, b);
            const FieldElement amb = ctx.sub(a, b);
            std::array<int, 4> blk{square_index(ctx.mul(a, a)), square_index(ctx.mul(b, b)),
                                   square_index(ctx.mul(apb, apb)), square_index(ctx.mul(amb, amb))};
            std::sort(blk.begin(), blk.end());
            raw.insert(blk);
        }
    }
    return blocks_from_set(n, raw);
}

namespace {

// Exponent vectors (i_0..i_{m-1}), entries <= 2, even total degree in (0, 2r],
// in lexicographic order. Evaluations are taken verbatim; dependent rows are
// dropped by rank reduction afterwards.
std::vector<std::vector<int>> even_monomials(int r, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(m, 0);
    while (true) {
        int deg = 0;
        for (int v : e) deg += v;
        if (deg > 0 && deg <= 2 * r && deg % 2 == 0) out.push_back(e);
        int i = m - 1;
        while (i >= 0 && e[i] == 2) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    return out;
}

TernaryCode evaluation_code(const FieldContext& ctx, int r, bool with_constant,
                            const std::string& label) {
    if (r < 0 || r > ctx.m() - 1) throw std::domain_error("geometry: r outside [0, m-1]");
    ProjectivePointSet pts(ctx);
    const int n = pts.count();
    const int m = ctx.m();

    std::vector<TernaryVector> rows;
    if (with_constant) {
        TernaryVector ones(n);
        for (int i = 0; i < n; ++i) ones.set(i, 1);
        rows.push_back(std::move(ones));
    }
    for (const auto& e : even_monomials(r, m)) {
        TernaryVector row(n);
        for (int i = 0; i < n; ++i) {
            int val = 1;
            const FieldElement x = pts.element(i);
            for (int j = 0; j < m && val; ++j) {
                for (int rep = 0; rep < e[j]; ++rep) val = (val * ctx.coeff(x, j)) % 3;
            }
            row.set(i, static_cast<Trit>(val));
        }
        rows.push_back(std::move(row));
    }

    std::vector<TernaryVector> kept;
    TernaryMatrix probe(0, n);
    int rk = 0;
    for (auto& row : rows) {
        probe.append_row(row);
        int nr = rank(probe);
        if (nr > rk) {
            rk = nr;
            kept.push_back(std::move(row));
        }
    }
    TernaryCode code;
    code.n = n;
    code.gen = kept.empty() ? TernaryMatrix(0, n) : TernaryMatrix::from_rows(std::move(kept));
    code.label = label + ", m=" + std::to_string(m);
    return code;
}

}  // namespace

TernaryCode prm_star(int r, const FieldContext& ctx) {
    return evaluation_code(ctx, r, false, "PRM*(" + std::to_string(r) + ")");
}

TernaryCode prm(int r, const FieldContext& ctx) {
    return evaluation_code(ctx, r, true, "PRM(" + std::to_string(r) + ")");
}

long long pd_code_dimension(int r, int m, int p) {
    if (r < 2 || r > m) throw std::domain_error("geometry: r outside [2, m]");
    BigInt n;
    mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
    BigInt total = (n - 1) / (p - 1);
    for (int i = 0; i <= r - 2; ++i) {
        BigInt term = binom((r - 1 - i) * (p - 1) - 1, i) *
                      binom(m - r + (r - 1 - i) * p, m - 1 - i);
        if (i % 2 == 0)
            total -= term;
        else
            total += term;
    }
    if (!total.fits_slong_p()) throw size_error("geometry: dimension out of range");
    return static_cast<long long>(total.get_si());
}

}  // namespace tdl
