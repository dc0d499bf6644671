#include "tdl/quadforms.hpp"

#include <array>
#include <cstring>
#include <random>
#include <stdexcept>
#include <thread>

namespace tdl {

QuadraticForm gram_matrix(const FieldContext& ctx, std::span<const FieldElement> a) {
    const int m = ctx.m();
    if (a.size() != static_cast<std::size_t>(m / 2 + 1))
        throw std::domain_error("quadforms: need floor(m/2)+1 coefficients");

    // B_ij = Tr(sum_t a_t alpha^{i 3^t + j})
    std::vector<int> B(m * m, 0);
    const std::uint64_t group = ctx.group_order();
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] == 0) continue;
        const std::uint64_t la = ctx.log(a[t]);
        const std::uint64_t frob = pow3(static_cast<int>(t)) % group;
        for (int i = 0; i < m; ++i) {
            const std::uint64_t ei = (static_cast<std::uint64_t>(i) * frob) % group;
            for (int j = 0; j < m; ++j) {
                B[i * m + j] += ctx.trace(ctx.exp(la + ei + j));
            }
        }
    }

    QuadraticForm F;
    F.m = m;
    F.s.resize(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            F.s[i * m + j] = static_cast<Trit>(2 * (B[i * m + j] + B[j * m + i]) % 3);
    return F;
}

Trit evaluate(const QuadraticForm& F, std::span<const Trit> x) {
    if (x.size() != static_cast<std::size_t>(F.m))
        throw std::invalid_argument("quadforms: wrong evaluation arity");
    int acc = 0;
    for (int i = 0; i < F.m; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < F.m; ++j) acc += x[i] * x[j] * F.at(i, j);
    }
    return static_cast<Trit>(acc % 3);
}

namespace {

constexpr int kMaxM = 16;

// Symmetric Gaussian congruence on a stack copy; returns the diagonal.
void diagonalize_raw(const Trit* src, int m, Trit* diag) {
    std::array<Trit, kMaxM * kMaxM> S;
    std::memcpy(S.data(), src, static_cast<std::size_t>(m) * m);
    auto at = [&](int i, int j) -> Trit& { return S[i * m + j]; };
    auto add_row_col = [&](int i, int j, Trit f) {
        for (int c = 0; c < m; ++c) at(i, c) = static_cast<Trit>((at(i, c) + f * at(j, c)) % 3);
        for (int r = 0; r < m; ++r) at(r, i) = static_cast<Trit>((at(r, i) + f * at(r, j)) % 3);
    };
    auto swap_rc = [&](int i, int j) {
        for (int c = 0; c < m; ++c) std::swap(at(i, c), at(j, c));
        for (int r = 0; r < m; ++r) std::swap(at(r, i), at(r, j));
    };

    for (int p = 0; p < m; ++p) {
        if (at(p, p) == 0) {
            int r = -1;
            for (int i = p + 1; i < m; ++i)
                if (at(i, i)) {
                    r = i;
                    break;
                }
            if (r >= 0) {
                swap_rc(p, r);
            } else {
                // whole remaining diagonal vanishes; x_i -> x_i + x_j puts
                // 2*S_ij on the diagonal
                int oi = -1, oj = -1;
                for (int i = p; i < m && oi < 0; ++i)
                    for (int j = p; j < m; ++j)
                        if (i != j && at(i, j)) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi < 0) break;  // remaining block is zero
                add_row_col(oi, oj, 1);
                if (oi != p) swap_rc(p, oi);
            }
        }
        const Trit piv = at(p, p);
        const Trit inv = piv;  // 1 and 2 are self-inverse mod 3
        for (int i = p + 1; i < m; ++i) {
            const Trit f = static_cast<Trit>((3 - at(i, p) * inv % 3) % 3);
            if (f) add_row_col(i, p, f);
        }
    }
    for (int i = 0; i < m; ++i) diag[i] = at(i, i);
}

std::uint64_t zero_count_from_diag(const Trit* diag, int m) {
    int s = 0;
    int twos = 0;
    for (int i = 0; i < m; ++i) {
        if (diag[i]) {
            ++s;
            if (diag[i] == 2) ++twos;
        }
    }
    if (s == 0) return pow3(m);
    if (s % 2 == 1) return pow3(m - 1);
    // eta(discriminant) = (-1)^#twos; eta(-1) = -1 over GF(3)
    int sign = ((twos + s / 2) % 2 == 0) ? 1 : -1;
    const std::uint64_t bulk = pow3(m - 1);
    const std::uint64_t dev = 2 * pow3(m - (s + 2) / 2);
    return sign > 0 ? bulk + dev : bulk - dev;
}

inline int rank_from_diag(const Trit* diag, int m) {
    int s = 0;
    for (int i = 0; i < m; ++i)
        if (diag[i]) ++s;
    return s;
}

}  // namespace

std::vector<Trit> diagonalize(const QuadraticForm& F) {
    std::vector<Trit> diag(F.m);
    diagonalize_raw(F.s.data(), F.m, diag.data());
    return diag;
}

int form_rank(const QuadraticForm& F) {
    auto diag = diagonalize(F);
    return rank_from_diag(diag.data(), F.m);
}

std::uint64_t zero_count(const QuadraticForm& F) {
    auto diag = diagonalize(F);
    return zero_count_from_diag(diag.data(), F.m);
}

int predicted_weight(const QuadraticForm& F) {
    const std::uint64_t zeros = zero_count(F);
    const std::uint64_t qm = pow3(F.m);
    if ((qm - zeros) % 2 != 0) throw inconsistency_error("quadforms: odd zero-count defect");
    return static_cast<int>((qm - zeros) / 2);
}

namespace {

struct SweepContext {
    int m = 0;
    int k = 0;  // generator rows = (l+1) m
    std::vector<TernaryVector> rows;
    std::vector<std::vector<Trit>> grams;  // per-row basis Gram matrices
};

SweepContext sweep_context(const FieldContext& ctx, const ExponentSet& E) {
    if (ctx.m() % 2 == 0) throw std::domain_error("quadforms: sweep requires odd m");
    validate(E, ctx.m());
    const int m = ctx.m();
    TernaryCode code = build_code(ctx, E);

    SweepContext sc;
    sc.m = m;
    sc.k = code.dim();
    sc.rows = code.gen.rows();

    const std::size_t alen = static_cast<std::size_t>(m / 2 + 1);
    for (int k : E.ks) {
        for (int b = 0; b < m; ++b) {
            std::vector<FieldElement> a(alen, 0);
            a[k] = ctx.exp(b);  // alpha^b
            sc.grams.push_back(gram_matrix(ctx, a).s);
        }
    }
    return sc;
}

inline void gram_add(std::vector<Trit>& acc, const std::vector<Trit>& inc) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] = static_cast<Trit>((acc[i] + inc[i]) % 3);
}

inline int gray_step_position(std::uint64_t u) {
    int pos = 0;
    while (u % 3 == 2) {
        u /= 3;
        ++pos;
    }
    return pos;
}

void sweep_chunk(const SweepContext& sc, Trit a, Trit b, OracleSweepReport& rep) {
    const int k = sc.k;
    const int m = sc.m;
    TernaryVector cw(sc.rows.front().size());
    std::vector<Trit> gram(m * m, 0);
    cw.add_scaled(sc.rows[k - 1], a);
    cw.add_scaled(sc.rows[k - 2], b);
    for (int rep2 = 0; rep2 < a; ++rep2) gram_add(gram, sc.grams[k - 1]);
    for (int rep2 = 0; rep2 < b; ++rep2) gram_add(gram, sc.grams[k - 2]);

    std::array<Trit, kMaxM> diag;
    auto account = [&]() {
        diagonalize_raw(gram.data(), m, diag.data());
        const int w = cw.weight();
        const std::uint64_t zeros = zero_count_from_diag(diag.data(), m);
        const int pred = static_cast<int>((pow3(m) - zeros) / 2);
        ++rep.checked;
        rep.rank_histogram[rank_from_diag(diag.data(), m)]++;
        rep.weight_histogram[w]++;
        if (pred != w) ++rep.mismatches;
    };

    account();
    const std::uint64_t steps = pow3(k - 2) - 1;
    for (std::uint64_t u = 0; u < steps; ++u) {
        const int pos = gray_step_position(u);
        cw.add_in_place(sc.rows[pos]);
        gram_add(gram, sc.grams[pos]);
        account();
    }
}

}  // namespace

OracleSweepReport oracle_sweep(const FieldContext& ctx, const ExponentSet& E,
                               std::uint64_t sample, int threads) {
    SweepContext sc = sweep_context(ctx, E);
    OracleSweepReport total;

    if (sample > 0) {
        std::mt19937_64 rng(0x5eed5eedull);  // fixed seed: reports are reproducible
        const int m = sc.m;
        std::array<Trit, kMaxM> diag;
        std::vector<Trit> gram(m * m);
        TernaryVector cw(sc.rows.front().size());
        for (std::uint64_t it = 0; it < sample; ++it) {
            cw = TernaryVector(sc.rows.front().size());
            std::fill(gram.begin(), gram.end(), 0);
            for (int r = 0; r < sc.k; ++r) {
                const Trit d = static_cast<Trit>(rng() % 3);
                if (!d) continue;
                cw.add_scaled(sc.rows[r], d);
                for (int rep2 = 0; rep2 < d; ++rep2) gram_add(gram, sc.grams[r]);
            }
            diagonalize_raw(gram.data(), m, diag.data());
            const int w = cw.weight();
            const std::uint64_t zeros = zero_count_from_diag(diag.data(), m);
            ++total.checked;
            total.rank_histogram[rank_from_diag(diag.data(), m)]++;
            total.weight_histogram[w]++;
            if (static_cast<int>((pow3(m) - zeros) / 2) != w) ++total.mismatches;
        }
        return total;
    }

    std::array<OracleSweepReport, 9> parts;
    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::clamp(nthreads, 1, 9);
    std::vector<std::thread> pool;
    for (int tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([&, tid]() {
            for (int c = tid; c < 9; c += nthreads)
                sweep_chunk(sc, static_cast<Trit>(c / 3), static_cast<Trit>(c % 3), parts[c]);
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : parts) {
        total.checked += p.checked;
        total.mismatches += p.mismatches;
        for (const auto& [r, c] : p.rank_histogram) total.rank_histogram[r] += c;
        for (const auto& [w, c] : p.weight_histogram) total.weight_histogram[w] += c;
    }
    return total;
}

}  // namespace tdl
