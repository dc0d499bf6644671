#include "tdl/spectra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

namespace tdl {

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& [w, c] : counts) s += c;
    return s;
}

BigInt WeightDistribution::at(int w) const {
    auto it = counts.find(w);
    return it == counts.end() ? BigInt(0) : it->second;
}

void WeightDistribution::check_valid() const {
    if (total() != big_pow3(dim)) throw inconsistency_error("spectra: counts do not sum to 3^dim");
    if (at(0) != 1) throw inconsistency_error("spectra: zero-weight count must be 1");
    for (const auto& [w, c] : counts) {
        if (w < 0 || w > n) throw inconsistency_error("spectra: weight outside [0, n]");
        if (c < 0) throw inconsistency_error("spectra: negative count");
    }
}

PositionSet PositionSet::of(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) throw std::domain_error("spectra: repeated position");
    PositionSet T;
    T.positions = std::move(idx);
    return T;
}

namespace {

// Number of trailing 2-digits of u in base 3 = the Gray digit that changes
// (by +1 mod 3) between information vectors u and u+1.
inline int gray_step_position(std::uint64_t u) {
    int pos = 0;
    while (u % 3 == 2) {
        u /= 3;
        ++pos;
    }
    return pos;
}

void check_positions(const TernaryCode& code, const PositionSet& T) {
    if (T.size() >= static_cast<std::size_t>(code.n))
        throw std::domain_error("spectra: |T| must be smaller than the length");
    for (int p : T.positions)
        if (p < 0 || p >= code.n) throw std::domain_error("spectra: position out of range");
}

TernaryVector delete_positions(const TernaryVector& v, const std::vector<int>& sorted_T) {
    TernaryVector r(v.size() - static_cast<int>(sorted_T.size()));
    std::size_t t = 0;
    int out = 0;
    for (int i = 0; i < v.size(); ++i) {
        if (t < sorted_T.size() && sorted_T[t] == i) {
            ++t;
            continue;
        }
        r.set(out++, v.get(i));
    }
    return r;
}

// Weight histogram of the subcode { a*row(k-1) + b*row(k-2) + span(rows 0..k-3) }.
std::vector<std::uint64_t> chunk_histogram(const TernaryCode& code, Trit a, Trit b) {
    const int k = code.dim();
    TernaryVector cw(code.n);
    cw.add_scaled(code.gen.row(k - 1), a);
    cw.add_scaled(code.gen.row(k - 2), b);
    std::vector<std::uint64_t> hist(code.n + 1, 0);
    hist[cw.weight()]++;
    const std::uint64_t steps = pow3(k - 2) - 1;
    for (std::uint64_t u = 0; u < steps; ++u) {
        cw.add_in_place(code.gen.row(gray_step_position(u)));
        hist[cw.weight()]++;
    }
    return hist;
}

}  // namespace

WeightDistribution enumerate_distribution(const TernaryCode& code, const EnumerationOptions& opt) {
    const int k = code.dim();
    if (k > opt.budget_dim)
        throw size_error("spectra: dimension " + std::to_string(k) + " exceeds enumeration budget 3^" +
                         std::to_string(opt.budget_dim));

    std::vector<std::uint64_t> hist(code.n + 1, 0);
    if (k <= 2) {
        for_each_codeword(code, [&](const TernaryVector& cw) { hist[cw.weight()]++; });
    } else {
        // 9 deterministic chunks over the two top information digits.
        std::array<std::vector<std::uint64_t>, 9> parts;
        int threads = opt.threads > 0 ? opt.threads
                                      : static_cast<int>(std::thread::hardware_concurrency());
        threads = std::clamp(threads, 1, 9);
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid) {
            pool.emplace_back([&, tid]() {
                for (int c = tid; c < 9; c += threads)
                    parts[c] = chunk_histogram(code, static_cast<Trit>(c / 3),
                                               static_cast<Trit>(c % 3));
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& part : parts)
            for (int w = 0; w <= code.n; ++w) hist[w] += part[w];
    }

    WeightDistribution dist;
    dist.n = code.n;
    dist.dim = k;
    for (int w = 0; w <= code.n; ++w)
        if (hist[w]) dist.counts[w] = BigInt(static_cast<unsigned long>(hist[w]));
    dist.check_valid();
    return dist;
}

void for_each_codeword(const TernaryCode& code,
                       const std::function<void(const TernaryVector&)>& fn) {
    const int k = code.dim();
    if (k > 40) throw size_error("spectra: dimension too large to walk");
    TernaryVector cw(code.n);
    fn(cw);
    const std::uint64_t steps = pow3(k) - 1;
    for (std::uint64_t u = 0; u < steps; ++u) {
        cw.add_in_place(code.gen.row(gray_step_position(u)));
        fn(cw);
    }
}

TernaryCode shorten(const TernaryCode& code, const PositionSet& T) {
    if (T.size() == 0) return code;
    check_positions(code, T);
    const int k = code.dim();

    // Information vectors u with u*G zero on T form the null space of the
    // |T| x k matrix of generator columns at T.
    TernaryMatrix cols(static_cast<int>(T.size()), k);
    for (std::size_t j = 0; j < T.size(); ++j)
        for (int r = 0; r < k; ++r) cols.set(static_cast<int>(j), r, code.gen.at(r, T.positions[j]));
    TernaryMatrix U = null_space(cols);

    std::vector<TernaryVector> rows;
    for (int i = 0; i < U.row_count(); ++i) {
        TernaryVector cw(code.n);
        for (int r = 0; r < k; ++r) cw.add_scaled(code.gen.row(r), U.at(i, r));
        rows.push_back(delete_positions(cw, T.positions));
    }
    TernaryCode out;
    out.n = code.n - static_cast<int>(T.size());
    out.gen = rows.empty() ? TernaryMatrix(0, out.n) : TernaryMatrix::from_rows(std::move(rows));
    out.label = code.label + " shortened on " + std::to_string(T.size()) + " positions";
    return out;
}

TernaryCode puncture(const TernaryCode& code, const PositionSet& T) {
    if (T.size() == 0) return code;
    check_positions(code, T);

    std::vector<TernaryVector> rows;
    TernaryMatrix probe(0, code.n - static_cast<int>(T.size()));
    int r = 0;
    for (int i = 0; i < code.dim(); ++i) {
        TernaryVector row = delete_positions(code.gen.row(i), T.positions);
        probe.append_row(row);
        int nr = rank(probe);
        if (nr > r) {
            r = nr;
            rows.push_back(std::move(row));
        }
    }
    TernaryCode out;
    out.n = code.n - static_cast<int>(T.size());
    out.gen = rows.empty() ? TernaryMatrix(0, out.n) : TernaryMatrix::from_rows(std::move(rows));
    out.label = code.label + " punctured on " + std::to_string(T.size()) + " positions";
    return out;
}

BigInt count_nonzero_on(const TernaryCode& code, const PositionSet& T, int weight,
                        const EnumerationOptions& opt) {
    if (T.size() > 2) throw std::domain_error("spectra: count_nonzero_on supports |T| <= 2");
    check_positions(code, T);
    BigInt result = enumerate_distribution(code, opt).at(weight);
    // A_i(C) - sum_j (-1)^{j-1} C(|T|,j) A_i(C_{0..j-1}), using T-independence
    // of the shortened distributions.
    for (std::size_t j = 1; j <= T.size(); ++j) {
        std::vector<int> head(j);
        for (std::size_t i = 0; i < j; ++i) head[i] = static_cast<int>(i);
        BigInt term = binom(static_cast<long>(T.size()), static_cast<long>(j)) *
                      enumerate_distribution(shorten(code, PositionSet::of(head)), opt).at(weight);
        if (j % 2 == 1)
            result -= term;
        else
            result += term;
    }
    return result;
}

BigInt count_nonzero_on_direct(const TernaryCode& code, const PositionSet& T, int weight,
                               const EnumerationOptions& opt) {
    check_positions(code, T);
    if (code.dim() > opt.budget_dim) throw size_error("spectra: dimension exceeds enumeration budget");
    std::uint64_t count = 0;
    for_each_codeword(code, [&](const TernaryVector& cw) {
        for (int p : T.positions)
            if (cw.get(p) == 0) return;
        if (cw.weight() == weight) ++count;
    });
    return BigInt(static_cast<unsigned long>(count));
}

namespace {

// Krawtchouk polynomial K_k(w) for q = 3, length n.
BigInt krawtchouk(int k, int w, int n) {
    BigInt sum = 0;
    for (int s = 0; s <= k; ++s) {
        BigInt term = binom(w, s) * binom(n - w, k - s);
        if (term == 0) continue;
        BigInt p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(k - s));
        term *= p2;
        if (s % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace

WeightDistribution macwilliams_transform(const WeightDistribution& dist) {
    dist.check_valid();
    const int n = dist.n;
    const BigInt size = big_pow3(dist.dim);
    WeightDistribution dual;
    dual.n = n;
    dual.dim = n - dist.dim;
    for (int k = 0; k <= n; ++k) {
        BigInt sum = 0;
        for (const auto& [w, c] : dist.counts) sum += c * krawtchouk(k, w, n);
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), size.get_mpz_t());
        if (r != 0) throw inconsistency_error("spectra: MacWilliams output not integral at k=" +
                                              std::to_string(k));
        if (q < 0) throw inconsistency_error("spectra: MacWilliams output negative at k=" +
                                             std::to_string(k));
        if (q != 0) dual.counts[k] = q;
    }
    dual.check_valid();
    return dual;
}

BigInt dual_closed_form(int m, int k) {
    if (m < 3 || m % 2 == 0) throw std::domain_error("spectra: closed form needs odd m >= 3");
    const long n = static_cast<long>((pow3(m) - 1) / 2);
    if (k < 0 || k > n) throw std::domain_error("spectra: k outside [0, n]");
    const BigInt qm = big_pow3(m);
    const BigInt h = big_pow3(m - 1);          // 3^{m-1}
    const BigInt g = big_pow3((m - 1) / 2);    // 3^{(m-1)/2}
    const BigInt a = (h + g) * (qm - 1) / 2;
    const BigInt b = (qm - h + 1) * (qm - 1);
    const BigInt c = (h - g) * (qm - 1) / 2;

    auto partial = [&](const BigInt& freq, const BigInt& w, const BigInt& rest_half) {
        // sum_i (-1)^i 2^{k-i} freq C(w, i) C(rest_half, k-i)
        BigInt sum = 0;
        for (int i = 0; i <= k; ++i) {
            BigInt bi, bj, p2;
            mpz_bin_ui(bi.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(i));
            mpz_bin_ui(bj.get_mpz_t(), rest_half.get_mpz_t(), static_cast<unsigned long>(k - i));
            if (bi == 0 || bj == 0) continue;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(k - i));
            BigInt term = freq * bi * bj * p2;
            if (i % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        return sum;
    };

    BigInt total = partial(a, h - g, (h + 2 * g - 1) / 2) + partial(b, h, (h - 1) / 2) +
                   partial(c, h + g, (h - 2 * g - 1) / 2);
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(k));
    total += binom(n, k) * p2;

    const BigInt denom = big_pow3(2 * m);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), denom.get_mpz_t());
    if (r != 0)
        throw inconsistency_error("spectra: closed-form dual count not integral at k=" +
                                  std::to_string(k));
    return q;
}

WeightDistribution pless_solve(int n, int dim, const std::vector<int>& weights,
                               const std::vector<BigInt>& dual_prefix) {
    const int s = static_cast<int>(weights.size());
    if (s < 1 || s > 4) throw std::domain_error("pless: 1 <= s <= 4 required");
    if (dual_prefix.size() + 1 != static_cast<std::size_t>(s))
        throw std::domain_error("pless: need s-1 dual coefficients");
    for (int i = 0; i < s; ++i) {
        if (weights[i] <= 0 || weights[i] > n) throw std::domain_error("pless: weight out of range");
        if (i && weights[i] <= weights[i - 1])
            throw std::domain_error("pless: weights must be strictly increasing");
    }

    // Stirling numbers of the second kind up to t = s-1.
    long stirling[5][5] = {};
    stirling[0][0] = 1;
    for (int t = 1; t <= s - 1; ++t)
        for (int j = 1; j <= t; ++j)
            stirling[t][j] = j * stirling[t - 1][j] + stirling[t - 1][j - 1];

    auto q_pow = [&](int e) {
        return e >= 0 ? mpq_class(big_pow3(e)) : mpq_class(1, big_pow3(-e));
    };

    // Moment right-hand sides: sum_i i^t A_i =
    //   sum_{i=0}^t (-1)^i A^perp_i sum_{j=i}^t j! S(t,j) q^{dim-j} (q-1)^{j-i} C(n-i, n-j)
    std::vector<mpq_class> rhs(s);
    for (int t = 0; t < s; ++t) {
        mpq_class total = 0;
        for (int i = 0; i <= t; ++i) {
            BigInt aperp = (i == 0) ? BigInt(1) : dual_prefix[i - 1];
            if (aperp == 0) continue;
            mpq_class inner = 0;
            BigInt fact = 1;
            for (int j = 0; j <= t; ++j) {
                if (j > 0) fact *= j;
                if (j < i) continue;
                BigInt p2;
                mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(j - i));
                inner += mpq_class(fact * stirling[t][j] * p2 * binom(n - i, n - j)) * q_pow(dim - j);
            }
            mpq_class term = mpq_class(aperp) * inner;
            if (i % 2 == 0)
                total += term;
            else
                total -= term;
        }
        if (t == 0) total -= 1;  // the weight-0 word contributes 0^0 * A_0 = 1
        rhs[t] = total;
    }

    // Solve the s x s system V X = rhs, V[t][j] = w_j^t (Vandermonde).
    std::vector<std::vector<mpq_class>> M(s, std::vector<mpq_class>(s + 1));
    for (int t = 0; t < s; ++t) {
        for (int j = 0; j < s; ++j) {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(weights[j]),
                          static_cast<unsigned long>(t));
            M[t][j] = mpq_class(p);
        }
        M[t][s] = rhs[t];
    }
    for (int col = 0; col < s; ++col) {
        int pivot = -1;
        for (int r = col; r < s; ++r)
            if (M[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("pless: singular moment system");
        std::swap(M[col], M[pivot]);
        mpq_class inv = 1 / M[col][col];
        for (int c = col; c <= s; ++c) M[col][c] *= inv;
        for (int r = 0; r < s; ++r) {
            if (r == col || M[r][col] == 0) continue;
            mpq_class f = M[r][col];
            for (int c = col; c <= s; ++c) M[r][c] -= f * M[col][c];
        }
    }

    WeightDistribution dist;
    dist.n = n;
    dist.dim = dim;
    dist.counts[0] = 1;
    for (int j = 0; j < s; ++j) {
        mpq_class x = M[j][s];
        if (x.get_den() != 1)
            throw inconsistency_error("pless: non-integral frequency at weight " +
                                      std::to_string(weights[j]));
        if (x.get_num() < 0)
            throw inconsistency_error("pless: negative frequency at weight " +
                                      std::to_string(weights[j]));
        if (x.get_num() != 0) dist.counts[weights[j]] = BigInt(x.get_num());
    }
    return dist;
}

WeightDistribution predicted_three_weight(int m) {
    if (m < 3 || m % 2 == 0) throw std::domain_error("spectra: table applies to odd m >= 3");
    const long h = static_cast<long>(pow3(m - 1));
    const long g = static_cast<long>(pow3((m - 1) / 2));
    const BigInt qm1 = big_pow3(m) - 1;
    WeightDistribution d;
    d.n = static_cast<int>((pow3(m) - 1) / 2);
    d.dim = 2 * m;
    d.counts[0] = 1;
    d.counts[static_cast<int>(h - g)] = (h + g) * qm1 / 2;
    d.counts[static_cast<int>(h)] = (2 * h + 1) * qm1;
    d.counts[static_cast<int>(h + g)] = (h - g) * qm1 / 2;
    d.check_valid();
    return d;
}

WeightDistribution predicted_shortened(int m, int t) {
    if (m < 3 || m % 2 == 0) throw std::domain_error("spectra: table applies to odd m >= 3");
    if (t != 1 && t != 2) throw std::domain_error("spectra: t must be 1 or 2");
    const BigInt h = big_pow3(m - 1);
    const BigInt g = big_pow3((m - 1) / 2);
    WeightDistribution d;
    d.n = static_cast<int>((pow3(m) - 1) / 2) - t;
    d.dim = 2 * m - t;
    d.counts[0] = 1;
    const int w1 = static_cast<int>(mpz_get_ui(BigInt(h - g).get_mpz_t()));
    const int w2 = w1 + static_cast<int>(mpz_get_ui(g.get_mpz_t()));
    const int w3 = w2 + static_cast<int>(mpz_get_ui(g.get_mpz_t()));
    if (t == 1) {
        d.counts[w1] = (h + 2 * g - 1) * (h + g) / 2;
        d.counts[w2] = (2 * h + 1) * (h - 1);
        d.counts[w3] = (h - 2 * g - 1) * (h - g) / 2;
    } else {
        d.counts[w1] = (h + 2 * g - 1) * (h + 3 * g) / 6;
        d.counts[w2] = (2 * h + 1) * (h / 3 - 1);
        BigInt c3 = (h - 2 * g - 1) * (h - 3 * g) / 6;
        if (c3 != 0) d.counts[w3] = c3;
    }
    d.check_valid();
    return d;
}

WeightDistribution predicted_punctured(int m, int t) {
    if (m < 3 || m % 2 == 0) throw std::domain_error("spectra: table applies to odd m >= 3");
    if (t != 1 && t != 2) throw std::domain_error("spectra: t must be 1 or 2");
    const BigInt h = big_pow3(m - 1);
    const BigInt g = big_pow3((m - 1) / 2);
    WeightDistribution d;
    d.n = static_cast<int>((pow3(m) - 1) / 2) - t;
    d.dim = 2 * m;
    d.counts[0] = 1;
    const int w1 = static_cast<int>(mpz_get_ui(BigInt(h - g).get_mpz_t()));
    const int w2 = w1 + static_cast<int>(mpz_get_ui(g.get_mpz_t()));
    const int w3 = w2 + static_cast<int>(mpz_get_ui(g.get_mpz_t()));
    auto put = [&d](int w, BigInt v) {
        if (v != 0) d.counts[w] = std::move(v);
    };
    if (t == 1) {
        put(w1 - 1, h * (h - 1));
        put(w1, (h + 2 * g - 1) * (h + g) / 2);
        put(w2 - 1, 2 * h * (2 * h + 1));
        put(w2, (2 * h + 1) * (h - 1));
        put(w3 - 1, h * (h - 1));
        put(w3, (h - 2 * g - 1) * (h - g) / 2);
    } else {
        const BigInt e = 2 * h / 3;  // 2*3^{m-2}
        put(w1 - 2, e * (h - g - 1));
        put(w1 - 1, e * (h + 2 * g - 1));
        put(w1, (h + 2 * g - 1) * (h + 3 * g) / 6);
        put(w2 - 2, 2 * e * (2 * h + 1));
        put(w2 - 1, 2 * e * (2 * h + 1));
        put(w2, (2 * h + 1) * (h / 3 - 1));
        put(w3 - 2, e * (h + g - 1));
        put(w3 - 1, e * (h - 2 * g - 1));
        put(w3, (h - 2 * g - 1) * (h - 3 * g) / 6);
    }
    d.check_valid();
    return d;
}

}  // namespace tdl
