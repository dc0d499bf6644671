#include "tdl/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdl {

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

BigInt big_pow3(int e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
    return r;
}

BigInt binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

using Poly = std::vector<Trit>;  // residue mod the candidate, length m

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int m) {
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < m; ++j) prod[i + j] += a[i] * b[j];
    }
    for (int i = 2 * m - 2; i >= m; --i) {
        int c = prod[i] % 3;
        if (!c) continue;
        prod[i] = 0;
        // x^m = -mod[0] - mod[1] x - ... (mod is monic)
        for (int j = 0; j < m; ++j) prod[i - m + j] += c * (3 - mod[j]);
    }
    Poly r(m);
    for (int i = 0; i < m; ++i) r[i] = static_cast<Trit>(prod[i] % 3);
    return r;
}

Poly poly_pow(Poly base, std::uint64_t e, const Poly& mod, int m) {
    Poly r(m, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, m);
        base = poly_mul_mod(base, base, mod, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

bool is_one(const Poly& p) {
    if (p[0] != 1) return false;
    return std::all_of(p.begin() + 1, p.end(), [](Trit t) { return t == 0; });
}

// The residue of x has order 3^m - 1 iff the candidate is primitive: a
// reducible candidate caps the unit-group order strictly below 3^m - 1.
bool x_has_full_order(const Poly& mod, int m, std::uint64_t group_order,
                      const std::vector<std::uint64_t>& primes) {
    Poly x(m, 0);
    if (m == 1) {
        // residue of x is -mod[0]; full order means it equals 2
        return trit_neg(mod[0]) == 2;
    }
    x[1] = 1;
    if (!is_one(poly_pow(x, group_order, mod, m))) return false;
    for (auto p : primes) {
        if (is_one(poly_pow(x, group_order / p, mod, m))) return false;
    }
    return true;
}

}  // namespace

FieldContext FieldContext::build(int m) {
    if (m < 1 || m > 16) throw size_error("field: extension degree must be in [1, 16]");

    FieldContext ctx;
    ctx.m_ = m;
    ctx.q_ = static_cast<std::uint32_t>(pow3(m));
    ctx.p3_.resize(m + 1);
    for (int i = 0; i <= m; ++i) ctx.p3_[i] = static_cast<std::uint32_t>(pow3(i));

    const std::uint64_t group_order = ctx.q_ - 1;
    const auto primes = prime_factors(group_order);

    // Scan monic candidates x^m + c_{m-1} x^{m-1} + ... + c_0 in lexicographic
    // order of (c_0, ..., c_{m-1}), c_0 compared first. c_0 = 0 is never
    // primitive, so start at 1.
    Poly mod(m, 0);
    bool found = false;
    std::uint64_t total = pow3(m);
    for (std::uint64_t t = 0; t < total && !found; ++t) {
        std::uint64_t v = t;
        for (int i = m - 1; i >= 0; --i) {
            mod[i] = static_cast<Trit>(v % 3);
            v /= 3;
        }
        if (mod[0] == 0) continue;
        if (x_has_full_order(mod, m, group_order, primes)) found = true;
    }
    if (!found) throw inconsistency_error("field: no primitive polynomial found");

    ctx.modulus_.assign(mod.begin(), mod.end());
    ctx.modulus_.push_back(1);

    // alpha = residue of x
    Poly cur(m, 0);
    Poly x(m, 0);
    if (m == 1) {
        x[0] = trit_neg(mod[0]);
    } else {
        x[1] = 1;
    }
    cur[0] = 1;

    ctx.exp_.resize(group_order);
    ctx.log_.assign(ctx.q_, 0);
    for (std::uint64_t i = 0; i < group_order; ++i) {
        FieldElement code = 0;
        for (int j = 0; j < m; ++j) code += cur[j] * ctx.p3_[j];
        ctx.exp_[i] = code;
        ctx.log_[code] = static_cast<std::uint32_t>(i);
        cur = poly_mul_mod(cur, x, mod, m);
    }
    if (!is_one(cur)) throw inconsistency_error("field: exp table does not close");
    ctx.alpha_ = ctx.exp_[1];

    // trace(alpha^i) by summing the Frobenius orbit
    ctx.trace_basis_.resize(m);
    for (int i = 0; i < m; ++i) {
        FieldElement acc = 0;
        for (int j = 0; j < m; ++j) {
            std::uint64_t e = (static_cast<std::uint64_t>(i) * pow3(j)) % group_order;
            acc = ctx.add(acc, ctx.exp_[e]);
        }
        for (int j = 1; j < m; ++j) {
            if (ctx.coeff(acc, j) != 0)
                throw inconsistency_error("field: trace of basis element not in GF(3)");
        }
        ctx.trace_basis_[i] = ctx.coeff(acc, 0);
    }
    return ctx;
}

std::uint32_t FieldContext::log(FieldElement x) const {
    if (x == 0) throw std::domain_error("field: log of zero");
    return log_[x];
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
    FieldElement r = 0;
    for (int i = 0; i < m_; ++i) {
        Trit s = trit_add(static_cast<Trit>((a / p3_[i]) % 3), static_cast<Trit>((b / p3_[i]) % 3));
        r += s * p3_[i];
    }
    return r;
}

FieldElement FieldContext::neg(FieldElement a) const {
    FieldElement r = 0;
    for (int i = 0; i < m_; ++i) {
        r += trit_neg(static_cast<Trit>((a / p3_[i]) % 3)) * p3_[i];
    }
    return r;
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

FieldElement FieldContext::inv(FieldElement a) const {
    if (a == 0) throw std::domain_error("field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
}

Trit FieldContext::trace(FieldElement x) const {
    int acc = 0;
    for (int i = 0; i < m_; ++i) {
        acc += static_cast<int>((x / p3_[i]) % 3) * trace_basis_[i];
    }
    return static_cast<Trit>(acc % 3);
}

std::vector<Trit> FieldContext::coeffs(FieldElement x) const {
    std::vector<Trit> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = static_cast<Trit>((x / p3_[i]) % 3);
    return c;
}

}  // namespace tdl
