#include "tdl/cyclic.hpp"

#include <numeric>
#include <stdexcept>

namespace tdl {

void validate(const ExponentSet& E, int m) {
    if (E.ks.empty()) throw std::domain_error("cyclic: exponent set must be nonempty");
    for (std::size_t i = 0; i < E.ks.size(); ++i) {
        if (E.ks[i] < 0) throw std::domain_error("cyclic: negative exponent");
        if (i > 0 && E.ks[i] <= E.ks[i - 1])
            throw std::domain_error("cyclic: exponents must be strictly increasing");
    }
    if (2 * E.top() > m) throw std::domain_error("cyclic: exponent above m/2");
}

ExponentSet full_exponent_set(int m) {
    ExponentSet E;
    E.ks.resize(m / 2 + 1);
    std::iota(E.ks.begin(), E.ks.end(), 0);
    return E;
}

int minimal_poly_degree(int m, int k) {
    if (k < 0 || 2 * k > m) throw std::domain_error("cyclic: k outside [0, m/2]");
    const std::uint64_t mod = pow3(m) - 1;
    const std::uint64_t e = (pow3(k) + 1) % mod;
    int d = 1;
    std::uint64_t cur = (e * 3) % mod;
    while (cur != e) {
        cur = (cur * 3) % mod;
        ++d;
        if (d > m) throw inconsistency_error("cyclic: cyclotomic coset size above m");
    }
    const int closed = (2 * k == m) ? m / 2 : m;
    if (d != closed) throw inconsistency_error("cyclic: minimal polynomial degree mismatch");
    return d;
}

int code_dimension(int m, const ExponentSet& E) {
    validate(E, m);
    const int l = static_cast<int>(E.size()) - 1;
    if (2 * E.top() == m) return (2 * l + 1) * m / 2;
    return (l + 1) * m;
}

TernaryCode build_code(const FieldContext& ctx, const ExponentSet& E) {
    const int m = ctx.m();
    if (m < 3) throw std::domain_error("cyclic: build_code needs m >= 3");
    validate(E, m);

    const int n = static_cast<int>(ctx.code_length());
    const std::uint64_t group = ctx.group_order();

    // row(j, b)[i] = Tr(alpha^b * alpha^{(3^{k_j}+1) i})
    std::vector<TernaryVector> rows;
    for (int k : E.ks) {
        const std::uint64_t e = pow3(k) + 1;
        for (int b = 0; b < m; ++b) {
            TernaryVector row(n);
            std::uint64_t idx = static_cast<std::uint64_t>(b) % group;
            const std::uint64_t step = e % group;
            for (int i = 0; i < n; ++i) {
                row.set(i, ctx.trace(ctx.exp(idx)));
                idx += step;
                if (idx >= group) idx -= group;
            }
            rows.push_back(std::move(row));
        }
    }

    // Keep the deterministic independent subset, in row order. For odd m all
    // rows are independent; for even m the k = m/2 block contributes m/2.
    std::vector<TernaryVector> kept;
    TernaryMatrix probe(0, n);
    int r = 0;
    for (auto& row : rows) {
        probe.append_row(row);
        int nr = rank(probe);
        if (nr > r) {
            r = nr;
            kept.push_back(std::move(row));
        }
    }

    const int expected = code_dimension(m, E);
    if (r != expected)
        throw inconsistency_error("cyclic: generator rank " + std::to_string(r) +
                                  " != expected dimension " + std::to_string(expected));

    TernaryCode code;
    code.n = n;
    code.gen = TernaryMatrix::from_rows(std::move(kept));
    code.label = "C(";
    for (std::size_t i = 0; i < E.ks.size(); ++i) {
        if (i) code.label += ",";
        code.label += std::to_string(E.ks[i]);
    }
    code.label += "), m=" + std::to_string(m);
    return code;
}

bool shift_closure_check(const TernaryCode& code) {
    if (code.dim() == 0) return true;
    TernaryMatrix R = rref(code.gen);
    for (int r = 0; r < code.gen.row_count(); ++r) {
        if (!in_row_space(R, code.gen.row(r).rotated_right())) return false;
    }
    return true;
}

}  // namespace tdl
