// Acceptance suite: runs every committed end-to-end criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exact integer
// equality everywhere; the only tolerances are wall-clock budgets.
//
// Exit code 0 iff every criterion passes. A FAIL line carries the measured
// values so a regression (or an upstream formula defect) is visible directly
// in the log.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "tdl/designs.hpp"
#include "tdl/quadforms.hpp"
#include "tdl/serialize.hpp"

using namespace tdl;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(Clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }

    void require_budget(double limit_seconds) {
        budget_ = limit_seconds;
        has_budget_ = true;
    }

    void note(const std::string& line) { notes_.push_back(line); }

    ~Criterion() {
        double secs = std::chrono::duration<double>(Clock::now() - start_).count();
        if (has_budget_ && secs > budget_) {
            std::ostringstream os;
            os << "runtime " << secs << "s exceeds budget " << budget_ << "s";
            problems_.push_back(os.str());
        }
        const bool pass = problems_.empty();
        if (!pass) ++g_failures;
        std::printf("criterion %2d: %s - %s (%.1fs)\n", number_, pass ? "PASS" : "FAIL",
                    title_.c_str(), secs);
        for (const auto& n : notes_) std::printf("    note: %s\n", n.c_str());
        for (const auto& p : problems_) std::printf("    FAILED check: %s\n", p.c_str());
        std::fflush(stdout);
    }

private:
    int number_;
    std::string title_;
    Clock::time_point start_;
    std::vector<std::string> problems_;
    std::vector<std::string> notes_;
    double budget_ = 0;
    bool has_budget_ = false;
};

WeightDistribution golden(std::initializer_list<std::pair<int, long>> entries, int n, int dim) {
    WeightDistribution d;
    d.n = n;
    d.dim = dim;
    for (auto [w, c] : entries) d.counts[w] = c;
    return d;
}

void criterion_1() {
    Criterion c(1, "three-weight spectrum of the [121,10] code, single-threaded");
    c.require_budget(5.0);
    auto ctx = FieldContext::build(5);
    auto code = build_code(ctx, ExponentSet{{0, 1}});
    EnumerationOptions single;
    single.threads = 1;
    auto dist = enumerate_distribution(code, single);
    auto expect = golden({{0, 1}, {72, 10890}, {81, 39446}, {90, 8712}}, 121, 10);
    c.require(dist == expect, "enumerated distribution != {72:10890, 81:39446, 90:8712}");
    c.require(dist == predicted_three_weight(5), "closed form disagrees with enumeration");
    c.require(dist.total() == big_pow3(10), "counts do not sum to 3^10");
}

void criterion_2() {
    Criterion c(2, "shortened/punctured spectra by enumeration and closed form");
    c.require_budget(30.0);
    auto ctx = FieldContext::build(5);
    auto code = build_code(ctx, ExponentSet{{0, 1}});

    struct Case {
        bool shortened;
        std::vector<int> T;
        WeightDistribution expect;
    };
    const std::vector<Case> cases = {
        {true, {0}, golden({{0, 1}, {72, 4410}, {81, 13040}, {90, 2232}}, 120, 9)},
        {true, {0, 1}, golden({{0, 1}, {72, 1764}, {81, 4238}, {90, 558}}, 119, 8)},
        {false,
         {0},
         golden({{0, 1}, {71, 6480}, {72, 4410}, {80, 26406}, {81, 13040}, {89, 6480}, {90, 2232}},
                120, 10)},
        {false,
         {0, 1},
         golden({{0, 1},
                 {70, 3834},
                 {71, 5292},
                 {72, 1764},
                 {79, 17604},
                 {80, 17604},
                 {81, 4238},
                 {88, 4806},
                 {89, 3348},
                 {90, 558}},
                119, 10)},
    };
    for (const auto& cs : cases) {
        auto T = PositionSet::of(cs.T);
        auto derived = cs.shortened ? shorten(code, T) : puncture(code, T);
        auto dist = enumerate_distribution(derived);
        auto table = cs.shortened ? predicted_shortened(5, static_cast<int>(cs.T.size()))
                                  : predicted_punctured(5, static_cast<int>(cs.T.size()));
        std::string name = (cs.shortened ? "shortened t=" : "punctured t=") +
                           std::to_string(cs.T.size());
        c.require(dist == cs.expect, name + ": enumeration != frozen enumerator");
        c.require(table == cs.expect, name + ": closed form != frozen enumerator");
    }
}

void criterion_3() {
    Criterion c(3, "shortened spectra are position-independent");
    auto ctx3 = FieldContext::build(3);
    auto code3 = build_code(ctx3, ExponentSet{{0, 1}});
    auto ref1 = enumerate_distribution(shorten(code3, PositionSet::of({0})));
    auto ref2 = enumerate_distribution(shorten(code3, PositionSet::of({0, 1})));
    bool all3 = true;
    for (int t = 0; t < 13; ++t)
        all3 = all3 && enumerate_distribution(shorten(code3, PositionSet::of({t}))) == ref1;
    for (int t1 = 0; t1 < 13; ++t1)
        for (int t2 = t1 + 1; t2 < 13; ++t2)
            all3 = all3 &&
                   enumerate_distribution(shorten(code3, PositionSet::of({t1, t2}))) == ref2;
    c.require(all3, "m=3 exhaustive singleton/pair sweep found a deviating distribution");

    auto ctx5 = FieldContext::build(5);
    auto code5 = build_code(ctx5, ExponentSet{{0, 1}});
    auto ref51 = predicted_shortened(5, 1);
    auto ref52 = predicted_shortened(5, 2);
    std::mt19937 rng(20240809);
    bool all5 = true;
    for (int trial = 0; trial < 100; ++trial) {
        int t = static_cast<int>(rng() % 121);
        all5 = all5 && enumerate_distribution(shorten(code5, PositionSet::of({t}))) == ref51;
        int a = static_cast<int>(rng() % 121);
        int b = static_cast<int>(rng() % 121);
        if (a == b) b = (b + 1) % 121;
        all5 = all5 && enumerate_distribution(shorten(code5, PositionSet::of({a, b}))) == ref52;
    }
    c.require(all5, "m=5 random singleton/pair sample found a deviating distribution");
}

void steiner_checks(Criterion& c, int m, std::uint64_t expected_blocks) {
    auto ctx = FieldContext::build(m);
    auto lines = pg_lines(ctx);
    const std::string tag = "m=" + std::to_string(m) + ": ";
    c.require(lines.blocks.size() == expected_blocks,
              tag + "line count != " + std::to_string(expected_blocks));
    c.require(steiner_blocks_squares(ctx) == lines, tag + "square-set construction differs");
    auto check = verify_2_design(lines);
    c.require(check.is_design && check.lambda == 1, tag + "pair coverage is not uniformly 1");

    auto code = build_code(ctx, ExponentSet{{0, 1}});
    bool ortho = true;
    for (const auto& block : lines.blocks) {
        TernaryVector chi(code.n);
        for (int p : block) chi.set(p, 1);
        for (int r = 0; r < code.dim() && ortho; ++r) {
            if (chi.dot(code.gen.row(r)) != 0) ortho = false;
            if (chi.negated().dot(code.gen.row(r)) != 0) ortho = false;
        }
        if (!ortho) break;
    }
    c.require(ortho, tag + "a block characteristic vector is not orthogonal to the generator");
}

void criterion_4() {
    Criterion c(4, "Steiner systems from lines and from squares, desk scale");
    c.require_budget(10.0);
    steiner_checks(c, 3, 13);
    steiner_checks(c, 5, 1210);
}

void criterion_5() {
    Criterion c(5, "three 2-designs from the [121,10] code by pair counting");
    c.require_budget(60.0);
    auto ctx = FieldContext::build(5);
    auto code = build_code(ctx, ExponentSet{{0, 1}});
    auto d = enumerate_distribution(code);
    auto d1 = enumerate_distribution(shorten(code, PositionSet::of({0})));
    auto d2 = enumerate_distribution(shorten(code, PositionSet::of({0, 1})));

    const std::uint64_t expected[3][2] = {{72, 1917}, {81, 8802}, {90, 2403}};
    for (auto [w, lambda] : expected) {
        const int wi = static_cast<int>(w);
        auto sup = supports_of_weight(code, wi);
        auto check = verify_2_design(sup.blocks);
        std::string tag = "w=" + std::to_string(wi) + ": ";
        c.require(check.is_design, tag + "supports are not a 2-design");
        c.require(check.lambda == lambda,
                  tag + "lambda " + std::to_string(check.lambda) + " != " + std::to_string(lambda));
        c.require(lambda_primal_closed_form(5, wi) == BigInt(lambda), tag + "closed form differs");
        c.require(lambda_primal(5, wi, d.at(wi), d1.at(wi), d2.at(wi)) == BigInt(lambda),
                  tag + "shortening formula differs");
    }
}

void criterion_6() {
    Criterion c(6, "dual spectra: transform, closed form, and direct enumeration");
    for (int m : {3, 5}) {
        auto ctx = FieldContext::build(m);
        auto code = build_code(ctx, ExponentSet{{0, 1}});
        auto dual = macwilliams_transform(enumerate_distribution(code));
        bool all = true;
        int bad_k = -1;
        for (int k = 0; k <= code.n; ++k) {
            if (dual.at(k) != dual_closed_form(m, k)) {
                all = false;
                bad_k = k;
                break;
            }
        }
        c.require(all, "m=" + std::to_string(m) + ": closed form != transform at k=" +
                           std::to_string(bad_k));
        if (m == 3) {
            auto direct = enumerate_distribution(TernaryCode{13, null_space(code.gen), "dual"});
            c.require(dual == direct, "m=3: transform != direct dual enumeration");
        }
    }
}

void criterion_7() {
    Criterion c(7, "dual 2-designs at desk scale against the tabulated parameters");
    auto ctx = FieldContext::build(3);
    auto code = build_code(ctx, ExponentSet{{0, 1}});
    TernaryCode dual{13, null_space(code.gen), "dual"};
    auto dist = enumerate_distribution(dual);
    c.require(dist.at(5) == 0, "m=3: A_5 of the dual is nonzero");

    // m=3: weight-4/6/7 supports must be 2-designs with the tabulated
    // lambdas 1/15/28
    const std::uint64_t tabulated[3][2] = {{4, 1}, {6, 15}, {7, 28}};
    for (auto [w, lambda] : tabulated) {
        auto sup = supports_of_weight(dual, static_cast<int>(w));
        auto check = verify_2_design(sup.blocks);
        std::string tag = "m=3 w=" + std::to_string(w) + ": ";
        c.require(check.is_design, tag + "supports are not a 2-design");
        if (check.is_design && check.lambda != lambda) {
            c.require(false, tag + "enumerated lambda " + std::to_string(check.lambda) +
                                 " != tabulated " + std::to_string(lambda) +
                                 " (tabulated k=7 row is off by a factor of 3)");
        }
    }

    // m=5: MacWilliams counts vs tabulated-lambda-derived counts, k = 4..7,
    // with the k=4 count corrected to A/24; the printed A/8 must fail.
    auto ctx5 = FieldContext::build(5);
    auto dual5 =
        macwilliams_transform(enumerate_distribution(build_code(ctx5, ExponentSet{{0, 1}})));
    const BigInt a = (big_pow3(5) - 1) * (big_pow3(5) - 3);
    c.require(dual5.at(4) == a / 24, "m=5: A_4 != A/24");
    c.require(dual5.at(4) != a / 8,
              "m=5: A_4 equals the printed A/8, which should have failed the cross-check");
    for (int k = 4; k <= 7; ++k) {
        auto rec = dual_count_check(5, k);
        if (dual5.at(k) != rec.count_from_lambda) {
            std::ostringstream os;
            os << "m=5 k=" << k << ": MacWilliams count " << dual5.at(k).get_str()
               << " != tabulated-lambda count " << rec.count_from_lambda.get_str();
            if (dual5.at(k) == 3 * rec.count_from_lambda)
                os << " (exactly 3x: the tabulated lambda_7 formula drops a factor of 3)";
            c.require(false, os.str());
        }
    }
    c.note("the tabulated lambda_7 fails reconciliation at m=3 and m=5; "
           "enumeration and the MacWilliams/closed-form route agree with each other "
           "and give exactly 3x the tabulated value");
}

void criterion_8() {
    Criterion c(8, "trace code = even-like first-order projective RM code");
    for (int m : {3, 5}) {
        auto ctx = FieldContext::build(m);
        auto trace_code = build_code(ctx, full_exponent_set(m));
        auto star = prm_star(1, ctx);
        const int dim = m * (m + 1) / 2;
        std::string tag = "m=" + std::to_string(m) + ": ";
        c.require(trace_code.dim() == dim && star.dim() == dim, tag + "dimension != m(m+1)/2");
        c.require(rref(trace_code.gen) == rref(star.gen), tag + "row spaces differ");
        long long n = static_cast<long long>(ctx.code_length());
        c.require(pd_code_dimension(2, m) == n - dim, tag + "flat-code dimension formula broke");
    }
}

void criterion_9() {
    Criterion c(9, "quadratic-form weight oracle over all 3^15 codewords");
    c.require_budget(600.0);
    auto ctx = FieldContext::build(5);
    auto rep = oracle_sweep(ctx, full_exponent_set(5));
    c.require(rep.checked == 14348907, "sweep did not visit 3^15 codewords");
    c.require(rep.mismatches == 0,
              std::to_string(rep.mismatches) + " predicted weights disagreed with enumeration");
    // independently-derived spectrum of the [121,15,54] code
    const std::pair<int, std::uint64_t> expect[] = {
        {0, 1}, {54, 14520}, {72, 2548260}, {81, 9740258}, {90, 2038608}, {108, 7260}};
    for (auto [w, cnt] : expect) {
        auto it = rep.weight_histogram.find(w);
        c.require(it != rep.weight_histogram.end() && it->second == cnt,
                  "weight " + std::to_string(w) + " count deviates from the frozen spectrum");
    }
    c.require(rep.weight_histogram.size() == 6, "unexpected weights appeared in the sweep");
}

void criterion_10() {
    Criterion c(10, "power-moment solver reproduces the shortened spectra");
    auto s1 = pless_solve(120, 9, {72, 81, 90}, {BigInt(0), BigInt(0)});
    c.require(s1.at(72) == 4410 && s1.at(81) == 13040 && s1.at(90) == 2232,
              "system with A1=A2=0 did not give (4410, 13040, 2232)");
    auto s2 = pless_solve(119, 8, {72, 81, 90}, {BigInt(0), BigInt(2)});
    c.require(s2.at(72) == 1764 && s2.at(81) == 4238 && s2.at(90) == 558,
              "system with A1=0, A2=2 did not give (1764, 4238, 558)");
}

void criterion_11() {
    Criterion c(11, "declared non-reproducible items and the m=7 stretch run");
    c.require_budget(900.0);
    c.note("not machine-checked here (declared): the general-m claims as universally "
           "quantified statements; the m=5 dual design property for k in {5,6,7} (dual "
           "dimension 111 prevents enumeration); code-equivalence and automorphism "
           "observations");
    c.note("substituted by the m=3 brute-force analogues, exact m=5 count identities, "
           "and this m=7 stretch run");

    auto ctx = FieldContext::build(7);
    auto code = build_code(ctx, ExponentSet{{0, 1}});
    auto dist = enumerate_distribution(code);
    c.require(dist == predicted_three_weight(7), "m=7: enumerated spectrum != closed form");

    auto lines = pg_lines(ctx);
    c.require(lines.blocks.size() == 99463, "m=7: line count != 99463");
    c.require(steiner_blocks_squares(ctx) == lines, "m=7: square-set construction differs");
    auto check = verify_2_design(lines);
    c.require(check.is_design && check.lambda == 1, "m=7: pair coverage is not uniformly 1");
    bool ortho = true;
    for (const auto& block : lines.blocks) {
        TernaryVector chi(code.n);
        for (int p : block) chi.set(p, 1);
        for (int r = 0; r < code.dim() && ortho; ++r)
            if (chi.dot(code.gen.row(r)) != 0) ortho = false;
        if (!ortho) break;
    }
    c.require(ortho, "m=7: block characteristic vectors not orthogonal to the generator");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
