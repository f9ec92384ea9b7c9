// Acceptance suite: one pass/fail line per criterion, each with its runtime
// budget. Exits nonzero if any gated criterion fails; the k>=7 stretch items
// report without gating.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qperm/classical.hpp"
#include "qperm/errors.hpp"
#include "qperm/laws.hpp"
#include "qperm/matrix.hpp"
#include "qperm/partition.hpp"
#include "qperm/rational.hpp"
#include "qperm/reference_tables.hpp"
#include "qperm/weingarten.hpp"

using namespace qperm;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool criterion_catalan_sizes() {
    const std::vector<std::size_t> expected = {1, 2, 5, 14, 42, 132, 429};
    for (int k = 1; k <= 7; ++k) {
        if (PartitionFamily::enumerate(k, PartitionKind::noncrossing).size() !=
            expected[static_cast<std::size_t>(k) - 1]) {
            return false;
        }
    }
    return true;
}

bool criterion_reference_matrices() {
    for (int n : {4, 5, 7}) {
        auto perm2 = match_up_to_permutation(gram_matrix(2, n), reference::gram_k2(n));
        if (!perm2) return false;
        if (!(apply_simultaneous_permutation(weingarten_matrix(2, n), *perm2) ==
              reference::gram_inverse_k2(n))) {
            return false;
        }
        auto perm3 = match_up_to_permutation(gram_matrix(3, n), reference::gram_k3(n));
        if (!perm3) return false;
        if (!(apply_simultaneous_permutation(weingarten_matrix(3, n), *perm3) ==
              reference::gram_inverse_k3(n))) {
            return false;
        }
        if (!match_up_to_permutation(gram_matrix(4, n), reference::gram_k4(n))) return false;
    }
    return true;
}

bool criterion_closed_forms() {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 4; n <= 12; ++n) {
            for (int s = 1; s <= n; ++s) {
                MomentQuery q(n, s, k);
                if (!(truncated_moment(q) == closed_form_moment(q))) return false;
            }
        }
    }
    return true;
}

bool criterion_spot_values() {
    const BigRational expected[4] = {BigRational(1, 2), BigRational(2, 3), BigRational(1),
                                     BigRational(8, 5)};
    for (int k = 1; k <= 4; ++k) {
        if (!(truncated_moment(MomentQuery(4, 2, k)) == expected[k - 1])) return false;
    }
    return true;
}

bool criterion_catalan_moments() {
    std::vector<long> catalan = {1, 2, 5, 14, 42, 132};
    for (int k = 1; k <= 6; ++k) {
        for (int n = 4; n <= 8; ++n) {
            if (!(truncated_moment(MomentQuery(n, n, k)) ==
                  BigRational(catalan[static_cast<std::size_t>(k) - 1]))) {
                return false;
            }
        }
    }
    return true;
}

bool criterion_join_exponent() {
    const BigRational zero(0), bound(-1L, 2L);
    for (int k = 1; k <= 6; ++k) {
        auto family = PartitionFamily::enumerate(k, PartitionKind::noncrossing);
        for (const Partition& p : family.members()) {
            for (const Partition& q : family.members()) {
                BigRational e = join_exponent(p, q);
                if (p == q) {
                    if (!(e == zero)) return false;
                } else if (!(e <= bound)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_gram_oracle() {
    for (int k = 1; k <= 4; ++k) {
        auto family = PartitionFamily::enumerate(k, PartitionKind::noncrossing);
        for (int n : {2, 3, 4}) {
            for (const Partition& p : family.members()) {
                for (const Partition& q : family.members()) {
                    if (!(gram_bruteforce(p, q, n) ==
                          int_pow(BigInt(n), join(p, q).block_count()))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool criterion_magic_unitary_identities() {
    for (int n : {4, 5}) {
        // sum-out over the first column index at k = 2 and 3
        for (int i1 = 1; i1 <= n; ++i1) {
            for (int i2 = 1; i2 <= n; ++i2) {
                for (int j2 = 1; j2 <= n; ++j2) {
                    BigRational sum;
                    for (int j1 = 1; j1 <= n; ++j1) {
                        sum += monomial_integral(MonomialSpec(n, {i1, i2}, {j1, j2}));
                    }
                    if (!(sum == monomial_integral(MonomialSpec(n, {i2}, {j2})))) return false;
                }
            }
        }
        for (int i1 = 1; i1 <= n; ++i1) {
            for (int i2 = 1; i2 <= n; ++i2) {
                for (int i3 = 1; i3 <= n; ++i3) {
                    for (int j2 = 1; j2 <= n; ++j2) {
                        for (int j3 = 1; j3 <= n; ++j3) {
                            BigRational sum;
                            for (int j1 = 1; j1 <= n; ++j1) {
                                sum += monomial_integral(
                                    MonomialSpec(n, {i1, i2, i3}, {j1, j2, j3}));
                            }
                            if (!(sum == monomial_integral(
                                             MonomialSpec(n, {i2, i3}, {j2, j3})))) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        // the symmetric statement, summing the first row index
        for (int j1 = 1; j1 <= n; ++j1) {
            for (int j2 = 1; j2 <= n; ++j2) {
                for (int i2 = 1; i2 <= n; ++i2) {
                    BigRational sum;
                    for (int i1 = 1; i1 <= n; ++i1) {
                        sum += monomial_integral(MonomialSpec(n, {i1, i2}, {j1, j2}));
                    }
                    if (!(sum == monomial_integral(MonomialSpec(n, {i2}, {j2})))) return false;
                }
            }
        }
        // same-row off-diagonal products vanish; repeated factors collapse
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int l = 1; l <= n; ++l) {
                    if (l != j) {
                        if (!(monomial_integral(MonomialSpec(n, {i, i}, {j, l})) ==
                              BigRational(0))) {
                            return false;
                        }
                        if (!(monomial_integral(MonomialSpec(n, {i, i, 2}, {j, l, 3})) ==
                              BigRational(0))) {
                            return false;
                        }
                    }
                }
                if (!(monomial_integral(MonomialSpec(n, {i, i}, {j, j})) ==
                      monomial_integral(MonomialSpec(n, {i}, {j})))) {
                    return false;
                }
                if (!(monomial_integral(MonomialSpec(n, {i, i, 2}, {j, j, 3})) ==
                      monomial_integral(MonomialSpec(n, {i, 2}, {j, 3})))) {
                    return false;
                }
            }
        }
        // relabeling invariance under 20 seeded (σ, τ) pairs
        std::mt19937 rng(987654u + static_cast<unsigned>(n));
        const std::vector<std::vector<int>> monomial_rows = {{1, 2, 1}, {1, 1, 2}, {2, 3, 2}};
        const std::vector<std::vector<int>> monomial_cols = {{2, 2, 3}, {1, 2, 1}, {1, 3, 1}};
        for (std::size_t m = 0; m < monomial_rows.size(); ++m) {
            BigRational base =
                monomial_integral(MonomialSpec(n, monomial_rows[m], monomial_cols[m]));
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<int> sigma(n), tau(n);
                std::iota(sigma.begin(), sigma.end(), 1);
                std::iota(tau.begin(), tau.end(), 1);
                std::shuffle(sigma.begin(), sigma.end(), rng);
                std::shuffle(tau.begin(), tau.end(), rng);
                std::vector<int> rows, cols;
                for (int v : monomial_rows[m]) rows.push_back(sigma[v - 1]);
                for (int v : monomial_cols[m]) cols.push_back(tau[v - 1]);
                if (!(monomial_integral(MonomialSpec(n, rows, cols)) == base)) return false;
            }
        }
    }
    return true;
}

bool criterion_sn_law_oracle() {
    for (int n = 1; n <= 8; ++n) {
        for (int s = 1; s <= n; ++s) {
            if (!(sn_law(n, s) == brute_force_law(n, s))) return false;
        }
    }
    // both algebraic forms of the law agree through n = 10 (sn_law throws on
    // any disagreement between its two derivations; evaluate one explicitly)
    DiscreteMeasure step =
        DiscreteMeasure::signed_measure({{1, BigRational(1)}, {0, BigRational(-1)}});
    for (int n = 1; n <= 10; ++n) {
        for (int s = 1; s <= n; ++s) {
            DiscreteMeasure combined = DiscreteMeasure::signed_measure({});
            for (int p = 0; p <= s; ++p) {
                BigRational coefficient =
                    BigRational(factorial(static_cast<unsigned>(n - p))) /
                    BigRational(factorial(static_cast<unsigned>(s - p))) /
                    BigRational(factorial(static_cast<unsigned>(p)));
                combined = signed_add(
                    combined, convolve_power(step, static_cast<unsigned>(p)).scaled(coefficient));
            }
            combined = combined.scaled(BigRational(factorial(static_cast<unsigned>(s))) /
                                       BigRational(factorial(static_cast<unsigned>(n))));
            if (!(combined == sn_law(n, s))) return false;
        }
    }
    return true;
}

bool criterion_limit_diagnostics() {
    const std::vector<int> ns = {8, 16, 32, 64};
    for (LimitSide side : {LimitSide::free, LimitSide::classical}) {
        for (const char* t_text : {"1/4", "1/2", "1"}) {
            LawParameter t(BigRational::from_string(t_text));
            ConvergenceReport report = convergence_report(5, t, ns, side);
            const bool exact_regime = t.t == BigRational(1);
            for (int k = 1; k <= 5; ++k) {
                std::vector<BigRational> errors, scaled;
                for (const auto& row : report.rows) {
                    if (row.k == k) {
                        errors.push_back(row.error);
                        scaled.push_back(row.error_times_n);
                    }
                }
                bool all_zero = true, any_zero = false;
                for (const auto& e : errors) {
                    all_zero = all_zero && e.is_zero();
                    any_zero = any_zero || e.is_zero();
                }
                if (exact_regime && !all_zero) return false;  // t=1 must be exact
                if (all_zero) continue;
                if (any_zero) return false;  // zero and nonzero mixed: not the expected shape
                if (!(errors.back() < errors.front())) return false;  // error(64) < error(8)
                BigRational lo = scaled[0], hi = scaled[0];
                for (const auto& v : scaled) {
                    if (v < lo) lo = v;
                    if (hi < v) hi = v;
                }
                if (!(hi <= lo * BigRational(4))) return false;
            }
        }
    }
    return true;
}

bool criterion_cumulant_semigroup() {
    for (const char* t_text : {"1/4", "1/2", "1"}) {
        LawParameter t(BigRational::from_string(t_text));
        for (auto kind : {PartitionKind::noncrossing, PartitionKind::all}) {
            std::vector<BigRational> values;
            for (int k = 1; k <= 7; ++k) {
                values.push_back(kind == PartitionKind::noncrossing ? free_poisson_moment(k, t)
                                                                    : poisson_moment(k, t));
            }
            auto kappa = cumulants_from_moments(MomentSequence(values), kind);
            for (const BigRational& v : kappa) {
                if (!(v == t.t)) return false;
            }
        }
    }
    const std::pair<const char*, const char*> splits[] = {
        {"1/4", "1/4"}, {"1/2", "1/2"}, {"1/3", "2/3"}};
    for (const auto& [a, b] : splits) {
        for (auto kind : {PartitionKind::noncrossing, PartitionKind::all}) {
            SemigroupCheck check =
                semigroup_check(LawParameter(BigRational::from_string(a)),
                                LawParameter(BigRational::from_string(b)), 7, kind);
            if (!check.all_match) return false;
        }
    }
    return true;
}

bool criterion_density_crosscheck() {
    for (const char* t_text : {"1/2", "1", "2"}) {
        LawParameter t(BigRational::from_string(t_text));
        for (int k = 0; k <= 6; ++k) {
            double exact = k == 0 ? 1.0 : free_poisson_moment(k, t).to_double();
            double approx = mp_density_moment(k, t, 1e-9);
            if (std::abs(approx - exact) >= 1e-6) return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<bool()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> gated = {
        {1, "non-crossing family sizes 1,2,5,14,42,132,429 for k=1..7", 1.0,
         criterion_catalan_sizes},
        {2, "G and G^-1 match the published tables (k=2,3,4; n=4,5,7)", 1.0,
         criterion_reference_matrices},
        {3, "closed forms equal Tr(G_kn^-1 G_ks) for k<=4, 4<=n<=12, all s", 10.0,
         criterion_closed_forms},
        {4, "spot values at n=4, s=2: 1/2, 2/3, 1, 8/5", 10.0, criterion_spot_values},
        {5, "full-trace moments are Catalan numbers (k<=6, n=4..8)", 60.0,
         criterion_catalan_moments},
        {6, "join exponent <= -1/2 off the diagonal on NC(k), k<=6", 30.0,
         criterion_join_exponent},
        {7, "brute-force Gram sums equal n^|p v q| (k<=4, n=2,3,4)", 30.0,
         criterion_gram_oracle},
        {8, "magic-unitary integral identities at n=4,5 and k<=3", 60.0,
         criterion_magic_unitary_identities},
        {9, "S_n law equals the permutation oracle (n<=8) and both forms (n<=10)", 60.0,
         criterion_sn_law_oracle},
        {10, "limit diagnostics at t=1/4,1/2,1 over n=8..64 on both sides", 300.0,
         criterion_limit_diagnostics},
        {11, "cumulants of both Poisson families are constant and additive", 5.0,
         criterion_cumulant_semigroup},
        {12, "density quadrature matches moments within 1e-6 (k<=6)", 10.0,
         criterion_density_crosscheck},
    };

    int failures = 0;
    for (const auto& criterion : gated) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            std::printf("[%2d] threw: %s\n", criterion.id, e.what());
            ok = false;
        }
        double elapsed = seconds_since(start);
        bool in_budget = elapsed < criterion.budget_seconds;
        bool pass = ok && in_budget;
        std::printf("[%2d] %s  (%.2fs, budget %.0fs)  %s%s\n", criterion.id,
                    pass ? "PASS" : "FAIL", elapsed, criterion.budget_seconds, criterion.label,
                    ok && !in_budget ? " [over budget]" : "");
        if (!pass) ++failures;
    }

    // Stretch items: reported, never gated.
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = truncated_moment(MomentQuery(4, 4, 7)) == BigRational(429);
        double elapsed = seconds_since(start);
        std::printf("[13] %s  (%.2fs, target 60s)  stretch: k=7 moment at dimension 429%s\n",
                    ok && elapsed < 60.0 ? "PASS" : "MISS", elapsed,
                    ok ? "" : " [wrong value]");
        if (std::getenv("QPERM_ACCEPT_K8") != nullptr) {
            start = std::chrono::steady_clock::now();
            BigRational m8 = truncated_moment(MomentQuery(4, 4, 8));
            elapsed = seconds_since(start);
            std::printf("[13] INFO  (%.2fs)  k=8 moment at dimension 1430 = %s\n", elapsed,
                        m8.to_string().c_str());
        } else {
            std::printf("[13] INFO  k=8 (dimension 1430) not attempted; set QPERM_ACCEPT_K8=1\n");
        }
    }

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all gated criteria passed\n");
    return 0;
}
