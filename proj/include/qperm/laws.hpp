#pragma once

#include <string>
#include <vector>

#include "qperm/partition.hpp"
#include "qperm/rational.hpp"

namespace qperm {

// Law parameter t > 0. Truncation semantics additionally need t <= 1, which
// is enforced where a truncation size is actually derived.
struct LawParameter {
    explicit LawParameter(BigRational value);
    BigRational t;
};

// Exact moments m_1..m_{k_max}.
class MomentSequence {
public:
    explicit MomentSequence(std::vector<BigRational> values);

    int order() const { return static_cast<int>(values_.size()); }
    const BigRational& moment(int k) const;  // 1-based
    const std::vector<BigRational>& values() const { return values_; }

private:
    std::vector<BigRational> values_;
};

// Σ_{p ∈ NC(k)} t^{|p|}: the order-k moment of the free Poisson
// (Marchenko-Pastur) law of parameter t.
BigRational free_poisson_moment(int k, const LawParameter& t);

// Σ_{p ∈ P(k)} t^{|p|} (the Touchard polynomial): the order-k moment of the
// Poisson law of parameter t.
BigRational poisson_moment(int k, const LawParameter& t);

// m_k = Σ_p Π_{blocks b} κ_{|b|} over NC(k) (free) or P(k) (classical).
MomentSequence moments_from_cumulants(const std::vector<BigRational>& cumulants,
                                      PartitionKind kind);

// Triangular inversion of the above: κ_k = m_k − Σ_{p ≠ 1-block} Π κ_{|b|}.
std::vector<BigRational> cumulants_from_moments(const MomentSequence& moments,
                                                PartitionKind kind);

struct SemigroupCheckRow {
    int order;
    BigRational kappa_first, kappa_second, kappa_sum, kappa_combined;
    bool matches;
};

// The desk-checkable content of the convolution-semigroup statements:
// cumulants of the (t1+t2)-law equal the sums of cumulants of the t1- and
// t2-laws, through order k_max, exactly.
struct SemigroupCheck {
    PartitionKind kind;
    std::vector<SemigroupCheckRow> rows;
    bool all_match;
};

SemigroupCheck semigroup_check(const LawParameter& t1, const LawParameter& t2, int k_max,
                               PartitionKind kind);

// ∫x^k dμ_t by adaptive Gauss-Legendre after x = 1+t+2√t·sinθ (which absorbs
// the square-root endpoint singularity), plus the max(0,1-t) atom at zero.
// The single deliberately floating-point operation in this library.
double mp_density_moment(int k, const LawParameter& t, double tolerance);

enum class LimitSide { free, classical };

// round(t·n), ties away from zero; the truncation size s used by the limit
// statements.
int truncation_size(const LawParameter& t, int n);

struct ConvergenceRow {
    int n, s, k;
    BigRational moment, target, error, error_times_n;
};

// Exact finite-n moments against the limit-law targets, with the error and
// error·n (the observed O(1/n) rate) per row. Rows are ordered by n_list
// then k.
struct ConvergenceReport {
    LimitSide side;
    BigRational t;
    std::vector<ConvergenceRow> rows;

    std::string to_csv_string() const;
    std::string to_json_string() const;
};

ConvergenceReport convergence_report(int k_max, const LawParameter& t,
                                     const std::vector<int>& n_list, LimitSide side);

}  // namespace qperm
