#pragma once

#include <optional>
#include <vector>

#include "qperm/matrix.hpp"
#include "qperm/partition.hpp"
#include "qperm/rational.hpp"

namespace qperm {

// The integrand u_{i1 j1}...u_{ik jk}: multi-indices are 1-based and live in
// {1..n}. Integration needs n >= 4 (the Gram matrix can degenerate below).
class MonomialSpec {
public:
    MonomialSpec(int n, std::vector<int> rows, std::vector<int> cols);

    int n() const { return n_; }
    int k() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }

private:
    int n_;
    std::vector<int> rows_, cols_;
};

// Query for the truncated-character moment ∫(u_11+...+u_ss)^k.
class MomentQuery {
public:
    MomentQuery(int n, int s, int k);

    int n() const { return n_; }
    int s() const { return s_; }
    int k() const { return k_; }

private:
    int n_, s_, k_;
};

// Gram matrix of NC(k): entry (p,q) is n^{|p∨q|}, rows/columns in the
// canonical lexicographic order of PartitionFamily. Any n >= 1 builds; only
// inversion can fail below n = 4.
RationalMatrix gram_matrix(int k, int n);

// Inverse of the Gram matrix (the integration kernel).
RationalMatrix weingarten_matrix(int k, int n);

// Σ_{p,q ∈ NC(k)} δ_pi δ_qj W_kn(p,q), evaluated through one linear solve.
BigRational monomial_integral(const MonomialSpec& m);

// Tr(G_kn^{-1} G_ks) via solve; the full inverse is never formed here.
BigRational truncated_moment(const MomentQuery& q);

// The closed forms for k = 1..4 (rational functions of n and s).
BigRational closed_form_moment(const MomentQuery& q);

// Exhaustive Σ_{i ∈ {1..n}^k} δ_pi δ_qi. Independent of the join route; must
// equal n^{|p∨q|}. Refuses n^k > 10^7.
BigInt gram_bruteforce(const Partition& p, const Partition& q, int n);

// Searches for a permutation π with computed(π(i),π(j)) = reference(i,j) for
// all i,j — i.e. a simultaneous row/column relabeling carrying one matrix
// onto the other. Candidates are pruned by (diagonal, sorted-row) signatures
// before verification. Returns the permutation, or nothing if none exists.
std::optional<std::vector<std::size_t>> match_up_to_permutation(const RationalMatrix& computed,
                                                                const RationalMatrix& reference);

// Applies the permutation found above: result(i,j) = m(π(i),π(j)).
RationalMatrix apply_simultaneous_permutation(const RationalMatrix& m,
                                              const std::vector<std::size_t>& perm);

}  // namespace qperm
