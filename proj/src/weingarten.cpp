#include "qperm/weingarten.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qperm/errors.hpp"

namespace qperm {

MonomialSpec::MonomialSpec(int n, std::vector<int> rows, std::vector<int> cols)
    : n_(n), rows_(std::move(rows)), cols_(std::move(cols)) {
    if (n_ < 4) throw InvalidArgumentError("monomial integration requires n >= 4");
    if (rows_.empty() || rows_.size() != cols_.size()) {
        throw InvalidArgumentError("row and column multi-indices must have equal positive length");
    }
    for (const auto& idx : {rows_, cols_}) {
        for (int v : idx) {
            if (v < 1 || v > n_) throw InvalidArgumentError("multi-index entry outside {1..n}");
        }
    }
}

MomentQuery::MomentQuery(int n, int s, int k) : n_(n), s_(s), k_(k) {
    if (n_ < 4) throw InvalidArgumentError("moment query requires n >= 4");
    if (s_ < 1 || s_ > n_) throw InvalidArgumentError("moment query requires 1 <= s <= n");
    if (k_ < 1) throw InvalidArgumentError("moment order must be positive");
}

RationalMatrix gram_matrix(int k, int n) {
    if (n < 1) throw InvalidArgumentError("gram matrix requires n >= 1");
    PartitionFamily family = PartitionFamily::enumerate(k, PartitionKind::noncrossing);
    const std::size_t d = family.size();
    RationalMatrix g(d, d);
    BigInt base(n);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            int blocks = r == c ? family.member(r).block_count()
                                : join(family.member(r), family.member(c)).block_count();
            BigRational value(int_pow(base, static_cast<unsigned>(blocks)));
            g.at(r, c) = value;
            g.at(c, r) = value;
        }
    }
    return g;
}

RationalMatrix weingarten_matrix(int k, int n) { return inverse(gram_matrix(k, n)); }

BigRational monomial_integral(const MonomialSpec& m) {
    PartitionFamily family = PartitionFamily::enumerate(m.k(), PartitionKind::noncrossing);
    const std::size_t d = family.size();
    // 1_i^T W 1_j with 1_i, 1_j the delta indicator vectors: one solve with
    // the column-side indicator as right-hand side, then the row-side dot.
    RationalMatrix rhs(d, 1);
    bool any_col = false;
    for (std::size_t q = 0; q < d; ++q) {
        if (delta(family.member(q), m.cols())) {
            rhs.at(q, 0) = BigRational(1);
            any_col = true;
        }
    }
    if (!any_col) return BigRational(0);
    RationalMatrix y = solve(gram_matrix(m.k(), m.n()), rhs);
    BigRational result;
    for (std::size_t p = 0; p < d; ++p) {
        if (delta(family.member(p), m.rows())) result += y.at(p, 0);
    }
    return result;
}

BigRational truncated_moment(const MomentQuery& q) {
    return trace(solve(gram_matrix(q.k(), q.n()), gram_matrix(q.k(), q.s())));
}

BigRational closed_form_moment(const MomentQuery& q) {
    const BigRational n(static_cast<long>(q.n()));
    const BigRational s(static_cast<long>(q.s()));
    const BigRational lead = s / n;
    switch (q.k()) {
        case 1:
            return lead;
        case 2: {
            BigRational den = n - BigRational(1);
            if (den.is_zero()) throw DomainError("closed form undefined at this n");
            return lead * (n + s - BigRational(2)) / den;
        }
        case 3: {
            BigRational den = (n - BigRational(1)) * (n - BigRational(2));
            if (den.is_zero()) throw DomainError("closed form undefined at this n");
            BigRational num = n * n + BigRational(3) * (s - BigRational(2)) * n +
                              (s * s - BigRational(9) * s + BigRational(10));
            return lead * num / den;
        }
        case 4: {
            BigRational den = (n - BigRational(1)) * (n - BigRational(2)) *
                              (n * n - BigRational(3) * n + BigRational(1));
            if (den.is_zero()) throw DomainError("closed form undefined at this n");
            BigRational p = BigRational::pow(n, 4);
            p += (BigRational(6) * s - BigRational(12)) * BigRational::pow(n, 3);
            p += (BigRational(6) * s * s - BigRational(46) * s + BigRational(52)) * n * n;
            p += (BigRational::pow(s, 3) - BigRational(26) * s * s + BigRational(104) * s -
                  BigRational(88)) *
                 n;
            p += BigRational(12) * s * s - BigRational(38) * s + BigRational(28);
            return lead * p / den;
        }
        default:
            throw InvalidArgumentError("closed forms exist for k = 1..4 only");
    }
}

BigInt gram_bruteforce(const Partition& p, const Partition& q, int n) {
    if (p.k() != q.k()) throw InvalidArgumentError("gram_bruteforce requires equal ground sets");
    if (n < 1) throw InvalidArgumentError("gram_bruteforce requires n >= 1");
    const int k = p.k();
    double points = 1.0;
    for (int i = 0; i < k; ++i) points *= n;
    if (points > 1e7) {
        throw ResourceError("gram_bruteforce refuses n^k > 10^7");
    }
    std::vector<int> index(k, 1);
    BigInt total(0);
    while (true) {
        if (delta(p, index) && delta(q, index)) ++total;
        int pos = k - 1;
        while (pos >= 0 && index[pos] == n) {
            index[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++index[pos];
    }
    return total;
}

namespace {

// Signature on which rows must agree before a matching is even attempted.
using RowSignature = std::pair<BigRational, std::vector<BigRational>>;

RowSignature row_signature(const RationalMatrix& m, std::size_t r) {
    std::vector<BigRational> row;
    row.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    std::sort(row.begin(), row.end());
    return {m.at(r, r), std::move(row)};
}

bool verify_permutation(const RationalMatrix& computed, const RationalMatrix& reference,
                        const std::vector<std::size_t>& perm) {
    for (std::size_t i = 0; i < reference.rows(); ++i) {
        for (std::size_t j = 0; j < reference.cols(); ++j) {
            if (!(computed.at(perm[i], perm[j]) == reference.at(i, j))) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> match_up_to_permutation(const RationalMatrix& computed,
                                                                const RationalMatrix& reference) {
    if (computed.rows() != computed.cols() || reference.rows() != reference.cols() ||
        computed.rows() != reference.rows()) {
        return std::nullopt;
    }
    const std::size_t d = reference.rows();
    std::map<RowSignature, std::vector<std::size_t>> candidates_by_signature;
    for (std::size_t r = 0; r < d; ++r) {
        candidates_by_signature[row_signature(computed, r)].push_back(r);
    }
    std::vector<std::vector<std::size_t>> candidates(d);
    for (std::size_t i = 0; i < d; ++i) {
        auto it = candidates_by_signature.find(row_signature(reference, i));
        if (it == candidates_by_signature.end()) return std::nullopt;
        candidates[i] = it->second;
    }

    std::vector<std::size_t> perm(d, d);
    std::vector<bool> used(d, false);
    // Assign the most constrained positions first.
    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return candidates[a].size() < candidates[b].size();
    });

    auto consistent = [&](std::size_t i, std::size_t r) {
        for (std::size_t j = 0; j < d; ++j) {
            if (perm[j] == d) continue;
            if (!(computed.at(r, perm[j]) == reference.at(i, j))) return false;
            if (!(computed.at(perm[j], r) == reference.at(j, i))) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
        if (depth == d) return true;
        std::size_t i = order[depth];
        for (std::size_t r : candidates[i]) {
            if (used[r] || !consistent(i, r)) continue;
            perm[i] = r;
            used[r] = true;
            if (assign(depth + 1)) return true;
            perm[i] = d;
            used[r] = false;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    if (!verify_permutation(computed, reference, perm)) return std::nullopt;
    return perm;
}

RationalMatrix apply_simultaneous_permutation(const RationalMatrix& m,
                                              const std::vector<std::size_t>& perm) {
    if (m.rows() != m.cols() || perm.size() != m.rows()) {
        throw InvalidArgumentError("permutation size must match the (square) matrix");
    }
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(perm[i], perm[j]);
    }
    return out;
}

}  // namespace qperm
