#include "qperm/laws.hpp"

#include <cmath>
#include <vector>

#include "json.hpp"
#include "qperm/classical.hpp"
#include "qperm/errors.hpp"
#include "qperm/weingarten.hpp"

namespace qperm {

LawParameter::LawParameter(BigRational value) : t(std::move(value)) {
    if (!(t > BigRational(0))) throw InvalidArgumentError("law parameter must be positive");
}

MomentSequence::MomentSequence(std::vector<BigRational> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgumentError("moment sequence must be nonempty");
}

const BigRational& MomentSequence::moment(int k) const {
    if (k < 1 || k > order()) throw InvalidArgumentError("moment order out of range");
    return values_[static_cast<std::size_t>(k) - 1];
}

BigRational free_poisson_moment(int k, const LawParameter& t) {
    PartitionFamily family = PartitionFamily::enumerate(k, PartitionKind::noncrossing);
    BigRational sum;
    for (const Partition& p : family.members()) {
        sum += BigRational::pow(t.t, static_cast<unsigned>(p.block_count()));
    }
    return sum;
}

BigRational poisson_moment(int k, const LawParameter& t) {
    if (k < 1) throw InvalidArgumentError("moment order must be positive");
    // Touchard polynomial via the subset-number triangle.
    std::vector<BigInt> stirling(static_cast<std::size_t>(k) + 1);
    stirling[0] = 1;  // S(0,0)
    for (int row = 1; row <= k; ++row) {
        for (int j = row; j >= 1; --j) {
            stirling[j] = BigInt(j) * stirling[j] + stirling[j - 1];
        }
        stirling[0] = 0;
    }
    BigRational sum;
    for (int j = 1; j <= k; ++j) {
        sum += BigRational(stirling[j]) * BigRational::pow(t.t, static_cast<unsigned>(j));
    }
    return sum;
}

namespace {

BigRational partition_cumulant_product(const Partition& p,
                                       const std::vector<BigRational>& cumulants) {
    BigRational product(1);
    for (const auto& block : p.blocks()) {
        product *= cumulants[block.size() - 1];
    }
    return product;
}

}  // namespace

MomentSequence moments_from_cumulants(const std::vector<BigRational>& cumulants,
                                      PartitionKind kind) {
    if (cumulants.empty()) throw InvalidArgumentError("cumulant list must be nonempty");
    std::vector<BigRational> moments;
    moments.reserve(cumulants.size());
    for (int k = 1; k <= static_cast<int>(cumulants.size()); ++k) {
        PartitionFamily family = PartitionFamily::enumerate(k, kind);
        BigRational m;
        for (const Partition& p : family.members()) {
            m += partition_cumulant_product(p, cumulants);
        }
        moments.push_back(std::move(m));
    }
    return MomentSequence(std::move(moments));
}

std::vector<BigRational> cumulants_from_moments(const MomentSequence& moments,
                                                PartitionKind kind) {
    std::vector<BigRational> cumulants;
    cumulants.reserve(static_cast<std::size_t>(moments.order()));
    for (int k = 1; k <= moments.order(); ++k) {
        PartitionFamily family = PartitionFamily::enumerate(k, kind);
        // The one-block partition is the lexicographically first member; its
        // term is the unknown κ_k, everything else uses lower orders only.
        cumulants.push_back(BigRational(0));
        BigRational rest;
        for (std::size_t i = 1; i < family.size(); ++i) {
            rest += partition_cumulant_product(family.member(i), cumulants);
        }
        cumulants.back() = moments.moment(k) - rest;
    }
    return cumulants;
}

SemigroupCheck semigroup_check(const LawParameter& t1, const LawParameter& t2, int k_max,
                               PartitionKind kind) {
    LawParameter combined(t1.t + t2.t);
    auto law_moments = [&](const LawParameter& t) {
        std::vector<BigRational> values;
        for (int k = 1; k <= k_max; ++k) {
            values.push_back(kind == PartitionKind::noncrossing ? free_poisson_moment(k, t)
                                                                : poisson_moment(k, t));
        }
        return MomentSequence(std::move(values));
    };
    std::vector<BigRational> kappa_first = cumulants_from_moments(law_moments(t1), kind);
    std::vector<BigRational> kappa_second = cumulants_from_moments(law_moments(t2), kind);
    std::vector<BigRational> kappa_combined = cumulants_from_moments(law_moments(combined), kind);

    SemigroupCheck check{kind, {}, true};
    for (int k = 1; k <= k_max; ++k) {
        std::size_t i = static_cast<std::size_t>(k) - 1;
        BigRational sum = kappa_first[i] + kappa_second[i];
        bool matches = sum == kappa_combined[i];
        check.rows.push_back({k, kappa_first[i], kappa_second[i], sum, kappa_combined[i], matches});
        check.all_match = check.all_match && matches;
    }
    return check;
}

namespace {

struct QuadratureRule {
    std::vector<double> nodes, weights;  // on [-1, 1]
};

QuadratureRule gauss_legendre(int m) {
    QuadratureRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= m; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[m - 1 - i] = x;
        rule.weights[m - 1 - i] = w;
    }
    return rule;
}

}  // namespace

double mp_density_moment(int k, const LawParameter& t, double tolerance) {
    if (k < 0) throw InvalidArgumentError("moment order must be nonnegative");
    if (!(tolerance > 0.0)) throw InvalidArgumentError("tolerance must be positive");
    const double tv = t.t.to_double();
    const double sqrt_t = std::sqrt(tv);
    const double atom = k == 0 ? std::max(0.0, 1.0 - tv) : 0.0;

    // (2t/π)·∫ (1+t+2√t·sinθ)^{k-1} cos²θ dθ over [-π/2, π/2].
    auto integral_with = [&](int m) {
        QuadratureRule rule = gauss_legendre(m);
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            double theta = rule.nodes[i] * (M_PI / 2.0);
            double x = 1.0 + tv + 2.0 * sqrt_t * std::sin(theta);
            double c = std::cos(theta);
            sum += rule.weights[i] * std::pow(x, k - 1) * c * c;
        }
        return sum * (M_PI / 2.0) * (2.0 * tv / M_PI);
    };

    double previous = integral_with(16);
    double achieved = HUGE_VAL;
    for (int m = 32; m <= 1024; m *= 2) {
        double current = integral_with(m);
        achieved = std::abs(current - previous);
        if (achieved <= tolerance) return current + atom;
        previous = current;
    }
    throw NumericError(achieved, "quadrature did not reach the requested tolerance");
}

int truncation_size(const LawParameter& t, int n) {
    if (n < 1) throw InvalidArgumentError("n must be positive");
    BigInt num = t.t.numerator() * n;
    BigInt den = t.t.denominator();
    BigInt s = (2 * num + den) / (2 * den);
    return static_cast<int>(s.get_si());
}

ConvergenceReport convergence_report(int k_max, const LawParameter& t,
                                     const std::vector<int>& n_list, LimitSide side) {
    if (k_max < 1) throw InvalidArgumentError("k_max must be positive");
    ConvergenceReport report{side, t.t, {}};
    for (int n : n_list) {
        if (side == LimitSide::free && n < 4) {
            throw InvalidArgumentError("free side requires n >= 4");
        }
        int s = truncation_size(t, n);
        for (int k = 1; k <= k_max; ++k) {
            BigRational moment = side == LimitSide::free
                                     ? truncated_moment(MomentQuery(n, s, k))
                                     : sn_moment(n, s, k);
            BigRational target = side == LimitSide::free ? free_poisson_moment(k, t)
                                                         : poisson_moment(k, t);
            BigRational error = (moment - target).abs();
            report.rows.push_back(
                {n, s, k, moment, target, error, error * BigRational(static_cast<long>(n))});
        }
    }
    return report;
}

std::string ConvergenceReport::to_csv_string() const {
    std::string out = "n,s,k,moment,target,error,error_times_n\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.s) + ',' + std::to_string(row.k) +
               ',' + row.moment.to_string() + ',' + row.target.to_string() + ',' +
               row.error.to_string() + ',' + row.error_times_n.to_string() + '\n';
    }
    return out;
}

std::string ConvergenceReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["side"] = side == LimitSide::free ? "free" : "classical";
    j["t"] = t.to_string();
    nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["s"] = row.s;
        r["k"] = row.k;
        r["moment"] = row.moment.to_string();
        r["target"] = row.target.to_string();
        r["error"] = row.error.to_string();
        r["error_times_n"] = row.error_times_n.to_string();
        out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    return j.dump();
}

}  // namespace qperm
