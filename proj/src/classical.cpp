#include "qperm/classical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "qperm/errors.hpp"

namespace qperm {

namespace {

std::map<long long, BigRational> drop_zero_atoms(std::map<long long, BigRational> atoms) {
    for (auto it = atoms.begin(); it != atoms.end();) {
        if (it->second.is_zero()) {
            it = atoms.erase(it);
        } else {
            ++it;
        }
    }
    return atoms;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::map<long long, BigRational> atoms, bool is_signed)
    : atoms_(std::move(atoms)), signed_(is_signed) {}

DiscreteMeasure DiscreteMeasure::probability(std::map<long long, BigRational> atoms) {
    atoms = drop_zero_atoms(std::move(atoms));
    BigRational mass;
    for (const auto& [point, weight] : atoms) {
        if (weight.sign() < 0) {
            throw InvalidArgumentError("probability measure has a negative weight");
        }
        mass += weight;
    }
    if (!(mass == BigRational(1))) {
        throw InvalidArgumentError("probability weights must sum to 1, got " + mass.to_string());
    }
    return DiscreteMeasure(std::move(atoms), false);
}

DiscreteMeasure DiscreteMeasure::signed_measure(std::map<long long, BigRational> atoms) {
    return DiscreteMeasure(drop_zero_atoms(std::move(atoms)), true);
}

BigRational DiscreteMeasure::weight(long long point) const {
    auto it = atoms_.find(point);
    return it == atoms_.end() ? BigRational(0) : it->second;
}

BigRational DiscreteMeasure::total_mass() const {
    BigRational mass;
    for (const auto& [point, weight] : atoms_) mass += weight;
    return mass;
}

BigRational DiscreteMeasure::moment(int k) const {
    if (k < 0) throw InvalidArgumentError("moment order must be nonnegative");
    BigRational m;
    for (const auto& [point, weight] : atoms_) {
        BigRational x(static_cast<long>(point));
        m += weight * BigRational::pow(x, static_cast<unsigned>(k));
    }
    return m;
}

DiscreteMeasure DiscreteMeasure::scaled(const BigRational& factor) const {
    std::map<long long, BigRational> atoms;
    for (const auto& [point, weight] : atoms_) atoms.emplace(point, weight * factor);
    return signed_measure(std::move(atoms));
}

std::string DiscreteMeasure::to_json_string() const {
    nlohmann::ordered_json atoms;
    for (const auto& [point, weight] : atoms_) {
        atoms[std::to_string(point)] = weight.to_string();
    }
    nlohmann::ordered_json j;
    j["atoms"] = std::move(atoms);
    j["signed"] = signed_;
    return j.dump();
}

DiscreteMeasure DiscreteMeasure::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("atoms") || !j.contains("signed") ||
        !j["atoms"].is_object() || !j["signed"].is_boolean()) {
        throw InvalidArgumentError("malformed measure JSON");
    }
    std::map<long long, BigRational> atoms;
    for (const auto& [key, value] : j["atoms"].items()) {
        if (!value.is_string()) throw InvalidArgumentError("malformed measure JSON");
        atoms[std::stoll(key)] = BigRational::from_string(value.get<std::string>());
    }
    if (j["signed"].get<bool>()) return signed_measure(std::move(atoms));
    return probability(std::move(atoms));
}

DiscreteMeasure signed_add(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    std::map<long long, BigRational> atoms = a.atoms();
    for (const auto& [point, weight] : b.atoms()) atoms[point] += weight;
    return DiscreteMeasure::signed_measure(std::move(atoms));
}

DiscreteMeasure signed_convolve(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    std::map<long long, BigRational> atoms;
    for (const auto& [pa, wa] : a.atoms()) {
        for (const auto& [pb, wb] : b.atoms()) atoms[pa + pb] += wa * wb;
    }
    return DiscreteMeasure::signed_measure(std::move(atoms));
}

DiscreteMeasure convolve_power(const DiscreteMeasure& a, unsigned p) {
    DiscreteMeasure result = DiscreteMeasure::signed_measure({{0, BigRational(1)}});
    for (unsigned i = 0; i < p; ++i) result = signed_convolve(result, a);
    return result;
}

BigRational total_variation(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    BigRational sum;
    for (const auto& [point, weight] : a.atoms()) sum += (weight - b.weight(point)).abs();
    for (const auto& [point, weight] : b.atoms()) {
        if (a.atoms().find(point) == a.atoms().end()) sum += weight.abs();
    }
    return sum / BigRational(2);
}

namespace {

void check_truncation_range(int n, int s) {
    if (n < 1 || n > max_symmetric_group_n) {
        throw InvalidArgumentError("n must satisfy 1 <= n <= " +
                                   std::to_string(max_symmetric_group_n));
    }
    if (s < 1 || s > n) throw InvalidArgumentError("s must satisfy 1 <= s <= n");
}

}  // namespace

std::vector<BigInt> fixed_point_counts(int n, int s) {
    check_truncation_range(n, s);
    std::vector<BigInt> counts(static_cast<std::size_t>(s) + 1);
    for (int f = 0; f <= s; ++f) {
        BigInt inner(0);
        for (int j = 0; j <= s - f; ++j) {
            BigInt term = binomial(static_cast<unsigned>(s - f), static_cast<unsigned>(j)) *
                          factorial(static_cast<unsigned>(n - f - j));
            if (j % 2 == 0) {
                inner += term;
            } else {
                inner -= term;
            }
        }
        counts[f] = binomial(static_cast<unsigned>(s), static_cast<unsigned>(f)) * inner;
    }
    return counts;
}

DiscreteMeasure sn_law(int n, int s) {
    check_truncation_range(n, s);
    const BigRational n_factorial(factorial(static_cast<unsigned>(n)));
    std::vector<BigInt> counts = fixed_point_counts(n, s);
    std::map<long long, BigRational> atoms;
    for (int f = 0; f <= s; ++f) {
        atoms[f] = BigRational(counts[f]) / n_factorial;
    }
    DiscreteMeasure law = DiscreteMeasure::probability(std::move(atoms));

    // Same law through the signed-convolution form; the two derivations must
    // coincide exactly.
    DiscreteMeasure difference = DiscreteMeasure::signed_measure(
        {{1, BigRational(1)}, {0, BigRational(-1)}});
    DiscreteMeasure combined = DiscreteMeasure::signed_measure({});
    for (int p = 0; p <= s; ++p) {
        BigRational coefficient =
            BigRational(factorial(static_cast<unsigned>(n - p))) /
            BigRational(factorial(static_cast<unsigned>(s - p))) /
            BigRational(factorial(static_cast<unsigned>(p)));
        combined = signed_add(combined, convolve_power(difference, static_cast<unsigned>(p))
                                            .scaled(coefficient));
    }
    BigRational prefactor = BigRational(factorial(static_cast<unsigned>(s))) /
                            BigRational(factorial(static_cast<unsigned>(n)));
    combined = combined.scaled(prefactor);
    if (!(combined == law)) {
        throw std::logic_error("sn_law: convolution form disagrees with the count form");
    }
    return law;
}

BigRational sn_moment(int n, int s, int k) {
    check_truncation_range(n, s);
    if (k < 0) throw InvalidArgumentError("moment order must be nonnegative");
    std::vector<BigInt> counts = fixed_point_counts(n, s);
    BigInt sum(0);
    for (int f = 0; f <= s; ++f) {
        sum += counts[f] * int_pow(BigInt(f), static_cast<unsigned>(k));
    }
    return BigRational(sum) / BigRational(factorial(static_cast<unsigned>(n)));
}

DiscreteMeasure brute_force_law(int n, int s) {
    if (n > 9) throw ResourceError("brute_force_law refuses n > 9");
    check_truncation_range(n, s);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<BigInt> histogram(static_cast<std::size_t>(s) + 1);
    do {
        int fixed = 0;
        for (int j = 0; j < s; ++j) {
            if (sigma[j] == j + 1) ++fixed;
        }
        ++histogram[fixed];
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    const BigRational n_factorial(factorial(static_cast<unsigned>(n)));
    std::map<long long, BigRational> atoms;
    for (int f = 0; f <= s; ++f) atoms[f] = BigRational(histogram[f]) / n_factorial;
    return DiscreteMeasure::probability(std::move(atoms));
}

}  // namespace qperm
