#pragma once

#include <map>
#include <string>
#include <vector>

#include "qperm/rational.hpp"

namespace qperm {

// Finitely supported measure on the integers with exact rational weights.
// Probability instances enforce nonnegative weights summing to one; signed
// instances (convolution powers of δ1-δ0 and their combinations) do not.
// Zero-weight atoms are dropped, so equal measures have equal atom maps.
class DiscreteMeasure {
public:
    static DiscreteMeasure probability(std::map<long long, BigRational> atoms);
    static DiscreteMeasure signed_measure(std::map<long long, BigRational> atoms);
    static DiscreteMeasure dirac(long long point) {
        return probability({{point, BigRational(1)}});
    }

    bool is_signed() const { return signed_; }
    const std::map<long long, BigRational>& atoms() const { return atoms_; }
    BigRational weight(long long point) const;
    BigRational total_mass() const;
    BigRational moment(int k) const;
    DiscreteMeasure scaled(const BigRational& factor) const;

    friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
        return a.atoms_ == b.atoms_;
    }

    // {"atoms": {"0": "3/4", "1": "1/4"}, "signed": false}; round-trips.
    std::string to_json_string() const;
    static DiscreteMeasure from_json_string(const std::string& text);

private:
    DiscreteMeasure(std::map<long long, BigRational> atoms, bool is_signed);

    std::map<long long, BigRational> atoms_;
    bool signed_;
};

DiscreteMeasure signed_add(const DiscreteMeasure& a, const DiscreteMeasure& b);
DiscreteMeasure signed_convolve(const DiscreteMeasure& a, const DiscreteMeasure& b);
// Convolution power by plain iteration (p = 0 gives δ0).
DiscreteMeasure convolve_power(const DiscreteMeasure& a, unsigned p);

// Half the total absolute weight difference.
BigRational total_variation(const DiscreteMeasure& a, const DiscreteMeasure& b);

// Exact factorials stay cheap far beyond this, but the guard keeps callers
// honest about the intended range.
inline constexpr int max_symmetric_group_n = 100;

// m_f = #{σ ∈ S_n with exactly f fixed points inside {1..s}}, f = 0..s, by
// inclusion-exclusion. Σ_f m_f = n!.
std::vector<BigInt> fixed_point_counts(int n, int s);

// Law of the truncated character on S_n: weight m_f/n! at f. Also evaluates
// the equivalent signed-convolution form (s!/n!)·Σ_p ((n-p)!/(s-p)!)·
// (δ1-δ0)^{*p}/p! and insists the two agree atom for atom.
DiscreteMeasure sn_law(int n, int s);

// Σ_f m_f f^k / n!.
BigRational sn_moment(int n, int s, int k);

// Histogram over all n! permutations; the independent oracle for sn_law.
DiscreteMeasure brute_force_law(int n, int s);

}  // namespace qperm
