#pragma once

#include <vector>

#include "wl/rational.hpp"

namespace wl::theory {

// Desired frequencies as exact rationals phi_i = a_i / b with a common
// denominator and gcd(a_1, ..., a_d) = 1.  Sum a_i = b is forced by
// sum phi_i = 1.
class RationalFrequencies {
public:
    explicit RationalFrequencies(const std::vector<Rational>& phi);

    int size() const { return static_cast<int>(numerators_.size()); }
    const std::vector<long long>& numerators() const { return numerators_; }
    long long denominator() const { return denominator_; }
    Rational phi(int i) const { return Rational(numerators_[static_cast<std::size_t>(i)], denominator_); }
    std::vector<double> to_doubles() const;

    friend bool operator==(const RationalFrequencies& x, const RationalFrequencies& y) {
        return x.denominator_ == y.denominator_ && x.numerators_ == y.numerators_;
    }

private:
    std::vector<long long> numerators_;
    long long denominator_;
};

// A reachable value of the log-penalty process under the Linear rule:
// z_i = n_i - phi_i * S_n for a vector of visit counts n.  The coordinates
// always sum to zero exactly.
struct LatticePoint {
    RationalFrequencies phi;
    std::vector<long long> counts;  // defining visit counts, nonnegative

    LatticePoint(RationalFrequencies phi, std::vector<long long> counts);

    long long total() const;
    Rational z(int i) const;  // 0-based coordinate
};

// Minimal positive count vector returning the process from 0 to 0:
// n = numerators / gcd (n is proportional to phi, so n_i - phi_i S_n = 0
// exactly).
LatticePoint zero_return_path(const RationalFrequencies& phi);

// Count vector k >= 0 with  z_from_i + k_i - phi_i * S_k = z_to_i  for all i,
// built as k = C*n - m + m' with n the zero-return counts, m/m' the defining
// counts of the endpoints, and C the smallest integer >= 1 making C*n - m
// nonnegative.  Throws std::domain_error if the points carry different phi.
std::vector<long long> lattice_path(const RationalFrequencies& phi, const LatticePoint& from,
                                    const LatticePoint& to);

// Exact check of the defining identity above.
bool verify_lattice_path(const RationalFrequencies& phi, const LatticePoint& from,
                         const std::vector<long long>& k, const LatticePoint& to);

}  // namespace wl::theory
