#include "wl/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace wl::theory {

RationalFrequencies::RationalFrequencies(const std::vector<Rational>& phi) {
    if (phi.size() < 2)
        throw std::invalid_argument("RationalFrequencies: need at least 2 entries");
    Rational sum(0);
    for (const Rational& p : phi) {
        if (!(Rational(0) < p))
            throw std::invalid_argument("RationalFrequencies: entries must be positive");
        sum = sum + p;
    }
    if (sum != Rational(1))
        throw std::invalid_argument("RationalFrequencies: entries must sum to exactly 1");

    long long common = 1;
    for (const Rational& p : phi) common = std::lcm(common, p.den());
    numerators_.reserve(phi.size());
    for (const Rational& p : phi) numerators_.push_back(p.num() * (common / p.den()));

    long long g = 0;
    for (const long long a : numerators_) g = std::gcd(g, a);
    if (g > 1) {
        for (long long& a : numerators_) a /= g;
        common /= g;
    }
    denominator_ = common;
}

std::vector<double> RationalFrequencies::to_doubles() const {
    std::vector<double> out;
    out.reserve(numerators_.size());
    for (const long long a : numerators_)
        out.push_back(static_cast<double>(a) / static_cast<double>(denominator_));
    return out;
}

LatticePoint::LatticePoint(RationalFrequencies phi_, std::vector<long long> counts_)
    : phi(std::move(phi_)), counts(std::move(counts_)) {
    if (static_cast<int>(counts.size()) != phi.size())
        throw std::invalid_argument("LatticePoint: counts size must match phi");
    for (const long long n : counts)
        if (n < 0) throw std::invalid_argument("LatticePoint: counts must be nonnegative");
}

long long LatticePoint::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0LL);
}

Rational LatticePoint::z(int i) const {
    return Rational(counts[static_cast<std::size_t>(i)]) - phi.phi(i) * Rational(total());
}

LatticePoint zero_return_path(const RationalFrequencies& phi) {
    // n proportional to phi with gcd 1: n_i = a_i, S_n = b, so
    // n_i - phi_i * S_n = a_i - (a_i/b)*b = 0 exactly.
    return LatticePoint(phi, phi.numerators());
}

std::vector<long long> lattice_path(const RationalFrequencies& phi, const LatticePoint& from,
                                    const LatticePoint& to) {
    if (!(from.phi == phi) || !(to.phi == phi))
        throw std::domain_error("lattice_path: endpoints carry different frequencies");

    const std::vector<long long>& n = phi.numerators();
    // smallest C >= 1 with C*n_i - m_i >= 0; C >= 1 keeps the degenerate
    // from == to == 0 case a genuine zero-return cycle
    long long C = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const long long need = (from.counts[i] + n[i] - 1) / n[i];
        if (need > C) C = need;
    }

    std::vector<long long> k(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) k[i] = C * n[i] - from.counts[i] + to.counts[i];

    if (!verify_lattice_path(phi, from, k, to))
        throw std::logic_error("lattice_path: construction failed its defining identity");
    return k;
}

bool verify_lattice_path(const RationalFrequencies& phi, const LatticePoint& from,
                         const std::vector<long long>& k, const LatticePoint& to) {
    if (k.size() != from.counts.size()) return false;
    long long s_k = 0;
    for (const long long ki : k) {
        if (ki < 0) return false;
        s_k += ki;
    }
    for (int i = 0; i < phi.size(); ++i) {
        const Rational lhs =
            from.z(i) + Rational(k[static_cast<std::size_t>(i)]) - phi.phi(i) * Rational(s_k);
        if (lhs != to.z(i)) return false;
    }
    return true;
}

}  // namespace wl::theory
