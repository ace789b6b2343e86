#include "wl/two_state.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "wl/rng.hpp"

namespace wl::theory {

TwoStateChain::TwoStateChain(double epsilon_, double eta_, double a_, double b_)
    : epsilon(epsilon_), eta(eta_), a(a_), b(b_) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0) || !(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("TwoStateChain: epsilon, eta must lie in [0,1]");
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("TwoStateChain: step sizes a, b must be positive");
}

std::array<std::array<double, 2>, 2> TwoStateChain::transition_matrix() const {
    return {{{1.0 - epsilon, epsilon}, {eta, 1.0 - eta}}};
}

std::array<double, 2> TwoStateChain::stationary() const {
    const double s = epsilon + eta;
    if (!(s > 0.0))
        throw std::domain_error("TwoStateChain::stationary: epsilon + eta must be positive");
    return {eta / s, epsilon / s};
}

double TwoStateChain::stationary_drift() const {
    const auto pi = stationary();
    return a * pi[0] - b * pi[1];
}

std::vector<TwoState> simulate_bounding_chain(const TwoStateChain& chain, TwoState start,
                                              long long steps, std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("simulate_bounding_chain: steps must be >= 1");
    std::vector<TwoState> out;
    out.reserve(static_cast<std::size_t>(steps));
    Rng rng(seed);
    TwoState state = start;
    for (long long k = 0; k < steps; ++k) {
        const double u = uniform01(rng);
        state = state == TwoState::Up ? (u < chain.epsilon ? TwoState::Down : TwoState::Up)
                                      : (u < chain.eta ? TwoState::Up : TwoState::Down);
        out.push_back(state);
    }
    return out;
}

namespace {

// a/b as a reduced fraction p/q via continued fractions; the hitting-time
// lattice needs integer levels, hence commensurable step sizes.
std::pair<long long, long long> commensurable_ratio(double a, double b) {
    const double x = a / b;
    long long p_prev = 1, q_prev = 0;
    long long p = static_cast<long long>(std::floor(x)), q = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(static_cast<double>(p) / static_cast<double>(q) - x) <= 1e-9 * x && q >= 1)
            break;
        if (frac < 1e-15) break;
        const double inv = 1.0 / frac;
        const long long digit = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        const long long p_next = digit * p + p_prev;
        const long long q_next = digit * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        if (q > 512) break;
    }
    if (p < 1 || q < 1 || q > 512 ||
        std::abs(static_cast<double>(p) / static_cast<double>(q) - x) > 1e-9 * x)
        throw std::domain_error(
            "expected_hitting_time: a/b must be rational (denominator <= 512) so the "
            "cumulative sum lives on an integer lattice");
    return {p, q};
}

// One truncated solve: live levels l in (-p, Lmax], V = 0 below; up-moves
// past the cap are clamped to it.  Gauss-Seidel, ascending levels so the
// freshly updated down-jump targets propagate within a sweep.
double solve_truncated(double epsilon, double eta, long long p, long long q, long long l_max,
                       double tol) {
    const std::size_t n = static_cast<std::size_t>(l_max + p);  // l = i - p + 1
    std::vector<double> vu(n, 0.0), vd(n, 0.0);
    const auto idx = [p](long long l) { return static_cast<std::size_t>(l + p - 1); };
    for (long long sweep = 0; sweep < 4000000; ++sweep) {
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const long long l = static_cast<long long>(i) - p + 1;
            const long long lu = std::min(l + p, l_max);
            const long long ld = l - q;
            const double down_u = ld > -p ? vd[idx(ld)] : 0.0;
            const double nu = 1.0 + (1.0 - epsilon) * vu[idx(lu)] + epsilon * down_u;
            const double nd = 1.0 + eta * vu[idx(lu)] + (1.0 - eta) * down_u;
            delta = std::max({delta, std::abs(nu - vu[i]), std::abs(nd - vd[i])});
            vu[i] = nu;
            vd[i] = nd;
        }
        if (delta < tol * (1.0 + vu[idx(0)])) return vu[idx(0)];
    }
    throw std::runtime_error("expected_hitting_time: inner solver failed to converge");
}

}  // namespace

double expected_hitting_time(const TwoStateChain& chain, double rel_tol) {
    if (!(chain.a * chain.eta < chain.b * chain.epsilon))
        throw std::domain_error(
            "expected_hitting_time: need a*eta < b*epsilon (negative stationary drift); "
            "the hitting time may otherwise be infinite");
    const auto [p, q] = commensurable_ratio(chain.a, chain.b);

    double prev = -1.0;
    for (long long l_max = 64 * (p + q); l_max <= (1LL << 24); l_max *= 2) {
        const double val = solve_truncated(chain.epsilon, chain.eta, p, q, l_max, rel_tol * 1e-3);
        if (prev >= 0.0 && std::abs(val - prev) <= rel_tol * std::max(1.0, std::abs(val)))
            return val;
        prev = val;
    }
    throw std::runtime_error("expected_hitting_time: level cap growth did not stabilize");
}

McEstimate hitting_time_mc(const TwoStateChain& chain, long long replicas, std::uint64_t seed,
                           unsigned workers) {
    if (replicas < 2) throw std::invalid_argument("hitting_time_mc: need at least 2 replicas");
    if (!(chain.a * chain.eta < chain.b * chain.epsilon))
        throw std::domain_error("hitting_time_mc: need a*eta < b*epsilon");
    const auto [p, q] = commensurable_ratio(chain.a, chain.b);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<long long>(static_cast<long long>(workers), replicas));

    struct Partial {
        double sum = 0.0;
        double sumsq = 0.0;
    };
    std::vector<Partial> partials(workers);
    std::vector<std::thread> pool;
    const long long per = replicas / workers;
    const long long extra = replicas % workers;

    for (unsigned w = 0; w < workers; ++w) {
        const long long mine = per + (static_cast<long long>(w) < extra ? 1 : 0);
        pool.emplace_back([&, w, mine] {
            Rng rng(splitmix64(seed + 0x51ed2700ULL * (w + 1)));
            double sum = 0.0, sumsq = 0.0;
            for (long long r = 0; r < mine; ++r) {
                TwoState state = TwoState::Up;
                long long level = 0;
                long long steps = 0;
                do {
                    const double u = uniform01(rng);
                    state = state == TwoState::Up
                                ? (u < chain.epsilon ? TwoState::Down : TwoState::Up)
                                : (u < chain.eta ? TwoState::Up : TwoState::Down);
                    level += state == TwoState::Up ? p : -q;
                    ++steps;
                } while (level > -p);
                sum += static_cast<double>(steps);
                sumsq += static_cast<double>(steps) * static_cast<double>(steps);
            }
            partials[w] = Partial{sum, sumsq};
        });
    }
    for (auto& th : pool) th.join();

    double sum = 0.0, sumsq = 0.0;
    for (const Partial& part : partials) {
        sum += part.sum;
        sumsq += part.sumsq;
    }
    const double n = static_cast<double>(replicas);
    const double mean = sum / n;
    const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
    return McEstimate{mean, std::sqrt(var / n), replicas};
}

}  // namespace wl::theory
