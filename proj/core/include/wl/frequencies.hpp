#pragma once

#include <vector>

namespace wl {

// User-chosen target visit proportions phi, one per bin.
// Entries must be strictly inside (0,1) and sum to 1 within 1e-12.
class DesiredFrequencies {
public:
    explicit DesiredFrequencies(std::vector<double> phi);

    int size() const { return static_cast<int>(phi_.size()); }
    const std::vector<double>& values() const { return phi_; }
    double at(int i) const { return phi_[static_cast<std::size_t>(i)]; }  // 0-based

    // Smallest of min(phi_i, 1-phi_i); the flat-histogram check degenerates
    // when the threshold c reaches this value.
    double min_margin() const;

private:
    std::vector<double> phi_;
};

}  // namespace wl
