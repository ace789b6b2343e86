#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wl/analysis.hpp"

namespace wl::analysis {

// Static SVG line chart of running visit frequencies against t, with dotted
// horizontal lines at the desired frequencies.
void write_frequency_svg(std::ostream& os, const FrequencyTrace& trace,
                         const std::vector<double>& phi, const std::string& title = "");
void write_frequency_svg(const std::string& path, const FrequencyTrace& trace,
                         const std::vector<double>& phi, const std::string& title = "");

}  // namespace wl::analysis
