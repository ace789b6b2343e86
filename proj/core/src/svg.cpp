#include "wl/svg.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace wl::analysis {

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 420;
constexpr int kLeft = 60;
constexpr int kRight = 20;
constexpr int kTop = 30;
constexpr int kBottom = 45;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

double x_pixel(double t, double t_max) {
    return kLeft + (kWidth - kLeft - kRight) * (t / t_max);
}

double y_pixel(double f) {
    return kTop + (kHeight - kTop - kBottom) * (1.0 - f);
}

}  // namespace

void write_frequency_svg(std::ostream& os, const FrequencyTrace& trace,
                         const std::vector<double>& phi, const std::string& title) {
    if (trace.times.empty()) throw std::invalid_argument("write_frequency_svg: empty trace");
    const double t_max = static_cast<double>(trace.times.back());

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        os << "<text x=\"" << kWidth / 2 << "\" y=\"18\" text-anchor=\"middle\" "
           << "font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";

    // axes
    os << "<line x1=\"" << kLeft << "\" y1=\"" << y_pixel(0) << "\" x2=\"" << kWidth - kRight
       << "\" y2=\"" << y_pixel(0) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << kLeft << "\" y1=\"" << y_pixel(0) << "\" x2=\"" << kLeft << "\" y2=\""
       << y_pixel(1) << "\" stroke=\"black\"/>\n";
    for (double f = 0.0; f <= 1.0001; f += 0.25) {
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << y_pixel(f) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << f
           << "</text>\n";
        os << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << y_pixel(f) << "\" x2=\"" << kLeft
           << "\" y2=\"" << y_pixel(f) << "\" stroke=\"black\"/>\n";
    }
    os << "<text x=\"" << (kWidth - kRight) << "\" y=\"" << kHeight - 14
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">t = " << trace.times.back()
       << "</text>\n";

    // dotted horizontal lines at the desired frequencies
    for (std::size_t i = 0; i < phi.size(); ++i) {
        os << "<line x1=\"" << kLeft << "\" y1=\"" << y_pixel(phi[i]) << "\" x2=\""
           << kWidth - kRight << "\" y2=\"" << y_pixel(phi[i])
           << "\" stroke=\"#444444\" stroke-dasharray=\"3,4\"/>\n";
    }

    // running frequency per bin (thin the polyline to <= 2000 points)
    const std::size_t rows = trace.times.size();
    const std::size_t step = std::max<std::size_t>(1, rows / 2000);
    for (int binIdx = 1; binIdx <= trace.d; ++binIdx) {
        os << "<polyline fill=\"none\" stroke=\"" << kPalette[(binIdx - 1) % 8]
           << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t r = 0; r < rows; r += step) {
            os << x_pixel(static_cast<double>(trace.times[r]), t_max) << ','
               << y_pixel(trace.at(r, binIdx)) << ' ';
        }
        if ((rows - 1) % step != 0)
            os << x_pixel(static_cast<double>(trace.times[rows - 1]), t_max) << ','
               << y_pixel(trace.at(rows - 1, binIdx));
        os << "\"/>\n";
        os << "<text x=\"" << kWidth - kRight - 4 << "\" y=\""
           << y_pixel(trace.at(rows - 1, binIdx)) - 6
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
           << kPalette[(binIdx - 1) % 8] << "\">bin " << binIdx << "</text>\n";
    }
    os << "</svg>\n";
}

void write_frequency_svg(const std::string& path, const FrequencyTrace& trace,
                         const std::vector<double>& phi, const std::string& title) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_frequency_svg(os, trace, phi, title);
}

}  // namespace wl::analysis
