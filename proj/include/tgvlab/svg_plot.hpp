#pragma once

#include <string>
#include <vector>

namespace tgvlab {

/// Minimal self-contained SVG line chart: axes, 1-2-5 tick spacing, grid
/// lines, legend, optional vertical marker. Output is a pure function of
/// the inputs (fixed float formatting, no locale, no timestamps), so
/// identical data renders byte-identical files.
class SvgLinePlot {
public:
    SvgLinePlot(std::string title, std::string x_label, std::string y_label);

    void add_series(std::string name, std::vector<double> x, std::vector<double> y);
    /// Point markers instead of a connected line (used for residuals/data).
    void add_points(std::string name, std::vector<double> x, std::vector<double> y);
    void add_vertical_marker(double x, std::string label);

    std::string render() const;
    void write(const std::string& path) const;

private:
    struct Series {
        std::string name;
        std::vector<double> x, y;
        bool points_only = false;
    };
    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
    std::vector<std::pair<double, std::string>> markers_;
};

}  // namespace tgvlab
