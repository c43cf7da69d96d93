#pragma once

#include <string>

#include "gclust/engine.hpp"

namespace gclust {

struct PlotSpec {
    std::string report_path;
    std::string out_path;
    int width = 800;
    int height = 800;
    int point_count = 1000;  // evaluation points drawn, evenly subsampled

    void validate() const;
};

// Scatter plot of a run: semi-transparent circles for a subsample of the
// evaluation points colored by their predicted label, diamonds for the
// Gaussian centers colored by their cluster label. A fixed palette cycles
// over labels. Byte-identical output for identical inputs.
std::string render_svg(const RunReport& report, const PlotSpec& spec);

}  // namespace gclust
