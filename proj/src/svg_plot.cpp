#include "gclust/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gclust {

namespace {

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char* label_color(int label) {
    // labels are 1-based; the palette cycles for large cluster counts
    int idx = (label - 1) % static_cast<int>(kPalette.size());
    if (idx < 0) idx += static_cast<int>(kPalette.size());
    return kPalette[static_cast<std::size_t>(idx)];
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Viewport {
    double min_x, max_x, min_y, max_y;
    double width, height, margin;

    double sx(double x) const {
        return margin + (x - min_x) / (max_x - min_x) * (width - 2 * margin);
    }
    double sy(double y) const {
        // SVG y grows downward
        return margin + (1.0 - (y - min_y) / (max_y - min_y)) * (height - 2 * margin);
    }
};

}  // namespace

void PlotSpec::validate() const {
    if (width < 1 || height < 1) throw std::invalid_argument("plot dimensions must be positive");
    if (point_count < 0) throw std::invalid_argument("point subsample count must be nonnegative");
}

std::string render_svg(const RunReport& report, const PlotSpec& spec) {
    spec.validate();
    if (report.bank.dim() < 2 || report.eval_x.cols() < 2)
        throw std::runtime_error("plotting needs at least 2-dimensional data");

    const int n = static_cast<int>(report.eval_x.rows());
    const int m = std::min(spec.point_count, n);
    std::vector<int> sample(m);
    for (int j = 0; j < m; ++j)
        sample[j] = static_cast<int>(static_cast<std::int64_t>(j) * n / m);

    Viewport vp{};
    vp.width = spec.width;
    vp.height = spec.height;
    vp.margin = 0.04 * std::min(spec.width, spec.height);
    vp.min_x = report.bank.centers.col(0).minCoeff();
    vp.max_x = report.bank.centers.col(0).maxCoeff();
    vp.min_y = report.bank.centers.col(1).minCoeff();
    vp.max_y = report.bank.centers.col(1).maxCoeff();
    for (int j : sample) {
        vp.min_x = std::min(vp.min_x, report.eval_x(j, 0));
        vp.max_x = std::max(vp.max_x, report.eval_x(j, 0));
        vp.min_y = std::min(vp.min_y, report.eval_x(j, 1));
        vp.max_y = std::max(vp.max_y, report.eval_x(j, 1));
    }
    if (vp.max_x <= vp.min_x) vp.max_x = vp.min_x + 1.0;
    if (vp.max_y <= vp.min_y) vp.max_y = vp.min_y + 1.0;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' '
        << spec.height << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    svg << "  <g class=\"points\" fill-opacity=\"0.35\">\n";
    for (int j : sample) {
        int label = j < static_cast<int>(report.eval_pred.size()) ? report.eval_pred[j] : 1;
        svg << "    <circle cx=\"" << px(vp.sx(report.eval_x(j, 0))) << "\" cy=\""
            << px(vp.sy(report.eval_x(j, 1))) << "\" r=\"3\" fill=\"" << label_color(label)
            << "\"/>\n";
    }
    svg << "  </g>\n";

    svg << "  <g class=\"centers\" stroke=\"#333333\" stroke-width=\"1\">\n";
    const double r = 7.0;
    for (int i = 0; i < report.bank.k(); ++i) {
        double cx = vp.sx(report.bank.centers(i, 0));
        double cy = vp.sy(report.bank.centers(i, 1));
        int label = i < static_cast<int>(report.assignment.labels.size())
                        ? report.assignment.labels[i]
                        : 1;
        svg << "    <polygon points=\"" << px(cx) << ',' << px(cy - r) << ' ' << px(cx + r)
            << ',' << px(cy) << ' ' << px(cx) << ',' << px(cy + r) << ' ' << px(cx - r) << ','
            << px(cy) << "\" fill=\"" << label_color(label) << "\"/>\n";
    }
    svg << "  </g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gclust
