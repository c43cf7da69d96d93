#include "gclust/metrics.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace gclust {

namespace {

std::vector<int> compact(const std::vector<int>& labels, int& count) {
    std::unordered_map<int, int> ids;
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = ids.try_emplace(labels[i], static_cast<int>(ids.size()));
        out[i] = it->second;
    }
    count = static_cast<int>(ids.size());
    return out;
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("label sequences differ in length");
    if (a.size() < 2) throw std::invalid_argument("need at least 2 points");

    int na = 0, nb = 0;
    std::vector<int> ca = compact(a, na);
    std::vector<int> cb = compact(b, nb);

    std::vector<std::int64_t> cells(static_cast<std::size_t>(na) * nb, 0);
    std::vector<std::int64_t> row(na, 0), col(nb, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        ++cells[static_cast<std::size_t>(ca[i]) * nb + cb[i]];
        ++row[ca[i]];
        ++col[cb[i]];
    }

    std::int64_t index = 0, sum_a = 0, sum_b = 0;
    for (std::int64_t c : cells) index += choose2(c);
    for (std::int64_t r : row) sum_a += choose2(r);
    for (std::int64_t c : col) sum_b += choose2(c);
    double total = static_cast<double>(choose2(static_cast<std::int64_t>(a.size())));

    double expected = static_cast<double>(sum_a) * static_cast<double>(sum_b) / total;
    double max_index = 0.5 * (static_cast<double>(sum_a) + static_cast<double>(sum_b));
    double denom = max_index - expected;
    double num = static_cast<double>(index) - expected;
    if (denom == 0.0) return num == 0.0 ? 1.0 : 0.0;
    return num / denom;
}

bool success(const EvalReport& report, double min_ari) {
    return report.clusters_found == report.clusters_truth && report.ari >= min_ari;
}

}  // namespace gclust
