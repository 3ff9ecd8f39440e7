#pragma once

#include <string>
#include <vector>

#include "kcca/types.hpp"

namespace kcca {

struct StemLeafLine {
    long long stem;
    std::string leaves;  // every leaf digit, sorted ascending
    int overflow;        // leaves hidden beyond the cap when rendered
};

/// Textual stem-and-leaf display. The leaf unit is 10^unit_exponent; a
/// score contributes stem = floor(v / (10 * unit)) and the next digit as
/// its leaf. Rendering caps each stem at `leaf_cap` leaves with a "+k"
/// overflow marker and elides runs of empty interior stems with an
/// ellipsis row.
struct StemLeafDisplay {
    int unit_exponent = 0;
    int leaf_cap = 8;
    std::string header;
    std::vector<StemLeafLine> lines;

    std::string render() const;
};

StemLeafDisplay stem_leaf(const Eigen::Ref<const Vector>& scores, int leaf_cap = 8);

/// Indices (0-based) whose |score| exceeds the Tukey upper fence
/// Q3 + 1.5 IQR of the |score| distribution, sorted by descending
/// magnitude.
std::vector<Index> detect_outliers(const Eigen::Ref<const Vector>& scores);

/// Scatter of (index, score) written as a self-contained SVG file, one
/// marker per observation. Optional group labels select distinct marker
/// styles. Byte-deterministic for identical inputs.
void index_plot(const Eigen::Ref<const Vector>& scores, const std::vector<int>* labels,
                const std::string& path);

}  // namespace kcca
