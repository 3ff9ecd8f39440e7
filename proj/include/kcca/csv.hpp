#pragma once

#include <string>
#include <vector>

#include "kcca/types.hpp"

namespace kcca {

/// Reads a rectangular numeric CSV into a DataView. A header row is
/// auto-detected (any non-numeric token in row 1); a leading header column
/// named "id" supplies row identifiers.
DataView parse_csv(const std::string& path);

void write_csv(const std::string& path, const Eigen::Ref<const Matrix>& values,
               const std::vector<std::string>* col_names = nullptr,
               const std::vector<std::string>* row_ids = nullptr);

}  // namespace kcca
