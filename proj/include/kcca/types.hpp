#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace kcca {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index  = Eigen::Index;

/// One data source: n observations (rows) of d variables, with optional
/// row identifiers carried through from CSV ingestion.
struct DataView {
    Matrix values;
    std::vector<std::string> row_ids;  // empty or size n

    Index rows() const { return values.rows(); }
    Index cols() const { return values.cols(); }

    DataView() = default;
    explicit DataView(Matrix v) : values(std::move(v)) {}
};

}  // namespace kcca
