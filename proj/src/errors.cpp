#include "kcca/errors.hpp"

namespace kcca {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::insufficient_data: return "InsufficientData";
        case Errc::degenerate_bandwidth: return "DegenerateBandwidth";
        case Errc::invalid_data: return "InvalidData";
        case Errc::not_symmetric: return "NotSymmetric";
        case Errc::not_positive_definite: return "NotPositiveDefinite";
        case Errc::view_length_mismatch: return "ViewLengthMismatch";
        case Errc::degenerate_regularization: return "DegenerateRegularization";
        case Errc::bad_component: return "BadComponent";
        case Errc::empty_input: return "EmptyInput";
        case Errc::too_many_folds: return "TooManyFolds";
        case Errc::need_two_views: return "NeedTwoViews";
        case Errc::degenerate_denominator: return "DegenerateDenominator";
        case Errc::malformed_csv: return "MalformedCsv";
        case Errc::io_error: return "IoError";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace kcca
