#pragma once

#include <stdexcept>
#include <string>

namespace kcca {

enum class Errc {
    insufficient_data,
    degenerate_bandwidth,
    invalid_data,
    not_symmetric,
    not_positive_definite,
    view_length_mismatch,
    degenerate_regularization,
    bad_component,
    empty_input,
    too_many_folds,
    need_two_views,
    degenerate_denominator,
    malformed_csv,
    io_error,
    invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace kcca
