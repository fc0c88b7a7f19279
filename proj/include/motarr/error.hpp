#pragma once

#include <stdexcept>
#include <string>

namespace motarr {

enum class ErrorKind {
    zero_form,
    index_out_of_range,
    zero_unit,
    mixed_arrangement,
    precondition_violated,
    not_normal_crossing,
    non_concrete_coefficient,
    parse_error,
    cross_check_mismatch,
};

const char* error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// the command line front end can map it onto an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

}  // namespace motarr
