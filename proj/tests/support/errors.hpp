#ifndef CONVCODE_TESTS_ERRORS_HPP
#define CONVCODE_TESTS_ERRORS_HPP

#include <optional>

#include "convcode/error.hpp"

namespace testing_support {

/// Kind of the convcode::Error thrown by fn, or nullopt if none was thrown.
template <class Fn>
std::optional<convcode::ErrorKind> error_kind(Fn&& fn) {
    try {
        fn();
    } catch (const convcode::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace testing_support

#endif
