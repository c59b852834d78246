#ifndef CONVCODE_ERROR_HPP
#define CONVCODE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace convcode {

enum class ErrorKind {
    NonPrimeCharacteristic,
    ReducibleModulus,
    InvalidModulus,
    UnsupportedSize,
    DivisionByZero,
    FieldMismatch,
    RationalRingUnsupported,
    RankDeficient,
    DimensionMismatch,
    RationalGeneratorUnsupportedForModuleFramework,
    EmptyGenerator,
    NotObservable,
    FrameworkMismatch,
    NotControllable,
    SpliceCheckFailed,
    IntervalMismatch,
    NotMinimal,
    NoValidPartition,
    RankConditionUnachievable,
    UnsupportedBehavior,
    BudgetExceeded,
    SyntaxError,
    FieldError,
    DimensionError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace convcode

#endif
