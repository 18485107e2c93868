#ifndef LFSTAB_ERROR_HPP
#define LFSTAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfstab {

enum class ErrorCode {
    InvalidChar,
    TruncatedBitVector,
    UnsupportedOrder,
    OrderTooSmall,
    Empty,
    NotEndBlock,
    OrderMismatch,
    BadParams,
    UnknownFamily,
    OrderCap,
    OutOfTheoremScope,
    UnknownLemma,
    SourceError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every recoverable failure in the library; the
/// code says which contract was broken, the message says where.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lfstab

#endif
