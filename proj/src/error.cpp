#include "lfstab/error.hpp"

namespace lfstab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidChar: return "InvalidChar";
    case ErrorCode::TruncatedBitVector: return "TruncatedBitVector";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotEndBlock: return "NotEndBlock";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::OrderCap: return "OrderCap";
    case ErrorCode::OutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::SourceError: return "SourceError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace lfstab
