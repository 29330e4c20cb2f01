#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hpf {

// Error classes are stable identifiers: the CLI prints them verbatim and
// tests match on them.
enum class ErrorCode {
    invalid_config,
    invalid_depth,
    invalid_split,
    duplicate_key,
    not_sorted,
    format,
    not_found,
    range,
    conflict,
    injected_failure,
    not_an_archive,
    integrity,
    codec,
    io,
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_config: return "invalid-config";
        case ErrorCode::invalid_depth: return "invalid-depth";
        case ErrorCode::invalid_split: return "invalid-split";
        case ErrorCode::duplicate_key: return "duplicate-key";
        case ErrorCode::not_sorted: return "not-sorted";
        case ErrorCode::format: return "format";
        case ErrorCode::not_found: return "not-found";
        case ErrorCode::range: return "range";
        case ErrorCode::conflict: return "conflict";
        case ErrorCode::injected_failure: return "injected-failure";
        case ErrorCode::not_an_archive: return "not-an-archive";
        case ErrorCode::integrity: return "integrity";
        case ErrorCode::codec: return "codec";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

/// Malformed or truncated on-disk bytes. Carries the byte offset at which
/// decoding failed.
class FormatError : public Error {
public:
    FormatError(const std::string& message, std::uint64_t byte_offset)
        : Error(ErrorCode::format, message + " (at byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::uint64_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::uint64_t byte_offset_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace hpf
