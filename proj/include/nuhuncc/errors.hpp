#ifndef NUHUNCC_ERRORS_HPP
#define NUHUNCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nuhuncc {

/// Bad parameters or misuse of an API / CLI. Exit code 1 at the CLI.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed or mismatched on-disk data. Exit code 2 at the CLI.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Cryptographic failure: decode/decrypt errors, bad key material. Exit code 3.
class CryptoError : public std::runtime_error {
public:
    explicit CryptoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nuhuncc

#endif
