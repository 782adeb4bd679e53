#pragma once

#include <stdexcept>
#include <string>

namespace snchar {

/// A sequence pair (a | b) that is not the Frobenius symbol of a partition.
class InvalidSymbolError : public std::runtime_error {
public:
    explicit InvalidSymbolError(const std::string& what) : std::runtime_error(what) {}
};

/// Oracle output incompatible with being a character (e.g. value at the identity <= 0).
class NotACharacterError : public std::runtime_error {
public:
    explicit NotACharacterError(const std::string& what) : std::runtime_error(what) {}
};

/// A xi-value prefix that cannot come from any cycle type.
class NotAClassError : public std::runtime_error {
public:
    explicit NotAClassError(const std::string& what) : std::runtime_error(what) {}
};

/// Covered-table contents inconsistent with a genuine character table.
class CorruptTableError : public std::runtime_error {
public:
    explicit CorruptTableError(const std::string& what) : std::runtime_error(what) {}
};

/// Table sizes where row/column identification is impossible (n = 4 and n = 6).
class UnidentifiableError : public std::runtime_error {
public:
    explicit UnidentifiableError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed traffic on the external oracle wire protocol.
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snchar
