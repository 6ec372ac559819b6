// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_COMMON_ERRORS_HPP
#define CHAINLENS_COMMON_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chainlens {

/// Base of every error raised by the library. The CLI maps anything derived
/// from this to the "data error" exit code.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidHex : public Error
{
public:
    explicit InvalidHex(std::size_t position)
        : Error("invalid hex digit at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class EmptyChain : public Error
{
public:
    explicit EmptyChain(const std::string& chain)
        : Error("EmptyChain: no qualifying blocks for chain " + chain) {}
};

class IoError : public Error
{
public:
    using Error::Error;
};

/// Malformed row in a user-supplied CSV table (rates, geo, signatures, rules).
class MalformedRow : public Error
{
public:
    MalformedRow(std::string what, std::size_t line)
        : Error(what + " at line " + std::to_string(line)), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace chainlens

#endif // CHAINLENS_COMMON_ERRORS_HPP
