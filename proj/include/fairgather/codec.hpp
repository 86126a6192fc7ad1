#pragma once

// Elias omega code.
//
//   re(1) = empty,  re(i) = re(|B(i)| - 1) . B(i)  for i > 1,  omega(i) = re(i) . "0"
//
// where B(i) is the binary representation of i without leading zeros.
// Codewords are stored most-significant-first, exactly as written: omega(9) is
// "1110010". A holiday t selects a codeword when the low bits of t, read from
// the least significant end, spell the codeword.
//
// Note on codeword length: rho(n) is the literal length of the constructed
// codeword. The familiar closed form 1 + ceil(log n) + ceil(log(ceil(log n) - 1)) + ...
// uses ceil(log n) where the construction uses |B(n)| = floor(log n) + 1, so the
// two disagree whenever a term is an exact power of two (|B(4)| = 3 but
// ceil(log 4) = 2). The construction is authoritative here.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairgather/graph.hpp"

namespace fairgather {

class CodecError : public Error {
public:
    using Error::Error;
};

class OmegaCode {
public:
    OmegaCode() = default;
    explicit OmegaCode(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    std::span<const std::uint8_t> bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    std::string str() const;

    friend bool operator==(const OmegaCode&, const OmegaCode&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Residue class selected by a codeword: t matches iff t mod 2^width == residue.
/// Widths above 64 can only be matched when the high bits of the codeword are 0.
struct LsbPattern {
    std::uint64_t residue = 0;
    std::size_t width = 0;
    bool reachable = true;  // false if a bit above position 63 is set

    bool matches(std::uint64_t t) const noexcept
    {
        if (!reachable) return false;
        if (width >= 64) return t == residue;
        return (t & ((std::uint64_t{1} << width) - 1)) == residue;
    }
    /// 2^width, saturated at UINT64_MAX.
    std::uint64_t period() const noexcept
    {
        return width >= 64 ? UINT64_MAX : std::uint64_t{1} << width;
    }
};

struct DecodeResult {
    std::uint64_t value;
    std::size_t consumed;
    friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

OmegaCode omega_encode(std::uint64_t n);

/// Decodes the codeword at the front of `bits`; trailing bits are ignored.
/// Throws CodecError on truncated input or a value that does not fit 64 bits.
DecodeResult omega_decode(std::span<const std::uint8_t> bits);

/// Length of omega_encode(n).
std::size_t rho(std::uint64_t n);

/// The first written bit of the codeword is the least significant bit of the residue.
LsbPattern lsb_pattern(const OmegaCode& code);
bool lsb_match(std::uint64_t t, const OmegaCode& code);

/// Parses a "0"/"1" string; any other character is rejected.
std::vector<std::uint8_t> parse_bits(std::string_view s);

}  // namespace fairgather
