#include "fairgather/codec.hpp"

#include <bit>

namespace fairgather {

std::string OmegaCode::str() const
{
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

namespace {

// Appends re(n) to out.
void append_re(std::uint64_t n, std::vector<std::uint8_t>& out)
{
    if (n == 1) return;
    const auto len = static_cast<std::size_t>(std::bit_width(n));
    append_re(len - 1, out);
    for (std::size_t i = len; i-- > 0;) out.push_back(static_cast<std::uint8_t>((n >> i) & 1U));
}

}  // namespace

OmegaCode omega_encode(std::uint64_t n)
{
    if (n == 0) throw CodecError("omega code is defined for positive integers only");
    std::vector<std::uint8_t> bits;
    append_re(n, bits);
    bits.push_back(0);
    return OmegaCode(std::move(bits));
}

DecodeResult omega_decode(std::span<const std::uint8_t> bits)
{
    std::uint64_t n = 1;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= bits.size()) throw CodecError("truncated omega codeword");
        if (bits[pos] == 0) return {n, pos + 1};
        // group of n + 1 bits, leading bit already known to be 1
        if (n >= 64) throw CodecError("omega codeword exceeds 64-bit range");
        const std::size_t group = static_cast<std::size_t>(n) + 1;
        if (pos + group > bits.size()) throw CodecError("truncated omega codeword");
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < group; ++i) value = (value << 1) | (bits[pos + i] & 1U);
        pos += group;
        n = value;
    }
}

std::size_t rho(std::uint64_t n) { return omega_encode(n).size(); }

LsbPattern lsb_pattern(const OmegaCode& code)
{
    LsbPattern p;
    p.width = code.size();
    const auto bits = code.bits();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (!bits[i]) continue;
        if (i >= 64)
            p.reachable = false;
        else
            p.residue |= std::uint64_t{1} << i;
    }
    return p;
}

bool lsb_match(std::uint64_t t, const OmegaCode& code) { return lsb_pattern(code).matches(t); }

std::vector<std::uint8_t> parse_bits(std::string_view s)
{
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw CodecError(std::string("invalid bit character '") + c + "'");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

}  // namespace fairgather
