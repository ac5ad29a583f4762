#include "bfc/core/bit_vector.hpp"

#include "bfc/error.hpp"

namespace bfc {

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = size_ == 0 ? 0 : (size_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      if (i < size_ && test(i)) v |= 1u << b;
    }
    out[d] = kDigits[v];
  }
  return out;
}

BitVector BitVector::from_hex(const std::string& hex, std::size_t size) {
  const std::size_t digits = (size + 3) / 4;
  if (hex.size() != digits)
    throw Error(ErrorCode::DimensionMismatch,
                "hex string has " + std::to_string(hex.size()) + " digits, expected " + std::to_string(digits));
  BitVector out(size);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[d];
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw Error(ErrorCode::ParseError, std::string("bad hex digit '") + c + "'");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      if ((v >> b) & 1u) {
        if (i >= size) throw Error(ErrorCode::ParseError, "hex string sets bits past the table size");
        out.set(i);
      }
    }
  }
  return out;
}

BitVector BitVector::from_msb_string(const std::string& bits) {
  BitVector out(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const char c = bits[bits.size() - 1 - k];
    if (c != '0' && c != '1') throw Error(ErrorCode::ParseError, "bit string must contain only 0 and 1");
    if (c == '1') out.set(k);
  }
  return out;
}

}  // namespace bfc
