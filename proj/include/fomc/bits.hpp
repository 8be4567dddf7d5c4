#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fomc {

// Bitstring value flowing through computation graphs and circuits.
// Bit 0 is the least significant position of whatever it encodes.
using Bits = std::vector<uint8_t>;

inline Bits bits_from_u64(uint64_t v, int width) {
  Bits b(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) b[i] = static_cast<uint8_t>((v >> i) & 1);
  return b;
}

inline uint64_t bits_to_u64(const Bits& b) {
  uint64_t v = 0;
  for (std::size_t i = 0; i < b.size() && i < 64; ++i)
    if (b[i]) v |= (uint64_t{1} << i);
  return v;
}

inline Bits bits_concat(const std::vector<Bits>& parts) {
  Bits out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Bits bits_slice(const Bits& b, std::size_t from, std::size_t len) {
  return Bits(b.begin() + from, b.begin() + from + len);
}

inline std::string bits_to_string(const Bits& b) {
  std::string s;
  s.reserve(b.size());
  for (auto v : b) s.push_back(v ? '1' : '0');
  return s;
}

inline Bits bits_from_string(const std::string& s) {
  Bits b;
  b.reserve(s.size());
  for (char c : s) b.push_back(c == '1' ? 1 : 0);
  return b;
}

}  // namespace fomc
