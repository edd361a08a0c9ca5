#include "dsc/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsc {

BitString BitString::from_string(std::string_view s) {
  BitString out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      out.set_bit(i, true);
    else if (s[i] != '0')
      throw std::invalid_argument("BitString::from_string: characters must be 0 or 1");
  }
  return out;
}

BitString BitString::from_value(std::uint64_t value, std::size_t length) {
  if (length > 64) throw std::domain_error("BitString::from_value: length must be <= 64");
  if (length < 64 && (value >> length) != 0)
    throw std::domain_error("BitString::from_value: value wider than length");
  BitString out(length);
  if (length > 0) out.words_[0] = value;
  return out;
}

std::uint64_t BitString::packed() const {
  if (len_ > 64) throw std::domain_error("BitString::packed: length exceeds 64");
  return len_ == 0 ? 0 : words_[0];
}

std::string BitString::str() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

bool lex_less(const BitString& a, const BitString& b) {
  const std::size_t common = std::min(a.size(), b.size());
  const std::size_t common_words = (common + 63) / 64;
  for (std::size_t w = 0; w < common_words; ++w) {
    std::uint64_t wa = a.words()[w];
    std::uint64_t wb = b.words()[w];
    if (w + 1 == common_words && (common & 63) != 0) {
      const std::uint64_t mask = (std::uint64_t{1} << (common & 63)) - 1;
      wa &= mask;
      wb &= mask;
    }
    const std::uint64_t diff = wa ^ wb;
    if (diff != 0) {
      // lowest differing bit is the earliest position
      const std::uint64_t low = diff & (~diff + 1);
      return (wa & low) == 0;
    }
  }
  return a.size() < b.size();
}

}  // namespace dsc
