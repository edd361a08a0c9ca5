#ifndef DSC_BITSTRING_HPP
#define DSC_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dsc {

// Fixed-length binary word, packed into 64-bit words. Position 0 is the
// first transmitted bit. Unused high bits of the last word are kept zero so
// equality is a plain word compare.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

  static BitString from_string(std::string_view s);
  /// Bit i of `value` becomes position i; length <= 64.
  static BitString from_value(std::uint64_t value, std::size_t length);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool bit(std::size_t pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1; }
  void set_bit(std::size_t pos, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (pos & 63);
    if (v)
      words_[pos >> 6] |= m;
    else
      words_[pos >> 6] &= ~m;
  }
  void flip_bit(std::size_t pos) { words_[pos >> 6] ^= std::uint64_t{1} << (pos & 63); }

  void push_back(bool v) {
    if ((len_ & 63) == 0) words_.push_back(0);
    if (v) words_.back() |= std::uint64_t{1} << (len_ & 63);
    ++len_;
  }

  /// Packed value for strings of length <= 64.
  std::uint64_t packed() const;

  std::string str() const;

  bool operator==(const BitString&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order by position; a proper prefix sorts first.
bool lex_less(const BitString& a, const BitString& b);

}  // namespace dsc

#endif
