#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace effrand {

/// Finite binary string. Symbols are stored one per byte, each 0 or 1.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters; anything else throws InvalidArgument.
  static BitString parse(std::string_view text);
  static BitString repeat(std::uint8_t bit, std::size_t count);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> view() const noexcept { return bits_; }

  void push_back(std::uint8_t bit);
  void append(const BitString& tail);
  BitString prefix(std::size_t n) const;
  BitString complement() const;

  bool is_prefix_of(const BitString& other) const noexcept;
  /// True when one string is a prefix of the other.
  bool compatible_with(const BitString& other) const noexcept;
  std::size_t count_ones() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Orders by length first, then lexicographically.
struct LengthLexLess {
  bool operator()(const BitString& a, const BitString& b) const noexcept;
};

/// Realized prefix of a conceptual infinite sequence, with where it came from.
struct BitSequence {
  BitString prefix;
  std::string provenance;
};

// Bitstream text format: '0' and '1', whitespace (space, tab, CR, LF)
// ignored, every other byte is a FormatError naming its offset.
BitString parse_bitstream(std::string_view text);
BitSequence load_bits(const std::filesystem::path& path);
/// Writes 64 symbols per line, newline terminated; empty input writes nothing.
void write_bitstream(std::ostream& out, const BitString& bits);
void save_bits(const std::filesystem::path& path, const BitString& bits);

}  // namespace effrand
