#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace effrand {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);
std::uint64_t parse_u64(std::string_view text);

/// Line-oriented `key: value` reader with line tracking for errors.
class KeyValueReader {
 public:
  explicit KeyValueReader(std::istream& in);

  bool at_end() const noexcept { return pos_ >= lines_.size(); }
  const std::string& peek_key() const;
  /// Consumes the next line, which must have the given key.
  std::string expect(std::string_view key);
  std::size_t line_number() const noexcept { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& message) const;

 private:
  struct Line {
    std::string key;
    std::string value;
    std::size_t number;
  };
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_ws(std::string_view text);

}  // namespace effrand
