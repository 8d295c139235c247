#include "effrand/text_format.hpp"

#include <charconv>
#include <istream>

#include "effrand/error.hpp"

namespace effrand {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw InvalidArgument("cannot format double");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw InvalidArgument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("not a nonnegative integer: '" + std::string(text) + "'");
  }
  return v;
}

KeyValueReader::KeyValueReader(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw FormatError("line " + std::to_string(number) + ": expected 'key: value'", number);
    std::string value = line.substr(colon + 1);
    const auto first = value.find_first_not_of(' ');
    value = first == std::string::npos ? std::string{} : value.substr(first);
    lines_.push_back({line.substr(0, colon), std::move(value), number});
  }
}

const std::string& KeyValueReader::peek_key() const {
  if (at_end()) fail("unexpected end of document");
  return lines_[pos_].key;
}

std::string KeyValueReader::expect(std::string_view key) {
  if (at_end()) fail("unexpected end of document, expected '" + std::string(key) + "'");
  const Line& l = lines_[pos_];
  if (l.key != key) fail("expected key '" + std::string(key) + "', found '" + l.key + "'");
  ++pos_;
  return l.value;
}

void KeyValueReader::fail(const std::string& message) const {
  const std::size_t number = at_end() ? (lines_.empty() ? 0 : lines_.back().number) : lines_[pos_].number;
  throw FormatError("line " + std::to_string(number) + ": " + message, number);
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace effrand
