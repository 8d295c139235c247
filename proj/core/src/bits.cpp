#include "effrand/bits.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "effrand/error.hpp"

namespace effrand {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw InvalidArgument("bit value out of range");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidArgument("not a bitstring: '" + std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  BitString out;
  out.bits_ = std::move(bits);
  return out;
}

BitString BitString::repeat(std::uint8_t bit, std::size_t count) {
  return BitString(std::vector<std::uint8_t>(count, bit));
}

void BitString::push_back(std::uint8_t bit) {
  if (bit > 1) throw InvalidArgument("bit value out of range");
  bits_.push_back(bit);
}

void BitString::append(const BitString& tail) {
  bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
}

BitString BitString::prefix(std::size_t n) const {
  BitString out;
  out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
  return out;
}

BitString BitString::complement() const {
  BitString out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  return size() <= other.size() && std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

bool BitString::compatible_with(const BitString& other) const noexcept {
  return is_prefix_of(other) || other.is_prefix_of(*this);
}

std::size_t BitString::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitString::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

bool LengthLexLess::operator()(const BitString& a, const BitString& b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  auto av = a.view();
  auto bv = b.view();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

BitString parse_bitstream(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    switch (c) {
      case '0':
      case '1':
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
        break;
      case ' ':
      case '\t':
      case '\n':
      case '\r':
        break;
      default: {
        std::ostringstream msg;
        msg << "bitstream format error: unexpected byte 0x" << std::hex
            << static_cast<int>(static_cast<unsigned char>(c)) << std::dec << " at offset " << i;
        throw FormatError(msg.str(), i);
      }
    }
  }
  return BitString(std::move(bits));
}

BitSequence load_bits(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return {parse_bitstream(text), "file:" + path.string()};
}

void write_bitstream(std::ostream& out, const BitString& bits) {
  constexpr std::size_t kLine = 64;
  std::string line;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    line.push_back(static_cast<char>('0' + bits[i]));
    if (line.size() == kLine || i + 1 == bits.size()) {
      out << line << '\n';
      line.clear();
    }
  }
}

void save_bits(const std::filesystem::path& path, const BitString& bits) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write output file: " + path.string());
  write_bitstream(out, bits);
}

}  // namespace effrand
