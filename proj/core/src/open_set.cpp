#include "effrand/open_set.hpp"

#include <algorithm>
#include <memory>

#include "effrand/error.hpp"

namespace effrand {

namespace {

void sort_unique(std::vector<BitString>& v) {
  std::sort(v.begin(), v.end(), LengthLexLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool check_prefix_free(const std::vector<BitString>& sorted) {
  // Sorted by length, so only shorter strings can be prefixes of later ones.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i].size() < sorted[j].size() && sorted[i].is_prefix_of(sorted[j])) return false;
    }
  }
  return true;
}

struct TrieNode {
  bool terminal = false;
  std::unique_ptr<TrieNode> child[2];
};

// Returns true when the subtree rooted here covers its whole cylinder.
bool covered(const TrieNode* node) {
  if (node == nullptr) return false;
  if (node->terminal) return true;
  return covered(node->child[0].get()) && covered(node->child[1].get());
}

void collect(const TrieNode* node, BitString& path, std::vector<BitString>& out) {
  if (node == nullptr) return;
  if (covered(node)) {
    out.push_back(path);
    return;
  }
  for (std::uint8_t b = 0; b < 2; ++b) {
    path.push_back(b);
    collect(node->child[b].get(), path, out);
    path = path.prefix(path.size() - 1);
  }
}

}  // namespace

const char* to_string(Containment c) noexcept {
  switch (c) {
    case Containment::certified_in: return "certified-in";
    case Containment::impossible: return "impossible";
    case Containment::undetermined: return "undetermined";
  }
  return "?";
}

OpenSet::OpenSet(std::vector<BitString> cylinders) : cylinders_(std::move(cylinders)) {
  sort_unique(cylinders_);
  prefix_free_ = check_prefix_free(cylinders_);
}

OpenSet OpenSet::from_prefix_free(std::vector<BitString> cylinders) {
  OpenSet out(std::move(cylinders));
  if (!out.prefix_free_) throw InvalidArgument("cylinder collection is not prefix-free");
  return out;
}

std::size_t OpenSet::max_length() const noexcept {
  return cylinders_.empty() ? 0 : cylinders_.back().size();
}

Dyadic cylinder_measure(const BitString& sigma) { return Dyadic::inverse_power_of_two(sigma.size()); }

OpenSet minimize(const OpenSet& set) {
  TrieNode root;
  for (const auto& sigma : set.cylinders()) {
    TrieNode* node = &root;
    for (std::size_t i = 0; i < sigma.size() && !node->terminal; ++i) {
      auto& next = node->child[sigma[i]];
      if (!next) next = std::make_unique<TrieNode>();
      node = next.get();
    }
    node->terminal = true;
  }
  std::vector<BitString> out;
  BitString path;
  if (!set.empty()) collect(&root, path, out);
  return OpenSet(std::move(out));
}

Dyadic openset_measure(const OpenSet& set) {
  const OpenSet& pf = set.prefix_free() ? set : minimize(set);
  // Sum as a single fraction over 2^max_len.
  const std::size_t depth = pf.max_length();
  BigInt total = 0;
  for (const auto& sigma : pf.cylinders()) total += BigInt(1) << (depth - sigma.size());
  return Dyadic(total, depth);
}

Containment openset_contains(const OpenSet& set, const BitString& prefix) {
  const OpenSet canonical = minimize(set);
  bool compatible = false;
  for (const auto& sigma : canonical.cylinders()) {
    if (sigma.is_prefix_of(prefix)) return Containment::certified_in;
    if (prefix.is_prefix_of(sigma)) compatible = true;
  }
  return compatible ? Containment::undetermined : Containment::impossible;
}

Dyadic brute_force_measure(const OpenSet& set, std::size_t depth) {
  if (depth < set.max_length()) throw InvalidArgument("brute-force depth shorter than longest cylinder");
  if (depth > 30) throw InvalidArgument("brute-force depth limited to 30");
  std::uint64_t hits = 0;
  const std::uint64_t total = std::uint64_t{1} << depth;
  for (std::uint64_t word = 0; word < total; ++word) {
    // Bit i of the string is bit (depth - 1 - i) of word.
    for (const auto& sigma : set.cylinders()) {
      bool match = true;
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (((word >> (depth - 1 - i)) & 1U) != sigma[i]) {
          match = false;
          break;
        }
      }
      if (match) {
        ++hits;
        break;
      }
    }
  }
  return Dyadic(hits, depth);
}

}  // namespace effrand
