#include "effrand/solovay.hpp"

#include <istream>
#include <ostream>

#include "effrand/error.hpp"
#include "effrand/stat_tests.hpp"
#include "effrand/text_format.hpp"

namespace effrand {

namespace {

constexpr const char* kRuleName = "slln-first-violation";

// Whether a walk at (n0, s0) can still violate at some n in (max(n0, N), depth].
// Deviation is convex in S_n, so the all-zeros and all-ones continuations
// are the extreme cases.
bool can_violate_later(const SllnRule& rule, std::uint64_t n0, std::uint64_t s0) {
  for (std::uint64_t n = std::max(n0, rule.n_start) + 1; n <= rule.depth; ++n) {
    const auto lo = 2 * static_cast<std::int64_t>(s0) - static_cast<std::int64_t>(n);
    const auto hi = 2 * static_cast<std::int64_t>(s0 + (n - n0)) - static_cast<std::int64_t>(n);
    if (slln_deviates(lo, n, rule.m) || slln_deviates(hi, n, rule.m)) return true;
  }
  return false;
}

// Whether some continuation of a walk at (n0, s0) reaches `depth` without
// deviating at any n in (max(n0, N), depth].
bool can_avoid_until_depth(const SllnRule& rule, std::uint64_t n0, std::uint64_t s0) {
  std::vector<bool> alive(n0 + 1, false);  // indexed by S_n
  alive[s0] = true;
  for (std::uint64_t n = n0 + 1; n <= rule.depth; ++n) {
    std::vector<bool> next(n + 1, false);
    bool any = false;
    for (std::uint64_t s = 0; s <= n; ++s) {
      if (!((s < n && alive[s]) || (s > 0 && alive[s - 1]))) continue;
      const auto twice = 2 * static_cast<std::int64_t>(s) - static_cast<std::int64_t>(n);
      if (n > rule.n_start && slln_deviates(twice, n, rule.m)) continue;
      next[s] = true;
      any = true;
    }
    if (!any) return false;
    alive = std::move(next);
  }
  return true;
}

void enumerate(const SllnRule& rule, BitString& path, std::uint64_t ones, std::vector<BitString>& out) {
  const std::uint64_t n = path.size();
  if (n > rule.n_start && n > 0) {
    const auto twice = 2 * static_cast<std::int64_t>(ones) - static_cast<std::int64_t>(n);
    if (slln_deviates(twice, n, rule.m)) {
      out.push_back(path);
      return;
    }
  }
  if (n >= rule.depth || !can_violate_later(rule, n, ones)) return;
  for (std::uint8_t b = 0; b < 2; ++b) {
    BitString next = path;
    next.push_back(b);
    enumerate(rule, next, ones + b, out);
  }
}

// Per-length counts of first-violation paths.
std::vector<BigInt> first_violation_counts(const SllnRule& rule) {
  std::vector<BigInt> per_length(rule.depth + 1, 0);
  std::vector<BigInt> alive{1};  // alive[s]: paths of the current length, no violation yet
  for (std::uint64_t n = 1; n <= rule.depth; ++n) {
    std::vector<BigInt> next(n + 1, 0);
    for (std::uint64_t s = 0; s < alive.size(); ++s) {
      if (alive[s] == 0) continue;
      next[s] += alive[s];
      next[s + 1] += alive[s];
    }
    if (n > rule.n_start) {
      for (std::uint64_t s = 0; s <= n; ++s) {
        const auto twice = 2 * static_cast<std::int64_t>(s) - static_cast<std::int64_t>(n);
        if (next[s] != 0 && slln_deviates(twice, n, rule.m)) {
          per_length[n] += next[s];
          next[s] = 0;
        }
      }
    }
    alive = std::move(next);
  }
  return per_length;
}

std::string join_cylinders(const OpenSet& set) {
  std::string out;
  for (const auto& c : set.cylinders()) {
    if (!out.empty()) out += ' ';
    out += c.empty() ? std::string("<>") : c.to_string();
  }
  return out;
}

bool parse_bool(KeyValueReader& r, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  r.fail("expected true or false");
}

}  // namespace

Dyadic slln_rule_measure(const SllnRule& rule) {
  const auto counts = first_violation_counts(rule);
  BigInt total = 0;
  for (std::uint64_t n = 1; n <= rule.depth; ++n) total += counts[n] << (rule.depth - n);
  return Dyadic(total, rule.depth);
}

BigInt slln_rule_cylinder_count(const SllnRule& rule) {
  BigInt total = 0;
  for (const auto& c : first_violation_counts(rule)) total += c;
  return total;
}

OpenSet enumerate_slln_rule(const SllnRule& rule) {
  std::vector<BitString> out;
  BitString path;
  enumerate(rule, path, 0, out);
  return OpenSet::from_prefix_free(std::move(out));
}

Containment slln_rule_contains(const SllnRule& rule, const BitString& prefix) {
  std::uint64_t ones = 0;
  const std::uint64_t limit = std::min<std::uint64_t>(prefix.size(), rule.depth);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    ones += prefix[n - 1];
    const auto twice = 2 * static_cast<std::int64_t>(ones) - static_cast<std::int64_t>(n);
    if (n > rule.n_start && slln_deviates(twice, n, rule.m)) return Containment::certified_in;
  }
  if (prefix.size() >= rule.depth) return Containment::impossible;
  if (!can_violate_later(rule, prefix.size(), ones)) return Containment::impossible;
  // Every continuation may be forced into a violation before the depth.
  return can_avoid_until_depth(rule, prefix.size(), ones) ? Containment::undetermined : Containment::certified_in;
}

Dyadic FamilyMember::measure() const { return rule_ ? slln_rule_measure(*rule_) : openset_measure(explicit_); }

Containment FamilyMember::contains(const BitString& prefix) const {
  return rule_ ? slln_rule_contains(*rule_, prefix) : openset_contains(explicit_, prefix);
}

std::size_t FamilyMember::max_length() const { return rule_ ? rule_->depth : explicit_.max_length(); }

TestFamily build_slln_family(std::uint64_t m, std::uint64_t k_max, std::uint64_t depth) {
  if (m < 1) throw InvalidArgument("build_slln_family: m must be at least 1");
  const CoverSchedule schedule = cover_schedule(m, k_max);
  if (depth < schedule.entries.back().n_k) {
    throw InvalidArgument("build_slln_family: depth " + std::to_string(depth) + " is below N_kmax = " +
                          std::to_string(schedule.entries.back().n_k));
  }
  TestFamily family;
  family.name = "slln-m" + std::to_string(m);
  family.depth = depth;
  family.convergence = Convergence::convergent;
  double total = std::ldexp(1.0, -static_cast<int>(k_max));  // sum of 2^-k beyond k_max
  for (const auto& entry : schedule.entries) {
    const SllnRule rule{m, entry.n_k, depth};
    if (slln_rule_cylinder_count(rule) <= kExplicitCylinderLimit) {
      family.sets.emplace_back(enumerate_slln_rule(rule));
    } else {
      family.sets.emplace_back(rule);
    }
    family.budgets.push_back(slln_tail_bound(m, entry.n_k));
    total = round_up(total + family.budgets.back().value);
  }
  family.certified_total = total;
  return family;
}

bool BudgetReport::pass() const noexcept { return !first_violation().has_value(); }

std::optional<std::uint64_t> BudgetReport::first_violation() const noexcept {
  for (const auto& c : checks) {
    if (!c.within_budget) return c.index;
  }
  return std::nullopt;
}

BudgetReport family_budget_check(const TestFamily& family, std::uint64_t depth) {
  if (depth < family.depth) throw InvalidArgument("family_budget_check: depth below the family truncation depth");
  if (family.budgets.size() != family.sets.size()) throw InvalidArgument("family_budget_check: budget count mismatch");
  BudgetReport report;
  double running = 0.0;
  for (std::uint64_t i = 0; i < family.sets.size(); ++i) {
    const FamilyMember& member = family.sets[i];
    Dyadic measure;
    if (!member.is_rule() && depth <= 20 && (member.cylinders().size() << depth) <= (std::size_t{1} << 26)) {
      measure = brute_force_measure(member.cylinders(), depth);
    } else {
      measure = member.measure();
    }
    const double budget = family.budgets[i].value;
    report.checks.push_back({i, measure, budget, certified_le(measure, budget)});
    running = round_up(running + budget);
    report.partial_sums.push_back(running);
  }
  if (family.convergence == Convergence::convergent) report.certified_total = family.certified_total;
  return report;
}

MembershipProfile membership_profile(const BitSequence& bits, const TestFamily& family) {
  MembershipProfile profile;
  for (std::uint64_t i = 0; i < family.sets.size(); ++i) {
    switch (family.sets[i].contains(bits.prefix)) {
      case Containment::certified_in: profile.indices.push_back(i); break;
      case Containment::undetermined: profile.undetermined.push_back(i); break;
      case Containment::impossible: break;
    }
  }
  return profile;
}

const char* to_string(Verdict::Kind kind) noexcept {
  switch (kind) {
    case Verdict::Kind::consistent_with_random: return "consistent-with-random";
    case Verdict::Kind::suspicious: return "suspicious";
    case Verdict::Kind::hit_in_every_window: return "hit-in-every-window";
    case Verdict::Kind::no_claim: return "no-claim";
  }
  return "?";
}

Verdict borel_cantelli_verdict(const MembershipProfile& profile, const TestFamily& family, std::uint64_t window) {
  Verdict v;
  v.hits = profile.indices.size();
  if (family.convergence == Convergence::convergent) {
    v.expected_hit_bound = family.certified_total;
    v.kind = static_cast<double>(v.hits) <= v.expected_hit_bound ? Verdict::Kind::consistent_with_random
                                                                  : Verdict::Kind::suspicious;
    return v;
  }
  v.kind = Verdict::Kind::no_claim;
  if (!family.independent || window == 0 || family.sets.empty()) return v;
  bool all_hit = true;
  for (std::uint64_t first = 0; first < family.sets.size(); first += window) {
    WindowHit w{first, std::min<std::uint64_t>(first + window, family.sets.size()) - 1, std::nullopt};
    for (auto idx : profile.indices) {
      if (idx >= w.first && idx <= w.last) {
        w.first_hit = idx;
        break;
      }
    }
    all_hit = all_hit && w.first_hit.has_value();
    v.windows.push_back(w);
  }
  if (all_hit) v.kind = Verdict::Kind::hit_in_every_window;
  return v;
}

bool disjoint_support(const TestFamily& family, std::size_t max_depth) {
  std::vector<std::vector<bool>> supports;
  for (const auto& member : family.sets) {
    if (member.is_rule()) return false;
    const OpenSet& set = member.cylinders();
    const std::size_t depth = set.max_length();
    if (depth > max_depth) return false;
    const std::uint64_t total = std::uint64_t{1} << depth;
    std::vector<bool> inside(total, false);
    for (std::uint64_t word = 0; word < total; ++word) {
      for (const auto& sigma : set.cylinders()) {
        bool match = true;
        for (std::size_t i = 0; i < sigma.size() && match; ++i) match = ((word >> (depth - 1 - i)) & 1U) == sigma[i];
        if (match) {
          inside[word] = true;
          break;
        }
      }
    }
    std::vector<bool> relevant(max_depth, false);
    for (std::size_t i = 0; i < depth; ++i) {
      const std::uint64_t flip = std::uint64_t{1} << (depth - 1 - i);
      for (std::uint64_t word = 0; word < total && !relevant[i]; ++word) relevant[i] = inside[word] != inside[word ^ flip];
    }
    supports.push_back(std::move(relevant));
  }
  for (std::size_t a = 0; a < supports.size(); ++a) {
    for (std::size_t b = a + 1; b < supports.size(); ++b) {
      for (std::size_t i = 0; i < max_depth; ++i) {
        if (supports[a][i] && supports[b][i]) return false;
      }
    }
  }
  return true;
}

void write_family(std::ostream& out, const TestFamily& family) {
  out << "family: " << family.name << '\n';
  out << "depth: " << family.depth << '\n';
  out << "convergence: " << (family.convergence == Convergence::convergent ? "convergent" : "divergent") << '\n';
  out << "certified_total: " << format_double(family.certified_total) << '\n';
  out << "independent: " << (family.independent ? "true" : "false") << '\n';
  out << "sets: " << family.sets.size() << '\n';
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    const auto& member = family.sets[i];
    out << "index: " << i << '\n';
    if (member.is_rule()) {
      const auto& r = member.rule();
      out << "rule: " << kRuleName << ' ' << r.m << ' ' << r.n_start << ' ' << r.depth << '\n';
    } else {
      const std::string joined = join_cylinders(member.cylinders());
      out << "cylinders:" << (joined.empty() ? "" : " ") << joined << '\n';
    }
    const TailBound& b = family.budgets[i];
    out << "budget: " << format_double(b.value) << '\n';
    out << "formula: " << b.formula_id << '\n';
    for (const auto& [name, value] : b.parameters) out << "param: " << name << ' ' << format_double(value) << '\n';
  }
  out << "end: family\n";
}

static TestFamily parse_family(KeyValueReader& r) {
  TestFamily f;
  f.name = r.expect("family");
  f.depth = parse_u64(r.expect("depth"));
  const std::string conv = r.expect("convergence");
  if (conv == "convergent") f.convergence = Convergence::convergent;
  else if (conv == "divergent") f.convergence = Convergence::divergent;
  else r.fail("unknown convergence '" + conv + "'");
  f.certified_total = parse_double(r.expect("certified_total"));
  f.independent = parse_bool(r, r.expect("independent"));
  const std::uint64_t count = parse_u64(r.expect("sets"));
  for (std::uint64_t i = 0; i < count; ++i) {
    if (parse_u64(r.expect("index")) != i) r.fail("index out of sequence");
    if (r.peek_key() == "rule") {
      const auto parts = split_ws(r.expect("rule"));
      if (parts.size() != 4 || parts[0] != kRuleName) r.fail("malformed rule");
      f.sets.emplace_back(SllnRule{parse_u64(parts[1]), parse_u64(parts[2]), parse_u64(parts[3])});
    } else {
      std::vector<BitString> cyl;
      for (const auto& tok : split_ws(r.expect("cylinders"))) {
        cyl.push_back(tok == "<>" ? BitString{} : BitString::parse(tok));
      }
      f.sets.emplace_back(OpenSet(std::move(cyl)));
    }
    TailBound b;
    b.value = parse_double(r.expect("budget"));
    b.formula_id = r.expect("formula");
    while (!r.at_end() && r.peek_key() == "param") {
      const auto parts = split_ws(r.expect("param"));
      if (parts.size() != 2) r.fail("malformed param");
      b.parameters[parts[0]] = parse_double(parts[1]);
    }
    f.budgets.push_back(std::move(b));
  }
  if (r.expect("end") != "family") r.fail("expected 'end: family'");
  return f;
}

TestFamily read_family(std::istream& in) {
  KeyValueReader r(in);
  try {
    return parse_family(r);
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  }
}

}  // namespace effrand
