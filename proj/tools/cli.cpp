#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "effrand/bits.hpp"
#include "effrand/bounds.hpp"
#include "effrand/error.hpp"
#include "effrand/generators.hpp"
#include "effrand/solovay.hpp"
#include "effrand/stat_tests.hpp"
#include "effrand/text_format.hpp"

namespace effrand::cli {

namespace {

using nlohmann::ordered_json;

// Raised for bad flag values; message names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kListPreview = 32;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values, std::size_t limit = kListPreview) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size() && i < limit; ++i) s << (i ? " " : "") << values[i];
  if (values.size() > limit) s << " ... (+" << values.size() - limit << " more)";
  return s.str();
}

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const InvalidArgument&) {
    throw UsageError(flag + ": not a rational number: '" + text + "'");
  }
}

// Text lines plus a parallel JSON document.
class Report {
 public:
  Report(const std::vector<std::string>& args) {
    command_ = "effrand " + join(args);
    line("command", command_);
    json_["command"] = command_;
  }

  void line(const std::string& key, const std::string& value) {
    text_ << key << ":" << (value.empty() ? "" : " ") << value << '\n';
  }
  void raw(const std::string& text) { text_ << text << '\n'; }
  ordered_json& json() { return json_; }

  int finish(int status, std::ostream& out, const std::string& json_path) {
    line("status", std::to_string(status));
    json_["exit_status"] = status;
    out << text_.str();
    if (!json_path.empty()) {
      std::ofstream f(json_path, std::ios::binary | std::ios::trunc);
      if (!f) throw InputError("cannot write json file: " + json_path);
      f << json_.dump(2) << '\n';
    }
    return status;
  }

 private:
  std::string command_;
  std::ostringstream text_;
  ordered_json json_;
};

ordered_json bound_json(const TailBound& b) {
  ordered_json j;
  j["formula"] = b.formula_id;
  j["value"] = b.value;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : b.parameters) params[k] = v;
  j["parameters"] = params;
  return j;
}

std::string bound_text(const TailBound& b) {
  std::string s = "formula=" + b.formula_id + " value=" + format_double(b.value);
  for (const auto& [k, v] : b.parameters) s += " " + k + "=" + format_double(v);
  return s;
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string kind;
  std::optional<std::uint64_t> length;
  std::uint64_t seed = 0;
  std::string p = "1/2";
  std::uint64_t stages = 8;
  std::uint64_t extension_limit = 12;
  std::uint64_t step_budget = 64;
  std::string suite = "never-accepts";
  std::string out_path;
  std::string trace_path;
  std::string json_path;
};

int cmd_generate(const GenerateOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  BitSequence seq;
  std::optional<StageTrace> trace;
  auto need_length = [&]() {
    if (!o.length) throw UsageError("--length: required for kind '" + o.kind + "'");
    return *o.length;
  };
  if (o.kind == "prng") {
    seq = gen_prng(o.seed, need_length());
  } else if (o.kind == "biased") {
    const Rational p = rational_flag("--p", o.p);
    if (p < 0 || p > 1) throw UsageError("--p: must lie in [0, 1]");
    seq = gen_biased(p, o.seed, need_length());
  } else if (o.kind == "champernowne") {
    seq = gen_champernowne(need_length());
  } else if (o.kind == "adversarial") {
    AdversarialConfig cfg;
    if (o.stages < 1) throw UsageError("--stages: must be at least 1");
    if (o.extension_limit > 24) throw UsageError("--L: at most 24");
    cfg.stages = o.stages;
    cfg.extension_limit = o.extension_limit;
    cfg.step_budget = o.step_budget;
    try {
      cfg.suite = parse_suite(o.suite);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--suite: ") + e.what());
    }
    auto result = gen_adversarial(cfg);
    seq = std::move(result.bits);
    trace = std::move(result.trace);
    if (o.length) seq.prefix = seq.prefix.prefix(*o.length);
  } else if (o.kind == "file") {
    throw UsageError("--kind: 'file' is an input source; use analyze --in");
  } else {
    throw UsageError("--kind: unknown generator '" + o.kind + "'");
  }

  if (o.out_path.empty()) {
    write_bitstream(out, seq.prefix);
    return kPass;
  }
  save_bits(o.out_path, seq.prefix);
  Report report(args);
  report.line("provenance", seq.provenance);
  report.line("length", std::to_string(seq.prefix.size()));
  report.line("output", o.out_path);
  report.json()["provenance"] = seq.provenance;
  report.json()["length"] = seq.prefix.size();
  report.json()["output"] = o.out_path;
  if (trace) {
    if (!o.trace_path.empty()) {
      std::ofstream f(o.trace_path, std::ios::binary | std::ios::trunc);
      if (!f) throw InputError("cannot write trace file: " + o.trace_path);
      write_trace(f, *trace);
      report.line("trace", o.trace_path);
      report.json()["trace"] = o.trace_path;
    }
    report.line("stages", std::to_string(trace->records.size()));
  }
  return report.finish(kPass, out, o.json_path);
}

// ----------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string in_path;
  std::vector<std::string> tests{"slln", "normality", "lil"};
  std::uint64_t m = 8;
  std::optional<std::uint64_t> n_start;
  std::uint64_t k = 1;
  std::string eps = "0.05";
  std::string lambda_upper = "1.5";
  std::string lambda_lower = "0.9";
  std::string gamma = "5/4";
  std::string alpha = "0.05";
  std::string json_path;
};

int cmd_analyze(const AnalyzeOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  for (const auto& t : o.tests) {
    if (t != "slln" && t != "normality" && t != "lil") throw UsageError("--tests: unknown test '" + t + "'");
  }
  auto wants = [&](const char* name) { return std::find(o.tests.begin(), o.tests.end(), name) != o.tests.end(); };
  if (o.m < 1) throw UsageError("--m: must be at least 1");
  const Rational eps = rational_flag("--eps", o.eps);
  if (eps <= 0) throw UsageError("--eps: must be positive");
  const Rational lambda_upper = rational_flag("--lambda-upper", o.lambda_upper);
  const Rational lambda_lower = rational_flag("--lambda-lower", o.lambda_lower);
  const Rational gamma = rational_flag("--gamma", o.gamma);
  const double alpha = to_double(rational_flag("--alpha", o.alpha));
  if (!(alpha > 0 && alpha < 1)) throw UsageError("--alpha: must lie in (0, 1)");
  if (wants("normality") && (o.k < 1 || o.k > kMaxNormalityBlock)) throw UsageError("--k: must lie in [1, 16]");
  if (wants("lil")) {
    if (lambda_upper <= 1) throw UsageError("--lambda-upper: must exceed 1");
    if (gamma <= 1 || gamma >= lambda_upper) throw UsageError("--gamma: must lie strictly between 1 and --lambda-upper");
    if (lambda_lower <= 0 || lambda_lower >= 1) throw UsageError("--lambda-lower: must lie in (0, 1)");
  }

  const BitSequence bits = load_bits(o.in_path);
  const PrefixSums sums = prefix_sums(bits);
  Report report(args);
  report.line("input", bits.provenance);
  report.line("length", std::to_string(bits.prefix.size()));
  report.json()["input"] = bits.provenance;
  report.json()["length"] = bits.prefix.size();
  ordered_json tests = ordered_json::object();
  bool failed = false;

  if (wants("slln")) {
    const std::uint64_t n_start = o.n_start ? *o.n_start : cover_schedule(o.m, 4).entries.back().n_k;
    const SllnReport r = slln_scan(sums, o.m, n_start);
    failed = failed || !r.pass();
    report.raw("[slln] m=" + std::to_string(r.m) + " N=" + std::to_string(r.n_start) +
               " violations=" + std::to_string(r.violations.size()) + " verdict=" + (r.pass() ? "pass" : "fail"));
    if (!r.violations.empty()) report.raw("[slln] at: " + join_numbers(r.violations));
    tests["slln"] = {{"m", r.m}, {"N", r.n_start}, {"violations", r.violations}, {"verdict", r.pass() ? "pass" : "fail"}};
  }

  if (wants("normality")) {
    if (bits.prefix.size() < o.k) {
      report.raw("[normality] skipped: prefix shorter than k");
      tests["normality"] = {{"k", o.k}, {"verdict", "skipped"}};
    } else {
      const NormalityReport r = normality_scan(bits, o.k, eps);
      failed = failed || !r.pass();
      report.raw("[normality] k=" + std::to_string(r.k) + " eps=" + to_string(r.eps) +
                 " flagged=" + std::to_string(r.flagged_count()) + " budget=" + format_double(r.hoeffding_budget) +
                 " verdict=" + (r.pass() ? "pass" : "fail"));
      ordered_json cells = ordered_json::array();
      for (const auto& c : r.cells) {
        report.raw("  offset=" + std::to_string(c.offset) + " block=" + c.block.to_string() +
                   " occurrences=" + std::to_string(c.occurrences) + " trials=" + std::to_string(c.trials) +
                   " frequency=" + to_string(c.frequency) + (c.flagged ? " FLAGGED" : ""));
        cells.push_back({{"offset", c.offset}, {"block", c.block.to_string()}, {"occurrences", c.occurrences},
                         {"trials", c.trials}, {"frequency", to_string(c.frequency)}, {"flagged", c.flagged}});
      }
      tests["normality"] = {{"k", r.k}, {"eps", to_string(r.eps)}, {"flagged", r.flagged_count()},
                            {"budget", r.hoeffding_budget}, {"cells", cells}, {"verdict", r.pass() ? "pass" : "fail"}};
    }
  }

  if (wants("lil")) {
    ordered_json lil;
    try {
      const auto blocks = lil_upper_scan(sums, lambda_upper, gamma);
      const LilUpperVerdict verdict = lil_upper_verdict(blocks, alpha);
      ordered_json jb = ordered_json::array();
      for (const auto& b : blocks) {
        jb.push_back({{"r", b.r}, {"n_r", b.n_r}, {"n_next", b.n_next}, {"S_nr", b.s_at_nr}, {"D_r", b.d_r},
                      {"threshold", b.upper_threshold}, {"cross", b.upper_cross}, {"budget", b.budget}});
      }
      const bool pass = verdict.pass();
      failed = failed || !pass;
      report.raw("[lil-upper] lambda=" + to_string(lambda_upper) + " gamma=" + to_string(gamma) +
                 " blocks=" + std::to_string(blocks.size()) + " crossings=" + std::to_string(verdict.crossings) +
                 " budget=" + format_double(verdict.budget_total) + " alpha=" + format_double(alpha) +
                 (verdict.significant_block ? " significant_at_r=" + std::to_string(*verdict.significant_block) : "") +
                 " verdict=" + (pass ? "pass" : "fail"));
      for (const auto& b : blocks) {
        report.raw("  r=" + std::to_string(b.r) + " n_r=" + std::to_string(b.n_r) + " n_next=" +
                   std::to_string(b.n_next) + " S=" + std::to_string(b.s_at_nr) + " D=" + std::to_string(b.d_r) +
                   " threshold=" + format_double(b.upper_threshold) + " budget=" + format_double(b.budget) +
                   (b.upper_cross ? " CROSS" : ""));
      }
      lil["upper"] = {{"lambda", to_string(lambda_upper)}, {"gamma", to_string(gamma)}, {"alpha", alpha},
                      {"blocks", jb}, {"crossings", verdict.crossings}, {"budget", verdict.budget_total},
                      {"significant_block", verdict.significant_block ? ordered_json(*verdict.significant_block)
                                                                      : ordered_json(nullptr)},
                      {"verdict", pass ? "pass" : "fail"}};
    } catch (const InvalidArgument& e) {
      report.raw(std::string("[lil-upper] skipped: ") + e.what());
      lil["upper"] = {{"verdict", "skipped"}, {"reason", e.what()}};
    }
    const LilParams params = lil_lower_params(lambda_lower);
    try {
      const auto blocks = lil_lower_scan(sums, params);
      std::uint64_t events = 0;
      std::uint64_t finals = 0;
      ordered_json jb = ordered_json::array();
      for (const auto& b : blocks) {
        events += b.lower_event ? 1 : 0;
        finals += b.final_cross ? 1 : 0;
        jb.push_back({{"r", b.r}, {"n_r", b.n_r}, {"D_r", b.d_r}, {"threshold", b.lower_threshold},
                      {"event", b.lower_event}, {"final_cross", b.final_cross}});
      }
      report.raw("[lil-lower] lambda=" + to_string(params.lambda) + " eta=" + to_string(params.eta) +
                 " gamma=" + to_string(params.gamma) + " blocks=" + std::to_string(blocks.size()) +
                 " events=" + std::to_string(events) + " final_crossings=" + std::to_string(finals) +
                 " verdict=info");
      lil["lower"] = {{"lambda", to_string(params.lambda)}, {"eta", to_string(params.eta)},
                      {"gamma", to_string(params.gamma)}, {"blocks", jb}, {"events", events},
                      {"final_crossings", finals}, {"verdict", "info"}};
    } catch (const InvalidArgument& e) {
      report.raw("[lil-lower] lambda=" + to_string(params.lambda) + " eta=" + to_string(params.eta) +
                 " gamma=" + to_string(params.gamma) + " skipped: " + e.what());
      lil["lower"] = {{"lambda", to_string(params.lambda)}, {"eta", to_string(params.eta)},
                      {"gamma", to_string(params.gamma)}, {"verdict", "skipped"}, {"reason", e.what()}};
    }
    tests["lil"] = lil;
  }

  report.json()["tests"] = tests;
  return report.finish(failed ? kFail : kPass, out, o.json_path);
}

// ------------------------------------------------------------------- bound

struct BoundOptions {
  std::string name;
  std::optional<std::uint64_t> n;
  std::optional<std::string> eps;
  std::string width = "1";
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n_start;
  std::optional<std::uint64_t> k_max;
  std::optional<std::string> x;
  std::string json_path;
};

template <typename T>
T required(const std::optional<T>& v, const std::string& flag, const std::string& name) {
  if (!v) throw UsageError(flag + ": required for bound '" + name + "'");
  return *v;
}

double real_flag(const std::string& flag, const std::string& text) { return to_double(rational_flag(flag, text)); }

int cmd_bound(const BoundOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  Report report(args);
  const std::string& name = o.name;
  auto certify = [&](const TailBound& b) {
    report.line("certificate", bound_text(b));
    report.json()["certificate"] = bound_json(b);
  };
  if (name == "hoeffding") {
    const auto n = required(o.n, "--n", name);
    if (n < 1) throw UsageError("--n: must be at least 1");
    const double eps = real_flag("--eps", required(o.eps, "--eps", name));
    if (!(eps > 0)) throw UsageError("--eps: must be positive");
    const double width = real_flag("--width", o.width);
    if (!(width > 0)) throw UsageError("--width: must be positive");
    certify(width == 1.0 ? hoeffding_fair(n, eps) : hoeffding_general(n, eps, width));
  } else if (name == "slln-tail") {
    const auto m = required(o.m, "--m", name);
    if (m < 1) throw UsageError("--m: must be at least 1");
    certify(slln_tail_bound(m, required(o.n_start, "--N", name)));
  } else if (name == "schedule") {
    const auto m = required(o.m, "--m", name);
    if (m < 1) throw UsageError("--m: must be at least 1");
    const CoverSchedule s = cover_schedule(m, required(o.k_max, "--kmax", name));
    ordered_json entries = ordered_json::array();
    for (const auto& e : s.entries) {
      report.line("entry", "k=" + std::to_string(e.k) + " N=" + std::to_string(e.n_k) + " bound=" + format_double(e.bound));
      entries.push_back({{"k", e.k}, {"N", e.n_k}, {"bound", e.bound}});
    }
    report.json()["schedule"] = {{"m", s.m}, {"entries", entries}};
  } else if (name == "deviation") {
    const double x = real_flag("--x", required(o.x, "--x", name));
    if (!(x > 0)) throw UsageError("--x: must be positive");
    const TailBound b{deviation_asymptotic(x), "deviation_asymptotic", {{"x", x}}};
    certify(b);
  } else if (name == "maximal") {
    const auto n = required(o.n, "--n", name);
    if (n < 1) throw UsageError("--n: must be at least 1");
    certify(maximal_tail_bound(n, real_flag("--x", required(o.x, "--x", name))));
  } else {
    throw UsageError("bound: unknown bound '" + name + "'");
  }
  return report.finish(kPass, out, o.json_path);
}

// ------------------------------------------------------------------ family

struct FamilyOptions {
  std::string action;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint64_t> depth;
  std::string family_path;
  std::string out_path;
  std::string in_path;
  std::uint64_t window = 4;
  std::string json_path;
};

TestFamily load_family(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open family file: " + path);
  return read_family(f);
}

int cmd_family(const FamilyOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  Report report(args);
  if (o.action == "build") {
    const auto m = required(o.m, "--m", "build");
    if (m < 1) throw UsageError("--m: must be at least 1");
    const auto k_max = required(o.k_max, "--kmax", "build");
    const auto depth = required(o.depth, "--depth", "build");
    if (o.out_path.empty()) throw UsageError("--out: required for family build");
    TestFamily fam;
    try {
      fam = build_slln_family(m, k_max, depth);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--depth: ") + e.what());
    }
    std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write family file: " + o.out_path);
    write_family(f, fam);
    report.line("family", fam.name);
    report.line("sets", std::to_string(fam.sets.size()));
    report.line("depth", std::to_string(fam.depth));
    report.line("certified_total", format_double(fam.certified_total));
    report.line("output", o.out_path);
    report.json()["family"] = {{"name", fam.name}, {"sets", fam.sets.size()}, {"depth", fam.depth},
                               {"certified_total", fam.certified_total}, {"output", o.out_path}};
    return report.finish(kPass, out, o.json_path);
  }
  if (o.family_path.empty()) throw UsageError("--family: required for family " + o.action);
  const TestFamily fam = load_family(o.family_path);
  report.line("family", fam.name + " (" + o.family_path + ")");
  if (o.action == "check") {
    const std::uint64_t depth = o.depth ? *o.depth : fam.depth;
    if (depth < fam.depth) throw UsageError("--depth: below the family truncation depth");
    const BudgetReport r = family_budget_check(fam, depth);
    ordered_json checks = ordered_json::array();
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      const auto& c = r.checks[i];
      report.line("index", std::to_string(c.index) + " measure=" + c.measure.to_string() + " budget=" +
                               format_double(c.budget) + " partial_sum=" + format_double(r.partial_sums[i]) +
                               (c.within_budget ? " ok" : " VIOLATED"));
      checks.push_back({{"index", c.index}, {"measure", c.measure.to_string()}, {"budget", c.budget},
                        {"partial_sum", r.partial_sums[i]}, {"within_budget", c.within_budget}});
    }
    report.json()["checks"] = checks;
    if (r.certified_total) {
      report.line("certified_total", format_double(*r.certified_total));
      report.json()["certified_total"] = *r.certified_total;
    }
    if (auto bad = r.first_violation()) {
      report.line("verdict", "budget violation at index " + std::to_string(*bad));
      report.json()["verdict"] = "fail";
      return report.finish(kFail, out, o.json_path);
    }
    report.line("verdict", "pass");
    report.json()["verdict"] = "pass";
    return report.finish(kPass, out, o.json_path);
  }
  if (o.action == "membership") {
    if (o.in_path.empty()) throw UsageError("--in: required for family membership");
    const BitSequence bits = load_bits(o.in_path);
    const MembershipProfile p = membership_profile(bits, fam);
    const Verdict v = borel_cantelli_verdict(p, fam, o.window);
    report.line("input", bits.provenance);
    report.line("indices", join_numbers(p.indices, p.indices.size()));
    report.line("undetermined", join_numbers(p.undetermined, p.undetermined.size()));
    report.line("verdict", std::string(to_string(v.kind)) + " hits=" + std::to_string(v.hits) +
                               " expected_hit_bound=" + format_double(v.expected_hit_bound));
    ordered_json windows = ordered_json::array();
    for (const auto& w : v.windows) {
      report.line("window", std::to_string(w.first) + ".." + std::to_string(w.last) + " first_hit=" +
                                (w.first_hit ? std::to_string(*w.first_hit) : std::string("none")));
      windows.push_back({{"first", w.first}, {"last", w.last},
                         {"first_hit", w.first_hit ? ordered_json(*w.first_hit) : ordered_json(nullptr)}});
    }
    report.json()["membership"] = {{"input", bits.provenance}, {"indices", p.indices},
                                   {"undetermined", p.undetermined}, {"verdict", to_string(v.kind)},
                                   {"hits", v.hits}, {"expected_hit_bound", v.expected_hit_bound},
                                   {"windows", windows}};
    return report.finish(v.kind == Verdict::Kind::suspicious ? kFail : kPass, out, o.json_path);
  }
  throw UsageError("family: unknown action '" + o.action + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective randomness toolkit: tail bounds, statistical scans, Solovay tests", "effrand"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Write a bitstream from a generator");
  g->add_option("--kind", gen.kind, "prng | biased | champernowne | adversarial")->required();
  g->add_option("--length", gen.length, "Number of bits (adversarial: truncate to this length)");
  g->add_option("--seed", gen.seed, "Seed for prng and biased")->capture_default_str();
  g->add_option("--p", gen.p, "Bias, rational in [0,1]")->capture_default_str();
  g->add_option("--stages", gen.stages, "Adversarial rounds")->capture_default_str();
  g->add_option("--L", gen.extension_limit, "Adversarial extension search limit in bits")->capture_default_str();
  g->add_option("--T", gen.step_budget, "Adversarial predicate step budget")->capture_default_str();
  g->add_option("--suite", gen.suite, "never-accepts | pattern-00 | counter")->capture_default_str();
  g->add_option("--out", gen.out_path, "Output bitstream file (default: standard output)");
  g->add_option("--trace", gen.trace_path, "Adversarial stage trace output file");
  g->add_option("--json", gen.json_path, "Structured report output");

  AnalyzeOptions an;
  auto* a = app.add_subcommand("analyze", "Run statistical scans on a bitstream");
  a->add_option("--in", an.in_path, "Input bitstream file")->required();
  a->add_option("--tests", an.tests, "Comma separated subset of slln,normality,lil")->delimiter(',');
  a->add_option("--m", an.m, "SLLN deviation 1/m")->capture_default_str();
  a->add_option("--N", an.n_start, "SLLN start index (default: cover schedule N_4)");
  a->add_option("--k", an.k, "Normality block length")->capture_default_str();
  a->add_option("--eps", an.eps, "Normality tolerance")->capture_default_str();
  a->add_option("--lambda-upper", an.lambda_upper, "LIL upper envelope factor (> 1)")->capture_default_str();
  a->add_option("--lambda-lower", an.lambda_lower, "LIL lower factor in (0,1)")->capture_default_str();
  a->add_option("--gamma", an.gamma, "LIL upper block ratio in (1, lambda-upper)")->capture_default_str();
  a->add_option("--alpha", an.alpha, "LIL upper significance level")->capture_default_str();
  a->add_option("--json", an.json_path, "Structured report output");

  BoundOptions bo;
  auto* b = app.add_subcommand("bound", "Print a tail-bound certificate");
  b->add_option("name", bo.name, "hoeffding | slln-tail | schedule | deviation | maximal")->required();
  b->add_option("--n", bo.n, "Number of tosses");
  b->add_option("--eps", bo.eps, "Deviation");
  b->add_option("--width", bo.width, "Range width b - a (hoeffding)")->capture_default_str();
  b->add_option("--m", bo.m, "Deviation 1/m");
  b->add_option("--N", bo.n_start, "Start index");
  b->add_option("--kmax", bo.k_max, "Last schedule index");
  b->add_option("--x", bo.x, "Threshold");
  b->add_option("--json", bo.json_path, "Structured report output");

  FamilyOptions fo;
  auto* f = app.add_subcommand("family", "Build and check truncated Solovay test families");
  f->add_option("action", fo.action, "build | check | membership")->required();
  f->add_option("--m", fo.m, "Deviation 1/m (build)");
  f->add_option("--kmax", fo.k_max, "Last schedule index (build)");
  f->add_option("--depth", fo.depth, "Truncation depth (build) or check depth");
  f->add_option("--family", fo.family_path, "Family file (check, membership)");
  f->add_option("--out", fo.out_path, "Family output file (build)");
  f->add_option("--in", fo.in_path, "Bitstream file (membership)");
  f->add_option("--window", fo.window, "Window size for divergent families")->capture_default_str();
  f->add_option("--json", fo.json_path, "Structured report output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "effrand: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (g->parsed()) return cmd_generate(gen, args, out);
    if (a->parsed()) return cmd_analyze(an, args, out);
    if (b->parsed()) return cmd_bound(bo, args, out);
    if (f->parsed()) return cmd_family(fo, args, out);
  } catch (const UsageError& e) {
    err << "effrand: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "effrand: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "effrand: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "effrand: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace effrand::cli
