#include "fcaffine/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcaffine/abacus.hpp"
#include "fcaffine/affine.hpp"
#include "fcaffine/checks.hpp"
#include "fcaffine/formulas.hpp"
#include "fcaffine/golden.hpp"
#include "fcaffine/oracle.hpp"

namespace fcaffine {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  int q_cap = -1;
  int max_len = -1;
  std::string scope = "all";
  std::string format = "text";
  std::string golden_file;
  std::vector<std::string> window;
};

std::string join_window(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ",") + p;
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string case_name(oracle::ShortCase c) {
  switch (c) {
    case oracle::ShortCase::finite_block: return "finite";
    case oracle::ShortCase::intertwined: return "intertwined";
    case oracle::ShortCase::no_middle_descent: return "no middle descent";
    case oracle::ShortCase::one_middle_descent: return "one middle descent";
    case oracle::ShortCase::many_middle_descents: return "two or more middle descents";
  }
  return "";
}

void print_text_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t a = 0;
  std::size_t b = 0;
  for (const auto& [x, y] : rows) {
    a = std::max(a, x.size());
    b = std::max(b, y.size());
  }
  for (const auto& [x, y] : rows)
    out << std::setw(static_cast<int>(a)) << x << "  " << std::setw(static_cast<int>(b)) << y << '\n';
}

int cmd_series(const Options& o, std::ostream& out) {
  const AssemblyConfig cfg = o.q_cap >= 0 ? AssemblyConfig{o.n, o.q_cap} : AssemblyConfig::defaults(o.n);
  const QPoly f = assemble_f(cfg);
  if (o.format == "json") {
    json arr = json::array();
    for (int i = 0; i <= cfg.q_cap; ++i) arr.push_back(f.coeff(i).str());
    out << arr.dump() << '\n';
    return 0;
  }
  std::vector<std::pair<std::string, std::string>> rows{{"l", "f_" + std::to_string(o.n)}};
  for (int i = 0; i <= cfg.q_cap; ++i) rows.emplace_back(std::to_string(i), f.coeff(i).str());
  print_text_table(out, rows);
  return 0;
}

int report(const std::vector<CheckResult>& checks, const std::string& format, std::ostream& out) {
  const bool all = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  if (format == "json") {
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"passed", all}, {"checks", list}}.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    long failed = 0;
    for (const auto& c : checks) {
      failed += !c.passed;
      out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name
          << std::right << "  " << c.detail << '\n';
    }
    out << checks.size() << " checks, " << failed << " failed\n";
  }
  return all ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> checks;
  const bool all = o.scope == "all";
  if (all || o.scope == "golden") {
    if (o.golden_file.empty()) {
      const auto& tables = golden_tables();
      auto r = golden_checks(tables, true);
      checks.insert(checks.end(), r.begin(), r.end());
    } else {
      std::ifstream in(o.golden_file);
      if (!in) {
        err << "error: cannot read " << o.golden_file << '\n';
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      const auto tables = parse_golden_json(buf.str());
      auto r = golden_checks(tables, false);
      checks.insert(checks.end(), r.begin(), r.end());
    }
  }
  if (all || o.scope == "oracle") {
    std::vector<int> ranks;
    if (o.n)
      ranks.push_back(o.n);
    else
      ranks = {3, 4, 5, 6};
    for (int n : ranks) checks.push_back(oracle_check(n, o.max_len >= 0 ? o.max_len : default_oracle_length(n)));
  }
  if (all || o.scope == "properties") {
    auto r = property_checks();
    checks.insert(checks.end(), r.begin(), r.end());
  }
  return report(checks, o.format, out);
}

AffinePermutation window_arg(const Options& o) {
  if (o.window.empty()) throw std::invalid_argument("a window is required, e.g. `-- -4,-1,1,14`");
  return AffinePermutation(parse_window(join_window(o.window)));
}

int cmd_abacus(const Options& o, std::ostream& out) {
  const std::vector<int> entries = parse_window(join_window(o.window));
  if (entries.size() < 2) throw std::invalid_argument("window needs at least two entries");
  if (!std::is_sorted(entries.begin(), entries.end()))
    throw std::invalid_argument("abacus needs a sorted window (a minimal length coset representative)");
  const int n = static_cast<int>(entries.size());
  const Abacus given(n, std::vector<long>(entries.begin(), entries.end()));
  const AffinePermutation w0 = balanced_coset_rep(normalize(given));
  const Abacus balanced = abacus_from_coset_rep(w0);
  const Abacus normalized = normalize(balanced);
  const bool fc = is_fc_coset_rep(normalized);
  const bool is_short = classify(normalized) == ElementClass::short_element;
  const long length = abacus_length(balanced);
  std::string profile;
  if (fc && is_short) profile = lmr_profile(normalized).to_string();

  if (o.format == "json") {
    json j;
    j["window"] = w0.to_string();
    j["length"] = std::to_string(length);
    j["class"] = is_short ? "short" : "long";
    j["fully_commutative"] = fc;
    if (!profile.empty()) j["profile"] = profile;
    j["balanced"] = balanced.render();
    j["normalized"] = normalized.render();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "window             " << w0.to_string() << '\n';
  out << "length             " << length << '\n';
  out << "class              " << (is_short ? "short" : "long") << '\n';
  out << "fully commutative  " << yes_no(fc) << '\n';
  if (!profile.empty()) out << "profile            " << profile << '\n';
  out << "\nbalanced abacus\n" << balanced.render(true) << "\nnormalized abacus\n" << normalized.render(true);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const AffinePermutation w = window_arg(o);
  const long length = coxeter_length(w);
  const bool fc = is_fully_commutative(w);
  const auto [w0, u] = parabolic_decompose(w);
  const auto descents = [](const std::vector<int>& d) {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "}";
  };
  std::vector<std::pair<std::string, std::string>> rows{
      {"window", w.to_string()},
      {"length", std::to_string(length)},
      {"fully commutative", yes_no(fc)},
      {"coset representative", w0.to_string()},
      {"finite part", u.to_string()},
      {"right descents", descents(descent_set(w, Side::right))},
      {"left descents", descents(descent_set(w, Side::left))},
  };
  if (fc) {
    const Abacus a = normalize(abacus_from_coset_rep(w0));
    const bool is_short = classify(a) == ElementClass::short_element;
    rows.emplace_back("class", is_short ? "short" : "long");
    if (is_short) {
      const oracle::ShortElement e{w, w0, u, lmr_profile(a), length};
      rows.emplace_back("profile", e.profile.to_string());
      rows.emplace_back("case", case_name(oracle::short_case(e)));
    }
  }
  if (o.format == "json") {
    json j;
    for (const auto& [k, v] : rows) j[k] = v;
    out << j.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  }
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const int max_size = o.n ? o.n : 6;
  const auto table = oracle::finite_321_stats(max_size);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& [st, count] : table)
      rows.push_back({{"size", st.size},
                      {"inversions", st.inversions},
                      {"left", st.left_run},
                      {"right", st.right_run},
                      {"descents", st.descents},
                      {"count", count.str()}});
    out << rows.dump() << '\n';
    return 0;
  }
  out << "size  inv  left  right  descents  count\n";
  for (const auto& [st, count] : table)
    out << std::setw(4) << st.size << std::setw(5) << st.inversions << std::setw(6) << st.left_run << std::setw(7)
        << st.right_run << std::setw(10) << st.descents << std::setw(7) << count.str() << '\n';
  return 0;
}

int cmd_histogram(const Options& o, std::ostream& out) {
  const int max_len = o.max_len >= 0 ? o.max_len : default_oracle_length(o.n);
  const auto h = oracle::bfs_enumerate(o.n, max_len);
  if (o.format == "json") {
    out << oracle::histogram_json(h) << '\n';
    return 0;
  }
  out << "l  total  fc\n";
  for (std::size_t l = 0; l < h.counts.size(); ++l)
    out << l << "  " << h.counts[l].total.str() << "  " << h.counts[l].fc.str() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fully commutative elements of the affine symmetric group", "fcaffine"};
  app.require_subcommand(1);
  Options o;
  const auto format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* series = app.add_subcommand("series", "Coefficients of f_n(q)");
  series->add_option("--n", o.n, "Rank")->required()->check(CLI::Range(2, 64));
  series->add_option("--qcap", o.q_cap, "Highest power of q")->check(CLI::NonNegativeNumber);
  format(series);

  auto* verify = app.add_subcommand("verify", "Check computed series against reference data");
  verify->add_option("--scope", o.scope, "golden, oracle, properties or all")
      ->check(CLI::IsMember({"golden", "oracle", "properties", "all"}));
  verify->add_option("--n", o.n, "Rank for the oracle scope")->check(CLI::Range(2, 8));
  verify->add_option("--maxlen", o.max_len, "Enumeration depth for the oracle scope")->check(CLI::NonNegativeNumber);
  verify->add_option("--golden", o.golden_file, "Reference tables as JSON instead of the built-in ones");
  format(verify);

  auto* abacus = app.add_subcommand("abacus", "Render the abacus of a sorted window");
  abacus->add_option("window", o.window, "Window entries (after --)");
  format(abacus);

  auto* classify_cmd = app.add_subcommand("classify", "Full commutativity and decomposition of a window");
  classify_cmd->add_option("window", o.window, "Window entries (after --)");
  format(classify_cmd);

  auto* stats = app.add_subcommand("stats", "Descent statistics of 321-avoiding permutations");
  stats->add_option("--n", o.n, "Largest size")->check(CLI::Range(0, 10));
  format(stats);

  auto* histogram = app.add_subcommand("histogram", "Element counts by length via enumeration");
  histogram->add_option("--n", o.n, "Rank")->required()->check(CLI::Range(2, 8));
  histogram->add_option("--maxlen", o.max_len, "Enumeration depth")->check(CLI::NonNegativeNumber);
  format(histogram);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*series) return cmd_series(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*abacus) return cmd_abacus(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*stats) return cmd_stats(o, out);
    if (*histogram) return cmd_histogram(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fcaffine
