#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "indep/bounds.hpp"
#include "indep/errors.hpp"
#include "indep/incl_excl.hpp"
#include "indep/json_io.hpp"
#include "indep/montecarlo.hpp"
#include "indep/rational.hpp"
#include "indep/realizer.hpp"
#include "indep/sequences.hpp"
#include "indep/series_family.hpp"
#include "indep/transform.hpp"

namespace {

using indep::Rational;
using nlohmann::json;

std::string fmt12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& s : split_list(text)) out.push_back(indep::parse_rational(s));
  return out;
}

double parse_double_strict(const std::string& s) {
  if (s.empty()) throw indep::ParseError("empty number");
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw indep::ParseError("malformed number: '" + s + "'");
  }
  if (pos != s.size()) throw indep::ParseError("malformed number: '" + s + "'");
  return v;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& s : split_list(text)) out.push_back(parse_double_strict(s));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw indep::ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw indep::ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

// Inline --x/--t text or a JSON sequence file; the file's own entry types
// decide its mode, and --exact, when given, must agree.
struct SeqInput {
  std::string inline_text;
  std::string in_file;
  bool exact = false;

  void attach(CLI::App* sub, const std::string& flag, const std::string& what) {
    auto* opt_inline = sub->add_option(flag, inline_text, what + " as a comma list");
    auto* opt_file = sub->add_option("--in", in_file, what + " as a JSON array file");
    sub->add_flag("--exact", exact, "exact rational mode");
    opt_inline->excludes(opt_file);
  }

  [[nodiscard]] bool from_file() const { return !in_file.empty(); }

  [[nodiscard]] indep::ParsedSequence resolve() const {
    if (from_file()) {
      indep::ParsedSequence seq = indep::sequence_from_json(load_json(in_file));
      if (exact && seq.mode != indep::SeqMode::exact)
        throw indep::ModeError("--exact given but the file holds floating values");
      return seq;
    }
    indep::ParsedSequence seq;
    if (exact) {
      seq.mode = indep::SeqMode::exact;
      seq.exact = parse_rational_list(inline_text);
    } else {
      seq.mode = indep::SeqMode::floating;
      seq.floating = parse_double_list(inline_text);
    }
    return seq;
  }
};

struct FamilyOpts {
  std::string family;
  std::string c = "0";
  std::string a = "0";
  std::string ratio = "0";
  double p = 2.0;
  std::string terms;

  void attach(CLI::App* sub) {
    sub->add_option("--family", family,
                    "constant|geometric|shifted-harmonic|power|explicit")
        ->required();
    sub->add_option("--c", c, "constant/power coefficient");
    sub->add_option("--a", a, "geometric first term");
    sub->add_option("--ratio", ratio, "geometric ratio");
    sub->add_option("--p", p, "power exponent");
    sub->add_option("--terms", terms, "explicit terms, comma list of rationals");
  }

  [[nodiscard]] indep::SeriesFamily build() const {
    if (family == "constant") return indep::SeriesFamily::constant(indep::parse_rational(c));
    if (family == "geometric")
      return indep::SeriesFamily::geometric(indep::parse_rational(a),
                                            indep::parse_rational(ratio));
    if (family == "shifted-harmonic") return indep::SeriesFamily::shifted_harmonic();
    if (family == "power") return indep::SeriesFamily::power(indep::parse_rational(c), p);
    if (family == "explicit")
      return indep::SeriesFamily::explicit_list(
          indep::ProbSeq<Rational>(parse_rational_list(terms)));
    throw indep::ParseError("unknown family '" + family + "'");
  }
};

struct SampleOpts {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  std::uint32_t streams = 1;

  void attach(CLI::App* sub) {
    sub->add_option("--samples", samples, "number of samples");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--streams", streams, "independent streams, merged in order");
  }

  [[nodiscard]] indep::SampleConfig config() const { return {seed, samples, streams}; }
};

std::string g_format = "csv";

bool json_out() { return g_format == "json"; }

void attach_format(CLI::App* sub) {
  sub->add_option("--format", g_format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

std::string join_exact(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += indep::to_fraction_string(v[i]);
  }
  return out;
}

std::string join_floating(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt12(v[i]);
  }
  return out;
}

void print_sequence(const indep::SeqMode mode, const std::vector<Rational>& exact,
                    const std::vector<double>& floating) {
  if (json_out()) {
    emit(mode == indep::SeqMode::exact ? indep::sequence_to_json(exact)
                                       : indep::sequence_to_json(floating));
  } else {
    std::cout << (mode == indep::SeqMode::exact ? join_exact(exact)
                                                : join_floating(floating))
              << "\n";
  }
}

// ---- verbs ----------------------------------------------------------------

int run_transform(const SeqInput& in) {
  indep::ParsedSequence seq = in.resolve();
  if (seq.mode == indep::SeqMode::exact) {
    auto t = indep::forward(indep::ProbSeq<Rational>(seq.exact));
    print_sequence(seq.mode, t.values(), {});
  } else {
    auto t = indep::forward(indep::ProbSeq<double>(seq.floating));
    print_sequence(seq.mode, {}, t.values());
  }
  return 0;
}

int run_invert(const SeqInput& in) {
  indep::ParsedSequence seq = in.resolve();
  if (seq.mode == indep::SeqMode::exact) {
    auto x = indep::inverse(indep::DisjointWeights<Rational>(seq.exact));
    print_sequence(seq.mode, x.values(), {});
  } else {
    auto x = indep::inverse(indep::DisjointWeights<double>(seq.floating));
    print_sequence(seq.mode, {}, x.values());
  }
  return 0;
}

int run_union(const SeqInput& in) {
  indep::ParsedSequence seq = in.resolve();
  if (seq.mode == indep::SeqMode::exact) {
    Rational u = indep::union_prob(indep::ProbSeq<Rational>(seq.exact));
    if (json_out())
      emit(json(indep::to_fraction_string(u)));
    else
      std::cout << indep::to_fraction_string(u) << "\n";
  } else {
    double u = indep::union_prob(indep::ProbSeq<double>(seq.floating));
    if (json_out())
      emit(json(u));
    else
      std::cout << fmt12(u) << "\n";
  }
  return 0;
}

int run_sym_sums(const SeqInput& in) {
  indep::ParsedSequence seq = in.resolve();
  if (seq.mode == indep::SeqMode::exact) {
    indep::ProbSeq<Rational> x(seq.exact);
    auto s = indep::elementary_sums(x);
    auto partial = indep::alternating_partials(x);
    if (json_out()) {
      json rows = json::array();
      for (std::size_t k = 1; k <= s.size(); ++k)
        rows.push_back({{"k", k},
                        {"S_k", indep::to_fraction_string(s[k - 1])},
                        {"partial", indep::to_fraction_string(partial[k])}});
      emit(rows);
    } else {
      std::cout << "k,S_k,partial alternating sum\n";
      for (std::size_t k = 1; k <= s.size(); ++k)
        std::cout << k << "," << indep::to_fraction_string(s[k - 1]) << ","
                  << indep::to_fraction_string(partial[k]) << "\n";
    }
  } else {
    indep::ProbSeq<double> x(seq.floating);
    auto s = indep::elementary_sums(x);
    auto partial = indep::alternating_partials(x);
    if (json_out()) {
      json rows = json::array();
      for (std::size_t k = 1; k <= s.size(); ++k)
        rows.push_back({{"k", k}, {"S_k", s[k - 1]}, {"partial", partial[k]}});
      emit(rows);
    } else {
      std::cout << "k,S_k,partial alternating sum\n";
      for (std::size_t k = 1; k <= s.size(); ++k)
        std::cout << k << "," << fmt12(s[k - 1]) << "," << fmt12(partial[k]) << "\n";
    }
  }
  return 0;
}

int run_bonferroni(const SeqInput& in, std::size_t r) {
  indep::ParsedSequence seq = in.resolve();
  if (seq.mode == indep::SeqMode::exact) {
    auto b = indep::bonferroni(indep::ProbSeq<Rational>(seq.exact), r);
    if (json_out()) {
      emit(json{{"lower_raw", indep::to_fraction_string(b.lower_raw)},
                {"upper_raw", indep::to_fraction_string(b.upper_raw)},
                {"lower", indep::to_fraction_string(b.lower)},
                {"upper", indep::to_fraction_string(b.upper)}});
    } else {
      std::cout << "lower_raw,upper_raw,lower,upper\n"
                << indep::to_fraction_string(b.lower_raw) << ","
                << indep::to_fraction_string(b.upper_raw) << ","
                << indep::to_fraction_string(b.lower) << ","
                << indep::to_fraction_string(b.upper) << "\n";
    }
  } else {
    auto b = indep::bonferroni(indep::ProbSeq<double>(seq.floating), r);
    if (json_out()) {
      emit(json{{"lower_raw", b.lower_raw},
                {"upper_raw", b.upper_raw},
                {"lower", b.lower},
                {"upper", b.upper}});
    } else {
      std::cout << "lower_raw,upper_raw,lower,upper\n"
                << fmt12(b.lower_raw) << "," << fmt12(b.upper_raw) << ","
                << fmt12(b.lower) << "," << fmt12(b.upper) << "\n";
    }
  }
  return 0;
}

int run_tail_cert(const FamilyOpts& fam, std::size_t k) {
  indep::TailCertificate cert = indep::tail_certificate(fam.build(), k);
  if (json_out()) {
    emit(json{{"next_sum_upper", cert.next_sum_upper},
              {"remainder_bound", cert.remainder_bound},
              {"decay_ratio", cert.decay_ratio}});
  } else {
    std::cout << "next_sum_upper,remainder_bound,decay_ratio\n"
              << fmt12(cert.next_sum_upper) << "," << fmt12(cert.remainder_bound)
              << "," << fmt12(cert.decay_ratio) << "\n";
  }
  return 0;
}

struct GridOpts {
  std::string kind = "U";
  std::string n_list = "1,2,3,4,5,inf";
  double from = -1;  // negative = kind-dependent default
  double to = -1;
  double step = -1;
};

int run_bounds_table(const GridOpts& g) {
  bool s_axis = g.kind == "U" || g.kind == "Uenv" || g.kind == "supT";
  bool u_axis = g.kind == "S" || g.kind == "infX";
  if (!s_axis && !u_axis) throw indep::ParseError("unknown kind '" + g.kind + "'");

  double from = g.from >= 0 ? g.from : 0.0;
  double to = g.to >= 0 ? g.to : (s_axis ? 5.0 : 0.99);
  double step = g.step > 0 ? g.step : (s_axis ? 0.05 : 0.01);
  if (to < from) throw indep::ParseError("grid end before start");
  auto points = static_cast<std::size_t>((to - from) / step + 1e-9);

  std::vector<std::optional<std::uint64_t>> ns;  // nullopt = infinity
  if (g.kind == "Uenv") {
    ns.push_back(1);  // placeholder, the witness column is per-row
  } else {
    for (const std::string& tok : split_list(g.n_list)) {
      if (tok == "inf") {
        ns.push_back(std::nullopt);
      } else {
        long long v = 0;
        try {
          v = std::stoll(tok);
        } catch (const std::exception&) {
          throw indep::ParseError("bad N '" + tok + "'");
        }
        if (v < 1) throw indep::ParseError("N must be >= 1 or inf");
        ns.push_back(static_cast<std::uint64_t>(v));
      }
    }
  }

  json rows = json::array();
  if (!json_out()) std::cout << "kind,N,arg,value\n";
  auto emit_row = [&](const std::string& n_col, double arg, const std::string& value) {
    if (json_out())
      rows.push_back({{"kind", g.kind}, {"N", n_col}, {"arg", arg}, {"value", value}});
    else
      std::cout << g.kind << "," << n_col << "," << fmt12(arg) << "," << value << "\n";
  };

  for (const auto& n : ns) {
    for (std::size_t i = 0; i <= points; ++i) {
      double arg = from + static_cast<double>(i) * step;
      if (g.kind == "Uenv") {
        indep::Envelope env = indep::best_lower_union(arg);
        emit_row(std::to_string(env.witness_n), arg, fmt12(env.value));
        continue;
      }
      std::string n_col = n ? std::to_string(*n) : "inf";
      if (n && s_axis && arg > static_cast<double>(*n)) continue;  // out of domain
      double value = 0;
      if (g.kind == "U") {
        value = n ? indep::lower_union_given_sum(*n, arg)
                  : indep::lower_union_given_sum_infinite(arg);
      } else if (g.kind == "S") {
        if (!n && arg == 1.0) {
          emit_row(n_col, arg, "inf");
          continue;
        }
        value = n ? indep::upper_sum_given_union(*n, arg)
                  : indep::upper_sum_given_union_infinite(arg);
      } else if (g.kind == "supT") {
        value = n ? indep::max_union_given_sum(*n, arg) : indep::max_union_given_sum(arg);
      } else {  // infX
        value = n ? indep::min_sum_given_union(*n, arg) : indep::min_sum_given_union(arg);
      }
      emit_row(n_col, arg, fmt12(value));
    }
  }
  if (json_out()) emit(rows);
  return 0;
}

int run_best_bound(double s) {
  indep::Envelope env = indep::best_lower_union(s);
  if (json_out()) {
    emit(json{{"kind", "Uenv"}, {"N", env.witness_n}, {"arg", s}, {"value", env.value}});
  } else {
    std::cout << "kind,N,arg,value\n"
              << "Uenv," << env.witness_n << "," << fmt12(s) << "," << fmt12(env.value)
              << "\n";
  }
  return 0;
}

int run_realize(const std::string& x_text, std::size_t max_n, const std::string& out) {
  indep::Construction c =
      indep::realize(indep::ProbSeq<Rational>(parse_rational_list(x_text)), max_n);
  std::string doc = indep::construction_to_json(c).dump(2) + "\n";
  if (out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(out);
    if (!f) throw indep::Error("cannot write '" + out + "'");
    f << doc;
  }
  return 0;
}

int run_verify(const std::string& in_file) {
  indep::Construction c = indep::construction_from_json(load_json(in_file));
  indep::IndependenceReport report = indep::verify_independence(c);
  if (report.ok) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << "independence fails for " << report.failures.size() << " subset(s)\n";
  for (indep::AtomMask mask : report.failures) {
    std::string events;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!(mask & (indep::AtomMask{1} << i))) continue;
      if (!events.empty()) events += ",";
      events += std::to_string(i + 1);
    }
    std::cout << "events " << events << ": measure "
              << indep::to_fraction_string(indep::intersection_measure(c, mask))
              << "\n";
  }
  return 1;
}

int run_sample(const SeqInput& in, const std::string& method, const SampleOpts& s) {
  indep::Estimate est{};
  if (method == "geometric") {
    if (!in.from_file())
      throw indep::ParseError("geometric sampling needs --in CONSTRUCTION.json");
    indep::Construction c = indep::construction_from_json(load_json(in.in_file));
    est = indep::estimate_union_geometric(c, s.config());
  } else if (method == "bernoulli") {
    std::vector<double> probs;
    if (in.from_file()) {
      json doc = load_json(in.in_file);
      if (doc.is_object()) {
        for (const Rational& p : indep::construction_from_json(doc).probs)
          probs.push_back(indep::to_double(p));
      } else {
        indep::ParsedSequence seq = indep::sequence_from_json(doc);
        if (seq.mode == indep::SeqMode::exact) {
          for (const Rational& p : seq.exact) probs.push_back(indep::to_double(p));
        } else {
          probs = seq.floating;
        }
      }
    } else {
      probs = parse_double_list(in.inline_text);
    }
    est = indep::estimate_union_bernoulli(indep::ProbSeq<double>(probs), s.config());
  } else {
    throw indep::ParseError("unknown method '" + method + "'");
  }
  if (json_out()) {
    emit(json{{"method", method},
              {"samples", est.n_samples},
              {"estimate", est.value},
              {"stderr", est.standard_error}});
  } else {
    std::cout << "method,samples,estimate,stderr\n"
              << method << "," << est.n_samples << "," << fmt12(est.value) << ","
              << fmt12(est.standard_error) << "\n";
  }
  return 0;
}

int run_bc_scan(const FamilyOpts& fam, std::size_t n_max, const SampleOpts& s) {
  std::vector<indep::ScanRow> rows =
      indep::borel_cantelli_scan(fam.build(), n_max, s.config());
  if (json_out()) {
    json arr = json::array();
    for (const indep::ScanRow& row : rows)
      arr.push_back({{"N", row.n_events},
                     {"exact", indep::to_fraction_string(row.exact_union)},
                     {"empirical", row.empirical},
                     {"stderr", row.standard_error}});
    emit(arr);
  } else {
    std::cout << "N,exact,empirical,stderr\n";
    for (const indep::ScanRow& row : rows)
      std::cout << row.n_events << "," << fmt12(indep::to_double(row.exact_union))
                << "," << fmt12(row.empirical) << "," << fmt12(row.standard_error)
                << "\n";
  }
  return 0;
}

int run_counterexample(double x, std::uint64_t n) {
  indep::CounterexampleReport rep = indep::dependent_counterexample(x, n);
  if (json_out()) {
    emit(json{{"union", rep.union_prob},
              {"bound_rhs", rep.bound_rhs},
              {"violated", rep.violated}});
  } else {
    std::cout << "union,bound_rhs,violated\n"
              << fmt12(rep.union_prob) << "," << fmt12(rep.bound_rhs) << ","
              << (rep.violated ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unions of independent events: exact transforms, sharp bounds, "
               "geometric realizations, Monte Carlo checks"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* t = app.add_subcommand("transform", "first-occurrence weights of a sequence");
  auto t_in = std::make_shared<SeqInput>();
  t_in->attach(t, "--x", "event probabilities");
  attach_format(t);
  t->callback([&exit_code, t_in] { exit_code = run_transform(*t_in); });

  auto* iv = app.add_subcommand("invert", "recover probabilities from weights");
  auto iv_in = std::make_shared<SeqInput>();
  iv_in->attach(iv, "--t", "first-occurrence weights");
  attach_format(iv);
  iv->callback([&exit_code, iv_in] { exit_code = run_invert(*iv_in); });

  auto* un = app.add_subcommand("union", "P(at least one event)");
  auto un_in = std::make_shared<SeqInput>();
  un_in->attach(un, "--x", "event probabilities");
  attach_format(un);
  un->callback([&exit_code, un_in] { exit_code = run_union(*un_in); });

  auto* sy = app.add_subcommand("sym-sums",
                                "elementary symmetric sums and alternating partials");
  auto sy_in = std::make_shared<SeqInput>();
  sy_in->attach(sy, "--x", "event probabilities");
  attach_format(sy);
  sy->callback([&exit_code, sy_in] { exit_code = run_sym_sums(*sy_in); });

  auto* bf = app.add_subcommand("bonferroni", "truncated inclusion-exclusion sandwich");
  auto bf_in = std::make_shared<SeqInput>();
  auto bf_r = std::make_shared<std::size_t>(1);
  bf_in->attach(bf, "--x", "event probabilities");
  bf->add_option("--r", *bf_r, "sandwich order (uses 2r-1 and 2r terms)")->required();
  attach_format(bf);
  bf->callback([&exit_code, bf_in, bf_r] { exit_code = run_bonferroni(*bf_in, *bf_r); });

  auto* tc = app.add_subcommand("tail-cert",
                                "geometric-decay certificate for symmetric sums");
  auto tc_fam = std::make_shared<FamilyOpts>();
  auto tc_k = std::make_shared<std::size_t>(1);
  tc_fam->attach(tc);
  tc->add_option("--K", *tc_k, "truncation index")->required();
  attach_format(tc);
  tc->callback([&exit_code, tc_fam, tc_k] { exit_code = run_tail_cert(*tc_fam, *tc_k); });

  auto* bt = app.add_subcommand("bounds-table", "bound values over a grid, as CSV");
  auto bt_g = std::make_shared<GridOpts>();
  bt->add_option("--kind", bt_g->kind, "U|S|Uenv|supT|infX");
  bt->add_option("--N,--n", bt_g->n_list, "comma list of N values, inf allowed");
  bt->add_option("--from", bt_g->from, "grid start");
  bt->add_option("--to", bt_g->to, "grid end");
  bt->add_option("--step", bt_g->step, "grid step");
  attach_format(bt);
  bt->callback([&exit_code, bt_g] { exit_code = run_bounds_table(*bt_g); });

  auto* bb = app.add_subcommand("best-bound", "best union lower bound over all N");
  auto bb_s = std::make_shared<double>(0);
  bb->add_option("--s", *bb_s, "sum of probabilities")->required();
  attach_format(bb);
  bb->callback([&exit_code, bb_s] { exit_code = run_best_bound(*bb_s); });

  auto* rz = app.add_subcommand("realize",
                                "independent events as rectangles in the unit square");
  auto rz_x = std::make_shared<std::string>();
  auto rz_max = std::make_shared<std::size_t>(indep::kDefaultMaxEvents);
  auto rz_out = std::make_shared<std::string>();
  rz->add_option("--x", *rz_x, "event probabilities, comma list of rationals")
      ->required();
  rz->add_option("--max-n", *rz_max, "event cap");
  rz->add_option("--out", *rz_out, "output file (default stdout)");
  rz->callback([&exit_code, rz_x, rz_max, rz_out] {
    exit_code = run_realize(*rz_x, *rz_max, *rz_out);
  });

  auto* vf = app.add_subcommand("verify", "check a construction for independence");
  auto vf_in = std::make_shared<std::string>();
  vf->add_option("--in", *vf_in, "construction JSON file")->required();
  vf->callback([&exit_code, vf_in] { exit_code = run_verify(*vf_in); });

  auto* sm = app.add_subcommand("sample", "Monte Carlo union estimate");
  auto sm_in = std::make_shared<SeqInput>();
  auto sm_method = std::make_shared<std::string>("bernoulli");
  auto sm_opts = std::make_shared<SampleOpts>();
  sm_in->attach(sm, "--x", "event probabilities");
  sm->add_option("--method", *sm_method, "bernoulli|geometric");
  sm_opts->attach(sm);
  attach_format(sm);
  sm->callback([&exit_code, sm_in, sm_method, sm_opts] {
    exit_code = run_sample(*sm_in, *sm_method, *sm_opts);
  });

  auto* bc = app.add_subcommand("bc-scan",
                                "exact vs simulated union probabilities by truncation");
  auto bc_fam = std::make_shared<FamilyOpts>();
  auto bc_n = std::make_shared<std::size_t>(50);
  auto bc_opts = std::make_shared<SampleOpts>();
  bc_fam->attach(bc);
  bc->add_option("--n-max", *bc_n, "largest truncation");
  bc_opts->attach(bc);
  attach_format(bc);
  bc->callback([&exit_code, bc_fam, bc_n, bc_opts] {
    exit_code = run_bc_scan(*bc_fam, *bc_n, *bc_opts);
  });

  auto* ce = app.add_subcommand("counterexample",
                                "identical events beat the independent bound");
  auto ce_x = std::make_shared<double>(0.5);
  auto ce_n = std::make_shared<std::uint64_t>(2);
  ce->add_option("--x", *ce_x, "probability of the repeated event")->required();
  ce->add_option("--N", *ce_n, "number of copies");
  attach_format(ce);
  ce->callback([&exit_code, ce_x, ce_n] {
    exit_code = run_counterexample(*ce_x, *ce_n);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const indep::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const indep::ModeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const indep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
