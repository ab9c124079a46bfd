#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeseg/cubeseg.hpp"

namespace cubeseg::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { plain, json, csv };

// Largest kmax accepted by fq, hypercubic --q and counterexample; the
// table costs O(qmax * kmax^2).
constexpr long long kMaxTableK = 1 << 16;
constexpr long long kMaxTableQ = 64;

struct Config {
  std::string command;
  std::optional<long long> dim, q, k, kmax, qmax, split;
  std::string input_path;
  std::string input_format = "decimal";
  std::string output_format = "plain";
  std::string kernel = "bitparallel";
  std::string source, target;
  std::optional<long long> budget;
  long long argmax_cap = static_cast<long long>(kDefaultArgmaxCap);
  bool emit_set = false;

  VertexFormat vertex_format() const {
    return input_format == "binary" ? VertexFormat::binary : VertexFormat::decimal;
  }
  OutputFormat output() const {
    if (output_format == "json") return OutputFormat::json;
    if (output_format == "csv") return OutputFormat::csv;
    return OutputFormat::plain;
  }
};

// ---- rendering ----------------------------------------------------------

std::string render_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Arrays of scalars join with '|', arrays of arrays additionally with ';'.
std::string render_value(const Json& v) {
  if (!v.is_array()) return render_scalar(v);
  std::string out;
  const bool nested = !v.empty() && v.front().is_array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += nested ? ";" : "|";
    out += nested ? render_value(v[i]) : render_scalar(v[i]);
  }
  return out;
}

// Flattens nested objects to dotted keys, preserving field order.
void flatten(const Json& obj, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else {
      out.emplace_back(name, render_value(value));
    }
  }
}

std::vector<std::pair<std::string, std::string>> flat(const Json& obj) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten(obj, "", out);
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << csv_cell(cells[i]);
  }
  os << '\n';
}

// A report is either a single object or an array of objects (rows).
// header_hint names the CSV columns when an array is empty.
void emit(std::ostream& os, const Json& report, OutputFormat fmt,
          const std::vector<std::string>& header_hint = {}) {
  if (fmt == OutputFormat::json) {
    os << report.dump(2) << '\n';
    return;
  }
  if (report.is_object()) {
    const auto fields = flat(report);
    if (fmt == OutputFormat::plain) {
      for (const auto& [k, v] : fields) os << k << " = " << v << '\n';
      return;
    }
    std::vector<std::string> header, row;
    for (const auto& [k, v] : fields) {
      header.push_back(k);
      row.push_back(v);
    }
    write_csv_row(os, header);
    write_csv_row(os, row);
    return;
  }
  if (fmt == OutputFormat::plain) {
    if (report.empty()) os << "none\n";
    for (const auto& r : report) {
      bool first = true;
      for (const auto& [k, v] : flat(r)) {
        os << (first ? "" : " ") << k << '=' << v;
        first = false;
      }
      os << '\n';
    }
    return;
  }
  std::vector<std::string> header = header_hint;
  if (!report.empty()) {
    header.clear();
    for (const auto& [k, v] : flat(report.front())) header.push_back(k);
  }
  write_csv_row(os, header);
  for (const auto& r : report) {
    std::vector<std::string> row;
    for (const auto& [k, v] : flat(r)) row.push_back(v);
    write_csv_row(os, row);
  }
}

Json vertex_list(const VertexSet& s, VertexFormat fmt) {
  Json arr = Json::array();
  s.for_each([&](Vertex v) {
    if (fmt == VertexFormat::binary) {
      arr.push_back(format_vertex(v, s.dim(), fmt));
    } else {
      arr.push_back(v);
    }
  });
  return arr;
}

Json id_list(const std::vector<std::uint32_t>& xs) {
  Json arr = Json::array();
  for (auto x : xs) arr.push_back(x);
  return arr;
}

// ---- validation ---------------------------------------------------------

long long require(const std::optional<long long>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

long long in_range(long long v, long long lo, long long hi, const char* flag) {
  if (v < lo || v > hi) {
    throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(v));
  }
  return v;
}

Interval parse_interval(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  auto bad = [&] {
    return UsageError(std::string(flag) + " expects LO:HI with 0 <= LO <= HI, got '" + text + "'");
  };
  if (colon == std::string::npos) throw bad();
  std::uint64_t lo = 0, hi = 0;
  const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
  auto parse = [&](const std::string& s, std::uint64_t& v) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
    try {
      v = std::stoull(s);
    } catch (const std::exception&) {
      throw bad();
    }
  };
  parse(a, lo);
  parse(b, hi);
  if (lo > hi) throw bad();
  return Interval(lo, hi);
}

std::uint64_t default_budget() {
  const char* env = std::getenv("CUBESEG_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultOracleBudget;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("CUBESEG_BUDGET must be a positive integer, got '" + s + "'");
  }
  std::uint64_t v = 0;
  try {
    v = std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError("CUBESEG_BUDGET out of range: '" + s + "'");
  }
  if (v == 0) throw UsageError("CUBESEG_BUDGET must be positive");
  return v;
}

VertexSet load_vertices(const Config& cfg, int dim) {
  if (cfg.input_path.empty()) throw UsageError("missing required flag --input");
  if (cfg.input_path == "-") return read_vertex_set(std::cin, dim, cfg.vertex_format());
  std::ifstream in(cfg.input_path);
  if (!in) throw InputError("cannot open " + cfg.input_path);
  return read_vertex_set(in, dim, cfg.vertex_format());
}

// ---- commands -----------------------------------------------------------

void cmd_fq(const Config& cfg, std::ostream& os) {
  const auto kmax = static_cast<std::uint32_t>(in_range(require(cfg.kmax, "--kmax"), 1, kMaxTableK, "--kmax"));
  int qlo = 1, qhi = 1;
  if (cfg.q) {
    qlo = qhi = static_cast<int>(in_range(*cfg.q, 1, kMaxTableQ, "--q"));
  } else {
    qhi = static_cast<int>(in_range(require(cfg.qmax, "--q or --qmax"), 1, kMaxTableQ, "--qmax"));
  }
  const RecursionTable table = build_table(qhi, kmax);
  Json rows = Json::array();
  for (int q = qlo; q <= qhi; ++q) {
    for (std::uint32_t k = 1; k <= kmax; ++k) {
      Json row;
      row["q"] = q;
      row["k"] = k;
      row["F"] = table.value(q, k);
      row["maximizers"] = k >= 2 ? id_list(table.maximizers(q, k)) : Json::array();
      row["hypercubic"] = k >= 2 ? id_list(hypercubic_partitions(k)) : Json::array();
      rows.push_back(std::move(row));
    }
  }
  emit(os, rows, cfg.output());
}

void cmd_count(const Config& cfg, std::ostream& os) {
  const int dim = static_cast<int>(in_range(require(cfg.dim, "--dim"), 1, kMaxDim, "--dim"));
  const int q = static_cast<int>(in_range(require(cfg.q, "--q"), 0, dim, "--q"));
  std::optional<int> r;
  if (cfg.split) r = static_cast<int>(in_range(*cfg.split, 0, dim - 1, "--split"));
  if (r && q < 1) throw UsageError("--split needs --q >= 1");
  const Kernel kernel = cfg.kernel == "naive" ? Kernel::naive : Kernel::bitparallel;
  const VertexSet s = load_vertices(cfg, dim);

  Json rep;
  rep["dim"] = dim;
  rep["q"] = q;
  rep["size"] = s.size();
  if (r) {
    const auto [zero, one] = split(s, *r);
    if (zero.empty() || one.empty()) {
      throw UsageError("--split " + std::to_string(*r) + " leaves one side empty");
    }
    const DecompositionReport d = three_term_report(s, q, *r, kernel);
    rep["count"] = d.mq_total;
    Json dec;
    dec["r"] = d.r;
    dec["b"] = d.b;
    dec["mq_heavy"] = d.mq_heavy;
    dec["mq_light"] = d.mq_light;
    dec["mq1_light"] = d.mq1_light;
    dec["bound"] = d.bound;
    dec["exact"] = d.exact;
    rep["decomposition"] = std::move(dec);
  } else {
    rep["count"] = count_subcubes(s, q, kernel);
  }
  emit(os, rep, cfg.output());
}

void cmd_optimal(const Config& cfg, std::ostream& os) {
  const int dim = static_cast<int>(in_range(require(cfg.dim, "--dim"), 1, kMaxDim, "--dim"));
  const int q = static_cast<int>(in_range(require(cfg.q, "--q"), 0, dim, "--q"));
  const long long k = in_range(require(cfg.k, "--k"), 1, 1LL << dim, "--k");
  Json rep;
  rep["dim"] = dim;
  rep["q"] = q;
  rep["k"] = k;
  rep["formula_value"] = prefix_hq(static_cast<std::uint64_t>(k), q);
  std::optional<VertexSet> set;
  if (cfg.emit_set) {
    set = initial_segment(static_cast<std::uint64_t>(k), dim);
    rep["set"] = vertex_list(*set, cfg.vertex_format());
  }
  if (cfg.output() == OutputFormat::plain) {
    // Metadata as comments so the whole report re-ingests as a vertex file.
    for (const auto& [key, value] : flat(rep)) {
      if (key != "set") os << "# " << key << " = " << value << '\n';
    }
    if (set) write_vertex_set(os, *set, cfg.vertex_format());
    return;
  }
  emit(os, rep, cfg.output());
}

void cmd_oracle(const Config& cfg, std::ostream& os) {
  const int dim = static_cast<int>(in_range(require(cfg.dim, "--dim"), 1, kMaxDim, "--dim"));
  const long long k = in_range(require(cfg.k, "--k"), 1, 1LL << dim, "--k");
  const int q = static_cast<int>(in_range(require(cfg.q, "--q"), 0, dim, "--q"));
  const auto cap = static_cast<std::size_t>(in_range(cfg.argmax_cap, 0, 1'000'000, "--argmax-cap"));
  std::uint64_t budget = default_budget();
  if (cfg.budget) budget = static_cast<std::uint64_t>(in_range(*cfg.budget, 1, INT64_MAX, "--budget"));

  const OracleResult res = brute_force_mq(dim, static_cast<std::uint64_t>(k), q, cap, budget);
  Json rep;
  rep["n"] = res.n;
  rep["k"] = res.k;
  rep["q"] = res.q;
  rep["max_count"] = res.max_count;
  rep["formula_value"] = res.formula_value;
  rep["matches_formula"] = res.matches_formula;
  Json argmax = Json::array();
  for (const auto& s : res.argmax_examples) argmax.push_back(vertex_list(s, VertexFormat::decimal));
  rep["argmax"] = std::move(argmax);
  rep["scanned"] = res.total_subsets_scanned;
  emit(os, rep, cfg.output());
}

void cmd_bijection(const Config& cfg, std::ostream& os) {
  if (cfg.source.empty()) throw UsageError("missing required flag --source");
  if (cfg.target.empty()) throw UsageError("missing required flag --target");
  const Interval source = parse_interval(cfg.source, "--source");
  const Interval target = parse_interval(cfg.target, "--target");
  if (cfg.dim) {
    const int dim = static_cast<int>(in_range(*cfg.dim, 1, kMaxDim, "--dim"));
    const std::uint64_t top = (std::uint64_t{1} << dim) - 1;
    if (source.hi > top || target.hi > top) {
      throw UsageError("intervals must lie inside [0, 2^dim - 1]");
    }
  }
  const auto w = find_special_bijection(source, target);
  Json rep;
  rep["source"] = {{"lo", source.lo}, {"hi", source.hi}};
  rep["target"] = {{"lo", target.lo}, {"hi", target.hi}};
  rep["strict_required"] = !intervals_overlap(source, target);
  rep["found"] = w.has_value();
  Json map = Json::array();
  if (w) {
    for (const auto& [i, p] : w->map) map.push_back(Json::array({i, p}));
  }
  rep["map"] = std::move(map);
  emit(os, rep, cfg.output());
}

void cmd_hypercubic(const Config& cfg, std::ostream& os) {
  const auto k = static_cast<std::uint32_t>(in_range(require(cfg.k, "--k"), 2, kMaxTableK, "--k"));
  Json rep;
  rep["k"] = k;
  if (cfg.q) {
    const int q = static_cast<int>(in_range(*cfg.q, 1, kMaxTableQ, "--q"));
    const PartitionReport p = partition_report(q, k, build_table(q, k));
    rep["q"] = q;
    rep["hypercubic"] = id_list(p.hypercubic);
    rep["maximizers"] = id_list(p.maximizers);
    rep["hypercubic_subset_of_maximizers"] = p.hypercubic_subset_of_maximizers;
    rep["sets_equal"] = p.sets_equal;
  } else {
    rep["hypercubic"] = id_list(hypercubic_partitions(k));
  }
  emit(os, rep, cfg.output());
}

void cmd_counterexample(const Config& cfg, std::ostream& os) {
  const int qmax = static_cast<int>(in_range(require(cfg.qmax, "--qmax"), 1, kMaxTableQ, "--qmax"));
  const auto kmax = static_cast<std::uint32_t>(in_range(require(cfg.kmax, "--kmax"), 2, kMaxTableK, "--kmax"));
  Json rows = Json::array();
  for (const auto& c : find_onlyif_counterexamples(qmax, kmax)) {
    Json row;
    row["q"] = c.q;
    row["k"] = c.k;
    row["non_hypercubic_maximizers"] = id_list(c.non_hypercubic_maximizers);
    rows.push_back(std::move(row));
  }
  emit(os, rows, cfg.output(), {"q", "k", "non_hypercubic_maximizers"});
}

// ---- argument parsing ---------------------------------------------------

void add_output(CLI::App* sub, Config& cfg) {
  sub->add_option("--output", cfg.output_format, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
}

void add_vertex_format(CLI::App* sub, Config& cfg) {
  sub->add_option("--input-format,--vertex-format", cfg.input_format,
                  "vertex notation: decimal | binary (most significant bit first)")
      ->check(CLI::IsMember({"decimal", "binary"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Subcube counting in the binary n-cube", "cubeseg"};
  app.require_subcommand(1);

  auto* fq = app.add_subcommand("fq", "Tabulate the max-recursion F_q(k) with maximizer sets");
  fq->add_option("--q", cfg.q, "single recursion order");
  fq->add_option("--qmax", cfg.qmax, "tabulate q = 1..qmax");
  fq->add_option("--kmax", cfg.kmax, "largest k")->required();
  add_output(fq, cfg);

  auto* count = app.add_subcommand("count", "Count q-dimensional subcubes inside a vertex set");
  count->add_option("--dim", cfg.dim, "cube dimension n")->required();
  count->add_option("--q", cfg.q, "subcube dimension")->required();
  count->add_option("--input", cfg.input_path, "vertex file, '-' for stdin")->required();
  count->add_option("--kernel", cfg.kernel, "naive | bitparallel")
      ->check(CLI::IsMember({"naive", "bitparallel"}));
  count->add_option("--split", cfg.split, "also report the three-term bound along coordinate r");
  add_vertex_format(count, cfg);
  add_output(count, cfg);

  auto* optimal = app.add_subcommand("optimal", "Optimal count for k vertices and the initial segment");
  optimal->add_option("--dim", cfg.dim, "cube dimension n")->required();
  optimal->add_option("--q", cfg.q, "subcube dimension")->required();
  optimal->add_option("--k", cfg.k, "set size")->required();
  optimal->add_flag("--emit-set", cfg.emit_set, "print the initial segment {0..k-1}");
  add_vertex_format(optimal, cfg);
  add_output(optimal, cfg);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum over all k-subsets");
  oracle->add_option("--dim", cfg.dim, "cube dimension n")->required();
  oracle->add_option("--k", cfg.k, "set size")->required();
  oracle->add_option("--q", cfg.q, "subcube dimension")->required();
  oracle->add_option("--budget", cfg.budget, "maximum number of subsets to scan");
  oracle->add_option("--argmax-cap", cfg.argmax_cap, "number of optimal sets to report");
  add_output(oracle, cfg);

  auto* bij = app.add_subcommand("bijection", "Find a special bijection between two intervals");
  bij->add_option("--source", cfg.source, "source interval LO:HI")->required();
  bij->add_option("--target", cfg.target, "target interval LO:HI")->required();
  bij->add_option("--dim", cfg.dim, "optional cube dimension bounding both intervals");
  add_output(bij, cfg);

  auto* hyper = app.add_subcommand("hypercubic", "Hypercubic partitions of k");
  hyper->add_option("--k", cfg.k, "k >= 2")->required();
  hyper->add_option("--q", cfg.q, "also compare against the maximizers of F_q(k)");
  add_output(hyper, cfg);

  auto* cex = app.add_subcommand("counterexample", "Maximizers of F_q(k) that are not hypercubic");
  cex->add_option("--qmax", cfg.qmax, "largest q")->required();
  cex->add_option("--kmax", cfg.kmax, "largest k")->required();
  add_output(cex, cfg);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("cubeseg");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cubeseg: " << e.what() << '\n';
    return kUsage;
  }

  // Buffer the report so nothing reaches `out` on failure.
  std::ostringstream buffer;
  try {
    if (fq->parsed()) {
      cmd_fq(cfg, buffer);
    } else if (count->parsed()) {
      cmd_count(cfg, buffer);
    } else if (optimal->parsed()) {
      cmd_optimal(cfg, buffer);
    } else if (oracle->parsed()) {
      cmd_oracle(cfg, buffer);
    } else if (bij->parsed()) {
      cmd_bijection(cfg, buffer);
    } else if (hyper->parsed()) {
      cmd_hypercubic(cfg, buffer);
    } else if (cex->parsed()) {
      cmd_counterexample(cfg, buffer);
    }
  } catch (const InputError& e) {
    err << "cubeseg: input error: " << e.what() << '\n';
    return kInput;
  } catch (const BudgetExceeded& e) {
    err << "cubeseg: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    err << "cubeseg: " << e.what() << '\n';
    return kUsage;
  }
  out << buffer.str();
  return kOk;
}

}  // namespace cubeseg::cli
