// qsum command-line front end. Talks to the library only through the C API.
//
// Exit status: 0 success / every identity holds, 1 at least one identity
// failed, 2 usage or parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "handles.hpp"
#include "output.hpp"

namespace qsum_cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailed = 1;
constexpr int kExitUsage = 2;
constexpr unsigned kMaxBound = 64;
constexpr long kMaxGfTerms = 100000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long parse_long(std::string_view text, const std::string& name) {
  long value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("--" + name + ": expected an integer or p/r, got '" + std::string(text) + "'");
  }
  return value;
}

/// Decimal integer or an integral p/r, within [0, max].
unsigned parse_count(const std::string& text, const std::string& name, long max = kMaxBound) {
  const auto slash = text.find('/');
  long value = parse_long(std::string_view(text).substr(0, slash), name);
  if (slash != std::string::npos) {
    const long den = parse_long(std::string_view(text).substr(slash + 1), name);
    if (den == 0 || value % den != 0) {
      throw UsageError("--" + name + ": '" + text + "' is not an integer");
    }
    value /= den;
  }
  if (value < 0 || value > max) {
    throw UsageError("--" + name + " must be in [0, " + std::to_string(max) + "], got " +
                     std::to_string(value));
  }
  return static_cast<unsigned>(value);
}

/// Decimal real or p/r.
double parse_real(const std::string& text, const std::string& name) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const double num = static_cast<double>(parse_long(std::string_view(text).substr(0, slash), name));
    const double den = static_cast<double>(parse_long(std::string_view(text).substr(slash + 1), name));
    if (den == 0.0) throw UsageError("--" + name + ": zero denominator");
    return num / den;
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw UsageError("--" + name + ": expected a real number, got '" + text + "'");
  }
  return value;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw UsageError("unknown format '" + s + "'");
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string scalar_string(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

using Params = std::vector<std::pair<std::string, Json>>;

/// Renders one computed object in the requested format.
std::string emit_value(Format format, const std::string& kind, const Params& params,
                       const qsum_ratfunc* value, const Params& extra = {}) {
  switch (format) {
    case Format::Text: {
      std::string out = render(value, QSUM_FORMAT_TEXT) + "\n";
      for (const auto& [k, v] : extra) out += k + ": " + scalar_string(v) + "\n";
      return out;
    }
    case Format::Latex: return render(value, QSUM_FORMAT_LATEX) + "\n";
    case Format::Csv: {
      std::vector<std::string> header, row;
      for (const auto& [k, v] : params) {
        header.push_back(k);
        row.push_back(scalar_string(v));
      }
      header.emplace_back("value");
      row.push_back(render(value, QSUM_FORMAT_CANONICAL));
      header.emplace_back("text");
      row.push_back(render(value, QSUM_FORMAT_TEXT));
      for (const auto& [k, v] : extra) {
        header.push_back(k);
        row.push_back(scalar_string(v));
      }
      return csv_row(header) + csv_row(row);
    }
    case Format::Json: {
      Json j;
      j["schemaVersion"] = kSchemaVersion;
      j["kind"] = kind;
      for (const auto& [k, v] : params) j[k] = v;
      j["value"] = render(value, QSUM_FORMAT_CANONICAL);
      j["text"] = render(value, QSUM_FORMAT_TEXT);
      for (const auto& [k, v] : extra) j[k] = v;
      return json_text(j);
    }
  }
  return {};
}

// raw is bound by reference so it is read after the producing call has run.
RatFuncHandle take(qsum_status status, qsum_ratfunc*& raw) {
  RatFuncHandle h(raw);
  check(status);
  return h;
}

// ---------------------------------------------------------------- verify ---

struct Axis {
  std::string name;
  unsigned lo = 0;
  unsigned hi = 0;
};

struct IdentitySpec {
  qsum_identity id;
  Axis first;
  std::optional<Axis> second;
};

const std::map<std::string, IdentitySpec>& identities() {
  static const std::map<std::string, IdentitySpec> table{
      {"closed", {QSUM_ID_CLOSED_FORM, {"n", 1, 3}, Axis{"k", 1, 10}}},
      {"recurrence", {QSUM_ID_RECURRENCE, {"n", 0, 10}, Axis{"k", 1, 10}}},
      {"master", {QSUM_ID_MASTER_RECURRENCE, {"n", 0, 8}, Axis{"k", 1, 8}}},
      {"thmA-printed", {QSUM_ID_THMA_PRINTED, {"n", 1, 8}, Axis{"k", 2, 8}}},
      {"thmA-corrected", {QSUM_ID_THMA_CORRECTED, {"n", 1, 8}, Axis{"k", 2, 8}}},
      {"thmB", {QSUM_ID_THMB, {"l", 1, 8}, Axis{"k", 2, 6}}},
      {"thmB-corrected", {QSUM_ID_THMB_CORRECTED, {"l", 1, 8}, Axis{"k", 2, 6}}},
      {"thmB-intro", {QSUM_ID_THMB_INTRO, {"l", 1, 8}, Axis{"k", 2, 6}}},
      {"thmB-intro-corrected", {QSUM_ID_THMB_INTRO_CORRECTED, {"l", 1, 8}, Axis{"k", 2, 6}}},
      {"thmB-classical", {QSUM_ID_THMB_CLASSICAL, {"l", 1, 8}, Axis{"k", 2, 8}}},
      {"distribution", {QSUM_ID_DISTRIBUTION, {"n", 0, 6}, Axis{"m", 1, 4}}},
      {"bern-recursion", {QSUM_ID_BERNOULLI_RECURSION, {"k", 1, 12}, std::nullopt}},
      {"bern-cross", {QSUM_ID_BERNOULLI_CROSS, {"n", 0, 12}, std::nullopt}},
  };
  return table;
}

struct AxisFlags {
  std::optional<std::string> exact, min, max;
};

struct VerifyOptions {
  std::string identity;
  std::map<std::string, AxisFlags> axes;  // keyed by n, k, l, m
  bool timing = false;
};

void resolve_axis(Axis& axis, const VerifyOptions& opts) {
  const auto it = opts.axes.find(axis.name);
  const AxisFlags flags = it == opts.axes.end() ? AxisFlags{} : it->second;
  if (!flags.max && !flags.exact) {
    if (const char* env = std::getenv("QSUM_VERIFY_MAX")) {
      axis.hi = std::min(axis.hi, std::max(axis.lo, parse_count(env, "QSUM_VERIFY_MAX")));
    }
  }
  if (flags.exact) axis.lo = axis.hi = parse_count(*flags.exact, axis.name);
  if (flags.min) axis.lo = parse_count(*flags.min, axis.name + "min");
  if (flags.max) axis.hi = parse_count(*flags.max, axis.name + "max");
  if (axis.lo > axis.hi) {
    throw UsageError("empty range for " + axis.name + ": " + std::to_string(axis.lo) + ".." +
                     std::to_string(axis.hi));
  }
}

struct Cell {
  std::vector<std::pair<std::string, unsigned>> params;
  bool holds = false;
  std::string lhs_text, rhs_text, lhs_canonical, rhs_canonical, lhs_latex, rhs_latex;
};

int run_verify(const VerifyOptions& opts, Format format) {
  const auto& table = identities();
  const auto found = table.find(opts.identity);
  if (found == table.end()) {
    std::string names;
    for (const auto& [name, spec] : table) names += (names.empty() ? "" : ", ") + name;
    throw UsageError("unknown identity '" + opts.identity + "' (known: " + names + ")");
  }
  IdentitySpec spec = found->second;
  std::vector<Axis> axes{spec.first};
  if (spec.second) axes.push_back(*spec.second);
  for (auto& a : axes) resolve_axis(a, opts);
  for (const auto& [name, flags] : opts.axes) {
    const bool known = std::any_of(axes.begin(), axes.end(),
                                   [&](const Axis& a) { return a.name == name; });
    if (!known && (flags.exact || flags.min || flags.max)) {
      throw UsageError("identity '" + opts.identity + "' takes no '" + name + "' parameter");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<Cell> cells;
  const Axis& a = axes[0];
  const Axis b = axes.size() > 1 ? axes[1] : Axis{"", 0, 0};
  for (unsigned i = a.lo; i <= a.hi; ++i) {
    for (unsigned j = b.lo; j <= b.hi; ++j) {
      qsum_check* raw = nullptr;
      const qsum_status status = qsum_verify(spec.id, i, j, &raw);
      CheckHandle c(raw);
      if (status == QSUM_ERR_INVALID_ARGUMENT) throw UsageError(qsum_last_error());
      check(status);
      int holds = 0;
      check(qsum_check_holds(c.get(), &holds));
      Cell cell;
      cell.params.emplace_back(a.name, i);
      if (axes.size() > 1) cell.params.emplace_back(b.name, j);
      cell.holds = holds != 0;
      if (!cell.holds) {
        cell.lhs_text = render_side(c.get(), 0, QSUM_FORMAT_TEXT);
        cell.rhs_text = render_side(c.get(), 1, QSUM_FORMAT_TEXT);
        cell.lhs_canonical = render_side(c.get(), 0, QSUM_FORMAT_CANONICAL);
        cell.rhs_canonical = render_side(c.get(), 1, QSUM_FORMAT_CANONICAL);
        cell.lhs_latex = render_side(c.get(), 0, QSUM_FORMAT_LATEX);
        cell.rhs_latex = render_side(c.get(), 1, QSUM_FORMAT_LATEX);
      }
      cells.push_back(std::move(cell));
    }
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::size_t failed = 0;
  for (const auto& c : cells) failed += c.holds ? 0 : 1;
  const bool pass = failed == 0;

  auto cell_label = [](const Cell& c) {
    std::string s;
    for (const auto& [k, v] : c.params) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
  };

  std::string out;
  switch (format) {
    case Format::Text: {
      out += "identity: " + opts.identity + "\n";
      out += "grid:";
      for (const auto& ax : axes) {
        out += " " + ax.name + "=" + std::to_string(ax.lo) + ".." + std::to_string(ax.hi);
      }
      out += "\n";
      for (const auto& c : cells) {
        if (c.holds) continue;
        out += "FAIL " + cell_label(c) + "\n  lhs: " + c.lhs_text + "\n  rhs: " + c.rhs_text + "\n";
      }
      out += "cells: " + std::to_string(cells.size()) + ", passed: " +
             std::to_string(cells.size() - failed) + ", failed: " + std::to_string(failed) + "\n";
      if (opts.timing) out += "wall-time: " + format_double(wall) + " s\n";
      out += std::string("verdict: ") + (pass ? "PASS" : "FAIL") + "\n";
      break;
    }
    case Format::Csv: {
      std::vector<std::string> header{"identity"};
      for (const auto& ax : axes) header.push_back(ax.name);
      for (const char* h : {"verdict", "lhs", "rhs"}) header.emplace_back(h);
      out += csv_row(header);
      for (const auto& c : cells) {
        std::vector<std::string> row{opts.identity};
        for (const auto& p : c.params) row.push_back(std::to_string(p.second));
        row.emplace_back(c.holds ? "pass" : "fail");
        row.push_back(c.lhs_canonical);
        row.push_back(c.rhs_canonical);
        out += csv_row(row);
      }
      break;
    }
    case Format::Json: {
      Json j;
      j["schemaVersion"] = kSchemaVersion;
      j["kind"] = "verification";
      j["identity"] = opts.identity;
      Json grid = Json::object();
      for (const auto& ax : axes) grid[ax.name] = Json{{"min", ax.lo}, {"max", ax.hi}};
      j["grid"] = grid;
      Json arr = Json::array();
      for (const auto& c : cells) {
        Json cj;
        for (const auto& [k, v] : c.params) cj[k] = v;
        cj["pass"] = c.holds;
        if (!c.holds) {
          cj["lhs"] = c.lhs_canonical;
          cj["rhs"] = c.rhs_canonical;
        }
        arr.push_back(cj);
      }
      j["cells"] = arr;
      j["passed"] = cells.size() - failed;
      j["failed"] = failed;
      if (opts.timing) j["wallTimeSeconds"] = wall;
      j["verdict"] = pass ? "pass" : "fail";
      out = json_text(j);
      break;
    }
    case Format::Latex: {
      std::vector<std::string> header;
      for (const auto& ax : axes) header.push_back("$" + ax.name + "$");
      for (const char* h : {"verdict", "lhs", "rhs"}) header.emplace_back(h);
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : cells) {
        std::vector<std::string> row;
        for (const auto& p : c.params) row.push_back(std::to_string(p.second));
        row.emplace_back(c.holds ? "\\checkmark" : "\\times");
        row.push_back(c.lhs_latex);
        row.push_back(c.rhs_latex);
        rows.push_back(std::move(row));
      }
      out = latex_table(header, rows);
      break;
    }
  }
  std::cout << out;
  return pass ? kExitOk : kExitIdentityFailed;
}

// ----------------------------------------------------------------- table ---

int run_table(const std::string& kind, unsigned n_max, unsigned k_max, const std::string& method,
              Format format) {
  struct Row {
    Params params;
    RatFuncHandle value;
  };
  std::vector<Row> rows;
  if (kind == "powersums") {
    if (k_max < 1) throw UsageError("--kmax must be >= 1");
    for (unsigned n = 0; n <= n_max; ++n) {
      for (unsigned k = 1; k <= k_max; ++k) {
        qsum_ratfunc* raw = nullptr;
        auto h = take(qsum_power_sum(n, k, QSUM_SUM_DIRECT, &raw), raw);
        rows.push_back({{{"n", n}, {"k", k}}, std::move(h)});
      }
    }
  } else if (kind == "bernoulli") {
    qsum_bernoulli_method m = QSUM_BERNOULLI_RECURSION;
    if (method == "series") {
      m = QSUM_BERNOULLI_SERIES;
    } else if (method != "recursion") {
      throw UsageError("unknown Bernoulli method '" + method + "'");
    }
    std::vector<qsum_ratfunc*> raw(n_max + 1, nullptr);
    check(qsum_bernoulli_table(n_max, m, raw.data(), raw.size()));
    for (unsigned n = 0; n <= n_max; ++n) rows.push_back({{{"n", n}}, RatFuncHandle(raw[n])});
  } else {
    throw UsageError("unknown table kind '" + kind + "' (powersums, bernoulli)");
  }

  std::string out;
  switch (format) {
    case Format::Text:
      for (const auto& r : rows) {
        std::string label;
        for (const auto& [k, v] : r.params) label += (label.empty() ? "" : " ") + k + "=" + v.dump();
        out += label + ": " + render(r.value.get(), QSUM_FORMAT_TEXT) + "\n";
      }
      break;
    case Format::Csv: {
      std::vector<std::string> header;
      for (const auto& [k, v] : rows.front().params) header.push_back(k);
      header.emplace_back("value");
      out += csv_row(header);
      for (const auto& r : rows) {
        std::vector<std::string> row;
        for (const auto& [k, v] : r.params) row.push_back(v.dump());
        row.push_back(render(r.value.get(), QSUM_FORMAT_CANONICAL));
        out += csv_row(row);
      }
      break;
    }
    case Format::Json: {
      Json j;
      j["schemaVersion"] = kSchemaVersion;
      j["kind"] = kind;
      Json entries = Json::array();
      for (const auto& r : rows) {
        Json e;
        for (const auto& [k, v] : r.params) e[k] = v;
        e["value"] = render(r.value.get(), QSUM_FORMAT_CANONICAL);
        e["text"] = render(r.value.get(), QSUM_FORMAT_TEXT);
        entries.push_back(e);
      }
      j["entries"] = entries;
      out = json_text(j);
      break;
    }
    case Format::Latex: {
      std::vector<std::string> header;
      for (const auto& [k, v] : rows.front().params) header.push_back("$" + k + "$");
      header.emplace_back(kind == "bernoulli" ? "$B_{n,q}$" : "$S_{n,q}(k)$");
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : rows) {
        std::vector<std::string> row;
        for (const auto& [k, v] : r.params) row.push_back(v.dump());
        row.push_back(render(r.value.get(), QSUM_FORMAT_LATEX));
        cells.push_back(std::move(row));
      }
      out = latex_table(header, cells);
      break;
    }
  }
  std::cout << out;
  return kExitOk;
}

// --------------------------------------------------------------- gfcheck ---

struct GfOptions {
  std::string q0 = "0.5", q0_im = "0", t0 = "0.1", t0_im = "0", x0 = "0";
  std::string terms = "200";
  std::optional<std::string> tol;
  bool taylor = false;
  std::string n_max = "4";
};

int run_gfcheck(const GfOptions& o, Format format) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  std::string text;
  bool pass = false;
  if (o.taylor) {
    const double q0 = parse_real(o.q0, "q0");
    const unsigned n_max = parse_count(o.n_max, "nmax");
    const double tol = o.tol ? parse_real(*o.tol, "tol") : 1e-5;
    std::vector<qsum_taylor_entry> entries(n_max + 1);
    double max_err = 0.0;
    int passed = 0;
    const qsum_status st =
        qsum_gf_taylor_check(q0, n_max, tol, entries.data(), entries.size(), &max_err, &passed);
    if (st == QSUM_ERR_INVALID_ARGUMENT) throw UsageError(qsum_last_error());
    check(st);
    pass = passed != 0;
    j["kind"] = "taylor-check";
    j["q0"] = q0;
    j["tolerance"] = tol;
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : entries) {
      arr.push_back(Json{{"n", e.n},
                         {"step", e.step},
                         {"finiteDifference", e.finite_difference},
                         {"exact", e.exact},
                         {"relError", e.rel_error}});
      rows.push_back({std::to_string(e.n), format_double(e.step), format_double(e.finite_difference),
                      format_double(e.exact), format_double(e.rel_error)});
      text += "n=" + std::to_string(e.n) + " step=" + format_double(e.step) +
              " fd=" + format_double(e.finite_difference) + " exact=" + format_double(e.exact) +
              " rel_error=" + format_double(e.rel_error) + "\n";
    }
    j["entries"] = arr;
    j["maxRelError"] = max_err;
    text += "max_rel_error: " + format_double(max_err) + "\n";
    if (format == Format::Csv) {
      std::string out = csv_row({"n", "step", "finite_difference", "exact", "rel_error"});
      for (const auto& r : rows) out += csv_row(r);
      text = out;
    } else if (format == Format::Latex) {
      text = latex_table({"$n$", "$h$", "finite difference", "exact", "rel. error"}, rows);
    }
  } else {
    qsum_gf_point p{{parse_real(o.q0, "q0"), parse_real(o.q0_im, "q0-im")},
                    {parse_real(o.t0, "t0"), parse_real(o.t0_im, "t0-im")},
                    parse_real(o.x0, "x0"),
                    parse_count(o.terms, "terms", kMaxGfTerms),
                    o.tol ? parse_real(*o.tol, "tol") : 1e-9};
    qsum_complex closed{}, partial{};
    double bound = 0.0;
    for (qsum_status st : {qsum_gf_closed(&p, &closed), qsum_gf_partial_sum(&p, &partial),
                           qsum_gf_truncation_bound(&p, &bound)}) {
      if (st == QSUM_ERR_INVALID_ARGUMENT) throw UsageError(qsum_last_error());
      check(st);
    }
    const double diff = std::hypot(closed.re - partial.re, closed.im - partial.im);
    pass = diff < p.tolerance;
    j["kind"] = "gf-check";
    j["closed"] = Json{{"re", closed.re}, {"im", closed.im}};
    j["partialSum"] = Json{{"re", partial.re}, {"im", partial.im}};
    j["difference"] = diff;
    j["truncationBound"] = bound;
    j["tolerance"] = p.tolerance;
    text = "closed: " + format_double(closed.re) + " " + format_double(closed.im) + "\n" +
           "partial_sum: " + format_double(partial.re) + " " + format_double(partial.im) + "\n" +
           "difference: " + format_double(diff) + "\n" + "truncation_bound: " + format_double(bound) + "\n";
    if (format == Format::Csv) {
      text = csv_row({"closed_re", "closed_im", "partial_re", "partial_im", "difference",
                      "truncation_bound", "tolerance"}) +
             csv_row({format_double(closed.re), format_double(closed.im), format_double(partial.re),
                      format_double(partial.im), format_double(diff), format_double(bound),
                      format_double(p.tolerance)});
    } else if (format == Format::Latex) {
      text = latex_table({"closed", "partial sum", "difference", "bound"},
                         {{format_double(closed.re), format_double(partial.re), format_double(diff),
                           format_double(bound)}});
    }
  }
  j["verdict"] = pass ? "pass" : "fail";
  if (format == Format::Json) {
    std::cout << json_text(j);
  } else {
    if (format == Format::Text) text += std::string("verdict: ") + (pass ? "PASS" : "FAIL") + "\n";
    std::cout << text;
  }
  return pass ? kExitOk : kExitIdentityFailed;
}

void add_axis_flags(CLI::App* cmd, VerifyOptions& opts, const std::string& name) {
  auto& flags = opts.axes[name];
  cmd->add_option("--" + name, flags.exact, "single value for " + name);
  cmd->add_option("--" + name + "min", flags.min, "lower bound for " + name);
  cmd->add_option("--" + name + "max", flags.max, "upper bound for " + name);
}

int run(int argc, char** argv) {
  CLI::App app{"qsum: q-power sums, q-Bernoulli numbers and exact identity checks"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "text, csv, json or latex")
      ->check(CLI::IsMember({"text", "csv", "json", "latex"}));

  std::string k_str, n_str, sum_method, bern_method, table_method, x_str, expr, bern_str, terms_str, kind;
  std::string n_max_str = "4", k_max_str = "4";

  auto* qint = app.add_subcommand("qint", "q-integer [k]_q");
  qint->add_option("--k", k_str, "k >= 0")->required();

  auto* sum = app.add_subcommand("sum", "power sum S_{n,q}(k)");
  sum->add_option("--n", n_str, "power n >= 0")->required();
  sum->add_option("--k", k_str, "upper index k >= 1")->required();
  sum->add_option("--method", sum_method, "direct, recurrence or closed")->default_val("direct");

  auto* bern = app.add_subcommand("bernoulli", "q-Bernoulli number B_{n,q} or polynomial value");
  bern->add_option("--n", n_str, "index n >= 0")->required();
  bern->add_option("--method", bern_method, "recursion or series")->default_val("recursion");
  bern->add_option("--x", x_str, "evaluate B_{n,q}(x) at this rational x");

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "exact identity verification sweep");
  verify->add_option("--identity", vopts.identity, "identity name")->required();
  for (const char* axis : {"n", "k", "l", "m"}) add_axis_flags(verify, vopts, axis);
  verify->add_flag("--timing", vopts.timing, "include wall time in the report");

  auto* limit = app.add_subcommand("limit", "q -> 1 limit of an expression");
  auto* expr_opt = limit->add_option("--expr", expr, "expression in q and L");
  auto* bern_opt = limit->add_option("--bernoulli", bern_str, "use B_{n,q}");
  expr_opt->excludes(bern_opt);
  limit->add_option("--terms", terms_str, "also print this many Laurent terms in e = q - 1");

  auto* table = app.add_subcommand("table", "tables of power sums or q-Bernoulli numbers");
  table->add_option("--kind", kind, "powersums or bernoulli")->required();
  table->add_option("--nmax", n_max_str, "largest n");
  table->add_option("--kmax", k_max_str, "largest k (powersums)");
  table->add_option("--method", table_method, "recursion or series (bernoulli)")->default_val("recursion");

  GfOptions gopts;
  auto* gf = app.add_subcommand("gfcheck", "numeric generating-function checks");
  gf->add_option("--q0", gopts.q0, "real part of q0");
  gf->add_option("--q0-im", gopts.q0_im, "imaginary part of q0");
  gf->add_option("--t0", gopts.t0, "real part of t0");
  gf->add_option("--t0-im", gopts.t0_im, "imaginary part of t0");
  gf->add_option("--x0", gopts.x0, "x0");
  gf->add_option("--terms", gopts.terms, "series terms");
  gf->add_option("--tol", gopts.tol, "tolerance");
  gf->add_flag("--taylor", gopts.taylor, "compare t-derivatives at 0 with B_{n,q}(q0)");
  gf->add_option("--nmax", gopts.n_max, "largest derivative order for --taylor");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (qint->parsed()) {
      const unsigned k = parse_count(k_str, "k");
      qsum_ratfunc* raw = nullptr;
      auto v = take(qsum_q_integer(k, &raw), raw);
      std::cout << emit_value(format, "qint", {{"k", k}}, v.get());
      return kExitOk;
    }
    if (sum->parsed()) {
      const unsigned n = parse_count(n_str, "n");
      const unsigned k = parse_count(k_str, "k");
      qsum_sum_method m = QSUM_SUM_DIRECT;
      if (sum_method == "recurrence") {
        m = QSUM_SUM_RECURRENCE;
      } else if (sum_method == "closed") {
        m = QSUM_SUM_CLOSED_FORM;
      } else if (sum_method != "direct") {
        throw UsageError("unknown method '" + sum_method + "'");
      }
      qsum_ratfunc* raw = nullptr;
      const qsum_status st = qsum_power_sum(n, k, m, &raw);
      if (st == QSUM_ERR_INVALID_ARGUMENT) throw UsageError(qsum_last_error());
      auto v = take(st, raw);
      std::cout << emit_value(format, "sum", {{"n", n}, {"k", k}, {"method", sum_method}}, v.get());
      return kExitOk;
    }
    if (bern->parsed()) {
      const unsigned n = parse_count(n_str, "n");
      qsum_bernoulli_method m = QSUM_BERNOULLI_RECURSION;
      if (bern_method == "series") {
        m = QSUM_BERNOULLI_SERIES;
      } else if (bern_method != "recursion") {
        throw UsageError("unknown method '" + bern_method + "'");
      }
      qsum_ratfunc* raw = nullptr;
      RatFuncHandle v;
      Params params{{"n", n}, {"method", bern_method}};
      if (x_str.empty()) {
        v = take(qsum_bernoulli(n, m, &raw), raw);
      } else {
        const qsum_status st = qsum_bernoulli_poly_eval(n, x_str.c_str(), &raw);
        if (st == QSUM_ERR_PARSE) throw UsageError("--x: " + std::string(qsum_last_error()));
        v = take(st, raw);
        params.emplace_back("x", x_str);
      }
      std::cout << emit_value(format, "bernoulli", params, v.get());
      return kExitOk;
    }
    if (verify->parsed()) return run_verify(vopts, format);
    if (limit->parsed()) {
      RatFuncHandle f;
      Params params;
      qsum_ratfunc* raw = nullptr;
      if (!bern_str.empty()) {
        const unsigned n = parse_count(bern_str, "bernoulli");
        f = take(qsum_bernoulli(n, QSUM_BERNOULLI_RECURSION, &raw), raw);
        params.emplace_back("bernoulli", n);
      } else if (!expr.empty()) {
        const qsum_status st = qsum_ratfunc_parse(expr.c_str(), &raw);
        if (st != QSUM_OK) throw UsageError("--expr: " + std::string(qsum_last_error()));
        f = RatFuncHandle(raw);
        params.emplace_back("expr", expr);
      } else {
        throw UsageError("limit needs --expr or --bernoulli");
      }
      Params extra;
      if (!terms_str.empty()) {
        const unsigned terms = parse_count(terms_str, "terms");
        if (terms == 0) throw UsageError("--terms must be >= 1");
        extra.emplace_back("series", fetch_string([&](char* buf, size_t cap, size_t* needed) {
                             return qsum_ratfunc_eps_expand(f.get(), terms, buf, cap, needed);
                           }));
      }
      qsum_ratfunc* lim_raw = nullptr;
      const qsum_status st = qsum_ratfunc_limit_q1(f.get(), &lim_raw);
      if (st == QSUM_ERR_POLE_AT_ONE) throw UsageError("no finite limit at q = 1: " + std::string(qsum_last_error()));
      auto lim = take(st, lim_raw);
      std::cout << emit_value(format, "limit", params, lim.get(), extra);
      return kExitOk;
    }
    if (table->parsed()) {
      return run_table(kind, parse_count(n_max_str, "nmax"), parse_count(k_max_str, "kmax"), table_method,
                       format);
    }
    if (gf->parsed()) return run_gfcheck(gopts, format);
  } catch (const UsageError& e) {
    std::cerr << "qsum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "qsum: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace qsum_cli

int main(int argc, char** argv) { return qsum_cli::run(argc, argv); }
