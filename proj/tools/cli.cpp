#include "cli.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksinv/coefficients.hpp"
#include "ksinv/errors.hpp"
#include "ksinv/multiplicative_sequences.hpp"
#include "ksinv/verify.hpp"

namespace ksinv::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string flag(bool b) { return b ? "true" : "false"; }

Json to_json(const OutputRecord& record) {
  Json obj = Json::object();
  for (const auto& [key, value] : record) obj[key] = value;
  return obj;
}

struct ComputeArgs {
  int n = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  bool json = false;
};

struct LaurentArgs {
  int n = 0;
  bool check_leading = false;
  bool json = false;
  std::int64_t scan_roots = 0;
};

struct TableArgs {
  int n = 0;
  std::int64_t l = 0;
  std::int64_t k_start = 2;
  std::int64_t k_end = 0;
  std::string format = "csv";
  std::string out_path;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const SInvariantReport report = s_invariant(BundleParams::make(a.n, a.k, a.l));
  const OutputRecord record = report_record(report);
  if (a.json) {
    out << to_json(record).dump() << '\n';
    return kSuccess;
  }
  out << "M_{k,l} with n=" << a.n << " k=" << a.k << " l=" << a.l << " (dimension " << report.params.dimension()
      << ")\n";
  for (const auto& [key, value] : record) {
    if (key == "n" || key == "k" || key == "l") continue;
    out << "  " << key << " = " << value << '\n';
  }
  return kSuccess;
}

int cmd_laurent(const LaurentArgs& a, std::ostream& out) {
  const LaurentPoly p = s_laurent(a.n);
  std::optional<LeadingCoeffCheck> check;
  if (a.check_leading) check = leading_coeff_check(a.n);
  std::vector<std::int64_t> roots;
  if (a.scan_roots > 0) roots = odd_roots(p, a.scan_roots);

  if (a.json) {
    Json obj;
    obj["n"] = std::to_string(a.n);
    Json coeffs = Json::object();
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.to_string();
    obj["coefficients"] = coeffs;
    obj["min_exponent"] = std::to_string(p.min_exponent());
    obj["max_exponent"] = std::to_string(p.max_exponent());
    if (check) {
      obj["leading_coefficient"] = check->computed.to_string();
      obj["closed_form"] = check->closed_form.to_string();
      obj["check"] = check->passed() ? "pass" : "fail";
    }
    if (a.scan_roots > 0) {
      Json r = Json::array();
      for (const auto l : roots) r.push_back(std::to_string(l));
      obj["odd_roots"] = r;
      obj["scanned_up_to"] = std::to_string(a.scan_roots);
    }
    out << obj.dump() << '\n';
  } else {
    out << "p(l) = s(k,l)/k = " << p.to_string() << '\n';
    out << "exponent range: [" << p.min_exponent() << ", " << p.max_exponent() << "]\n";
    if (check) {
      out << "leading coefficient (l^" << 2 * a.n << "): " << check->computed << '\n';
      out << "closed form (2n+1)(ahat_{2n+2} + a_{n+1} b_{2n+2}): " << check->closed_form << '\n';
      out << "check: " << (check->passed() ? "pass" : "fail") << '\n';
    }
    if (a.scan_roots > 0) {
      out << "odd roots with l <= " << a.scan_roots << ":";
      if (roots.empty()) out << " none";
      for (const auto l : roots) out << ' ' << l;
      out << " (direct evaluation, range only)\n";
    }
  }
  return check && !check->passed() ? kVerificationFailure : kSuccess;
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::int64_t> ks;
  std::vector<std::int64_t> skipped;
  for (std::int64_t k = a.k_start + (a.k_start % 2); k <= a.k_end; k += 2) {
    if (std::gcd(k, a.l) == 1) {
      ks.push_back(k);
    } else {
      skipped.push_back(k);
    }
  }
  if (ks.empty()) throw DomainError("no even k in [k-start, k-end] coprime to l");

  const ComponentTable table = component_table(a.n, a.l, ks);
  const std::string text = a.format == "json" ? render_table_json(table, a.n, a.l) : render_table_csv(table);
  if (a.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file " + a.out_path);
    file << text;
  }
  if (!skipped.empty()) {
    err << "skipped k not coprime to l:";
    for (const auto k : skipped) err << ' ' << k;
    err << '\n';
  }
  err << "distinct |s| values: " << table.distinct_abs_s << " of " << table.rows.size() << " rows\n";
  return kSuccess;
}

int cmd_series(Series series, int order, std::ostream& out) {
  const std::string prefix = series == Series::ahat ? "ahat_" : "b_";
  for (int j = 1; j <= order; ++j)
    out << (j > 1 ? ", " : "") << prefix << 2 * j << " = " << series_coeff(series, j);
  out << '\n';
  return kSuccess;
}

int cmd_nm(int m, std::ostream& out) {
  out << "N_" << m << " = " << n_polynomial(m).to_string() << '\n';
  out << "ahat_" << m << " = " << genus_polynomial(Series::ahat, m).to_string() << '\n';
  out << "L_" << m << " = " << genus_polynomial(Series::lgenus, m).to_string() << '\n';
  out << "a_" << m << " = " << a_m(m) << '\n';
  return kSuccess;
}

int cmd_verify(int n_max, std::ostream& out) {
  const auto results = run_verification(n_max, [&](const PropertyResult& r) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << (r.passed ? " (" : ": ") << r.detail << (r.passed ? ")" : "");
    out << '\n';
  });
  for (const auto& r : results)
    if (!r.passed) {
      out << "verify: first failing property: " << r.name << '\n';
      return kVerificationFailure;
    }
  out << "verify: all " << results.size() << " properties passed\n";
  return kSuccess;
}

}  // namespace

OutputRecord report_record(const SInvariantReport& r) {
  return {{"n", std::to_string(r.params.n())},
          {"k", std::to_string(r.params.k())},
          {"l", std::to_string(r.params.l())},
          {"spin", flag(r.spin)},
          {"s", r.s.to_string()},
          {"abs_s", r.s.abs().to_string()},
          {"t_w", r.t_w.to_string()},
          {"ahat_part", r.ahat_part.to_string()},
          {"lgenus_part", r.lgenus_part.to_string()},
          {"signature_term", std::to_string(r.signature_term)},
          {"ek_mod1", r.ek_mod1.to_string()},
          {"ek_mod1_halved", r.ek_mod1_halved.to_string()}};
}

OutputRecord row_record(const ComponentRow& row) {
  return {{"n", std::to_string(row.n)},   {"k", std::to_string(row.k)},  {"l", std::to_string(row.l)},
          {"spin", flag(row.spin)},       {"s", row.s.to_string()},      {"abs_s", row.abs_s.to_string()},
          {"ek_mod1", row.ek_mod1.to_string()}};
}

std::string render_table_csv(const ComponentTable& table) {
  std::ostringstream os;
  os << "n,k,l,spin,s,abs_s,ek_mod1\n";
  for (const auto& row : table.rows) {
    bool first = true;
    for (const auto& [key, value] : row_record(row)) {
      os << (first ? "" : ",") << value;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_table_json(const ComponentTable& table, int n, std::int64_t l) {
  Json obj;
  obj["n"] = std::to_string(n);
  obj["l"] = std::to_string(l);
  Json rows = Json::array();
  for (const auto& row : table.rows) rows.push_back(to_json(row_record(row)));
  obj["rows"] = rows;
  obj["row_count"] = std::to_string(table.rows.size());
  obj["distinct_abs_s"] = std::to_string(table.distinct_abs_s);
  return obj.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact s-invariants of circle bundles over CP^{2n} x CP^1", "ksinv"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "s-invariant report for M_{k,l}");
  c->add_option("--n", compute.n, "dimension parameter (manifold dimension 4n+3)")->required()->check(CLI::PositiveNumber);
  c->add_option("--k", compute.k, "Euler class coefficient of y")->required()->check(CLI::PositiveNumber);
  c->add_option("--l", compute.l, "Euler class coefficient of x")->required()->check(CLI::PositiveNumber);
  c->add_flag("--json", compute.json, "single JSON object output");

  LaurentArgs laurent;
  auto* lc = app.add_subcommand("laurent", "Laurent polynomial p(l) = s(k,l)/k");
  lc->add_option("--n", laurent.n)->required()->check(CLI::PositiveNumber);
  lc->add_flag("--check-leading", laurent.check_leading, "compare the l^{2n} coefficient with its closed form");
  lc->add_flag("--json", laurent.json);
  lc->add_option("--scan-roots", laurent.scan_roots, "report odd l <= L with p(l) = 0")->check(CLI::PositiveNumber);

  TableArgs table;
  auto* t = app.add_subcommand("table", "distinct-|s| component table at fixed l");
  t->add_option("--n", table.n)->required()->check(CLI::PositiveNumber);
  t->add_option("--l", table.l)->required()->check(CLI::PositiveNumber);
  t->add_option("--k-start", table.k_start)->check(CLI::PositiveNumber);
  t->add_option("--k-end", table.k_end)->required()->check(CLI::PositiveNumber);
  t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));
  t->add_option("--out", table.out_path, "write the table to PATH instead of stdout");

  std::string series_name = "ahat";
  int order = 0;
  auto* s = app.add_subcommand("series", "coefficients of (t/2)/sinh(t/2) or t/tanh(t)");
  s->add_option("--series", series_name)->required()->check(CLI::IsMember({"ahat", "lgenus"}));
  s->add_option("--order", order, "number of coefficients")->required()->check(CLI::PositiveNumber);

  int m = 0;
  auto* nm = app.add_subcommand("nm", "N_m = ahat_m + a_m L_m in Pontrjagin classes");
  nm->add_option("--m", m)->required()->check(CLI::PositiveNumber);

  int n_max = 3;
  auto* v = app.add_subcommand("verify", "run every property suite");
  v->add_option("--n-max", n_max)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kDomainError;
  }

  try {
    if (*c) return cmd_compute(compute, out);
    if (*lc) return cmd_laurent(laurent, out);
    if (*t) return cmd_table(table, out, err);
    if (*s) return cmd_series(parse_series(series_name), order, out);
    if (*nm) return cmd_nm(m, out);
    if (*v) return cmd_verify(n_max, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kDomainError;
}

}  // namespace ksinv::cli
