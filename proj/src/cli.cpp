#include "poincare/cli.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "poincare/branches.hpp"
#include "poincare/errors.hpp"
#include "poincare/identities.hpp"
#include "poincare/parallel.hpp"
#include "poincare/realroot.hpp"
#include "poincare/recurrences.hpp"

namespace poincare {

namespace {

constexpr int kMaxIndex = 100;

const std::vector<Rational>& location_samples() {
  static const std::vector<Rational> samples = {Rational(-1, 2), Rational(-1), Rational(-3), Rational(-10)};
  return samples;
}

std::vector<Integer> coeff_vector(const IntPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

void add(std::vector<Check>& out, std::string claim, int index, std::function<Verdict()> run) {
  out.push_back({std::move(claim), index, std::move(run)});
}

void realroot_checks(std::vector<Check>& out, const RunConfig& c) {
  for (int n = 4; n <= c.max_n; ++n) add(out, "P-real-rooted", n, [n] { return verify_p_real_rooted(n); });
}

void fm_checks(std::vector<Check>& out, const RunConfig& c) {
  for (int n = 1; n <= c.max_n; ++n) add(out, "Ptilde-real-rooted", n, [n] { return verify_fm_real_rooted(n); });
}

void interlace_checks(std::vector<Check>& out, const RunConfig& c) {
  const int top = std::min(c.max_n, c.max_interlace);
  for (int n = 3; n <= top; ++n) add(out, "interlacing", n, [n] { return verify_interlacing(n); });
  for (int n = 4; n <= top; ++n) add(out, "sign-alternation", n, [n] { return verify_sign_alternation(n); });
}

void ulc_checks(std::vector<Check>& out, const RunConfig& c) {
  for (int n = 3; n <= c.max_n; ++n) {
    add(out, "P-palindrome-unimodal", n, [n] {
      return verify_palindrome_unimodal(coeff_vector(compute_p(n)), "P-palindrome-unimodal", n);
    });
    for (int r = 1; r <= 4; ++r) {
      const bool asserted = r <= 2;
      add(out, "P-" + std::to_string(r) + "-ULC", n, [n, r, asserted] {
        return ulc_verdict(verify_rulc(coeff_vector(compute_p(n)), r, "P_" + std::to_string(n)),
                           "P-" + std::to_string(r) + "-ULC", n, !asserted);
      });
    }
    add(out, "ULC-monotone", n, [n] {
      return run_check("ULC-monotone", n, [n](Verdict&) -> std::optional<Json> {
        const auto coeffs = coeff_vector(compute_p(n));
        for (int r = 1; r <= 4; ++r) {
          if (verify_rulc(coeffs, r).pass() && !verify_rulc(coeffs, r - 1).pass()) {
            Json w = reason("r-ULC holds but (r-1)-ULC fails");
            w["r"] = r;
            return w;
          }
        }
        return std::nullopt;
      });
    });
  }
  for (int n = 1; n <= c.max_n; ++n) {
    add(out, "Ptilde-palindrome-unimodal", n, [n] {
      return verify_palindrome_unimodal(coeff_vector(compute_ptilde(n)), "Ptilde-palindrome-unimodal", n);
    });
    add(out, "Ptilde-1-ULC", n, [n] {
      return ulc_verdict(verify_rulc(coeff_vector(compute_ptilde(n)), 1, "Ptilde_" + std::to_string(n)),
                         "Ptilde-1-ULC", n);
    });
  }
}

void identity_checks(std::vector<Check>& out, const RunConfig& c) {
  const int order = c.order;
  add(out, "U-ode", order, [order] { return verify_u_ode(order); });
  add(out, "U-product", order, [order] { return verify_u_product(order); });
  add(out, "Phi-pde", order, [order] { return verify_phi_pde(order); });
  add(out, "Phi-y-slice", order, [order] { return verify_phi_y_slice(order); });
  add(out, "getzler-param", order, [order] { return verify_getzler_param(order); });
  add(out, "psi-power", order, [order] { return verify_psi_power(order); });
  for (int m = 2; m <= order; ++m) add(out, "slice-slope", m, [m] { return verify_slice_slope(m); });
  for (int k = 1; k <= c.max_m; ++k) {
    add(out, "F-weight", k, [k] { return verify_weight_identity(Deformation::F, k); });
    add(out, "Fhat-weight", k, [k] { return verify_weight_identity(Deformation::Fhat, k); });
    add(out, "G-limit", k, [k] { return verify_g_limit_identity(k); });
  }
}

void location_checks(std::vector<Check>& out, const RunConfig& c) {
  for (int m = 2; m <= c.max_m; ++m) {
    for (const Rational& t0 : location_samples()) {
      add(out, "F-root-location", m, [m, t0] { return verify_root_location(m, t0); });
    }
  }
  for (int n = 2; n <= c.max_m; ++n) {
    for (const Rational& t0 : location_samples()) {
      add(out, "Fhat-root-location", n, [n, t0] { return verify_fhat_root_location(n, t0); });
    }
  }
  for (int m = 2; m <= c.max_m; ++m) add(out, "G-roots", m, [m] { return verify_g_roots(m); });
  for (int n = 2; n <= c.max_m; ++n) add(out, "K-roots", n, [n] { return verify_k_roots(n); });
}

void crossing_checks(std::vector<Check>& out, const RunConfig& c) {
  for (int m = 3; m <= c.max_m; ++m) {
    add(out, "F-crossings", m, [m] { return verify_crossings(Deformation::F, m); });
    add(out, "F-endpoints", m, [m] { return verify_endpoint_behavior(Deformation::F, m); });
  }
  for (int n = 2; n <= c.max_m; ++n) {
    add(out, "Fhat-crossings", n, [n] { return verify_crossings(Deformation::Fhat, n); });
    add(out, "Fhat-endpoints", n, [n] { return verify_endpoint_behavior(Deformation::Fhat, n); });
  }
  for (int n = 5; n <= c.max_shadow; ++n) add(out, "crossing-shadow", n, [n] { return verify_crossing_shadow(n); });
  const Rational t_big(-1000000);
  const Rational tol(1, 1000);
  for (int m = 3; m <= c.max_scaled; ++m) {
    add(out, "scaled-limit", m, [m, t_big, tol] { return verify_scaled_limit(m, t_big, tol); });
  }
  const Rational width = c.width;
  add(out, "figure", 4, [width] { return verify_figure(Rational(5, 10000000), std::min(width, Rational(1, 100000000))); });
}

// Decimal places that resolve the given width.
int digits_for(const Rational& width) {
  Integer inv;
  const Rational r = 1 / width;
  mpz_cdiv_q(inv.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return std::max(4, static_cast<int>(inv.get_str().size()));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

// ---------------------------------------------------------------- printing

void print_verdicts(const SuiteReport& report, std::string_view suite, const RunConfig& config, std::ostream& out) {
  if (config.format == "json") {
    for (const auto& v : report.verdicts) out << to_json(v).dump() << '\n';
    out << Json{{"summary", summary_json(report, suite, config)}}.dump() << '\n';
    return;
  }
  if (config.format == "csv") {
    out << "claim,index,pass,informational,details,witness\n";
    for (const auto& v : report.verdicts) {
      out << csv_field(v.claim) << ',' << v.index << ',' << (v.pass ? "true" : "false") << ','
          << (v.informational ? "true" : "false") << ',' << (v.details ? csv_field(v.details->dump()) : "") << ','
          << (v.witness ? csv_field(v.witness->dump()) : "") << '\n';
    }
    return;
  }
  for (const auto& v : report.verdicts) {
    const char* status = v.pass ? "PASS" : (v.informational ? "info" : "FAIL");
    out << status << "  " << std::left << std::setw(28) << v.claim << std::right << std::setw(4) << v.index;
    if (v.details && v.details->contains("t")) out << "  t=" << (*v.details)["t"].get<std::string>();
    if (v.details && v.details->contains("r")) out << "  r=" << (*v.details)["r"];
    if (v.witness) out << "  " << v.witness->dump();
    out << '\n';
  }
  out << "passed " << report.passed << ", failed " << report.failed << ", informational " << report.informational
      << " (" << std::fixed << std::setprecision(1) << report.millis / 1000.0 << " s)\n";
  out << std::defaultfloat;
}

void print_poly_row(std::ostream& out, const RunConfig& config, std::string_view family, int index,
                    const IntPoly& p, std::string_view var) {
  if (config.format == "json") {
    out << Json{{"family", family}, {"index", index}, {"coeffs", to_json(p)}}.dump() << '\n';
  } else if (config.format == "csv") {
    for (std::size_t i = 0; i < p.size(); ++i) out << family << ',' << index << ',' << i << ',' << p[i] << '\n';
  } else {
    std::ostringstream coeffs;
    for (std::size_t i = 0; i < p.size(); ++i) coeffs << (i ? " " : "") << p[i];
    out << family << '_' << index << "  [" << coeffs.str() << "]  " << to_string(p, var) << '\n';
  }
}

void print_bi_row(std::ostream& out, const RunConfig& config, std::string_view family, int index, const BiPoly& f,
                  std::string_view y_var, std::string_view t_var) {
  if (config.format == "json") {
    out << Json{{"family", family}, {"index", index}, {"coeffs", to_json(f)}}.dump() << '\n';
  } else if (config.format == "csv") {
    auto ys = f.y_coeffs();
    for (std::size_t j = 0; j < ys.size(); ++j) {
      for (std::size_t k = 0; k < ys[j].size(); ++k) {
        out << family << ',' << index << ',' << j << ',' << k << ',' << ys[j][k] << '\n';
      }
    }
  } else {
    out << family << '_' << index << "  " << to_string(f, y_var, t_var) << '\n';
  }
}

// ---------------------------------------------------------------- commands

int cmd_compute(const std::string& family, const std::string& range, const RunConfig& config, std::ostream& out) {
  const auto [lo, hi] = parse_range(range);
  static const std::map<std::string, Family> uni = {{"P", Family::P},     {"S", Family::S}, {"Ptilde", Family::Ptilde},
                                                   {"Phat", Family::Phat}, {"G", Family::G}, {"K", Family::K}};
  if (auto it = uni.find(family); it != uni.end()) {
    if (lo < min_index(it->second)) throw std::invalid_argument(family + " starts at index " + std::to_string(min_index(it->second)));
    const std::string_view var = it->second == Family::G || it->second == Family::K ? "x" : "t";
    if (config.format == "csv") out << "family,index,power,coefficient\n";
    for (int n = lo; n <= hi; ++n) print_poly_row(out, config, family, n, default_cache().get(it->second, n), var);
    return kAllPass;
  }
  if (family == "F" || family == "Fhat" || family == "H") {
    if (lo < 1) throw std::invalid_argument(family + " starts at index 1");
    if (config.format == "csv") {
      out << (family == "H" ? "family,index,x_power,eps_power,coefficient\n" : "family,index,y_power,t_power,coefficient\n");
    }
    for (int n = lo; n <= hi; ++n) {
      if (family == "H") {
        print_bi_row(out, config, family, n, compute_h_scaled(n), "x", "eps");
      } else {
        print_bi_row(out, config, family, n, family == "F" ? compute_f(n) : compute_fhat(n), "y", "t");
      }
    }
    return kAllPass;
  }
  throw std::invalid_argument("unknown family '" + family + "' (P, S, Ptilde, Phat, G, K, F, Fhat, H)");
}

int cmd_roots(const std::string& family, int index, const std::optional<std::string>& t_text, const RunConfig& config,
              std::ostream& out) {
  IntPoly p;
  std::optional<Rational> t;
  if (family == "F" || family == "Fhat") {
    if (!t_text) throw std::invalid_argument(family + " roots need -t");
    t = parse_rational(*t_text);
    if (index < 1) throw std::invalid_argument("index must be >= 1");
    p = clear_denominators(eval_t(family == "F" ? compute_f(index) : compute_fhat(index), *t));
  } else {
    static const std::map<std::string, Family> uni = {{"P", Family::P},     {"S", Family::S}, {"Ptilde", Family::Ptilde},
                                                     {"Phat", Family::Phat}, {"G", Family::G}, {"K", Family::K}};
    auto it = uni.find(family);
    if (it == uni.end()) throw std::invalid_argument("unknown family '" + family + "'");
    if (index < min_index(it->second) || index > kMaxIndex) throw std::invalid_argument("index out of range");
    p = default_cache().get(it->second, index);
  }
  if (p.is_zero()) throw std::invalid_argument("the polynomial is zero");
  const SturmChain chain(p);
  const IsolationList roots =
      isolate_roots(chain.square_free_part(), Endpoint::neg_inf(), Endpoint::pos_inf(), config.width);
  const int digits = digits_for(config.width);
  if (config.format == "json") {
    Json j{{"family", family}, {"index", index}, {"square_free", chain.input_square_free()},
           {"roots", to_json(roots, digits)}};
    if (t) j["t"] = to_fraction_string(*t);
    out << j.dump() << '\n';
  } else if (config.format == "csv") {
    out << "root,mid,lo,hi,lo_exact,hi_exact\n";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      out << i + 1 << ',' << to_decimal(roots[i].midpoint(), digits) << ',' << to_decimal(roots[i].lo, digits) << ','
          << to_decimal(roots[i].hi, digits) << ',' << to_fraction_string(roots[i].lo) << ','
          << to_fraction_string(roots[i].hi) << '\n';
    }
  } else {
    out << family << '_' << index << (t ? " at t = " + to_fraction_string(*t) : "") << ": " << roots.size()
        << " distinct real roots" << (chain.input_square_free() ? "" : " (input has repeated roots)") << '\n';
    for (std::size_t i = 0; i < roots.size(); ++i) {
      out << "  " << to_decimal(roots[i].midpoint(), digits) << "  in [" << to_fraction_string(roots[i].lo) << ", "
          << to_fraction_string(roots[i].hi) << "]\n";
    }
  }
  return kAllPass;
}

struct BranchOptions {
  int index = 0;
  bool fhat = false;
  bool figure_grid = false;
  bool default_grid = false;
  std::vector<std::string> t_values;
  std::string out_path;
  std::string crossings_path;
};

int cmd_branches(const BranchOptions& o, const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Deformation family = o.fhat ? Deformation::Fhat : Deformation::F;
  if (!o.fhat && o.index < 3) throw std::invalid_argument("branches need m >= 3");
  if (o.fhat && o.index < 2) throw std::invalid_argument("Fhat branches need n >= 2");
  if (o.index > kMaxIndex) throw std::invalid_argument("index out of range");
  if (static_cast<int>(o.figure_grid) + static_cast<int>(o.default_grid) + static_cast<int>(!o.t_values.empty()) > 1) {
    throw std::invalid_argument("choose one of --figure-grid, --default-grid, -t");
  }
  std::vector<Rational> grid;
  if (o.figure_grid) {
    grid = figure_grid();
  } else if (!o.t_values.empty()) {
    for (const auto& s : o.t_values) grid.push_back(parse_rational(s));
  } else {
    grid = default_grid(family, o.index);
  }
  for (const auto& t : grid) {
    if (t >= 0) throw std::invalid_argument("t values must be negative");
  }
  const BranchTrace trace = track_branches(family, o.index, grid, config.width, config.jobs);
  const int digits = digits_for(config.width);
  std::string payload;
  if (config.format == "json") {
    std::ostringstream s;
    for (const auto& pt : trace.points) {
      s << Json{{"t", to_fraction_string(pt.t)}, {"roots", to_json(pt.roots, digits)}}.dump() << '\n';
    }
    payload = s.str();
  } else {
    payload = figure_csv(trace, digits);
  }
  if (o.out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + o.out_path);
    file << payload;
    std::size_t rows = 0;
    for (const auto& pt : trace.points) rows += pt.roots.size();
    err << "wrote " << rows << " rows for " << grid.size() << " t-values to " << o.out_path << '\n';
  }
  if (!o.crossings_path.empty()) {
    Json list = Json::array();
    for (const auto& r : find_crossings(family, o.index, config.width)) {
      list.push_back({{"branch", r.branch},
                      {"tau_lo", to_fraction_string(r.tau.lo)},
                      {"tau_hi", to_fraction_string(r.tau.hi)}});
    }
    std::ofstream file(o.crossings_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + o.crossings_path);
    file << list.dump(2) << '\n';
  }
  return kAllPass;
}

int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out) {
  const SuiteReport report = run_checks(suite_checks(suite, config), config.jobs);
  print_verdicts(report, suite, config, out);
  return report.all_pass() ? kAllPass : kFailure;
}

int cmd_report(const RunConfig& config, std::ostream& out) {
  const SuiteReport report = run_checks(suite_checks("all", config), config.jobs);
  struct Tally {
    int passed = 0, failed = 0, info = 0;
    double millis = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Tally> tally;
  for (const auto& v : report.verdicts) {
    if (!tally.count(v.claim)) order.push_back(v.claim);
    Tally& t = tally[v.claim];
    (v.informational ? t.info : (v.pass ? t.passed : t.failed)) += 1;
    t.millis += v.millis;
  }
  // Informational ULC status per n: the largest r among 1..4 that holds.
  std::map<int, int> best_r;
  for (const auto& v : report.verdicts) {
    if (v.claim.rfind("P-", 0) == 0 && v.claim.size() == 7 && v.claim.substr(3) == "-ULC" && v.pass) {
      const int r = v.claim[2] - '0';
      best_r[v.index] = std::max(best_r[v.index], r);
    }
  }
  if (config.format == "json") {
    Json claims = Json::array();
    for (const auto& c : order) {
      const Tally& t = tally[c];
      claims.push_back({{"claim", c}, {"passed", t.passed}, {"failed", t.failed}, {"informational", t.info}});
    }
    Json ulc = Json::object();
    for (const auto& [n, r] : best_r) ulc[std::to_string(n)] = r;
    Json failures = Json::array();
    for (const auto& v : report.verdicts) {
      if (!v.pass && !v.informational) failures.push_back(to_json(v));
    }
    out << Json{{"claims", claims}, {"max_ulc_r", ulc}, {"failures", failures},
                {"summary", summary_json(report, "all", config)}}
               .dump(2)
        << '\n';
  } else if (config.format == "csv") {
    out << "claim,passed,failed,informational\n";
    for (const auto& c : order) {
      const Tally& t = tally[c];
      out << c << ',' << t.passed << ',' << t.failed << ',' << t.info << '\n';
    }
  } else {
    out << std::left << std::setw(28) << "claim" << std::right << std::setw(8) << "passed" << std::setw(8) << "failed"
        << std::setw(8) << "info" << '\n';
    for (const auto& c : order) {
      const Tally& t = tally[c];
      out << std::left << std::setw(28) << c << std::right << std::setw(8) << t.passed << std::setw(8) << t.failed
          << std::setw(8) << t.info << '\n';
    }
    out << "\nlargest r with P_n r-ULC (r <= 4):\n";
    for (const auto& [n, r] : best_r) out << "  n=" << n << "  r=" << r << '\n';
    for (const auto& v : report.verdicts) {
      if (!v.pass && !v.informational) out << "FAIL " << to_json(v).dump() << '\n';
    }
    out << "passed " << report.passed << ", failed " << report.failed << ", informational " << report.informational
        << " (" << std::fixed << std::setprecision(1) << report.millis / 1000.0 << " s)\n"
        << std::defaultfloat;
  }
  return report.all_pass() ? kAllPass : kFailure;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",        "realroot", "interlace", "ulc",
                                                 "identities", "location", "crossings", "fm"};
  return names;
}

std::vector<Check> suite_checks(std::string_view suite, const RunConfig& config) {
  std::vector<Check> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](std::string_view name) {
    if (suite == name) known = true;
    return all || suite == name;
  };
  if (want("realroot")) realroot_checks(out, config);
  if (want("fm")) fm_checks(out, config);
  if (want("interlace")) interlace_checks(out, config);
  if (want("ulc")) ulc_checks(out, config);
  if (want("identities")) identity_checks(out, config);
  if (want("location")) location_checks(out, config);
  if (want("crossings")) crossing_checks(out, config);
  if (!known) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return out;
}

SuiteReport run_checks(const std::vector<Check>& checks, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.verdicts.resize(checks.size());
  parallel_for(checks.size(), jobs, [&](std::size_t i) {
    const Check& c = checks[i];
    try {
      report.verdicts[i] = c.run();
    } catch (const std::exception& e) {
      Verdict v;
      v.claim = c.claim;
      v.index = c.index;
      v.pass = false;
      Json w = reason("error");
      w["error"] = e.what();
      v.witness = w;
      report.verdicts[i] = v;
    }
  });
  for (const auto& v : report.verdicts) {
    if (v.informational) {
      ++report.informational;
    } else if (v.pass) {
      ++report.passed;
    } else {
      ++report.failed;
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json summary_json(const SuiteReport& report, std::string_view suite, const RunConfig& config) {
  return {{"suite", suite},
          {"total", report.verdicts.size()},
          {"passed", report.passed},
          {"failed", report.failed},
          {"informational", report.informational},
          {"millis", report.millis},
          {"config",
           {{"max_n", config.max_n},
            {"max_interlace", config.max_interlace},
            {"max_m", config.max_m},
            {"max_shadow", config.max_shadow},
            {"max_scaled", config.max_scaled},
            {"order", config.order},
            {"width", to_fraction_string(config.width)},
            {"jobs", config.jobs}}}};
}

std::pair<int, int> parse_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("invalid range '" + std::string(text) + "'");
    }
    return v;
  };
  int lo, hi;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    lo = number(text.substr(0, dots));
    hi = number(text.substr(dots + 2));
  } else {
    lo = hi = number(text);
  }
  if (lo > hi || lo < 0 || hi > kMaxIndex) {
    throw std::invalid_argument("invalid range '" + std::string(text) + "' (need 0 <= a <= b <= " +
                                std::to_string(kMaxIndex) + ")");
  }
  return {lo, hi};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation and certification for the Poincare polynomials of M_{0,n}bar and P^1[n]",
               "poincare"};
  app.require_subcommand(1);

  RunConfig config;
  config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string width_text = "1e-8";
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--order", config.order, "Series order for identity checks")
      ->check(CLI::Range(2, 40))
      ->capture_default_str();
  app.add_option("--width", width_text, "Refinement width for root intervals")->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--cache", config.cache_path, "Directory of cached family tables");

  std::string family, range;
  auto* compute = app.add_subcommand("compute", "Print polynomials of a family (P S Ptilde Phat G K F Fhat H)");
  compute->add_option("family", family)->required();
  compute->add_option("range", range, "n or a..b")->required();

  std::string roots_family;
  int roots_index = 0;
  std::optional<std::string> roots_t;
  auto* roots = app.add_subcommand("roots", "Isolate the real roots of one polynomial");
  roots->add_option("family", roots_family)->required();
  roots->add_option("index", roots_index)->required();
  roots->add_option("-t", roots_t, "t value for F and Fhat");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "all realroot interlace ulc identities location crossings fm")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  auto* identities = app.add_subcommand("identities", "Run the identity suite (same as verify identities)");
  auto* report = app.add_subcommand("report", "Run every suite and summarise by claim");
  for (auto* sub : {verify, report}) {
    sub->add_option("--max-n", config.max_n, "Largest n for P_n and Ptilde_n")->check(CLI::Range(4, kMaxIndex));
    sub->add_option("--max-interlace", config.max_interlace, "Largest n for interlacing")->check(CLI::Range(4, kMaxIndex));
    sub->add_option("--max-m", config.max_m, "Largest index for F, Fhat, G, K checks")->check(CLI::Range(3, 40));
    sub->add_option("--max-shadow", config.max_shadow, "Largest n for the crossing shadow")->check(CLI::Range(4, 30));
    sub->add_option("--max-scaled", config.max_scaled, "Largest m for the scaled limit")->check(CLI::Range(3, 30));
  }

  BranchOptions branch_opts;
  auto* branches = app.add_subcommand("branches", "Emit positive root branches of F_m (or Fhat_n) as CSV");
  branches->add_option("m", branch_opts.index)->required();
  branches->add_flag("--fhat", branch_opts.fhat, "Use Fhat_n instead of F_m");
  branches->add_flag("--figure-grid", branch_opts.figure_grid, "The 29 t-values of the reference figure");
  branches->add_flag("--default-grid", branch_opts.default_grid, "Dyadic ladder densified at crossings");
  branches->add_option("-t", branch_opts.t_values, "Explicit t values (repeatable)");
  branches->add_option("--out", branch_opts.out_path, "Write the table to this file");
  branches->add_option("--crossings", branch_opts.crossings_path, "Write the crossing report (JSON) here");

  for (auto* sub : {compute, roots, verify, identities, report, branches}) sub->fallthrough();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    config.width = parse_rational(width_text);
    if (config.width <= 0) throw std::invalid_argument("--width must be positive");
    if (!config.cache_path.empty() && std::filesystem::exists(config.cache_path)) {
      for (const auto& msg : default_cache().load(config.cache_path)) err << "cache: " << msg << '\n';
    }
    int code = kAllPass;
    if (*compute) code = cmd_compute(family, range, config, out);
    if (*roots) code = cmd_roots(roots_family, roots_index, roots_t, config, out);
    if (*verify) code = cmd_verify(suite, config, out);
    if (*identities) code = cmd_verify("identities", config, out);
    if (*report) code = cmd_report(config, out);
    if (*branches) code = cmd_branches(branch_opts, config, out, err);
    if (!config.cache_path.empty()) default_cache().save(config.cache_path);
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace poincare
