#include "poincare/branches.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "poincare/errors.hpp"
#include "poincare/parallel.hpp"

namespace poincare {

namespace {

const Rational kOne(1);

void require_index(Deformation family, int index) {
  const int lo = family == Deformation::F ? 2 : 1;
  if (index < lo) {
    throw std::invalid_argument(std::string(name(family)) + " branches need index >= " + std::to_string(lo));
  }
}

// Branches strictly below y = 1 at t; t must not be a crossing time.
int below_one(Deformation family, int index, const Rational& t) {
  return count_roots(branch_polynomial(family, index, t), Endpoint::open(Rational(0)), Endpoint::open(kOne));
}

Json interval_json(const RootInterval& iv) {
  return {{"lo", to_fraction_string(iv.lo)}, {"hi", to_fraction_string(iv.hi)}};
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

int branch_count(Deformation family, int index) {
  require_index(family, index);
  return family == Deformation::F ? index - 2 : index - 1;
}

IntPoly branch_polynomial(Deformation family, int index, const Rational& t) {
  require_index(family, index);
  if (family == Deformation::F) {
    return exact_div(clear_denominators(eval_t(compute_f(index), t)), IntPoly{0, 1});
  }
  return clear_denominators(eval_t(compute_fhat(index), t));
}

const IntPoly& slice_polynomial(Deformation family, int index) {
  require_index(family, index);
  return family == Deformation::F ? compute_p(index + 1) : compute_phat(index);
}

BranchTrace track_branches(Deformation family, int index, const std::vector<Rational>& grid,
                           const Rational& width, int jobs) {
  const int expected = branch_count(family, index);
  for (const auto& t : grid) {
    if (t >= 0) throw std::invalid_argument("grid points must be negative");
  }
  BranchTrace trace{family, index, std::vector<GridPoint>(grid.size())};
  parallel_for(grid.size(), jobs, [&](std::size_t j) {
    const Rational& t = grid[j];
    IsolationList roots = isolate_roots(branch_polynomial(family, index, t), Endpoint::open(Rational(0)),
                                        Endpoint::open(1 - t), width);
    if (static_cast<int>(roots.size()) != expected) {
      throw CountMismatch(std::string(name(family)) + "_" + std::to_string(index) + " at t = " +
                          to_fraction_string(t) + ": " + std::to_string(roots.size()) +
                          " roots in (0, 1 - t), expected " + std::to_string(expected));
    }
    trace.points[j] = GridPoint{t, std::move(roots)};
  });
  return trace;
}

std::vector<CrossingRecord> find_crossings(Deformation family, int index, const Rational& width) {
  const IntPoly& slice = slice_polynomial(family, index);
  const int d = branch_count(family, index);
  const SturmChain chain(slice);
  IsolationList taus = isolate_roots(slice, Endpoint::neg_inf(), Endpoint::open(Rational(0)), width);
  if (static_cast<int>(taus.size()) != d || slice.degree() != d) {
    throw CountMismatch("slice polynomial does not have " + std::to_string(d) + " negative roots");
  }
  std::vector<CrossingRecord> out;
  for (int i = 1; i <= d; ++i) {
    RootInterval tau = taus[static_cast<std::size_t>(i - 1)];
    for (int round = 0; !tau.exact() && tau.hi >= 0; ++round) {
      if (round > 200) throw RefinementBudgetExceeded("crossing interval does not leave t >= 0");
      tau = refine(chain, tau, tau.width() / 2);
    }
    Rational left = tau.lo;
    Rational right = tau.hi;
    if (tau.exact()) {
      // Open a small bracket around an exact rational crossing.
      Rational delta = std::min(Rational(1), Rational(abs_value(tau.lo) / 2));
      for (int round = 0;; ++round) {
        if (round > 200) throw RefinementBudgetExceeded("no bracket around an exact crossing");
        left = tau.lo - delta;
        right = tau.lo + delta;
        if (sign_at(slice, left) != 0 && sign_at(slice, right) != 0 &&
            chain.count(Endpoint::closed_at(left), Endpoint::closed_at(right)) == 1) {
          break;
        }
        delta /= 2;
      }
    }
    const int below_left = below_one(family, index, left);
    const int below_right = below_one(family, index, right);
    if (below_left != i - 1 || below_right != i) {
      throw CountMismatch("crossing " + std::to_string(i) + " is not owned by branch " + std::to_string(i) +
                          ": " + std::to_string(below_left) + " and " + std::to_string(below_right) +
                          " branches below y = 1 on either side");
    }
    out.push_back({i, tau, left, right});
  }
  return out;
}

Verdict verify_crossings(Deformation family, int index) {
  const std::string claim = std::string(name(family)) + "-crossings";
  return run_check(claim, index, [&](Verdict& v) -> std::optional<Json> {
    std::vector<CrossingRecord> records;
    try {
      records = find_crossings(family, index);
    } catch (const Error& e) {
      Json w = reason("crossing certification failed");
      w["error"] = e.what();
      return w;
    }
    Json list = Json::array();
    for (const auto& r : records) {
      list.push_back({{"branch", r.branch},
                      {"tau_lo", to_fraction_string(r.tau.lo)},
                      {"tau_hi", to_fraction_string(r.tau.hi)}});
    }
    v.details = Json{{"crossings", list}};
    if (static_cast<int>(records.size()) != branch_count(family, index)) return reason("wrong crossing count");
    return std::nullopt;
  });
}

Verdict verify_endpoint_behavior(Deformation family, int index) {
  const std::string claim = std::string(name(family)) + "-endpoints";
  return run_check(claim, index, [&](Verdict& v) -> std::optional<Json> {
    // Sample points beyond every crossing: inside (nearest slice root, 0) and
    // below the most negative slice root.
    const IntPoly slice = slice_polynomial(family, index);
    Rational near_zero(-1, 1024);
    const Rational inner = -1 / (2 * cauchy_bound(reversed(slice)));
    if (inner > near_zero) near_zero = inner;
    Rational far(-(Integer(1) << 20));
    const Rational outer = -2 * cauchy_bound(slice);
    if (outer < far) far = outer;
    v.details = Json{{"t_near", to_fraction_string(near_zero)}, {"t_far", to_fraction_string(far)}};
    const int high = count_roots(branch_polynomial(family, index, near_zero), Endpoint::closed_at(kOne),
                                 Endpoint::open(1 - near_zero));
    if (high != 0) {
      Json w = reason("branch at or above y = 1 near t = 0");
      w["t"] = to_fraction_string(near_zero);
      w["count"] = high;
      return w;
    }
    const int low =
        count_roots(branch_polynomial(family, index, far), Endpoint::open(Rational(0)), Endpoint::closed_at(kOne));
    if (low != 0) {
      Json w = reason("branch at or below y = 1 for very negative t");
      w["t"] = to_fraction_string(far);
      w["count"] = low;
      return w;
    }
    return std::nullopt;
  });
}

Verdict verify_scaled_limit(int m, const Rational& t_big, const Rational& tol) {
  if (m < 2) throw std::invalid_argument("scaled limit needs m >= 2");
  if (t_big >= 0 || tol <= 0) throw std::invalid_argument("need t < 0 and tol > 0");
  return run_check("scaled-limit", m, [&](Verdict& v) -> std::optional<Json> {
    v.details = Json{{"t", to_fraction_string(t_big)}};
    if (m == 2) return std::nullopt;
    const Rational abs_t = -t_big;
    const IsolationList r = isolate_roots(branch_polynomial(Deformation::F, m, t_big), Endpoint::open(Rational(0)),
                                          Endpoint::open(1 - t_big), tol * abs_t / 8);
    const IntPoly g = exact_div(compute_g(m), IntPoly{0, 1});
    const IsolationList alpha =
        isolate_roots(g, Endpoint::open(Rational(-1)), Endpoint::open(Rational(0)), tol / 8);
    const std::size_t d = static_cast<std::size_t>(m - 2);
    if (r.size() != d || alpha.size() != d) return reason("wrong number of branches or limit roots");
    Rational worst(0);
    for (std::size_t i = 0; i < d; ++i) {
      const RootInterval& a = alpha[d - 1 - i];
      const Rational bound =
          abs_value(r[i].midpoint() / t_big - a.midpoint()) + r[i].width() / (2 * abs_t) + a.width() / 2;
      if (bound > worst) worst = bound;
      if (bound > tol) {
        Json w = reason("scaled branch too far from the root of G_m");
        w["branch"] = i + 1;
        w["scaled"] = to_decimal(r[i].midpoint() / t_big, 12);
        w["limit"] = to_decimal(a.midpoint(), 12);
        return w;
      }
    }
    (*v.details)["max_deviation"] = to_decimal(worst, 12);
    return std::nullopt;
  });
}

const std::vector<FigureRow>& figure_reference() {
  static const std::vector<FigureRow> rows = {
      {"-5.10000000", "1.03733935", "3.69599398"}, {"-4.90000000", "1.01314336", "3.58685664"},
      {"-4.79128785", "1.00000000", "3.52752523"}, {"-4.60000000", "0.97688921", "3.42311079"},
      {"-4.30000000", "0.94068986", "3.25931014"}, {"-4.00000000", "0.90455488", "3.09544512"},
      {"-3.70000000", "0.86849624", "2.93150376"}, {"-3.40000000", "0.83252907", "2.76747093"},
      {"-3.10000000", "0.79667282", "2.60332718"}, {"-2.80000000", "0.76095292", "2.43904708"},
      {"-2.50000000", "0.72540333", "2.27459667"}, {"-2.20000000", "0.69007043", "2.10992957"},
      {"-1.90000000", "0.65501938", "1.94498062"}, {"-1.60000000", "0.62034493", "1.77965507"},
      {"-1.30000000", "0.58619070", "1.61380930"}, {"-1.00000000", "0.55278640", "1.44721360"},
      {"-0.75000000", "0.52579869", "1.30753465"}, {"-0.55000000", "0.50503623", "1.19496377"},
      {"-0.40000000", "0.49016133", "1.10983867"}, {"-0.30000000", "0.48069853", "1.05263481"},
      {"-0.25000000", "0.47613872", "1.02386128"}, {"-0.22000000", "0.47346670", "1.00653330"},
      {"-0.20871215", "0.47247477", "1.00000000"}, {"-0.20000000", "0.47171444", "0.99495222"},
      {"-0.15000000", "0.46744566", "0.96588768"}, {"-0.10000000", "0.46335681", "0.93664319"},
      {"-0.05000000", "0.45947822", "0.90718845"}, {"-0.02000000", "0.45726750", "0.88939917"},
      {"-0.01000000", "0.45655211", "0.88344789"},
  };
  return rows;
}

std::vector<Rational> figure_grid() {
  std::vector<Rational> grid;
  for (const auto& row : figure_reference()) grid.push_back(parse_rational(row.t));
  return grid;
}

Verdict verify_figure(const Rational& tol, const Rational& width) {
  return run_check("figure", 4, [&](Verdict& v) -> std::optional<Json> {
    const BranchTrace trace = track_branches(Deformation::F, 4, figure_grid(), width);
    const auto& ref = figure_reference();
    for (std::size_t j = 0; j < ref.size(); ++j) {
      const IsolationList& roots = trace.points[j].roots;
      const Rational want[2] = {parse_rational(ref[j].lower), parse_rational(ref[j].upper)};
      for (int b = 0; b < 2; ++b) {
        if (abs_value(roots[static_cast<std::size_t>(b)].midpoint() - want[b]) > tol) {
          Json w = reason("branch value differs from the reference");
          w["t"] = ref[j].t;
          w["branch"] = b + 1;
          w["mid"] = to_decimal(roots[static_cast<std::size_t>(b)].midpoint(), 10);
          w["expected"] = b == 0 ? ref[j].lower : ref[j].upper;
          return w;
        }
      }
    }
    const auto crossings = find_crossings(Deformation::F, 4, width);
    const Rational taus[2] = {parse_rational("-4.79128785"), parse_rational("-0.20871215")};
    Json list = Json::array();
    for (int i = 0; i < 2; ++i) {
      const RootInterval& tau = crossings[static_cast<std::size_t>(i)].tau;
      list.push_back(interval_json(tau));
      if (taus[i] < tau.lo - tol || taus[i] > tau.hi + tol) {
        Json w = reason("crossing interval misses the reference crossing");
        w["branch"] = i + 1;
        w["tau"] = interval_json(tau);
        return w;
      }
    }
    v.details = Json{{"crossings", list}};
    return std::nullopt;
  });
}

std::vector<Rational> default_grid(Deformation family, int index) {
  const IntPoly& slice = slice_polynomial(family, index);
  std::set<Rational> points;
  for (int k = -10; k <= 10; ++k) {
    points.insert(k >= 0 ? Rational(-(Integer(1) << k)) : Rational(Integer(-1), Integer(1) << -k));
  }
  if (slice.degree() > 0) {
    const Rational far = cauchy_bound(slice);
    const Rational near = 1 / cauchy_bound(reversed(slice));
    while (*points.begin() >= -far) points.insert(*points.begin() * 2);
    while (*points.rbegin() <= -near) points.insert(*points.rbegin() / 2);
  }
  // Move grid points off exact crossings.
  std::set<Rational> moved;
  for (Rational t : points) {
    while (sign_at(slice, t) == 0) t = t * 65 / 64;
    moved.insert(t);
  }
  points = std::move(moved);
  if (slice.degree() > 0) {
    const SturmChain chain(slice);
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = points.begin(); std::next(it) != points.end(); ++it) {
        const Rational& a = *it;
        const Rational& b = *std::next(it);
        if (chain.count(Endpoint::closed_at(a), Endpoint::closed_at(b)) >= 2) {
          Rational mid = (a + b) / 2;
          for (int k = 3; sign_at(slice, mid) == 0; ++k) mid = a + (b - a) * Rational(k, 2 * k + 1);
          points.insert(mid);
          changed = true;
          break;
        }
      }
    }
  }
  return {points.rbegin(), points.rend()};
}

Verdict verify_crossing_shadow(int n, int jobs) {
  if (n < 4) throw std::invalid_argument("crossing shadow needs n >= 4");
  return run_check("crossing-shadow", n, [&](Verdict& v) -> std::optional<Json> {
    const int m = n - 1;
    std::vector<Rational> grid = default_grid(Deformation::F, m);
    std::sort(grid.begin(), grid.end());
    BranchTrace trace = track_branches(Deformation::F, m, grid, Rational(1, 1 << 20), jobs);
    const int d = branch_count(Deformation::F, m);
    // signs[j][i]: sign of (midpoint - 1) for branch i + 1 at grid point j,
    // after refining until the interval excludes 1.
    std::vector<std::vector<int>> signs(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t j) {
      GridPoint& pt = trace.points[j];
      const SturmChain chain(branch_polynomial(Deformation::F, m, pt.t));
      for (auto& iv : pt.roots) {
        for (int round = 0; iv.contains(kOne); ++round) {
          if (round > 400) throw RefinementBudgetExceeded("branch interval does not leave y = 1");
          iv = refine(chain, iv, iv.width() / 2);
        }
        signs[j].push_back(sgn(iv.midpoint() - kOne));
      }
    });
    const IntPoly& p = compute_p(n);
    const SturmChain p_chain(p);
    Json brackets = Json::array();
    Rational previous_right;
    int crossings = 0;
    for (int i = 0; i < d; ++i) {
      int changes = 0;
      std::size_t at = 0;
      for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        if (signs[j][static_cast<std::size_t>(i)] != signs[j + 1][static_cast<std::size_t>(i)]) {
          ++changes;
          at = j;
        }
      }
      if (changes != 1) {
        Json w = reason("branch does not cross y = 1 exactly once on the grid");
        w["branch"] = i + 1;
        w["changes"] = changes;
        return w;
      }
      const int inside = p_chain.count(Endpoint::closed_at(grid[at]), Endpoint::closed_at(grid[at + 1]));
      if (inside != 1 || (i > 0 && grid[at] < previous_right)) {
        Json w = reason("sign-change bracket does not hold exactly the i-th root of P_n");
        w["branch"] = i + 1;
        w["bracket"] = {to_fraction_string(grid[at]), to_fraction_string(grid[at + 1])};
        w["roots_inside"] = inside;
        return w;
      }
      previous_right = grid[at + 1];
      brackets.push_back({to_fraction_string(grid[at]), to_fraction_string(grid[at + 1])});
      ++crossings;
    }
    v.details = Json{{"grid_points", grid.size()}, {"brackets", brackets}};
    if (crossings != n - 3) return reason("crossing count differs from n - 3");
    return std::nullopt;
  });
}

std::string figure_csv(const BranchTrace& trace, int digits) {
  std::ostringstream out;
  out << "t,branch,mid,lo,hi,t_exact,lo_exact,hi_exact\n";
  for (const auto& pt : trace.points) {
    for (std::size_t i = 0; i < pt.roots.size(); ++i) {
      const RootInterval& iv = pt.roots[i];
      out << to_decimal(pt.t, digits) << ',' << i + 1 << ',' << to_decimal(iv.midpoint(), digits) << ','
          << to_decimal(iv.lo, digits) << ',' << to_decimal(iv.hi, digits) << ',' << to_fraction_string(pt.t) << ','
          << to_fraction_string(iv.lo) << ',' << to_fraction_string(iv.hi) << '\n';
    }
  }
  return out.str();
}

}  // namespace poincare
