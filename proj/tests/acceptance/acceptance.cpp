// Acceptance checks. Prints one PASS/FAIL line per criterion; criterion 6
// also prints its sub-checks. Exit status is non-zero if any selected
// criterion fails.
//
//   mixcay_acceptance                 run all criteria
//   mixcay_acceptance --criterion N   run only criterion N

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mixcay/atoms.hpp"
#include "mixcay/census.hpp"
#include "mixcay/chartable.hpp"
#include "mixcay/eigen_oracle.hpp"
#include "mixcay/error.hpp"
#include "mixcay/families.hpp"
#include "mixcay/integrality.hpp"
#include "mixcay/spectra.hpp"
#include "oracles.hpp"

using namespace mixcay;
using oracle::repeat;
using std::set;

namespace {

// Pinned tolerances.
constexpr double kTableTol = 1e-8;
constexpr double kSpectrumTol = 1e-6;
constexpr double kRoundTol = 1e-6;
constexpr double kTableSeconds = 1.0;
constexpr double kCensusSeconds = 60.0;
constexpr int kVectorsPerGroup = 1000;
constexpr std::uint64_t kVectorSeed = 20240601;

constexpr Complex I{0, 1};

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> groups = [] {
    std::vector<std::string> v;
    for (int n = 3; n <= 16; ++n) v.push_back("cyclic:" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) v.push_back("dihedral:" + std::to_string(n));
    for (int n = 2; n <= 4; ++n) v.push_back("dicyclic:" + std::to_string(n));
    v.push_back("modular:16");
    v.push_back("sym:3");
    v.push_back("sym:4");
    v.push_back("alt:4");
    return v;
  }();
  return groups;
}

struct SubCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
  bool pass() const { return failed == 0; }
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<SubCheck> sub;
  std::vector<SubCheck> info;  // reported, not part of the verdict
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool near_int(double v) { return std::abs(v - std::round(v)) <= kRoundTol; }
long long rnd(double v) { return std::llround(v); }

// Both sides integral after rounding and equal as integers.
bool equal_after_rounding(double a, double b) { return near_int(a) && near_int(b) && rnd(a) == rnd(b); }

ElementSet to_set(const set<Element>& s) { return ElementSet(std::vector<Element>(s.begin(), s.end())); }

// ---------------------------------------------------------------------------
// 1. M16 character table against the printed table.

Outcome criterion1() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = build_family("modular:16");
  const auto table = character_table(g);
  const double elapsed = seconds_since(t0);

  const char* cols[] = {"1", "a4", "a2", "a6", "a", "a3", "ax", "a3x", "x", "a2x"};
  const Complex r1[] = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  const Complex r2[] = {1, 1, 1, 1, -1, -1, -1, -1, 1, 1};
  const Complex r3[] = {1, 1, 1, 1, 1, 1, -1, -1, -1, -1};
  const Complex r4[] = {1, 1, 1, 1, -1, -1, 1, 1, -1, -1};
  const Complex r5[] = {1, 1, -1, -1, I, -I, -I, I, -1, 1};
  const Complex r6[] = {1, 1, -1, -1, -I, I, I, -I, -1, 1};
  const Complex r7[] = {1, 1, -1, -1, I, -I, I, -I, 1, -1};
  const Complex r8[] = {1, 1, -1, -1, -I, I, -I, I, 1, -1};
  const Complex r9[] = {2, -2, 2.0 * I, -2.0 * I, 0, 0, 0, 0, 0, 0};
  const Complex r10[] = {2, -2, -2.0 * I, 2.0 * I, 0, 0, 0, 0, 0, 0};
  const Complex* printed[] = {r1, r2, r3, r4, r5, r6, r7, r8, r9, r10};

  std::vector<std::size_t> col_class;
  for (const char* name : cols) col_class.push_back(g.class_of(*g.find_element(name)));
  std::vector<std::size_t> sorted = col_class;
  std::sort(sorted.begin(), sorted.end());
  const bool columns_ok = table.num_characters() == 10 &&
                          std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  std::vector<bool> used(table.num_characters(), false);
  double worst = 0;
  std::size_t matched = 0;
  for (const Complex* row : printed) {
    std::optional<std::size_t> best;
    double best_err = 1e300;
    for (std::size_t j = 0; j < table.num_characters(); ++j) {
      if (used[j]) continue;
      double err = 0;
      for (std::size_t c = 0; c < 10; ++c) err = std::max(err, std::abs(table.value(j, col_class[c]) - row[c]));
      if (err < best_err) {
        best_err = err;
        best = j;
      }
    }
    if (best && best_err <= kTableTol) {
      used[*best] = true;
      ++matched;
    }
    worst = std::max(worst, best_err);
  }
  std::vector<int> degrees = table.degrees();
  std::sort(degrees.begin(), degrees.end());
  const bool degrees_ok = degrees == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2};
  bool two_i = false;
  const Element a2 = *g.find_element("a2");
  for (std::size_t j = 0; j < table.num_characters(); ++j)
    two_i = two_i || (table.degree(j) == 2 && std::abs(table.at(j, a2) - 2.0 * I) <= kTableTol);

  out.pass = columns_ok && matched == 10 && degrees_ok && two_i && elapsed < kTableSeconds;
  out.detail = "rows matched " + std::to_string(matched) + "/10, max entry error " + fmt(worst) +
               ", degrees " + (degrees_ok ? "1x8,2x2" : "wrong") + ", chi(a2)=2i " + (two_i ? "yes" : "no") +
               ", " + fmt(elapsed) + " s (limit " + fmt(kTableSeconds) + " s, tol " + fmt(kTableTol) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// 2-4. Worked M16 spectra.

bool same(const SpectrumMultiset& s, const std::vector<Complex>& want) {
  return oracle::same_multiset(s.expanded(), want, kSpectrumTol);
}

Outcome criterion2() {
  Outcome out;
  const auto g = build_family("modular:16");
  const auto table = character_table(g);
  const auto s = connection_set(g, g.parse_elements("a,a5,a3x,a7x"));
  const auto want = repeat({{-8, 1}, {8, 1}, {0, 14}});
  const auto formula = h_spectrum_normal(g, table, s).spectrum;
  const auto jacobi = eig_hermitian_oracle(hermitian_adjacency(g, s));
  const bool f = same(formula, want), o = same(jacobi, want), agree = approx_equal(formula, jacobi, kSpectrumTol);
  out.pass = f && o && agree;
  out.detail = std::string("formula ") + (f ? "ok" : "wrong") + ", Hermitian oracle " + (o ? "ok" : "wrong") +
               ", formula vs oracle " + (agree ? "equal" : "differ") + " (tol " + fmt(kSpectrumTol) + ")";
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto g = build_family("modular:16");
  const auto table = character_table(g);
  const auto s = connection_set(g, g.parse_elements("a,a3,a5,a7,a3x,a7x"));
  const auto want = repeat({{4, 4}, {-4, 4}, {0, 8}});
  const auto formula = h_spectrum_normal(g, table, s).spectrum;
  const auto jacobi = eig_hermitian_oracle(hermitian_adjacency(g, s));
  const auto v = decide_h_integral(g, s);
  const bool f = same(formula, want), o = same(jacobi, want);
  const bool verdict = v.decision && v.sym_in_B == true && v.skew_in_D == true;
  out.pass = f && o && verdict;
  out.detail = std::string("formula ") + (f ? "ok" : "wrong") + ", Hermitian oracle " + (o ? "ok" : "wrong") +
               ", verdict H-integral=" + (v.decision ? "true" : "false") +
               " sym_in_B=" + (v.sym_in_B.value_or(false) ? "true" : "false") +
               " skew_in_D=" + (v.skew_in_D.value_or(false) ? "true" : "false");
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto g = build_family("modular:16");
  const auto table = character_table(g);
  const auto s = connection_set(g, g.parse_elements("a,a3,a5,a7,a3x,a7x"));
  const auto want = repeat({{6, 1}, {-6, 1}, {2, 1}, {-2, 1}, {2.0 * I, 2}, {-2.0 * I, 2}, {0, 8}});
  const auto formula = adjacency_spectrum_normal(g, table, s).spectrum;
  const auto general = eig_general_oracle(zero_one_adjacency(g, s).cast<Complex>());
  const bool f = same(formula, want), o = same(general, want);
  out.pass = f && o;
  out.detail = std::string("formula ") + (f ? "ok" : "wrong") + ", general oracle " + (o ? "ok" : "wrong") +
               " (tol " + fmt(kSpectrumTol) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Census over the catalog.

Outcome criterion5() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t examined = 0, disagreements = 0, count_mismatch = 0;
  std::string first;
  CensusOptions opts;
  opts.jobs = std::max(1U, std::thread::hardware_concurrency());
  opts.tolerance = kRoundTol;
  for (const auto& d : catalog()) {
    const auto g = build_family(d);
    const auto report = run_census(g, character_table(g), opts);
    examined += report.examined;
    disagreements += report.disagreements.size();
    if (report.h_integral != report.gaussian_integral) ++count_mismatch;
    if (first.empty() && !report.disagreements.empty())
      first = d + " mask " + std::to_string(report.disagreements[0].bitmask) + ": " + report.disagreements[0].what;
  }
  const double elapsed = seconds_since(t0);
  out.pass = disagreements == 0 && count_mismatch == 0 && elapsed < kCensusSeconds;
  out.detail = std::to_string(catalog().size()) + " groups, " + std::to_string(examined) + " normal sets, " +
               std::to_string(disagreements) + " disagreements, " + std::to_string(count_mismatch) +
               " groups with h/gaussian count mismatch, " + fmt(elapsed) + " s (limit " + fmt(kCensusSeconds) +
               " s, tol " + fmt(kRoundTol) + ")";
  if (!first.empty()) out.detail += "; first: " + first;
  return out;
}

// ---------------------------------------------------------------------------
// 6. Property suite. Sets are rebuilt here from the multiplication table.

struct Ctx {
  const FiniteGroup& g;
  const CharacterTable& t;
  std::string name;

  Element pw(Element x, std::size_t k) const { return oracle::brute_power(g, x, k); }
  Element inv(Element x) const { return oracle::brute_inverse(g, x); }
  std::size_t ord(Element x) const { return oracle::brute_order(g, x); }
  set<Element> sim(Element x) const { return x == 0 ? set<Element>{0} : oracle::brute_sim_atom(g, x); }
  set<Element> approx(Element x) const { return oracle::brute_approx_atom(g, x); }
  set<Element> shift(Element h, const set<Element>& s) const {
    set<Element> r;
    for (Element e : s) r.insert(g.mul(h, e));
    return r;
  }
  std::string el(Element x) const { return g.element_name(x); }

  // Distinct atoms [s] (or ⟦s⟧) for s in Cl(x), first member of Cl(x) wins.
  std::vector<Element> atom_reps(Element x, bool approx_kind) const {
    std::vector<Element> reps;
    set<Element> covered;
    for (Element s : oracle::brute_class(g, x)) {
      if (covered.count(s)) continue;
      reps.push_back(s);
      for (Element e : approx_kind ? approx(s) : sim(s)) covered.insert(e);
    }
    return reps;
  }
  set<Element> closure_sym(Element x) const {
    set<Element> r;
    for (Element s : oracle::brute_class(g, x))
      for (Element e : sim(s)) r.insert(e);
    return r;
  }
  set<Element> closure_skew(Element y) const {
    set<Element> r;
    for (Element s : oracle::brute_class(g, y))
      for (Element e : approx(s)) r.insert(e);
    return r;
  }
  bool admissible(Element y) const {
    const auto cl = oracle::brute_class(g, y);
    for (Element x : cl)
      for (Element p : oracle::brute_power_set(g, x, 3))
        if (cl.count(p)) return false;
    return true;
  }
  // C_x(j) with [1] = {1}.
  double c_sum(Element x, std::size_t j) const {
    const set<Element> s = x == 0 ? set<Element>{0} : closure_sym(x);
    Complex sum = 0;
    for (Element e : s) sum += t.at(j, e);
    return (sum / double(t.degree(j))).real();
  }
  double s_sum(Element y, std::size_t j) const {
    Complex sum = 0;
    for (Element e : closure_skew(y)) sum += I * (t.at(j, e) - t.at(j, inv(e)));
    return (sum / double(t.degree(j))).real();
  }
};

std::pair<std::size_t, std::size_t> split_order(std::size_t n) {
  std::size_t t = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++t;
  }
  return {t, n};
}

struct Suite {
  SubCheck partition{"atom partitions match brute force"};
  SubCheck split{"[x] = [[x]] disjoint-union [[x^-1]] on Gamma(4)"};
  SubCheck shift_i{"power shift (i)"};
  SubCheck shift_iia{"power shift (ii) first equality"};
  SubCheck shift_iib{"power shift (ii) [[x^-1]] = x^3m[x^2]"};
  SubCheck shift_iiia{"power shift (iii) first equality"};
  SubCheck shift_iiib{"power shift (iii) [[x]] = x^m[x^2]"};
  SubCheck shift_iv{"power shift (iv), x^4 != 1"};
  SubCheck shift_lib{"library power_shift_identities matches"};
  SubCheck trans2{"S^1_{x^2} = union [x_i^2]"};
  SubCheck trans3_ii{"S^1_{y^2} = union [y_i^2] from S^4_y"};
  SubCheck trans3_i{"S^1_{y^4} = union [y_i^4], t = 2, y^4 != 1"};
  SubCheck c_even{"C_x(j) even integer, 4 | ord x"};
  SubCheck s_even{"S_y(j) even integer, y admissible"};
  SubCheck lib_values{"library c_value/s_value/closures match"};
  SubCheck factor4m{"ord y = 4m: S_y = (-1)^((m+1)/2) 2 Im chi(y^m) C_{y^4}"};
  SubCheck factor2t_abs{"ord y = 2^t m, t >= 3: |S_y| = |2 Im chi(y^m') C_{y^2}|"};
  // informational
  SubCheck factor2t_signed{"t >= 3 factorization with sign"};
  SubCheck factor_c{"C_x = (chi(x^m) + chi(x^3m)) C_{x^2}"};
  SubCheck factor4m_m_gt1{"ord y = 4m factorization restricted to m > 1"};
};

void check_group(const Ctx& c, Suite& s) {
  const auto& g = c.g;
  const std::size_t n = g.order();

  // Partitions.
  {
    std::vector<int> cover(n, 0);
    bool ok = true;
    for (const auto& a : all_sim_atoms(g)) {
      ok = ok && to_set(c.sim(a.representative)) == a.members;
      for (Element e : a.members) ++cover[e];
    }
    for (Element e = 1; e < n; ++e) ok = ok && cover[e] == 1;
    ok = ok && cover[0] == 0;
    std::vector<int> cover4(n, 0);
    for (const auto& a : all_approx_atoms(g)) {
      ok = ok && to_set(c.approx(a.representative)) == a.members;
      for (Element e : a.members) ++cover4[e];
    }
    for (Element e = 0; e < n; ++e) ok = ok && cover4[e] == (oracle::brute_in_gamma4(g, e) ? 1 : 0);
    s.partition.record(ok, [&] { return c.name; });
  }

  for (Element x = 1; x < n; ++x) {
    const std::size_t ordx = c.ord(x);
    if (ordx % 4 != 0) continue;
    const auto [t, m] = split_order(ordx);
    const auto at = [&](const char* what) { return [&c, x, what] { return c.name + " x=" + c.el(x) + " " + what; }; };

    // [x] = ⟦x⟧ ⊔ ⟦x^-1⟧
    {
      const auto a = c.approx(x), b = c.approx(c.inv(x));
      set<Element> u = a;
      u.insert(b.begin(), b.end());
      const bool disjoint = u.size() == a.size() + b.size();
      s.split.record(disjoint && u == c.sim(x), at(""));
    }

    // Power shifts.
    const Element x2 = c.pw(x, 2), xm = c.pw(x, m), x3m = c.pw(x, 3 * m), x4 = c.pw(x, 4);
    std::map<std::string, bool> mine;
    {
      auto lhs = c.shift(xm, c.sim(x2));
      auto rhs = c.shift(x3m, c.sim(x2));
      lhs.insert(rhs.begin(), rhs.end());
      mine["i"] = lhs == c.sim(x);
      s.shift_i.record(mine["i"], at("(i)"));
    }
    if (t >= 3) {
      const Element h = m % 4 == 1 ? x3m : xm;
      auto a = c.shift(h, c.approx(x2));
      auto b = c.shift(h, c.approx(c.inv(x2)));
      a.insert(b.begin(), b.end());
      const bool first = a == c.shift(h, c.sim(x2));
      const bool second = (m % 4 == 1 ? c.approx(c.inv(x)) : c.approx(x)) == c.shift(h, c.sim(x2));
      if (m % 4 == 1) {
        mine["ii.a"] = first;
        mine["ii.b"] = second;
        s.shift_iia.record(first, at("(ii)"));
        s.shift_iib.record(second, at("(ii)"));
      } else {
        mine["iii.a"] = first;
        mine["iii.b"] = second;
        s.shift_iiia.record(first, at("(iii)"));
        s.shift_iiib.record(second, at("(iii)"));
      }
    }
    if (t == 2) {
      const bool ok = c.shift(xm, c.sim(x4)) == (m % 4 == 1 ? c.approx(x) : c.approx(c.inv(x)));
      mine["iv"] = ok;
      if (x4 != 0) s.shift_iv.record(ok, at("(iv)"));
    }
    {
      const auto report = power_shift_identities(g, x);
      bool agree = true;
      for (const auto& id : report.identities) {
        auto it = mine.find(id.label);
        if (it != mine.end()) agree = agree && it->second == id.holds;
      }
      s.shift_lib.record(agree, at("shift report"));
    }

    // Closure squaring.
    {
      set<Element> u;
      for (Element xi : c.atom_reps(x, false))
        for (Element e : c.sim(c.pw(xi, 2))) u.insert(e);
      s.trans2.record(u == c.closure_sym(x2), at(""));
      s.lib_values.record(closure_sym(g, x).members == to_set(c.closure_sym(x)), at("closure_sym"));
    }

    // C_x(j)
    for (std::size_t j = 0; j < c.t.num_characters(); ++j) {
      const double cx = c.c_sum(x, j);
      s.c_even.record(near_int(cx) && rnd(cx) % 2 == 0, [&] { return c.name + " x=" + c.el(x) + " j=" + std::to_string(j) + " C=" + fmt(cx); });
      s.lib_values.record(std::abs(c_value(g, c.t, x, j) - cx) <= kRoundTol, at("c_value"));
      const double rhs = (c.t.at(j, xm) + c.t.at(j, x3m)).real() * c.c_sum(x2, j);
      s.factor_c.record(equal_after_rounding(cx, rhs), [&] { return c.name + " x=" + c.el(x) + " j=" + std::to_string(j) + " C=" + fmt(cx) + " rhs=" + fmt(rhs); });
    }

    // Skew closures.
    const bool adm = c.admissible(x);
    s.lib_values.record(is_admissible(g, x) == adm, at("is_admissible"));
    if (!adm) continue;
    const Element y = x;
    s.lib_values.record(closure_skew(g, y).members == to_set(c.closure_skew(y)), at("closure_skew"));
    const auto reps = c.atom_reps(y, true);
    {
      set<Element> u;
      for (Element yi : reps)
        for (Element e : c.sim(c.pw(yi, 2))) u.insert(e);
      s.trans3_ii.record(u == c.closure_sym(c.pw(y, 2)), at(""));
    }
    if (t == 2 && x4 != 0) {
      set<Element> u;
      for (Element yi : reps)
        for (Element e : c.sim(c.pw(yi, 4))) u.insert(e);
      s.trans3_i.record(u == c.closure_sym(x4), at(""));
    }
    for (std::size_t j = 0; j < c.t.num_characters(); ++j) {
      const double sy = c.s_sum(y, j);
      const auto where = [&, j](double rhs) {
        return [&c, y, j, sy, rhs] {
          return c.name + " y=" + c.el(y) + " j=" + std::to_string(j) + " (degree " + std::to_string(c.t.degree(j)) +
                 ") S=" + fmt(sy) + " formula=" + fmt(rhs);
        };
      };
      s.s_even.record(near_int(sy) && rnd(sy) % 2 == 0, where(0));
      s.lib_values.record(std::abs(s_value(g, c.t, y, j) - sy) <= kRoundTol, at("s_value"));
      if (t == 2) {
        const double sign = ((m + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        const double rhs = sign * 2 * c.t.at(j, xm).imag() * c.c_sum(x4, j);
        s.factor4m.record(equal_after_rounding(sy, rhs), where(rhs));
        if (m > 1) s.factor4m_m_gt1.record(equal_after_rounding(sy, rhs), where(rhs));
      } else {
        const Element h = m % 4 == 1 ? x3m : xm;
        const double factor = m % 4 == 1 ? 2.0 : -2.0;
        const double rhs = factor * c.t.at(j, h).imag() * c.c_sum(x2, j);
        s.factor2t_abs.record(equal_after_rounding(std::abs(sy), std::abs(rhs)), where(rhs));
        s.factor2t_signed.record(equal_after_rounding(sy, rhs), where(rhs));
      }
    }
  }
}

Outcome criterion6() {
  Outcome out;
  Suite s;
  for (const auto& d : catalog()) {
    const auto g = build_family(d);
    const auto t = character_table(g);
    check_group(Ctx{g, t, d}, s);
  }
  out.sub = {s.partition, s.split,    s.shift_i,  s.shift_iia, s.shift_iib, s.shift_iiia,
             s.shift_iiib, s.shift_iv, s.shift_lib, s.trans2,   s.trans3_ii, s.trans3_i,
             s.c_even,    s.s_even,   s.lib_values, s.factor4m, s.factor2t_abs};
  out.info = {s.factor2t_signed, s.factor_c, s.factor4m_m_gt1};
  std::size_t failing = 0;
  for (const auto& c : out.sub) failing += c.pass() ? 0 : 1;
  out.pass = failing == 0;
  out.detail = std::to_string(out.sub.size() - failing) + "/" + std::to_string(out.sub.size()) +
               " property groups hold over " + std::to_string(catalog().size()) + " groups (rounding tol " +
               fmt(kRoundTol) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Character-integrality conditions on random coefficient vectors.

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

// Test-side evaluation of the three conditions from class sums.
bool conditions_by_hand(const FiniteGroup& g, const std::vector<set<Element>>& classes,
                        const std::vector<std::size_t>& class_of, const CoefficientVector& c) {
  std::vector<long long> sum(classes.size(), 0);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (Element e : classes[k]) sum[k] += c[e];
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Element rep = *classes[k].begin();
    if (!oracle::brute_in_gamma4(g, rep)) {
      if (sum[k] != 0) return false;
      continue;
    }
    if (sum[k] != -sum[class_of[oracle::brute_inverse(g, rep)]]) return false;
    for (Element e : oracle::brute_approx_atom(g, rep))
      if (sum[class_of[e]] != sum[k]) return false;
  }
  return true;
}

Outcome criterion7() {
  Outcome out;
  std::mt19937_64 rng(kVectorSeed);
  std::uniform_int_distribution<int> small(-3, 3);
  std::size_t total = 0, counterexamples = 0, library_mismatch = 0, satisfied = 0;
  std::string first;
  for (const auto& d : catalog()) {
    const auto g = build_family(d);
    const auto t = character_table(g);
    const auto classes = oracle::brute_classes(g);
    std::vector<std::size_t> class_of(g.order());
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (Element e : classes[k]) class_of[e] = k;

    // Classes tied together by ≈; each component must carry one common sum,
    // its inverse component the negated sum.
    UnionFind uf(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const Element rep = *classes[k].begin();
      if (!oracle::brute_in_gamma4(g, rep)) continue;
      for (Element e : oracle::brute_approx_atom(g, rep)) uf.unite(k, class_of[e]);
    }

    auto constrained = [&] {
      std::map<std::size_t, long long> value;
      std::vector<long long> target(classes.size(), 0);
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const Element rep = *classes[k].begin();
        if (!oracle::brute_in_gamma4(g, rep)) continue;
        const std::size_t root = uf.find(k);
        const std::size_t inv_root = uf.find(class_of[oracle::brute_inverse(g, rep)]);
        if (root == inv_root) continue;  // forced to zero
        if (!value.count(root)) {
          if (value.count(inv_root)) {
            value[root] = -value[inv_root];
          } else {
            value[root] = small(rng);
          }
        }
        target[k] = value[root];
      }
      CoefficientVector c(g.order(), 0);
      for (std::size_t k = 0; k < classes.size(); ++k) {
        std::vector<Element> members(classes[k].begin(), classes[k].end());
        long long rest = target[k];
        for (std::size_t i = 0; i + 1 < members.size(); ++i) {
          const int v = small(rng);
          c[members[i]] = v;
          rest -= v;
        }
        c[members.back()] = rest;
      }
      return c;
    };

    for (int trial = 0; trial < kVectorsPerGroup; ++trial) {
      CoefficientVector c;
      switch (trial % 3) {
        case 0:
          c = constrained();
          break;
        case 1: {
          c = constrained();
          std::uniform_int_distribution<Element> pick(1, static_cast<Element>(g.order() - 1));
          c[pick(rng)] += (trial / 3) % 2 == 0 ? 1 : -2;
          break;
        }
        default:
          c.resize(g.order());
          for (auto& v : c) v = small(rng);
      }
      ++total;
      const bool hand = conditions_by_hand(g, classes, class_of, c);
      bool integral = true;
      for (std::size_t j = 0; j < t.num_characters(); ++j) {
        Complex v = 0;
        for (Element e = 0; e < g.order(); ++e) v += I * double(c[e]) * t.at(j, e);
        integral = integral && distance_to_integer(v) <= kRoundTol;
      }
      satisfied += hand ? 1 : 0;
      if (hand != integral) {
        ++counterexamples;
        if (first.empty()) first = d + " trial " + std::to_string(trial);
      }
      const auto report = check_character_integrality_conditions(g, t, c, kRoundTol);
      if (report.conditions_hold() != hand || report.all_integral != integral) ++library_mismatch;
    }
  }
  out.pass = counterexamples == 0 && library_mismatch == 0 && satisfied > 0 && satisfied < total;
  out.detail = std::to_string(total) + " vectors (" + std::to_string(kVectorsPerGroup) + " per group, seed " +
               std::to_string(kVectorSeed) + "), " + std::to_string(satisfied) + " satisfy the conditions, " +
               std::to_string(counterexamples) + " counterexamples, " + std::to_string(library_mismatch) +
               " library mismatches (tol " + fmt(kRoundTol) + ")";
  if (!first.empty()) out.detail += "; first: " + first;
  return out;
}

// ---------------------------------------------------------------------------
// 8. Z12 fixture.

Outcome criterion8() {
  Outcome out;
  const auto g = build_family("cyclic:12");
  const bool sim = sim_related(g, 5, 11), approx = approx_related(g, 5, 11);
  const bool brute_sim = oracle::brute_sim_atom(g, 5).count(11) == 1;
  const bool brute_approx = oracle::brute_approx_atom(g, 5).count(11) == 1;
  out.pass = sim && !approx && brute_sim && !brute_approx;
  out.detail = std::string("5 ~ 11: ") + (sim ? "true" : "false") + ", 5 approx 11: " + (approx ? "true" : "false") +
               " (brute force " + (brute_sim ? "true" : "false") + "/" + (brute_approx ? "true" : "false") + ")";
  return out;
}

void print_sub(const SubCheck& c, const char* tag) {
  std::printf("    [%s] %s: %zu/%zu hold", tag, c.name.c_str(), c.checked - c.failed, c.checked);
  if (c.checked == 0) std::printf(" (none applicable in the catalog)");
  if (c.failed) std::printf("; first failure: %s", c.first_failure.c_str());
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8};
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 1;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
    return 1;
  }
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<int>(k + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %zu: %s - %s\n", k + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    for (const auto& c : o.sub) print_sub(c, c.pass() ? "ok" : "FAIL");
    for (const auto& c : o.info) print_sub(c, "info");
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
