#pragma once

// The acceptance grid, shared by the acceptance test binary and `selftest`.
// Each criterion returns one pass/fail verdict plus per-case detail lines.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "modschwarz/error.hpp"
#include "modschwarz/modular_forms.hpp"
#include "modschwarz/numeric.hpp"
#include "modschwarz/schwarzian.hpp"
#include "modschwarz/vvmf.hpp"

namespace modschwarz::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> details;
};

using Pair = std::pair<long, long>;

inline const std::vector<Pair> kShapeGrid = {{7, 1}, {7, 2}, {7, 3}, {8, 3}, {9, 2}, {11, 5}, {12, 5}};
inline const std::vector<Pair> kSolveGrid = {{7, 1}, {7, 2}, {7, 6}, {8, 3}, {9, 2}, {7, 9}, {7, 16}, {11, 13}};
inline const std::vector<Pair> kNumericGrid = {{7, 1}, {8, 3}, {9, 2}};

constexpr std::size_t kIdentityOrder = 100;
constexpr double kIdentitySeconds = 10;
constexpr std::size_t kVerifyOrder = 40;
constexpr double kSolveSeconds = 30;
constexpr std::size_t kNumericTerms = 60;
constexpr double kCrossCheckTolerance = 1e-9;
constexpr double kPhaseTolerance = 1e-8;
constexpr std::size_t kFaultIndices = 5;
constexpr std::size_t kMaxFailingIndex = 5;

namespace detail {

inline std::string pair_label(const Pair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

class Recorder {
 public:
  Recorder(int id, std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.id = id;
    result_.name = std::move(name);
    result_.pass = true;
  }

  void check(bool ok, const std::string& what) {
    if (!ok) result_.pass = false;
    result_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }

  void note(const std::string& what) { result_.details.push_back("note " + what); }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  CriterionResult finish() {
    result_.seconds = elapsed();
    return result_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
  CriterionResult result_;
};

template <class F>
void guarded(Recorder& rec, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rec.check(false, label + ": " + e.what());
  }
}

}  // namespace detail

/// Classical identities at N = 100 with zero tolerance.
inline CriterionResult classical_identities() {
  detail::Recorder rec(1, "classical identity suite at N=100");
  detail::guarded(rec, "identities", [&] {
    const std::size_t n = kIdentityOrder;
    const QSeries e4 = eisenstein(4, n), e6 = eisenstein(6, n);
    const QSeries d = delta(n);
    rec.check(d.order() == n && pow(e4, 3UL) - e6 * e6 == Rational(1728) * d, "E4^3 - E6^2 = 1728 Delta");
    rec.check(d == eta_power(24, n).body().shifted_up(1).truncated(n), "Delta = q * eta^24 body");
    const PuiseuxSeries pe4 = PuiseuxSeries::from_qseries(e4), pe6 = PuiseuxSeries::from_qseries(e6);
    const PuiseuxSeries s4 = serre_derivative(pe4, 4), s6 = serre_derivative(pe6, 6);
    rec.check(s4.order() == n && s4 == rational(-1, 3) * pe6, "D_4 E4 = -E6/3");
    rec.check(s6.order() == n && s6 == rational(-1, 2) * (pe4 * pe4), "D_6 E6 = -E4^2/2");
    const QSeries ji = j_inverse(n);
    rec.check(ji.order() == n && ji * pow(e4, 3UL) == Rational(1728) * d, "(1728/j) E4^3 = 1728 Delta");
  });
  rec.check(rec.elapsed() < kIdentitySeconds, "runtime under 10 s");
  return rec.finish();
}

/// Minimal-weight form shape for the shape grid.
inline CriterionResult minimal_form_shape() {
  detail::Recorder rec(2, "minimal-weight form shape");
  const ModularBasis basis = ModularBasis::build(kVerifyOrder);
  for (const Pair& p : kShapeGrid) {
    detail::guarded(rec, detail::pair_label(p), [&] {
      const auto [m, np] = p;
      const VectorForm f = minimal_form(ReprData::make(m, np), basis);
      const bool ok = f.first.offset() == rational(m + np, 2 * m) && f.second.offset() == rational(m - np, 2 * m) &&
                      f.weight == 5 && f.first.body()[0] == 1 && f.second.body()[0] == 1;
      rec.check(ok, detail::pair_label(p) + " offsets (" + to_string(f.first.offset()) + ", " +
                        to_string(f.second.offset()) + "), weight " + to_string(f.weight));
    });
  }
  return rec.finish();
}

/// W(F0) = c Delta and W(F1) = c' Delta^2 to N = 40.
inline CriterionResult wronskian_structure() {
  detail::Recorder rec(3, "Wronskian = c Delta^e");
  const ModularBasis basis = ModularBasis::build(kVerifyOrder + 1);
  for (const Pair& p : kShapeGrid) {
    detail::guarded(rec, detail::pair_label(p), [&] {
      const VectorForm f0 = minimal_form(ReprData::make(p.first, p.second), basis);
      const WronskianCheck w0 = wronskian_check(f0, kVerifyOrder, basis.eta24_body);
      const VectorForm f1 = raise_weight(f0, basis);
      const WronskianCheck w1 = wronskian_check(f1, kVerifyOrder, basis.eta24_body);
      rec.check(w0.exponent == 1 && sgn(w0.constant) != 0 && w1.exponent == 2 && sgn(w1.constant) != 0,
                detail::pair_label(p) + " W(F0) = " + to_string(w0.constant) + " Delta, W(F1) = " +
                    to_string(w1.constant) + " Delta^" + w1.exponent.get_num().get_str());
    });
  }
  return rec.finish();
}

/// c2 = 12n'/(m+6n') exactly; c1 compared with the printed closed form.
inline CriterionResult leading_constants() {
  detail::Recorder rec(4, "leading constants c2 (exact) and c1 (reported)");
  const ModularBasis basis = ModularBasis::build(kVerifyOrder);
  for (const Pair& p : kShapeGrid) {
    detail::guarded(rec, detail::pair_label(p), [&] {
      const auto [m, np] = p;
      const VectorForm f1 = raise_weight(minimal_form(ReprData::make(m, np), basis), basis);
      const Rational c1 = f1.first.leading_coefficient(), c2 = f1.second.leading_coefficient();
      rec.check(c2 == printed_c2(m, np), detail::pair_label(p) + " c2 = " + to_string(c2));
      const Rational printed = printed_c1(m, np);
      rec.note(detail::pair_label(p) + " c1 series = " + to_string(c1) + ", closed form = " + to_string(printed) +
               (c1 == printed ? " (agree)" : " (DISAGREE)"));
    });
  }
  return rec.finish();
}

/// {h}_D = -(1/2)(n/m)^2 E4 exactly to N = 40 on the solve grid.
inline CriterionResult main_theorem(std::vector<SolutionBundle>* keep = nullptr) {
  detail::Recorder rec(5, "Schwarzian proportional to E4 with constant -(1/2)(n/m)^2");
  for (const Pair& p : kSolveGrid) {
    detail::guarded(rec, detail::pair_label(p), [&] {
      const auto [m, n] = p;
      SolutionBundle sol = solve(m, n, kVerifyOrder);
      const Rational expected = expected_schwarz_constant(m, n);
      rec.check(sol.schwarz_constant == expected && sol.h.offset() == rational(n, m),
                detail::pair_label(p) + " {h}/E4 = " + to_string(sol.schwarz_constant) + " (under 2D: " +
                    to_string(4 * sol.schwarz_constant) + ")");
      if (keep) keep->push_back(std::move(sol));
    });
  }
  rec.check(rec.elapsed() < kSolveSeconds, "runtime under 30 s");
  return rec.finish();
}

/// y'' + s E4 y = 0 with s = -(n/2m)^2 for both ODE solutions; y1/y2 = h.
inline CriterionResult ode_check(const std::vector<SolutionBundle>& solutions) {
  detail::Recorder rec(6, "ODE y'' + s E4 y = 0 with s = -(n/2m)^2");
  rec.check(solutions.size() == kSolveGrid.size(), "all grid solutions available");
  const QSeries e4 = eisenstein(4, kVerifyOrder);
  for (const SolutionBundle& sol : solutions) {
    const Pair p{sol.m, sol.n};
    detail::guarded(rec, detail::pair_label(p), [&] {
      const auto [y1, y2] = ode_solutions(sol.h);
      const Rational s = expected_ode_parameter(sol.m, sol.n);
      const bool ok = verify_ode(y1, s, kVerifyOrder, e4) && verify_ode(y2, s, kVerifyOrder, e4) && y1 / y2 == sol.h;
      rec.check(ok, detail::pair_label(p) + " s = " + to_string(s) + ", y1/y2 = h");
    });
  }
  return rec.finish();
}

/// Floating-point cross-check of the closed form and phase equivariance.
inline CriterionResult numeric_cross_check() {
  using C = std::complex<double>;
  detail::Recorder rec(7, "numeric cross-check and phase equivariance at N=60");
  const std::vector<std::pair<std::string, C>> taus = {{"2i", C{0, 2}}, {"1.5i", C{0, 1.5}}, {"0.3+1.2i", C{0.3, 1.2}}};
  for (const Pair& p : kNumericGrid) {
    const auto [m, n] = p;
    SolutionBundle sol;
    detail::guarded(rec, detail::pair_label(p) + " solve", [&] { sol = solve(m, n, kNumericTerms); });
    if (sol.h.order() == 0) continue;
    const C phase = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(m));
    for (const auto& [label, tau] : taus) {
      const std::string where = detail::pair_label(p) + " tau=" + label;
      detail::guarded(rec, where + " cross-check", [&] {
        const EvalReport<double> r = cross_check(sol, tau, kNumericTerms);
        std::ostringstream os;
        os << where << " relError = " << r.rel_error;
        rec.check(r.rel_error < kCrossCheckTolerance, os.str());
      });
      detail::guarded(rec, where + " phase", [&] {
        const C h0 = eval_qseries(sol.h, tau, kNumericTerms);
        const C h1 = eval_qseries(sol.h, tau + 1.0, kNumericTerms);
        const double err = std::abs(h1 - phase * h0) / std::abs(h0);
        std::ostringstream os;
        os << where << " h(tau+1) vs e^{2 pi i n/m} h(tau): " << err;
        rec.check(err < kPhaseTolerance, os.str());
      });
    }
  }
  return rec.finish();
}

/// One perturbed coefficient must make the solve grid fail at index <= 5.
inline CriterionResult seeded_bug_sensitivity() {
  detail::Recorder rec(8, "seeded-bug sensitivity");
  using Target = SeededFault::Target;
  for (const Target t : {Target::E4, Target::Eta24, Target::FirstComponent, Target::SecondComponent}) {
    for (std::size_t i = 0; i < kFaultIndices; ++i) {
      const std::string label = to_string(t) + "[" + std::to_string(i) + "] += 1";
      bool caught = false;
      std::string how = "no grid case failed";
      for (const Pair& p : kSolveGrid) {
        try {
          solve(p.first, p.second, kVerifyOrder, SolveOptions{SeededFault{t, i}});
        } catch (const Error& e) {
          caught = e.index() && *e.index() <= kMaxFailingIndex;
          how = detail::pair_label(p) + " " + std::string(to_string(e.kind())) + " at index " +
                (e.index() ? std::to_string(*e.index()) : std::string("?"));
          break;
        }
      }
      rec.check(caught, label + ": " + how);
    }
  }
  return rec.finish();
}

inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  out.push_back(classical_identities());
  out.push_back(minimal_form_shape());
  out.push_back(wronskian_structure());
  out.push_back(leading_constants());
  std::vector<SolutionBundle> solutions;
  out.push_back(main_theorem(&solutions));
  out.push_back(ode_check(solutions));
  out.push_back(numeric_cross_check());
  out.push_back(seeded_bug_sensitivity());
  return out;
}

}  // namespace modschwarz::acceptance
