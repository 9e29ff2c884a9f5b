#pragma once

// Report tree shared by every subcommand: {command, params, results, checks}.
// Rationals are "p/q" strings and complex numbers {re, im} decimal strings,
// so the JSON never carries a float and re-emission is byte-identical.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "modschwarz/acceptance.hpp"
#include "modschwarz/modschwarz.hpp"

namespace modschwarz::report {

using Json = nlohmann::ordered_json;

constexpr double kEvalTolerance = 1e-9;
const Rational kScaleProbe = rational(3, 5);

struct Params {
  std::optional<long> m;
  std::optional<long> n;
  std::size_t terms = 40;
};

class Report {
 public:
  Report(std::string command, Params params) : command_(std::move(command)), params_(params) {}

  Json& results() { return results_; }

  void check(const std::string& name, bool pass, const std::string& detail) {
    checks_.push_back({name, pass, detail});
  }

  /// Runs `body`, which returns a detail string; any exception fails the check.
  template <class F>
  bool guarded(const std::string& name, F&& body) {
    try {
      check(name, true, body());
      return true;
    } catch (const std::exception& e) {
      check(name, false, e.what());
      return false;
    }
  }

  bool all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckEntry& c) { return c.pass; });
  }

  std::optional<std::string> first_failure() const {
    for (const CheckEntry& c : checks_)
      if (!c.pass) return c.name + ": " + c.detail;
    return std::nullopt;
  }

  Json to_json() const {
    Json out;
    out["command"] = command_;
    Json params;
    params["m"] = params_.m ? Json(*params_.m) : Json(nullptr);
    params["n"] = params_.n ? Json(*params_.n) : Json(nullptr);
    params["terms"] = params_.terms;
    out["params"] = std::move(params);
    out["results"] = results_.is_null() ? Json::object() : results_;
    Json checks = Json::array();
    for (const CheckEntry& c : checks_) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["checks"] = std::move(checks);
    return out;
  }

 private:
  struct CheckEntry {
    std::string name;
    bool pass;
    std::string detail;
  };

  std::string command_;
  Params params_;
  Json results_;
  std::vector<CheckEntry> checks_;
};

inline Json to_json(const Rational& x) { return to_string(x); }

inline Json coefficients_json(const QSeries& body, std::size_t count) {
  Json out = Json::array();
  for (std::size_t i = 0; i < std::min(count, body.order()); ++i) out.push_back(to_string(body[i]));
  return out;
}

inline Json to_json(const PuiseuxSeries& f, std::size_t count) {
  return {{"offset", to_string(f.offset())}, {"order", f.order()}, {"coefficients", coefficients_json(f.body(), count)}};
}

template <std::floating_point Real>
std::string decimal(Real x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<Real>::max_digits10) << x;
  return os.str();
}

template <std::floating_point Real>
Json to_json(const std::complex<Real>& z) {
  return {{"re", decimal(z.real())}, {"im", decimal(z.imag())}};
}

inline Json to_json(const WronskianCheck& w) {
  return {{"c", to_string(w.constant)}, {"e", to_string(w.exponent)}};
}

inline Json to_json(const LevelReport& l) {
  return {{"level", l.level},
          {"weight", to_string(l.weight)},
          {"first_offset", to_string(l.first_offset)},
          {"second_offset", to_string(l.second_offset)},
          {"c1", to_string(l.first_leading)},
          {"c2", to_string(l.second_leading)},
          {"wronskian", to_json(l.wronskian)}};
}

inline Json convention_json(const Rational& constant) {
  return {{"derivative", "D = q d/dq = (1/(2 pi i)) d/dtau"},
          {"schwarz_constant_under_2D", to_string(4 * constant)},
          {"ratio", "4/1"},
          {"note", "with the derivative 2D = (1/(pi i)) d/dtau the Schwarzian constant is -2(n/m)^2, four times the "
                   "D-convention value -(1/2)(n/m)^2"}};
}

// Text rendering of the same tree.

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline bool is_flat_array(const Json& v) {
  return v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
}

inline void render(const Json& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (!value.is_structured() || (value.is_object() && value.empty())) {
        os << pad << key << ": " << (value.is_object() ? std::string("{}") : scalar_text(value)) << '\n';
      } else if (is_flat_array(value)) {
        os << pad << key << ":";
        for (const Json& e : value) os << ' ' << scalar_text(e);
        os << '\n';
      } else {
        os << pad << key << ":\n";
        render(value, indent + 2, os);
      }
    }
  } else if (v.is_array()) {
    for (const Json& e : v) {
      if (e.is_structured()) {
        os << pad << "-\n";
        render(e, indent + 2, os);
      } else {
        os << pad << "- " << scalar_text(e) << '\n';
      }
    }
  } else {
    os << pad << scalar_text(v) << '\n';
  }
}

}  // namespace detail

inline std::string render_text(const Json& tree) {
  std::ostringstream os;
  os << "command: " << tree.at("command").get<std::string>() << '\n';
  os << "params:\n";
  detail::render(tree.at("params"), 2, os);
  os << "results:\n";
  detail::render(tree.at("results"), 2, os);
  os << "checks:\n";
  for (const Json& c : tree.at("checks")) {
    os << "  [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] " << c.at("name").get<std::string>();
    const std::string detail = c.at("detail").get<std::string>();
    if (!detail.empty()) os << ": " << detail;
    os << '\n';
  }
  return os.str();
}

// Subcommand builders. Parameters are validated by the caller.

inline Report solve_report(long m, long n, std::size_t terms) {
  Report rep("solve", {m, n, terms});
  SolutionBundle sol;
  const bool ok = rep.guarded("solve", [&] {
    sol = solve(m, n, terms);
    return std::string("all identities hold through index ") + std::to_string(terms);
  });
  if (!ok) return rep;
  Json& r = rep.results();
  r["offset"] = to_string(sol.h.offset());
  r["coefficients"] = coefficients_json(sol.h.body(), terms);
  r["schwarz_constant"] = to_string(sol.schwarz_constant);
  r["ode_parameter"] = to_string(sol.ode_parameter);
  r["n_prime"] = sol.n_prime;
  r["r"] = sol.r;
  Json levels = Json::array();
  for (const LevelReport& l : sol.levels)
    levels.push_back({{"level", l.level}, {"weight", to_string(l.weight)}, {"wronskian", to_json(l.wronskian)}});
  r["levels"] = std::move(levels);
  r["convention"] = convention_json(sol.schwarz_constant);
  return rep;
}

inline Report vvmf_report(long m, long n, std::size_t terms) {
  Report rep("vvmf", {m, n, terms});
  const long n_prime = n % m, r = n / m;
  rep.guarded("vvmf", [&] {
    const ModularBasis basis = ModularBasis::build(terms + static_cast<std::size_t>(r) + 1);
    VectorForm form = minimal_form(ReprData::make(m, n_prime), basis);
    Json levels = Json::array();
    for (long i = 0;; ++i) {
      const WronskianCheck w = wronskian_check(form, terms, basis.eta24_body);
      levels.push_back(to_json(modschwarz::detail::level_report(form, w)));
      levels.back()["first"] = to_json(form.first, terms);
      levels.back()["second"] = to_json(form.second, terms);
      if (i == r) break;
      form = raise_weight(form, basis);
    }
    Json& res = rep.results();
    res["weight"] = to_string(form.weight);
    res["c1"] = to_string(form.first.leading_coefficient());
    res["c2"] = to_string(form.second.leading_coefficient());
    res["n_prime"] = n_prime;
    res["r"] = r;
    res["levels"] = std::move(levels);
    return "F_" + std::to_string(r) + " has weight " + to_string(form.weight);
  });
  return rep;
}

inline Report verify_report(long m, long n, std::size_t terms) {
  Report rep("verify", {m, n, terms});
  const long n_prime = n % m, r = n / m;
  const std::size_t levels = static_cast<std::size_t>(std::max(r, 1L));
  const ModularBasis basis = ModularBasis::build(terms + levels);
  Json& res = rep.results();

  std::vector<VectorForm> forms;
  rep.guarded("minimal form shape", [&] {
    forms.push_back(minimal_form(ReprData::make(m, n_prime), basis));
    const VectorForm& f = forms.front();
    if (f.weight != 5 || f.first.offset() != rational(m + n_prime, 2 * m) ||
        f.second.offset() != rational(m - n_prime, 2 * m))
      throw Error(ErrorKind::InternalMismatch, "unexpected offsets or weight");
    return "weight 5, offsets " + to_string(f.first.offset()) + ", " + to_string(f.second.offset());
  });
  if (forms.empty()) return rep;

  for (std::size_t i = 1; i <= levels; ++i) {
    if (!rep.guarded("raise weight to level " + std::to_string(i), [&] {
          forms.push_back(raise_weight(forms.back(), basis));
          return "weight " + to_string(forms.back().weight);
        }))
      break;
  }
  for (std::size_t i = 0; i < forms.size() && i <= static_cast<std::size_t>(r); ++i) {
    rep.guarded("wronskian level " + std::to_string(i), [&] {
      const WronskianCheck w = wronskian_check(forms[i], terms, basis.eta24_body);
      if (w.exponent != static_cast<long>(i) + 1 || sgn(w.constant) == 0)
        throw Error(ErrorKind::NotProportionalToDeltaPower, "W = " + to_string(w.constant) + " Delta^" +
                                                                to_string(w.exponent));
      return "W = " + to_string(w.constant) + " Delta^" + w.exponent.get_num().get_str();
    });
  }
  if (forms.size() > 1) {
    const Rational c1 = forms[1].first.leading_coefficient(), c2 = forms[1].second.leading_coefficient();
    rep.check("c2 = 12n'/(m+6n')", c2 == printed_c2(m, n_prime), "c2 = " + to_string(c2));
    res["c1"] = {{"series", to_string(c1)},
                 {"closed_form", to_string(printed_c1(m, n_prime))},
                 {"agree", c1 == printed_c1(m, n_prime)}};
    res["c2"] = to_string(c2);
  }

  SolutionBundle sol;
  SolveOptions no_ode;
  no_ode.check_ode = false;
  if (!rep.guarded("build h", [&] {
        sol = solve(m, n, terms, no_ode);
        return "h = q^" + to_string(sol.h.offset()) + " (1 + ...)";
      }))
    return rep;
  res["offset"] = to_string(sol.h.offset());
  rep.check("offset = n/m", sol.h.offset() == rational(n, m), to_string(sol.h.offset()));

  const QSeries sd = schwarz_derivative(sol.h);
  rep.guarded("schwarzian proportional to E4", [&] {
    const Rational c = verify_proportionality(sd, terms, basis.e4.truncated(terms));
    res["schwarz_constant"] = to_string(c);
    if (c != expected_schwarz_constant(m, n))
      throw Error(ErrorKind::ConstantMismatch, "{h}/E4 = " + to_string(c) + ", expected " +
                                                   to_string(expected_schwarz_constant(m, n)));
    return "{h} = " + to_string(c) + " E4";
  });

  const auto [y1, y2] = ode_solutions(sol.h);
  const Rational s = expected_ode_parameter(m, n);
  res["ode_parameter"] = to_string(s);
  const QSeries e4 = basis.e4.truncated(terms);
  rep.guarded("ode y1", [&] {
    verify_ode(y1, s, terms, e4);
    return "y1 = q^" + to_string(y1.offset()) + " (...)";
  });
  rep.guarded("ode y2", [&] {
    verify_ode(y2, s, terms, e4);
    return "y2 = q^" + to_string(y2.offset()) + " (...)";
  });
  rep.check("y1/y2 = h", y1 / y2 == sol.h, "");

  rep.guarded("invariance under 1/h", [&] {
    const bool same = schwarz_derivative(PuiseuxSeries::monomial(0, 1, terms) / sol.h) == sd;
    if (!same) throw Error(ErrorKind::InternalMismatch, "{1/h} differs from {h}");
    return std::string("{1/h} = {h}");
  });
  rep.guarded("invariance under a*h", [&] {
    if (!(schwarz_derivative(kScaleProbe * sol.h) == sd))
      throw Error(ErrorKind::InternalMismatch, "{a h} differs from {h}");
    return "{(" + to_string(kScaleProbe) + ") h} = {h}";
  });

  if (n < m) {
    rep.guarded("numeric cross-check at tau=2i", [&] {
      const std::size_t eval_terms = std::max<std::size_t>(terms, 2);
      const EvalReport<double> e = cross_check(sol, std::complex<double>{0, 2}, eval_terms);
      if (!(e.rel_error < kEvalTolerance))
        throw Error(ErrorKind::InternalMismatch, "relError = " + decimal(e.rel_error));
      return "relError = " + decimal(e.rel_error);
    });
  }
  return rep;
}

template <std::floating_point Real>
Report eval_report(long m, long n, const std::complex<Real>& tau, std::size_t terms, int precision) {
  Report rep("eval", {m, n, terms});
  Json& res = rep.results();
  res["tau"] = to_json(tau);
  res["precision"] = precision;
  SolutionBundle sol;
  if (!rep.guarded("solve", [&] {
        sol = solve(m, n, terms);
        return std::string("h verified through index ") + std::to_string(terms);
      }))
    return rep;
  const Real scale = std::pow(Real(1728), to_real<Real>(rational(n, m)));
  res["via_series"] = to_json(scale * eval_qseries(sol.h, tau, terms));
  rep.guarded("hypergeometric route", [&] {
    const EvalReport<Real> e = cross_check(sol, tau, terms);
    res["via_hypergeom"] = to_json(e.via_hypergeom);
    res["rel_error"] = decimal(e.rel_error);
    res["terms_used"] = e.terms_used;
    res["tail_bound"] = decimal(e.tail_bound);
    if (!(e.rel_error < static_cast<Real>(kEvalTolerance)))
      throw Error(ErrorKind::InternalMismatch, "relError = " + decimal(e.rel_error) + " exceeds 1e-9");
    return "relError = " + decimal(e.rel_error);
  });
  return rep;
}

inline Report selftest_report() {
  Report rep("selftest", {std::nullopt, std::nullopt, acceptance::kVerifyOrder});
  Json criteria = Json::array();
  for (const acceptance::CriterionResult& c : acceptance::run_all()) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << c.seconds;
    criteria.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"seconds", secs.str()}, {"details", c.details}});
    std::string failing;
    for (const std::string& d : c.details)
      if (d.rfind("FAIL", 0) == 0) failing += (failing.empty() ? "" : "; ") + d.substr(5);
    rep.check("criterion " + std::to_string(c.id) + ": " + c.name, c.pass, failing);
  }
  rep.results()["criteria"] = std::move(criteria);
  return rep;
}

}  // namespace modschwarz::report
