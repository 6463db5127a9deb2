#pragma once

// CSV data behind the six figures: one-excitation dynamics (fig1-fig3) and
// two-qubit thermal concurrence (fig4-fig6).

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xychain/chain.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/evolution.hpp"
#include "xychain/thermal.hpp"
#include "xychain/wstate.hpp"

namespace xychain {

enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6 };

inline const char* figure_name(FigureId id) {
  static constexpr const char* names[] = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};
  return names[static_cast<int>(id)];
}

inline FigureId parse_figure_id(std::string_view s) {
  for (int k = 0; k < 6; ++k)
    if (s == figure_name(static_cast<FigureId>(k))) return static_cast<FigureId>(k);
  throw Error(Errc::BadFigureId, "unknown figure id '" + std::string(s) + "' (expected fig1..fig6)");
}

/// Everything a figure generator reads. Which fields matter depends on the
/// figure; the rest are carried along unused.
struct FigureParams {
  int n = 3;
  double J = 1.0;
  std::vector<double> gammas{0.0, 0.6, 0.8};
  std::vector<double> fields{0.0, 0.5, 1.0, 1.2};
  std::vector<double> temps{0.01, 0.5, 1.0};
  double tmin = 0.0;  // time for fig1-3, temperature for fig4/fig6
  double tmax = 4.0 * std::numbers::pi;
  double bmin = 0.0;
  double bmax = 2.0;
  std::size_t grid = 2001;
};

inline FigureParams default_params(FigureId id) {
  FigureParams p;
  switch (id) {
    case FigureId::fig1: p.n = 3; break;
    case FigureId::fig2: p.n = 4; break;
    case FigureId::fig3: p.n = 5; break;
    case FigureId::fig4:
    case FigureId::fig6:
      p.n = 2;
      p.tmin = 0.01;
      p.tmax = 2.0;
      break;
    case FigureId::fig5: p.n = 2; break;
  }
  return p;
}

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline double parse_real(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    throw Error(Errc::BadOverride, std::string(key) + ": '" + t + "' is not a finite number");
  return v;
}

inline std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw Error(Errc::BadOverride, std::string(key) + ": unbalanced '['");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = t.find(',', start);
    out.push_back(parse_real(key, std::string_view(t).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::size_t parse_count(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  std::size_t v = 0;
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || ptr != end)
    throw Error(Errc::BadOverride, std::string(key) + ": '" + t + "' is not a non-negative integer");
  return v;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

}  // namespace detail

inline constexpr std::size_t kMaxGrid = 1000000;

/// Applies one key=value setting. Keys are case-insensitive; lists are
/// comma-separated with optional brackets, e.g. b=[0,0.5].
inline void apply_override(FigureParams& p, std::string_view key_in, std::string_view value) {
  const std::string key = detail::lower(detail::trim(key_in));
  if (key == "n") {
    const auto n = detail::parse_count(key, value);
    if (n < 2 || n > 12) throw Error(Errc::BadOverride, "n must lie in 2..12");
    p.n = static_cast<int>(n);
  } else if (key == "j") {
    p.J = detail::parse_real(key, value);
  } else if (key == "gamma" || key == "gammas") {
    auto g = detail::parse_list(key, value);
    for (double x : g)
      if (x < 0.0 || x > 1.0) throw Error(Errc::BadOverride, "gamma values must lie in [0,1]");
    p.gammas = std::move(g);
  } else if (key == "b") {
    p.fields = detail::parse_list(key, value);
  } else if (key == "temps") {
    auto t = detail::parse_list(key, value);
    for (double x : t)
      if (!(x > 0.0)) throw Error(Errc::BadOverride, "temperatures must be positive");
    p.temps = std::move(t);
  } else if (key == "tmin") {
    p.tmin = detail::parse_real(key, value);
  } else if (key == "tmax") {
    p.tmax = detail::parse_real(key, value);
  } else if (key == "bmin") {
    p.bmin = detail::parse_real(key, value);
  } else if (key == "bmax") {
    p.bmax = detail::parse_real(key, value);
  } else if (key == "grid") {
    const auto g = detail::parse_count(key, value);
    if (g < 2 || g > kMaxGrid) throw Error(Errc::BadOverride, "grid must lie in 2..1000000");
    p.grid = g;
  } else {
    throw Error(Errc::BadOverride, "unknown key '" + key + "'");
  }
}

/// "key=value"
inline void apply_override(FigureParams& p, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw Error(Errc::BadOverride, "expected key=value, got '" + std::string(assignment) + "'");
  apply_override(p, assignment.substr(0, eq), assignment.substr(eq + 1));
}

/// key=value lines; blank lines and lines starting with '#' are skipped.
inline std::vector<std::string> read_config(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.find('=') == std::string::npos) throw Error(Errc::BadOverride, "config line without '=': '" + t + "'");
    out.push_back(t);
  }
  return out;
}

struct FigureJob {
  FigureId figure_id = FigureId::fig1;
  std::vector<std::string> overrides;  // "key=value", applied in order
};

struct FigureSummary {
  std::vector<std::string> lines;
};

namespace detail {

inline void check_range(double lo, double hi, const char* what) {
  if (!(lo < hi)) throw Error(Errc::BadOverride, std::string(what) + " range is empty");
}

inline std::vector<std::pair<int, int>> concurrence_pairs(FigureId id, int n) {
  std::vector<std::pair<int, int>> want;
  if (id == FigureId::fig1) want = {{1, 2}, {1, 3}, {2, 3}};
  else want = {{1, 2}, {2, 3}};
  std::vector<std::pair<int, int>> out;
  for (auto pr : want)
    if (pr.second <= n) out.push_back(pr);
  return out;
}

inline FigureSummary dynamics_figure(FigureId id, const FigureParams& p, std::ostream& csv) {
  check_range(p.tmin, p.tmax, "time");
  const ChainSpec spec{p.n, p.J, 0.0, 0.0};
  const auto pairs = concurrence_pairs(id, p.n);

  csv << "t";
  for (int s = 1; s <= p.n; ++s) csv << ",P" << s;
  for (auto [i, j] : pairs) csv << ",C_" << i << j;
  csv << '\n';
  for (double t : uniform_grid(p.tmin, p.tmax, p.grid)) {
    const auto amp = amplitudes_analytic(spec, t);
    csv << fmt(t);
    for (const auto& b : amp.b) csv << ',' << fmt(std::norm(b));
    for (auto [i, j] : pairs) csv << ',' << fmt(2.0 * std::abs(amp.b[i - 1] * amp.b[j - 1]));
    csv << '\n';
  }

  FigureSummary sum;
  sum.lines.push_back("N=" + std::to_string(p.n) + " J=" + fmt(p.J));
  if (p.J == 0.0) return sum;
  const auto per = periodicity_check(spec);
  sum.lines.push_back(per.is_periodic ? "period " + fmt(*per.period) : std::string("no exact period"));
  if (p.tmax > 0.0) {
    const auto rep = find_crossings(spec, p.tmax);
    std::string line = "crossings";
    int shown = 0;
    for (double t : rep.times)
      if (t >= p.tmin) {
        line += ' ' + fmt(t);
        ++shown;
      }
    if (shown == 0) line += " none";
    sum.lines.push_back(line);
    sum.lines.push_back("min spread " + fmt(rep.min_spread) + " at t=" + fmt(rep.min_spread_time));
  }
  return sum;
}

inline std::string tc_text(double J, double gamma) {
  if (J == 0.0) return "none (J=0)";
  if (gamma == 1.0) return "none (Ising)";
  return fmt(critical_temperature_anisotropic(J, gamma).value);
}

}  // namespace detail

/// Writes the CSV for `job` to `csv` and returns the summary lines.
inline FigureSummary run_figure(const FigureJob& job, std::ostream& csv, const FigureParams& base) {
  FigureParams p = base;
  for (const auto& o : job.overrides) apply_override(p, o);

  switch (job.figure_id) {
    case FigureId::fig1:
    case FigureId::fig2:
    case FigureId::fig3:
      return detail::dynamics_figure(job.figure_id, p, csv);

    case FigureId::fig4: {
      if (!(p.tmin > 0.0)) throw Error(Errc::BadOverride, "tmin must be positive for temperature sweeps");
      detail::check_range(p.tmin, p.tmax, "temperature");
      if (p.fields.empty()) throw Error(Errc::BadOverride, "b list is empty");
      csv << "T";
      for (double b : p.fields) csv << ",C_B=" << detail::fmt(b);
      csv << '\n';
      for (double T : uniform_grid(p.tmin, p.tmax, p.grid)) {
        csv << detail::fmt(T);
        for (double b : p.fields) csv << ',' << detail::fmt(concurrence_isotropic_closed_form(p.J, b, T));
        csv << '\n';
      }
      return {{"J=" + detail::fmt(p.J), "T_c " + detail::tc_text(p.J, 0.0) + " for every B"}};
    }

    case FigureId::fig5: {
      detail::check_range(p.bmin, p.bmax, "field");
      if (p.temps.empty()) throw Error(Errc::BadOverride, "temps list is empty");
      csv << "B";
      for (double T : p.temps) csv << ",C_T=" << detail::fmt(T);
      csv << '\n';
      for (double b : uniform_grid(p.bmin, p.bmax, p.grid)) {
        csv << detail::fmt(b);
        for (double T : p.temps) csv << ',' << detail::fmt(concurrence_isotropic_closed_form(p.J, b, T));
        csv << '\n';
      }
      FigureSummary sum{{"J=" + detail::fmt(p.J), "T_c " + detail::tc_text(p.J, 0.0)}};
      if (p.J != 0.0) sum.lines.push_back("T->0 step at B=" + detail::fmt(std::abs(p.J)));
      return sum;
    }

    case FigureId::fig6: {
      if (!(p.tmin > 0.0)) throw Error(Errc::BadOverride, "tmin must be positive for temperature sweeps");
      detail::check_range(p.tmin, p.tmax, "temperature");
      if (p.gammas.empty()) throw Error(Errc::BadOverride, "gamma list is empty");
      csv << "T";
      for (double g : p.gammas) csv << ",C_gamma=" << detail::fmt(g);
      csv << '\n';
      for (double T : uniform_grid(p.tmin, p.tmax, p.grid)) {
        csv << detail::fmt(T);
        for (double g : p.gammas) csv << ',' << detail::fmt(concurrence_anisotropic_closed_form(p.J, g, T));
        csv << '\n';
      }
      FigureSummary sum{{"J=" + detail::fmt(p.J)}};
      for (double g : p.gammas) sum.lines.push_back("T_c(gamma=" + detail::fmt(g) + ") " + detail::tc_text(p.J, g));
      return sum;
    }
  }
  throw Error(Errc::BadFigureId, "unhandled figure");
}

inline FigureSummary run_figure(const FigureJob& job, std::ostream& csv) {
  return run_figure(job, csv, default_params(job.figure_id));
}

}  // namespace xychain
