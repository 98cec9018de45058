#pragma once

// Run configuration, phase-shift scans and pole reports behind the
// `shortrange` command-line tool.
//
// Configuration comes in layers, lowest precedence first: a named preset,
// a flat `key = value` file, then command-line flags. Keys match the flag
// names: l, lambda, chi, c, kmin, kmax, n, out, outputs, preset.

#include <charconv>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "shortrange/boundary.hpp"
#include "shortrange/errors.hpp"
#include "shortrange/poles.hpp"
#include "shortrange/scattering.hpp"

namespace shortrange::cli {

struct Preset {
  std::string name;
  std::string description;
  Channel channel;
  double kmin{0.01};
  double kmax{3.0};
  int n{300};
};

/// p-wave, cutoff 0.1, three couplings (C = 9.75, 9.999, 10.25).
inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> table{
      {"fig1a", "p-wave, chi = -25: broad resonance near k = 1.5", {1, 0.1, -25.0}},
      {"fig1b", "p-wave, chi = -0.1: narrow resonance near k = 0.1", {1, 0.1, -0.1}},
      {"fig1c", "p-wave, chi = +25: repulsive, no resonance", {1, 0.1, 25.0}},
  };
  return table;
}

inline const Preset& find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
}

struct Entry {
  std::string value;
  std::string origin;  ///< "file:line" or "--flag"
};

/// One source of key/value settings.
struct Layer {
  std::string name;
  std::map<std::string, Entry> entries;

  void set(const std::string& key, std::string value, std::string origin) {
    entries[key] = Entry{std::move(value), std::move(origin)};
  }
  const Entry* find(const std::string& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  }
};

inline const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{"l", "lambda", "chi", "c", "kmin", "kmax", "n", "out", "outputs", "preset"};
  return keys;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Parses `key = value` lines. '#' starts a comment; blank lines are ignored.
inline Layer parse_config_text(std::istream& in, const std::string& source) {
  Layer layer{source, {}};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string origin = source + ":" + std::to_string(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(origin + ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    bool known = false;
    for (const auto& k : known_keys()) known = known || k == key;
    if (!known) throw ConfigError(origin + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(origin + ": empty value for '" + key + "'");
    if (layer.find(key)) throw ConfigError(origin + ": duplicate key '" + key + "'");
    layer.set(key, value, origin);
  }
  return layer;
}

inline Layer parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config_text(in, path);
}

inline double parse_double(const Entry& e, const std::string& key) {
  std::string v = e.value;
  if (key == "c" && (v == "dirichlet" || v == "Dirichlet")) return std::numeric_limits<double>::infinity();
  if (!v.empty() && v.front() == '+') v.erase(0, 1);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw ConfigError(e.origin + ": '" + key + "' expects a number, got '" + e.value + "'");
  return out;
}

inline int parse_int(const Entry& e, const std::string& key) {
  int out = 0;
  const auto& v = e.value;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw ConfigError(e.origin + ": '" + key + "' expects an integer, got '" + v + "'");
  return out;
}

/// Surface condition and, unless it is Dirichlet, the rescaled channel.
struct ChannelSpec {
  RobinCondition robin;
  std::optional<Channel> channel;
};

struct ScanConfig {
  ChannelSpec spec;
  double kmin{0.01};
  double kmax{3.0};
  int n{300};
  ScanSelection outputs{};
  std::string output_path;  ///< empty: stdout
  std::string preset;       ///< informational
};

namespace detail {

/// Layers with the preset (if any) prepended as the lowest one.
inline std::vector<Layer> expand_preset(const std::vector<Layer>& layers) {
  const Entry* preset = nullptr;
  for (const auto& layer : layers)
    if (const Entry* e = layer.find("preset")) preset = e;
  std::vector<Layer> out;
  if (preset) {
    const Preset& p = find_preset(preset->value);
    Layer base{"preset " + p.name, {}};
    auto num = [](double v) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      return std::string(buf);
    };
    const std::string origin = "preset " + p.name;
    base.set("l", std::to_string(p.channel.l), origin);
    base.set("lambda", num(p.channel.lambda), origin);
    base.set("chi", num(p.channel.chi), origin);
    base.set("kmin", num(p.kmin), origin);
    base.set("kmax", num(p.kmax), origin);
    base.set("n", std::to_string(p.n), origin);
    base.set("preset", p.name, origin);
    out.push_back(std::move(base));
  }
  out.insert(out.end(), layers.begin(), layers.end());
  return out;
}

inline const Entry* lookup(const std::vector<Layer>& layers, const std::string& key) {
  const Entry* found = nullptr;
  for (const auto& layer : layers)
    if (const Entry* e = layer.find(key)) found = e;
  return found;
}

}  // namespace detail

/// Resolves (l, lambda) and exactly one of chi / C. The coupling is taken
/// from the highest-precedence layer that mentions either; naming both in
/// that layer is an error.
inline ChannelSpec resolve_channel(const std::vector<Layer>& raw_layers) {
  const auto layers = detail::expand_preset(raw_layers);
  const Entry* le = detail::lookup(layers, "l");
  const Entry* lame = detail::lookup(layers, "lambda");
  if (!le) throw ConfigError("missing 'l' (angular momentum)");
  if (!lame) throw ConfigError("missing 'lambda' (cutoff radius)");
  const int l = parse_int(*le, "l");
  if (l < 0) throw ConfigError(le->origin + ": 'l' must be >= 0");
  if (l > 10) throw ConfigError(le->origin + ": 'l' must be <= 10");
  const double lambda = parse_double(*lame, "lambda");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError(lame->origin + ": 'lambda' must be finite and > 0");

  const Layer* coupling = nullptr;
  for (const auto& layer : layers)
    if (layer.find("chi") || layer.find("c")) coupling = &layer;
  if (!coupling) throw ConfigError("exactly one of 'chi' or 'c' must be given; got neither");
  const Entry* chi = coupling->find("chi");
  const Entry* c = coupling->find("c");
  if (chi && c)
    throw ConfigError(c->origin + ": 'chi' (" + chi->origin + ") and 'c' are mutually exclusive; give exactly one");

  ChannelSpec spec;
  if (chi) {
    const double v = parse_double(*chi, "chi");
    if (!std::isfinite(v)) throw ConfigError(chi->origin + ": 'chi' must be finite");
    spec.channel = Channel{l, lambda, v};
    spec.robin = robin_from_channel(*spec.channel);
  } else {
    const double v = parse_double(*c, "c");
    if (std::isnan(v)) throw ConfigError(c->origin + ": 'c' is NaN");
    spec.robin = make_robin(l, lambda, v);
    if (!spec.robin.dirichlet()) spec.channel = channel_from_robin(spec.robin);
  }
  return spec;
}

inline ScanSelection parse_outputs(const Entry& e) {
  ScanSelection sel{false, false, false};
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "full") sel.full = true;
    else if (item == "eff") sel.eff = true;
    else if (item == "zero") sel.zero = true;
    else throw ConfigError(e.origin + ": unknown output '" + item + "' (expected full, eff, zero)");
  }
  if (!sel.full && !sel.eff && !sel.zero) throw ConfigError(e.origin + ": 'outputs' selects nothing");
  return sel;
}

inline ScanConfig build_scan_config(const std::vector<Layer>& raw_layers) {
  const auto layers = detail::expand_preset(raw_layers);
  ScanConfig cfg;
  cfg.spec = resolve_channel(raw_layers);
  if (const Entry* e = detail::lookup(layers, "preset")) cfg.preset = e->value;

  const Entry* kmin = detail::lookup(layers, "kmin");
  const Entry* kmax = detail::lookup(layers, "kmax");
  const Entry* n = detail::lookup(layers, "n");
  if (!kmin || !kmax) throw ConfigError("missing 'kmin'/'kmax' momentum range");
  cfg.kmin = parse_double(*kmin, "kmin");
  cfg.kmax = parse_double(*kmax, "kmax");
  cfg.n = n ? parse_int(*n, "n") : 300;
  if (!(cfg.kmin > 0.0) || !std::isfinite(cfg.kmin)) throw ConfigError(kmin->origin + ": 'kmin' must be finite and > 0");
  if (!(cfg.kmax > cfg.kmin) || !std::isfinite(cfg.kmax)) throw ConfigError(kmax->origin + ": 'kmax' must be finite and > kmin");
  if (cfg.n < 2) throw ConfigError((n ? n->origin : std::string("n")) + ": 'n' must be >= 2");
  if (const Entry* o = detail::lookup(layers, "outputs")) cfg.outputs = parse_outputs(*o);
  if (const Entry* o = detail::lookup(layers, "out")) cfg.output_path = o->value;

  const bool series = cfg.outputs.eff || cfg.outputs.zero;
  if (series && !cfg.spec.channel)
    throw ConfigError("effective-range and zero-range outputs need a finite C; use --outputs full for a Dirichlet surface");
  if (series && !(cfg.kmax * cfg.spec.robin.lambda < 1.0)) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%s: kmax*lambda = %.6g >= 1; the effective-range and zero-range formulas need k*lambda < 1 "
                  "(use --outputs full for larger k)",
                  kmax->origin.c_str(), cfg.kmax * cfg.spec.robin.lambda);
    throw ConfigError(buf);
  }
  return cfg;
}

/// One CSV row; NaN marks a missing value.
struct ScanRow {
  double k{0.0};
  double delta_full{std::numeric_limits<double>::quiet_NaN()};
  double delta_eff{std::numeric_limits<double>::quiet_NaN()};
  double delta_zero{std::numeric_limits<double>::quiet_NaN()};
  double s_re{std::numeric_limits<double>::quiet_NaN()};
  double s_im{std::numeric_limits<double>::quiet_NaN()};
};

inline std::vector<ScanRow> compute_scan(const ScanConfig& cfg) {
  const auto ks = uniform_grid(cfg.kmin, cfg.kmax, cfg.n);
  const auto pts = scan_phase_shifts(cfg.spec.robin, cfg.spec.channel, ks, cfg.outputs);
  std::vector<ScanRow> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    ScanRow r{p.k, p.delta_full, p.delta_eff, p.delta_zero};
    if (cfg.outputs.full) {
      const cplx s = s_matrix_full(cfg.spec.robin, p.k);
      r.s_re = s.real();
      r.s_im = s.imag();
    }
    rows.push_back(r);
  }
  return rows;
}

/// 12 significant digits; NaN becomes an empty field.
inline std::string format_value(double v) {
  if (std::isnan(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Shortest text that parses back to the same double.
inline std::string format_exact(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline std::string describe(const ChannelSpec& spec) {
  std::string s = "l=" + std::to_string(spec.robin.l) + " lambda=" + format_exact(spec.robin.lambda);
  if (spec.channel) s += " chi=" + format_exact(spec.channel->chi);
  s += " C=" + format_exact(spec.robin.c);
  return s;
}

inline void write_scan_csv(const ScanConfig& cfg, const std::vector<ScanRow>& rows, std::ostream& out) {
  out << "# shortrange scan" << (cfg.preset.empty() ? "" : " preset=" + cfg.preset) << "\n";
  out << "# " << describe(cfg.spec) << "\n";
  std::string outs;
  if (cfg.outputs.full) outs += "full";
  if (cfg.outputs.eff) outs += std::string(outs.empty() ? "" : ",") + "eff";
  if (cfg.outputs.zero) outs += std::string(outs.empty() ? "" : ",") + "zero";
  out << "# kmin=" << format_exact(cfg.kmin) << " kmax=" << format_exact(cfg.kmax) << " n=" << cfg.n
      << " outputs=" << outs << " series_limit=" << format_exact(cfg.outputs.series_limit) << "\n";
  out << "k,delta_full,delta_eff,delta_zero,s_re,s_im\n";
  for (const auto& r : rows)
    out << format_value(r.k) << ',' << format_value(r.delta_full) << ',' << format_value(r.delta_eff) << ','
        << format_value(r.delta_zero) << ',' << format_value(r.s_re) << ',' << format_value(r.s_im) << '\n';
}

/// gnuplot script plotting the three phase-shift columns of `csv_path`.
inline void write_plot_script(const ScanConfig& cfg, const std::string& csv_path, std::ostream& out) {
  out << "# gnuplot -p " << csv_path << ".gp\n"
      << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set title '" << describe(cfg.spec) << "'\n"
      << "set xlabel 'k'\n"
      << "set ylabel 'delta_l (rad)'\n"
      << "plot '" << csv_path << "' using 1:2 with lines lw 2 title 'full', \\\n"
      << "     '' using 1:3 with lines dt 2 title 'effective range', \\\n"
      << "     '' using 1:4 with lines dt 4 title 'zero range'\n";
}

/// Writes the CSV to cfg.output_path (plus a `.gp` plot script beside it) or
/// to `fallback` when no path is set. Returns the rows written.
inline std::vector<ScanRow> run_scan(const ScanConfig& cfg, std::ostream& fallback) {
  const auto rows = compute_scan(cfg);
  if (cfg.output_path.empty()) {
    write_scan_csv(cfg, rows, fallback);
    return rows;
  }
  std::ofstream csv(cfg.output_path);
  if (!csv) throw std::runtime_error("cannot write '" + cfg.output_path + "'");
  write_scan_csv(cfg, rows, csv);
  std::ofstream gp(cfg.output_path + ".gp");
  if (!gp) throw std::runtime_error("cannot write '" + cfg.output_path + ".gp'");
  write_plot_script(cfg, cfg.output_path, gp);
  return rows;
}

/// Roots closer to the origin than this are reported as k = 0.
inline constexpr double kZeroPoleTolerance = 1e-12;

inline std::string pole_note(const PoleRecord& p) {
  if (std::abs(p.k_pole) < kZeroPoleTolerance) return "zero-energy bound state";
  switch (p.kind) {
    case PoleKind::Bound: return "bound state";
    case PoleKind::Resonance: return "resonance";
    case PoleKind::Other: return "";
  }
  return "";
}

/// Text report to `text`, and the PoleRecord table as CSV to `csv` when given.
inline std::vector<PoleRecord> run_pole_report(const Channel& ch, std::ostream& text, std::ostream* csv = nullptr) {
  const auto poles = find_poles(ch);
  const RobinCondition rc = robin_from_channel(ch);
  char buf[256];
  text << "pole report: " << describe({rc, ch}) << "\n";
  text << "classification: bound = on +imaginary axis (|Re k| < " << kAxisTolerance
       << " |k|); resonance = Re k > 0, -Re k < Im k < 0\n\n";
  text << "roots of the pole equation (" << poles.size() << "):\n";
  std::snprintf(buf, sizeof buf, "  %-22s %-22s %-10s %-11s %s\n", "Re k", "Im k", "kind", "residual", "note");
  text << buf;
  for (const auto& p : poles) {
    std::snprintf(buf, sizeof buf, "  %-22.14g %-22.14g %-10s %-11.3g %s\n", p.k_pole.real(), p.k_pole.imag(),
                  std::string(to_string(p.kind)).c_str(), p.residual, pole_note(p).c_str());
    text << buf;
  }

  text << "\nlarge-cutoff closed form (k^2 term dropped):\n";
  if (ch.chi == 0.0) {
    text << "  n/a for chi = 0\n";
  } else {
    const auto approx = asymptotic_poles(ch.l, ch.chi);
    for (std::size_t p = 0; p < approx.size(); ++p) {
      std::snprintf(buf, sizeof buf, "  p=%-3zu %-22.14g %-22.14g %s\n", p + 1, approx[p].real(), approx[p].imag(),
                    std::string(to_string(classify_pole(approx[p]))).c_str());
      text << buf;
    }
    if (ch.l >= 1) {
      std::snprintf(buf, sizeof buf, "  resonance momentum (closed form): %.14g\n", resonance_momentum(ch.l, ch.chi));
      text << buf;
    }
  }
  for (const auto& p : poles) {
    if (p.kind == PoleKind::Resonance) {
      std::snprintf(buf, sizeof buf, "  resonance momentum (exact pole, Re k): %.14g\n", p.k_pole.real());
      text << buf;
    }
  }

  if (csv) {
    *csv << "# " << describe({rc, ch}) << "\n";
    *csv << "re,im,kind,residual,backward_error,note\n";
    for (const auto& p : poles)
      *csv << format_value(p.k_pole.real()) << ',' << format_value(p.k_pole.imag()) << ',' << to_string(p.kind) << ','
           << format_value(p.residual) << ',' << format_value(p.backward_error) << ',' << pole_note(p) << '\n';
  }
  return poles;
}

inline void print_presets(std::ostream& out) {
  for (const auto& p : presets()) {
    const RobinCondition rc = robin_from_channel(p.channel);
    out << p.name << ": " << describe({rc, p.channel}) << " k=[" << format_exact(p.kmin) << ", "
        << format_exact(p.kmax) << "] n=" << p.n << "  " << p.description << "\n";
  }
}

}  // namespace shortrange::cli
