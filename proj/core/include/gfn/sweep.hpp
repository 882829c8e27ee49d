#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfn/quadrature.hpp"
#include "gfn/rotor.hpp"
#include "gfn/types.hpp"

namespace gfn {

enum class SweepKind { radial, phase, chi_spectrum };

/// One parameter sweep: a uniform grid of steps points on [lo, hi].
/// radial: g_m(r e^{-i theta}) against r, theta fixed;
/// phase:  g_m(r e^{-i theta}) against theta, r fixed;
/// chi_spectrum: susceptibility ratio against omega.
struct SweepSpec {
  SweepKind kind = SweepKind::radial;
  int m = 1;
  double fixed = 0.0;  // theta for radial, r for phase; unused for chi
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  std::optional<RotorSpec> rotor;
  std::optional<ResponseParams> params;
};

struct SweepRecord {
  double abscissa = 0.0;
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;
};

/// Evaluate the sweep. Points may be computed concurrently (threads = 0
/// picks a worker count automatically, 1 forces sequential); the output is
/// ordered by abscissa and independent of the thread count. A failing point
/// aborts with a diagnostic naming its abscissa.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec,
                                   const QuadratureConfig& cfg,
                                   int threads = 0);

/// CSV with the fixed header `abscissa,re,im,err`, 17-significant-digit
/// decimal floats, '.' separator, LF line endings.
void write_csv(const std::vector<SweepRecord>& records, const std::string& path);

/// Same records as a JSON array of {abscissa, re, im, err} objects.
void write_json(const std::vector<SweepRecord>& records, const std::string& path);

/// Dispatch on the path suffix: `.json` emits JSON, anything else CSV.
void write_records(const std::vector<SweepRecord>& records, const std::string& path);

/// Parse a CSV produced by write_csv.
std::vector<SweepRecord> read_csv(const std::string& path);

/// Parse a flat `key = value` run configuration (one key per line,
/// '#' comments, UTF-8). Keys mirror the CLI flags; unknown keys raise a
/// ParseError naming the key and its line.
SweepSpec read_config(const std::string& path);

/// Shortest fixed-precision form used for all serialised floats:
/// 17 significant digits, locale independent.
std::string format_float17(double v);

}  // namespace gfn
