#include "gfn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "gfn/errors.hpp"
#include "gfn/gfunction.hpp"

namespace gfn {

namespace {

void validate(const SweepSpec& spec) {
  if (!(spec.lo < spec.hi)) throw DomainError("sweep requires lo < hi");
  if (spec.steps < 2) throw DomainError("sweep requires steps >= 2");
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) ||
      !std::isfinite(spec.fixed))
    throw DomainError("sweep bounds must be finite");
  switch (spec.kind) {
    case SweepKind::radial:
      if (!(spec.fixed >= 0.0 && spec.fixed <= M_PI / 2.0))
        throw DomainError("radial sweep needs theta in [0, pi/2]");
      if (!(spec.lo >= 0.0)) throw DomainError("radial sweep needs r >= 0");
      break;
    case SweepKind::phase:
      if (!(spec.fixed >= 0.0)) throw DomainError("phase sweep needs r >= 0");
      if (!(spec.lo >= 0.0 && spec.hi <= M_PI / 2.0))
        throw DomainError("phase sweep needs theta in [0, pi/2]");
      break;
    case SweepKind::chi_spectrum:
      if (!spec.rotor || !spec.params)
        throw DomainError("chi_spectrum sweep needs rotor and response parameters");
      if (!(spec.lo >= 0.0)) throw DomainError("chi_spectrum needs omega >= 0");
      if (!(spec.rotor->i1 > 0.0) || !(spec.rotor->i3 > 0.0) ||
          !(spec.rotor->dipole > 0.0))
        throw DomainError("chi_spectrum needs positive moments of inertia and dipole");
      if (!(spec.params->beta > 0.0) || !(spec.params->tau > 0.0))
        throw DomainError("chi_spectrum needs beta > 0 and tau > 0");
      break;
  }
}

SweepRecord eval_point(const SweepSpec& spec, double x,
                       const QuadratureConfig& cfg) {
  switch (spec.kind) {
    case SweepKind::radial: {
      const PolarArg arg{x, spec.fixed};
      const EvalResult r = g(spec.m, arg.to_complex(), cfg);
      return {x, r.value.real(), r.value.imag(), r.abs_error_estimate};
    }
    case SweepKind::phase: {
      const PolarArg arg{spec.fixed, x};
      const EvalResult r = g(spec.m, arg.to_complex(), cfg);
      return {x, r.value.real(), r.value.imag(), r.abs_error_estimate};
    }
    case SweepKind::chi_spectrum: {
      ResponseParams p = *spec.params;
      p.omega = x;
      const ChiPoint r = susceptibility_ratio_detailed(*spec.rotor, p, cfg);
      return {x, r.value.real(), r.value.imag(), r.abs_error_estimate};
    }
  }
  throw DomainError("unknown sweep kind");
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec,
                                   const QuadratureConfig& cfg, int threads) {
  validate(spec);
  const int n = spec.steps;
  std::vector<SweepRecord> records(static_cast<std::size_t>(n));
  const double step = (spec.hi - spec.lo) / static_cast<double>(n - 1);

  int workers = threads;
  if (workers <= 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n);

  std::atomic<int> next{0};
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n));
  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      const double x = spec.lo + static_cast<double>(i) * step;
      try {
        records[static_cast<std::size_t>(i)] = eval_point(spec, x, cfg);
      } catch (...) {
        failures[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (int i = 0; i < n; ++i) {
    if (!failures[static_cast<std::size_t>(i)]) continue;
    const double x = spec.lo + static_cast<double>(i) * step;
    try {
      std::rethrow_exception(failures[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      throw ConvergenceError("sweep point at abscissa " + format_float17(x) +
                             " failed: " + e.what());
    }
  }
  return records;
}

std::string format_float17(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "abscissa,re,im,err\n";
  for (const SweepRecord& r : records)
    out << format_float17(r.abscissa) << ',' << format_float17(r.re) << ','
        << format_float17(r.im) << ',' << format_float17(r.err) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void write_json(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& r = records[i];
    out << "  {\"abscissa\": " << format_float17(r.abscissa)
        << ", \"re\": " << format_float17(r.re)
        << ", \"im\": " << format_float17(r.im)
        << ", \"err\": " << format_float17(r.err) << '}'
        << (i + 1 < records.size() ? ",\n" : "\n");
  }
  out << "]\n";
  if (!out) throw IoError("write failed: " + path);
}

void write_records(const std::vector<SweepRecord>& records, const std::string& path) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    write_json(records, path);
  else
    write_csv(records, path);
}

namespace {

double parse_double(const std::string& text, int line) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc{} || res.ptr != e)
    throw ParseError("line " + std::to_string(line) + ": bad number '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<SweepRecord> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: missing header");
  if (trim(line) != "abscissa,re,im,err")
    throw ParseError("line 1: unexpected header '" + trim(line) + "'");
  std::vector<SweepRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::stringstream ss(line);
    std::string field;
    double vals[4];
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(ss, field, ','))
        throw ParseError("line " + std::to_string(lineno) + ": expected 4 fields");
      vals[i] = parse_double(trim(field), lineno);
    }
    if (std::getline(ss, field, ','))
      throw ParseError("line " + std::to_string(lineno) + ": trailing field");
    records.push_back({vals[0], vals[1], vals[2], vals[3]});
  }
  return records;
}

SweepSpec read_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  SweepSpec spec;
  RotorSpec rotor;
  ResponseParams params;
  bool has_rotor = false, has_params = false;
  bool has_kind = false, has_lo = false, has_hi = false, has_steps = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "kind") {
      if (value == "radial")
        spec.kind = SweepKind::radial;
      else if (value == "phase")
        spec.kind = SweepKind::phase;
      else if (value == "chi_spectrum")
        spec.kind = SweepKind::chi_spectrum;
      else
        throw ParseError("line " + std::to_string(lineno) + ": unknown kind '" +
                         value + "'");
      has_kind = true;
    } else if (key == "m") {
      spec.m = static_cast<int>(parse_double(value, lineno));
    } else if (key == "theta" || key == "r") {
      spec.fixed = parse_double(value, lineno);
    } else if (key == "lo") {
      spec.lo = parse_double(value, lineno);
      has_lo = true;
    } else if (key == "hi") {
      spec.hi = parse_double(value, lineno);
      has_hi = true;
    } else if (key == "steps") {
      spec.steps = static_cast<int>(parse_double(value, lineno));
      has_steps = true;
    } else if (key == "i1") {
      rotor.i1 = parse_double(value, lineno);
      has_rotor = true;
    } else if (key == "i3") {
      rotor.i3 = parse_double(value, lineno);
      has_rotor = true;
    } else if (key == "dipole") {
      rotor.dipole = parse_double(value, lineno);
      has_rotor = true;
    } else if (key == "beta") {
      params.beta = parse_double(value, lineno);
      has_params = true;
    } else if (key == "tau") {
      params.tau = parse_double(value, lineno);
      has_params = true;
    } else if (key == "omega") {
      params.omega = parse_double(value, lineno);
      has_params = true;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" +
                       key + "'");
    }
  }
  if (!has_kind || !has_lo || !has_hi || !has_steps)
    throw ParseError("config must set kind, lo, hi and steps");
  if (has_rotor) spec.rotor = rotor;
  if (has_params) spec.params = params;
  validate(spec);
  return spec;
}

}  // namespace gfn
