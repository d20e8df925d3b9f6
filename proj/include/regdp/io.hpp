#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regdp/adp.hpp"
#include "regdp/analysis.hpp"
#include "regdp/params.hpp"
#include "regdp/simulator.hpp"
#include "regdp/solvers.hpp"
#include "regdp/tables.hpp"

namespace regdp {

// Everything a run needs, as read from a key = value config file. Derived
// model quantities (kappa, dt, alpha, gamma1, gamma2) are rejected as keys:
// they follow from the inputs and accepting them would let a file lie.
struct RunConfig {
  ModelSpec model;
  std::string solver = "avi";
  SolveOptions solve;
  AdpOptions adp;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  // thermal overrides; unset fields use ThermalParams::calibrated
  std::optional<double> t_out, tc_heat, c_rate, dt_sim, t_floor_margin;

  ThermalParams thermal(const ModelParams& p) const;
};

// Parses config text / file. Unknown keys, duplicate keys, derived-quantity
// keys, and malformed values all throw std::invalid_argument naming the
// offender. Model-level invariant violations surface when ModelParams::make
// runs on the result.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

std::string fmt_g17(double v);

// Value and policy tables round-trip through CSV with '#'-prefixed
// provenance preamble lines, rows sorted by (dir, y, i), doubles printed
// with %.17g so the round trip is bit-exact.
void write_value_csv(const std::string& path, const ValueTable& table);
ValueTable read_value_csv(const std::string& path);

void write_policy_csv(const std::string& path, const ModelParams& p,
                      const PolicyTable& table);
PolicyTable read_policy_csv(const std::string& path);

// Compact binary policy form: magic, version, params hash, grid, raw
// thresholds. Layout documented in the README.
void write_policy_binary(const std::string& path, const PolicyTable& table);
PolicyTable read_policy_binary(const std::string& path);

// ADP weights: exactly twelve %.17g lines, block order as in WeightVector.
void write_weights(const std::string& path, const WeightVector& w);
WeightVector read_weights(const std::string& path);

// Flat key = value run manifest.
void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& kv);
std::map<std::string, std::string> read_manifest(const std::string& path);
std::vector<std::pair<std::string, std::string>> manifest_for(
    const ModelParams& p, const TableMeta& meta);

void write_signal_csv(const std::string& path, const ModelParams& p,
                      const std::vector<SignalPoint>& signal);
void write_trace_csv(const std::string& path, const SimTrace& trace);
// Snapshot histograms bucketed over [t_min - margin, t_out].
void write_histogram_csv(const std::string& path, const SimTrace& trace,
                         double lo, double hi, int buckets = 20);

std::string bounds_report_text(const ModelParams& p,
                               const BoundsReport& bounds);
std::string verify_report_text(const VerifyReport& value_checks,
                               const VerifyReport& policy_checks);

}  // namespace regdp
