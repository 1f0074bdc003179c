#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plancherel/group.hpp"

namespace plancherel {

enum class RunMode { CharacterTable, PlancherelCheck, WhittakerCheck, ConjectureProbe, Sweep };
enum class OutputFormat { Json, Csv };

/// Relative tolerance of the generalized Plancherel and inversion checks:
/// |lhs − rhs| ≤ kCheckRelTol·(1 + ‖f‖₁).
inline constexpr double kCheckRelTol = 1e-8;
/// Absolute tolerance of the kernel/multiplicity identity.
inline constexpr double kIdentityTol = 1e-8;

struct RunConfig {
  RunMode mode = RunMode::Sweep;
  std::string group_spec;
  /// Empty: every subgroup (order ≤ 48). Otherwise the subgroup generated by
  /// these element indices.
  std::optional<std::vector<Element>> subgroup_generators;
  /// Empty: every linear character of each subgroup.
  std::optional<std::size_t> psi_index;
  std::size_t num_test_functions = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  OutputFormat output_format = OutputFormat::Json;
  std::string output_path;  // empty = stdout

  /// Throws InvalidConfig.
  void validate() const;
  nlohmann::json to_json() const;
};

struct SweepReport {
  RunConfig config;
  /// config, group, table, checks, probes, verdict, max_abs_error. Contains
  /// nothing time- or host-dependent.
  nlohmann::json digest_section;
  bool pass = false;
  bool complete = true;
  std::string error;
  double max_abs_error = 0.0;
  double wall_time = 0.0;
  std::size_t configurations = 0;  // (U, ψ) pairs examined
  std::string table_csv;

  std::string digest() const;
  nlohmann::json to_json() const;
  /// The text written to the output: JSON (2-space indent) or CSV.
  std::string render() const;
};

/// Builds the group and table, runs the checks selected by config.mode and
/// collects the report. Constituent failures do not throw; they produce an
/// incomplete report with pass = false and the message in error.
/// Invalid configurations throw InvalidConfig.
SweepReport run_sweep(const RunConfig& config);

std::string_view to_string(RunMode mode) noexcept;

}  // namespace plancherel
