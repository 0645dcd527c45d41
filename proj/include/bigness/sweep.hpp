#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bigness/engine.hpp"

namespace bigness {

/// Family sweep over (m, ell). Families: "sym-power-sl2" (Sym^m of SL_2(F_ell))
/// and "standard-sln" (SL_m(F_q) on F_q^m, q taken from the ell list).
struct SweepSpec {
  std::string family = "sym-power-sl2";
  std::vector<std::uint32_t> m_values;
  std::vector<std::uint32_t> ell_values;
  std::string out_dir;  // empty: nothing written
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t cap = kDefaultOrderCap;
  bool timings = false;
};

struct SweepRow {
  std::uint32_t m = 0;
  std::uint32_t ell = 0;
  std::uint64_t order = 0;
  std::string verdict;  // big, not-big or error
  std::string failing;  // "B2,B4", "-" when big, the error kind on error
  std::string error;
  double seconds = 0;
  std::string certificate;
};

/// Rows come back with m outer and ell inner, in the order listed, whatever
/// order the workers finish in. Per-job errors land in the row.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Tab-separated table with a "# bigness-sweep v1 <family>" header line and
/// columns m, ell, order, verdict, failing, plus seconds when requested.
std::string format_sweep_table(const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// File name of a job's certificate inside the output directory.
std::string sweep_certificate_name(const SweepSpec& spec, std::uint32_t m, std::uint32_t ell);

/// Runs the sweep and writes summary.tsv and one certificate per job into
/// spec.out_dir (created if needed). Returns the table text.
std::string run_sweep_to_directory(const SweepSpec& spec);

}  // namespace bigness
