#include "bigness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include "bigness/error.hpp"
#include "bigness/io.hpp"
#include "bigness/reps.hpp"

namespace bigness {

namespace {

MatrixGroup build(const std::string& family, std::uint32_t m, std::uint32_t ell) {
  if (family == "sym-power-sl2") return sym_power_sl2(m, ell).group;
  if (family == "standard-sln") return standard_sln(m, ell).group;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
}

void run_job(const SweepSpec& spec, SweepRow& row) {
  const auto start = std::chrono::steady_clock::now();
  try {
    EngineOptions opts;
    opts.seed = spec.seed;
    opts.cap = spec.cap;
    const BignessCertificate c = check_bigness(build(spec.family, row.m, row.ell), opts);
    row.order = c.order;
    row.verdict = c.big ? "big" : "not-big";
    row.failing = c.big ? "-" : c.failing();
    row.certificate = format_certificate(c, spec.timings);
  } catch (const Error& e) {
    row.verdict = "error";
    row.failing = std::string(to_string(e.kind()));
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.family != "sym-power-sl2" && spec.family != "standard-sln")
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + spec.family + "'");
  std::vector<SweepRow> rows;
  for (auto m : spec.m_values)
    for (auto ell : spec.ell_values) {
      SweepRow r;
      r.m = m;
      r.ell = ell;
      rows.push_back(r);
    }
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(rows.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) run_job(spec, rows[i]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return rows;
}

std::string format_sweep_table(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "# bigness-sweep v1 " << spec.family << '\n';
  out << "m\tell\torder\tverdict\tfailing" << (spec.timings ? "\tseconds" : "") << '\n';
  for (const auto& r : rows) {
    out << r.m << '\t' << r.ell << '\t' << r.order << '\t' << r.verdict << '\t' << r.failing;
    if (spec.timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
      out << '\t' << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::string sweep_certificate_name(const SweepSpec& spec, std::uint32_t m, std::uint32_t ell) {
  return spec.family + "-m" + std::to_string(m) + "-l" + std::to_string(ell) + ".cert";
}

std::string run_sweep_to_directory(const SweepSpec& spec) {
  namespace fs = std::filesystem;
  const auto rows = run_sweep(spec);
  const std::string table = format_sweep_table(spec, rows);
  if (!spec.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(spec.out_dir, ec);
    if (ec) throw Error(ErrorKind::InvalidArgument, "cannot create " + spec.out_dir + ": " + ec.message());
    for (const auto& r : rows)
      if (!r.certificate.empty())
        write_text_file((fs::path(spec.out_dir) / sweep_certificate_name(spec, r.m, r.ell)).string(), r.certificate);
    write_text_file((fs::path(spec.out_dir) / "summary.tsv").string(), table);
  }
  return table;
}

}  // namespace bigness
