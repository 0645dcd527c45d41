// bigcheck: command-line front end for the bigness toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>

#include "bigness/cohomology.hpp"
#include "bigness/engine.hpp"
#include "bigness/error.hpp"
#include "bigness/io.hpp"
#include "bigness/reps.hpp"
#include "bigness/rootdata.hpp"
#include "bigness/sweep.hpp"
#include "bigness/verify.hpp"

using namespace bigness;

namespace {

enum Exit : int {
  kBig = 0,
  kUsage = 1,
  kResource = 2,
  kParse = 3,
  kMath = 4,
  kNotBig = 10,
  kNotFound = 11,
  kRejected = 12,
};

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
      return kParse;
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::ChopBudgetExceeded:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Overflow:
      return kResource;
    case ErrorKind::InvalidArgument:
      return kUsage;
    default:
      return kMath;
  }
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("BIGNESS_CAP")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid BIGNESS_CAP\n";
  }
  return kDefaultOrderCap;
}

// "2..4", "7,11,13", "2..4,9" or "" (empty).
std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string part;
  auto num = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
      throw Error(ErrorKind::InvalidArgument, "bad number '" + s + "'");
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
    } else {
      const auto lo = num(part.substr(0, dots)), hi = num(part.substr(dots + 2));
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

IVec parse_weight(const std::string& text) {
  IVec out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad weight entry '" + part + "'");
    }
  }
  return out;
}

std::string join(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// q = p^e
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) p = q;
  std::uint32_t e = 0;
  while (q % p == 0) q /= p, ++e;
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), e};
}

struct Common {
  std::uint64_t seed = 1;
  std::uint64_t cap = default_cap();
  bool timings = false;
};

int cmd_check(const std::string& path, const std::string& out, const Common& c) {
  const auto group = parse_group(read_text_file(path)).to_group();
  EngineOptions opts;
  opts.seed = c.seed;
  opts.cap = c.cap;
  const auto cert = check_bigness(group, opts);
  write_text_file(out.empty() ? path + ".cert" : out, format_certificate(cert, c.timings));
  if (cert.big) {
    std::cout << "big\n";
    return kBig;
  }
  std::cout << "not-big " << cert.failing() << '\n';
  return kNotBig;
}

int cmd_verify(const std::string& group_path, const std::string& cert_path, const Common& c) {
  const auto d = parse_group(read_text_file(group_path));
  const auto cert = parse_certificate(read_text_file(cert_path));
  if (cert.characteristic != d.field->characteristic() || cert.degree != d.field->degree() ||
      cert.dimension != d.dimension) {
    std::cout << "rejected\nfield or dimension differs from the group\n";
    return kRejected;
  }
  const auto rep = verify_certificate(d.field, d.dimension, d.generators, cert, c.cap);
  std::cout << (rep.ok ? "accepted" : "rejected") << '\n';
  std::cout << "order " << rep.order << "\nwitnesses " << rep.witnesses_checked << "\nfunctional-rank "
            << rep.functional_rank << "\ncommutant " << rep.commutant_dim << '\n';
  if (rep.h1_checked) std::cout << "h1 " << rep.h1 << '\n';
  for (const auto& p : rep.problems) std::cout << "problem: " << p << '\n';
  return rep.ok ? kBig : kRejected;
}

int cmd_h1(const std::string& path, const std::string& module, const Common& c) {
  auto group = parse_group(read_text_file(path)).to_group();
  group.enumerate(c.cap);
  const GModule v = GModule::natural(group);
  GModule m = v;
  if (module == "ad")
    m = ad_module(v);
  else if (module == "ad0")
    m = ad0_module(v, false);
  else if (module == "trivial")
    m = GModule(group.field_ptr(), 1, std::vector<Matrix>(group.generators().size(), Matrix::identity(1)));
  const auto s = h1(group, m);
  std::cout << "order " << group.order() << "\nz1 " << s.z1_dim << "\nb1 " << s.b1_dim << "\nh1 " << s.h1_dim
            << "\nsylow-bound " << h1_upper_bound_via_sylow(group, m) << '\n';
  return kBig;
}

int cmd_sweep(SweepSpec spec, const std::string& ms, const std::string& ells, const Common& c) {
  spec.m_values = parse_list(ms);
  spec.ell_values = parse_list(ells);
  spec.seed = c.seed;
  spec.cap = c.cap;
  spec.timings = c.timings;
  std::cout << run_sweep_to_directory(spec);
  return kBig;
}

struct TorusArgs {
  std::string torus;
  std::size_t split = 0;
  std::uint64_t q = 0;
  std::string catalog;
};

RootDataCatalog load_catalog(const std::string& path) {
  return path.empty() ? builtin_catalog() : parse_catalog(read_text_file(path));
}

TwistedTorus make(const TorusArgs& a) {
  if (a.split > 0) {
    if (!a.torus.empty()) throw Error(ErrorKind::InvalidArgument, "give either --torus or --split");
    return make_torus("split-" + std::to_string(a.split), std::nullopt, IntMatrix::identity(a.split), a.q);
  }
  if (a.torus.empty()) throw Error(ErrorKind::InvalidArgument, "--torus or --split is required");
  return load_catalog(a.catalog).instantiate(a.torus, a.q);
}

int cmd_regular(const TorusArgs& a, std::int64_t n) {
  const TwistedTorus t = make(a);
  const auto r = highly_regular_element(t, n);
  if (!r) {
    std::cout << "NOT-FOUND\n";
    return kNotFound;
  }
  std::cout << "point " << join(r->point) << '\n';
  // values lambda(g) in F_{q^d}, as field codes against its primitive element
  std::optional<FieldPtr> field;
  if (const auto pe = prime_power(t.q)) {
    try {
      field = Field::make(pe->first, pe->second * static_cast<std::uint32_t>(t.splitting_degree()));
    } catch (const Error&) {
    }
  }
  for (std::size_t i = 0; i < r->weights.size(); ++i) {
    std::cout << "weight " << join(r->weights[i]) << " exponent " << r->exponents[i];
    if (field) std::cout << " value " << (*field)->pow((*field)->generator(), r->exponents[i]);
    std::cout << '\n';
  }
  return kBig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigness checks for finite subgroups of GL_n(F_q)"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Seed for randomised module splitting");
    sub->add_option("--cap", common.cap, "Group order cap (default from BIGNESS_CAP)");
  };

  std::string group_path, cert_path, out;
  auto* check = app.add_subcommand("check", "Decide bigness of a group file and write its certificate");
  check->add_option("group", group_path, "Group description")->required();
  check->add_option("--out", out, "Certificate path (default <group>.cert)");
  check->add_flag("--timings", common.timings, "Record timings in the certificate");
  add_common(check);

  auto* verify = app.add_subcommand("verify", "Re-check a certificate independently");
  verify->add_option("group", group_path, "Group description")->required();
  verify->add_option("certificate", cert_path, "Certificate")->required();
  add_common(verify);

  std::string module = "ad0";
  auto* h1cmd = app.add_subcommand("h1", "H^1 of a group file on a module");
  h1cmd->add_option("group", group_path, "Group description")->required();
  h1cmd->add_option("--module", module, "natural, ad, ad0 or trivial")
      ->check(CLI::IsMember({"natural", "ad", "ad0", "trivial"}));
  add_common(h1cmd);

  SweepSpec spec;
  std::string ms, ells;
  auto* sweep = app.add_subcommand("sweep", "Run a family sweep");
  sweep->add_option("--family", spec.family, "sym-power-sl2 or standard-sln")
      ->check(CLI::IsMember({"sym-power-sl2", "standard-sln"}));
  sweep->add_option("--m", ms, "Parameter list, e.g. 1..4 or 2,3")->required();
  sweep->add_option("--ell", ells, "Characteristic (or q) list, e.g. 7,11,13")->required();
  sweep->add_option("--out", spec.out_dir, "Directory for summary.tsv and certificates");
  sweep->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--timings", common.timings, "Add a seconds column and certificate timings");
  add_common(sweep);

  std::uint32_t m = 0, n = 0, ell = 0, q = 0;
  auto* construct = app.add_subcommand("construct", "Write a group description");
  construct->require_subcommand(1);
  construct->add_option("--out", out, "Output path (default standard output)");
  auto* c_sym = construct->add_subcommand("sym-power-sl2", "Sym^m of SL_2(F_ell)");
  c_sym->add_option("--m", m)->required();
  c_sym->add_option("--ell", ell)->required();
  auto* c_sln = construct->add_subcommand("standard-sln", "SL_n(F_q) on F_q^n");
  c_sln->add_option("--n", n)->required();
  c_sln->add_option("--q", q)->required();
  auto* c_uni = construct->add_subcommand("unipotent", "Upper unitriangular Z/ell in GL_2(F_ell)");
  c_uni->add_option("--ell", ell)->required();
  auto* c_tor = construct->add_subcommand("nonsplit-torus", "Non-split torus in GL_2(F_q)");
  c_tor->add_option("--q", q)->required();

  TorusArgs targs;
  std::string datum, weight;
  std::int64_t bound = 0;
  auto* rootdata = app.add_subcommand("rootdata", "Root data and twisted tori");
  rootdata->require_subcommand(1);
  rootdata->add_option("--catalog", targs.catalog, "Catalog file (default built-in)");
  auto* r_norm = rootdata->add_subcommand("norm", "Weight norm");
  r_norm->add_option("--datum", datum)->required();
  r_norm->add_option("--weight", weight, "Comma-separated coordinates")->required();
  auto* r_weights = rootdata->add_subcommand("weights", "Weights of norm below a bound");
  r_weights->add_option("--datum", datum)->required();
  r_weights->add_option("--bound", bound)->required();
  auto add_torus = [&](CLI::App* sub) {
    sub->add_option("--torus", targs.torus, "Catalog torus name");
    sub->add_option("--split", targs.split, "Split torus of this rank instead");
    sub->add_option("--q", targs.q)->required();
  };
  auto* r_count = rootdata->add_subcommand("torus-count", "Number of F_q-points");
  add_torus(r_count);
  auto* r_reg = rootdata->add_subcommand("regular-element", "Point separating weights of norm < n");
  add_torus(r_reg);
  r_reg->add_option("--n", bound)->required();
  auto* r_kernel = rootdata->add_subcommand("kernel-bound", "Kernel order of a character against its bound");
  add_torus(r_kernel);
  r_kernel->add_option("--weight", weight)->required();
  auto* r_catalog = rootdata->add_subcommand("catalog", "Print the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(group_path, out, common);
    if (*verify) return cmd_verify(group_path, cert_path, common);
    if (*h1cmd) return cmd_h1(group_path, module, common);
    if (*sweep) return cmd_sweep(spec, ms, ells, common);
    if (*construct) {
      MatrixGroup g = *c_sym ? sym_power_sl2(m, ell).group
                      : *c_sln ? standard_sln(n, q).group
                      : *c_uni ? unipotent_group(ell)
                               : nonsplit_torus(q);
      const std::string text = format_group(g);
      if (out.empty())
        std::cout << text;
      else
        write_text_file(out, text);
      return kBig;
    }
    if (*rootdata) {
      if (*r_catalog) {
        std::cout << format_catalog(load_catalog(targs.catalog));
      } else if (*r_norm) {
        std::cout << weight_norm(load_catalog(targs.catalog).datum(datum), parse_weight(weight)) << '\n';
      } else if (*r_weights) {
        for (const auto& w : small_norm_weights(load_catalog(targs.catalog).datum(datum), bound))
          std::cout << join(w) << '\n';
      } else if (*r_count) {
        std::cout << torus_point_count(make(targs)) << '\n';
      } else if (*r_reg) {
        return cmd_regular(targs, bound);
      } else if (*r_kernel) {
        const auto k = character_kernel_order(make(targs), parse_weight(weight));
        std::cout << "kernel " << k.kernel_order << "\ntorsion " << k.torsion << "\nbound " << k.bound << "\nholds "
                  << (k.holds ? "yes" : "no") << '\n';
      }
      return kBig;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResource;
  }
  return kUsage;
}
