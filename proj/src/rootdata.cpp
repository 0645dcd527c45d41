#include "bigness/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "bigness/error.hpp"
#include "bigness/field.hpp"

namespace bigness {

namespace {

IVec axpy(const IVec& x, std::int64_t k, const IVec& y) {
  IVec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(r[i], -checked_mul(k, y[i]));
  return r;
}

std::int64_t sign_of(std::int64_t x) { return (x > 0) - (x < 0); }

std::uint64_t mod_reduce(__int128 x, std::uint64_t n) {
  __int128 r = x % static_cast<__int128>(n);
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r);
}

// Coefficient signs of each root against the simple roots: +1, -1.
std::vector<int> root_signs(const RootDatum& d) {
  const std::size_t k = d.simple.size();
  std::vector<int> signs(d.roots.size(), 0);
  if (k == 0) return signs;
  IntMatrix cartan(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cartan(i, j) = int_dot(d.roots[d.simple[j]], d.coroots[d.simple[i]]);
  const std::int64_t det = int_determinant(cartan);
  if (det == 0) throw Error(ErrorKind::InvalidArgument, "simple roots are dependent");
  const IntMatrix adj = int_adjugate(cartan);
  for (std::size_t r = 0; r < d.roots.size(); ++r) {
    IVec b(k);
    for (std::size_t i = 0; i < k; ++i) b[i] = int_dot(d.roots[r], d.coroots[d.simple[i]]);
    const IVec c = int_mat_vec(adj, b);
    int s = 0;
    for (auto x : c)
      if (x != 0) {
        s = static_cast<int>(sign_of(x) * sign_of(det));
        break;
      }
    signs[r] = s;
  }
  return signs;
}

}  // namespace

RootDatum RootDatum::from_simple(std::string name, std::size_t rank, const std::vector<IVec>& simple_roots,
                                 const std::vector<IVec>& simple_coroots) {
  if (simple_roots.size() != simple_coroots.size())
    throw Error(ErrorKind::InvalidArgument, "simple roots and coroots differ in number");
  std::vector<IVec> roots = simple_roots, coroots = simple_coroots;
  for (const auto& v : roots)
    if (v.size() != rank) throw Error(ErrorKind::ShapeMismatch, "root length");
  for (const auto& v : coroots)
    if (v.size() != rank) throw Error(ErrorKind::ShapeMismatch, "coroot length");
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      const IVec a = axpy(roots[head], int_dot(roots[head], simple_coroots[i]), simple_roots[i]);
      const IVec c = axpy(coroots[head], int_dot(simple_roots[i], coroots[head]), simple_coroots[i]);
      if (std::find(roots.begin(), roots.end(), a) != roots.end()) continue;
      if (roots.size() > 10000) throw Error(ErrorKind::InvalidArgument, "root system does not close");
      roots.push_back(a);
      coroots.push_back(c);
    }
  }
  RootDatum tmp{name, rank, roots, coroots, {}};
  for (std::size_t i = 0; i < simple_roots.size(); ++i) tmp.simple.push_back(i);
  const auto signs = root_signs(tmp);
  RootDatum d{std::move(name), rank, {}, {}, {}};
  for (int want : {1, -1})
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (signs[i] == want) {
        d.roots.push_back(roots[i]);
        d.coroots.push_back(coroots[i]);
      }
  if (d.roots.size() != roots.size()) throw Error(ErrorKind::InvalidArgument, "root neither positive nor negative");
  for (const auto& s : simple_roots)
    d.simple.push_back(std::find(d.roots.begin(), d.roots.end(), s) - d.roots.begin());
  d.validate();
  return d;
}

bool RootDatum::semisimple() const {
  if (coroots.empty()) return rank == 0;
  return int_rank(IntMatrix::from_columns(coroots, rank)) == rank;
}

void RootDatum::validate() const {
  if (roots.size() != coroots.size()) throw Error(ErrorKind::InvalidArgument, "roots and coroots differ in number");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].size() != rank || coroots[i].size() != rank)
      throw Error(ErrorKind::ShapeMismatch, "root or coroot length");
    if (int_dot(roots[i], coroots[i]) != 2)
      throw Error(ErrorKind::InvalidArgument, "<a, a^v> != 2 for root " + std::to_string(i));
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const IVec a = reflect_weight(*this, i, roots[j]);
      const IVec c = reflect_coweight(*this, i, coroots[j]);
      auto it = std::find(roots.begin(), roots.end(), a);
      if (it == roots.end() || coroots[it - roots.begin()] != c)
        throw Error(ErrorKind::InvalidArgument, "root datum is not closed under reflections");
    }
}

IVec reflect_weight(const RootDatum& d, std::size_t i, const IVec& lambda) {
  return axpy(lambda, int_dot(lambda, d.coroots[i]), d.roots[i]);
}

IVec reflect_coweight(const RootDatum& d, std::size_t i, const IVec& mu) {
  return axpy(mu, int_dot(d.roots[i], mu), d.coroots[i]);
}

IntMatrix reflection_matrix(const RootDatum& d, std::size_t i) {
  IntMatrix m(d.rank, d.rank);
  for (std::size_t j = 0; j < d.rank; ++j) {
    IVec e(d.rank, 0);
    e[j] = 1;
    const IVec img = reflect_weight(d, i, e);
    for (std::size_t r = 0; r < d.rank; ++r) m(r, j) = img[r];
  }
  return m;
}

std::vector<std::size_t> positive_roots(const RootDatum& d) {
  const auto signs = root_signs(d);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] > 0) out.push_back(i);
  return out;
}

std::int64_t weight_norm(const RootDatum& d, const IVec& lambda) {
  if (d.coroots.empty()) throw Error(ErrorKind::NoRoots, "weight norm needs at least one root");
  if (lambda.size() != d.rank) throw Error(ErrorKind::ShapeMismatch, "weight length");
  std::int64_t best = 0;
  for (const auto& c : d.coroots) best = std::max(best, std::abs(int_dot(lambda, c)));
  return best;
}

std::vector<IVec> small_norm_weights(const RootDatum& d, std::int64_t n) {
  if (!d.semisimple()) throw Error(ErrorKind::InfiniteSet, "coroots do not span; the weight set is infinite");
  std::vector<IVec> out;
  if (n <= 0) return out;
  if (d.rank == 0) return {IVec{}};
  // r independent coroots bound every coordinate of lambda.
  std::vector<IVec> chosen;
  for (const auto& c : d.coroots) {
    auto trial = chosen;
    trial.push_back(c);
    if (int_rank(IntMatrix::from_columns(trial, d.rank)) == trial.size()) chosen = std::move(trial);
    if (chosen.size() == d.rank) break;
  }
  const IntMatrix b = int_transpose(IntMatrix::from_columns(chosen, d.rank));
  const std::int64_t det = std::abs(int_determinant(b));
  const IntMatrix adj = int_adjugate(b);
  IVec bound(d.rank, 0);
  for (std::size_t j = 0; j < d.rank; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d.rank; ++i) s = checked_add(s, std::abs(adj(j, i)));
    bound[j] = checked_mul(s, n - 1) / det;
  }
  IVec lam(d.rank);
  for (std::size_t j = 0; j < d.rank; ++j) lam[j] = -bound[j];
  for (;;) {
    if (weight_norm(d, lam) < n) out.push_back(lam);
    std::size_t pos = d.rank;
    while (pos > 0) {
      --pos;
      if (++lam[pos] <= bound[pos]) break;
      lam[pos] = -bound[pos];
      if (pos == 0) return out;
    }
  }
}

bool is_dominant(const RootDatum& d, const IVec& lambda) {
  for (auto i : d.simple)
    if (int_dot(lambda, d.coroots[i]) < 0) return false;
  return true;
}

std::uint64_t weyl_dimension(const RootDatum& d, const IVec& lambda) {
  if (lambda.size() != d.rank) throw Error(ErrorKind::ShapeMismatch, "weight length");
  if (!is_dominant(d, lambda)) throw Error(ErrorKind::NotDominant, "weight is not dominant");
  const auto pos = positive_roots(d);
  IVec two_rho(d.rank, 0);
  for (auto i : pos)
    for (std::size_t j = 0; j < d.rank; ++j) two_rho[j] = checked_add(two_rho[j], d.roots[i][j]);
  unsigned __int128 num = 1, den = 1;
  for (auto i : pos) {
    const std::int64_t r = int_dot(two_rho, d.coroots[i]);
    const std::int64_t l = checked_add(checked_mul(2, int_dot(lambda, d.coroots[i])), r);
    num *= static_cast<unsigned __int128>(l);
    den *= static_cast<unsigned __int128>(r);
  }
  if (num % den != 0) throw Error(ErrorKind::InvalidArgument, "Weyl dimension is not integral");
  const unsigned __int128 q = num / den;
  if (q > UINT64_MAX) throw Error(ErrorKind::Overflow, "Weyl dimension overflow");
  return static_cast<std::uint64_t>(q);
}

std::uint64_t TwistedTorus::splitting_degree() const { return multiplicative_order(frobenius); }

std::uint64_t TwistedTorus::splitting_modulus() const {
  const std::uint64_t d = splitting_degree();
  unsigned __int128 p = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    p *= q;
    if (p > (static_cast<unsigned __int128>(1) << 62)) throw Error(ErrorKind::Overflow, "q^d - 1 too large");
  }
  return static_cast<std::uint64_t>(p - 1);
}

TwistedTorus make_torus(std::string name, std::optional<RootDatum> datum, IntMatrix frobenius, std::uint64_t q) {
  if (frobenius.rows() != frobenius.cols()) throw Error(ErrorKind::NotSquare, "Frobenius matrix");
  if (q < 2 || prime_divisors(q).size() != 1) throw Error(ErrorKind::InvalidArgument, "q must be a prime power");
  multiplicative_order(frobenius);
  if (datum) {
    if (datum->rank != frobenius.rows()) throw Error(ErrorKind::ShapeMismatch, "Frobenius rank differs from datum");
    for (const auto& a : datum->roots) {
      const IVec img = int_mat_vec(frobenius, a);
      if (std::find(datum->roots.begin(), datum->roots.end(), img) == datum->roots.end())
        throw Error(ErrorKind::InvalidArgument, "Frobenius does not permute the roots");
    }
  }
  TwistedTorus t{std::move(name), std::move(datum), std::move(frobenius), q};
  t.splitting_modulus();
  return t;
}

std::int64_t torus_point_count(const TwistedTorus& t) {
  IntMatrix m(t.rank(), t.rank());
  for (std::size_t i = 0; i < t.rank(); ++i)
    for (std::size_t j = 0; j < t.rank(); ++j)
      m(i, j) = (i == j ? static_cast<std::int64_t>(t.q) : 0) - t.frobenius(i, j);
  return int_determinant(m);
}

bool point_count_within_bounds(const TwistedTorus& t) {
  const std::int64_t c = torus_point_count(t);
  std::int64_t lo = 1, hi = 1;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    lo = checked_mul(lo, static_cast<std::int64_t>(t.q) - 1);
    hi = checked_mul(hi, static_cast<std::int64_t>(t.q) + 1);
  }
  return lo <= c && c <= hi;
}

std::vector<IVec> torus_points(const TwistedTorus& t, std::uint64_t budget) {
  const std::size_t r = t.rank();
  const std::uint64_t n = t.splitting_modulus();
  IntMatrix a = int_transpose(t.frobenius);
  for (std::size_t i = 0; i < r; ++i) a(i, i) = checked_add(a(i, i), -static_cast<std::int64_t>(t.q));
  const SmithForm s = smith_normal_form(a);
  // D w = 0 mod N: w_i ranges over multiples of N / gcd(d_i, N).
  std::vector<std::uint64_t> step(r), count(r);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(std::abs(s.diagonal[i])), n);
    count[i] = g;
    step[i] = n / g;
    if (total > budget / g) throw Error(ErrorKind::BudgetExceeded, "torus has more points than the budget");
    total *= g;
  }
  std::vector<IVec> pts;
  pts.reserve(total);
  std::vector<std::uint64_t> k(r, 0);
  for (;;) {
    IVec v(r);
    for (std::size_t i = 0; i < r; ++i) {
      __int128 acc = 0;
      for (std::size_t j = 0; j < r; ++j)
        acc += static_cast<__int128>(s.v(i, j)) * static_cast<__int128>(k[j] * step[j]);
      v[i] = static_cast<std::int64_t>(mod_reduce(acc, n));
    }
    pts.push_back(std::move(v));
    std::size_t pos = 0;
    while (pos < r && ++k[pos] == count[pos]) k[pos++] = 0;
    if (pos == r) break;
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::uint64_t evaluate_character(const TwistedTorus& t, const IVec& point, const IVec& lambda) {
  if (point.size() != t.rank() || lambda.size() != t.rank())
    throw Error(ErrorKind::ShapeMismatch, "point or weight length");
  const std::uint64_t n = t.splitting_modulus();
  __int128 acc = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    acc += static_cast<__int128>(point[i]) * lambda[i];
    acc %= static_cast<__int128>(n);
  }
  return mod_reduce(acc, n);
}

std::optional<RegularElement> highly_regular_element(const TwistedTorus& t, std::int64_t n, std::uint64_t budget) {
  if (!t.datum) throw Error(ErrorKind::NoRoots, "highly regular elements need a root datum");
  std::vector<IVec> avoid;
  for (auto& w : small_norm_weights(*t.datum, 2 * n))
    if (std::any_of(w.begin(), w.end(), [](auto x) { return x != 0; })) avoid.push_back(std::move(w));
  for (const auto& p : torus_points(t, budget)) {
    bool ok = true;
    for (const auto& w : avoid)
      if (evaluate_character(t, p, w) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    RegularElement out{p, small_norm_weights(*t.datum, n), {}};
    for (const auto& w : out.weights) out.exponents.push_back(evaluate_character(t, p, w));
    auto sorted = out.exponents;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidArgument, "selected point does not separate the weights");
    return out;
  }
  return std::nullopt;
}

KernelBound character_kernel_order(const TwistedTorus& t, const IVec& lambda, std::uint64_t budget) {
  if (std::all_of(lambda.begin(), lambda.end(), [](auto x) { return x == 0; }))
    throw Error(ErrorKind::InvalidArgument, "character must be non-zero");
  const std::uint64_t d = t.splitting_degree();
  std::vector<IVec> orbit{lambda};
  for (std::uint64_t i = 1; i < d; ++i) orbit.push_back(int_mat_vec(t.frobenius, orbit.back()));
  const SmithForm s = smith_normal_form(IntMatrix::from_columns(orbit, t.rank()));
  KernelBound out;
  std::size_t rank = 0;
  for (auto x : s.diagonal)
    if (x != 0) {
      ++rank;
      out.torsion = checked_mul(out.torsion, x);
    }
  out.cokernel_rank = t.rank() - rank;
  for (const auto& p : torus_points(t, budget)) out.kernel_order += evaluate_character(t, p, lambda) == 0;
  std::int64_t b = out.torsion;
  for (std::size_t i = 1; i < t.rank(); ++i) b = checked_mul(b, static_cast<std::int64_t>(t.q) + 1);
  out.bound = static_cast<std::uint64_t>(b);
  out.holds = out.kernel_order <= out.bound;
  return out;
}

const RootDatum& RootDataCatalog::datum(const std::string& name) const {
  for (const auto& d : data)
    if (d.name == name) return d;
  throw Error(ErrorKind::InvalidArgument, "unknown root datum " + name);
}

const TorusEntry& RootDataCatalog::torus(const std::string& name) const {
  for (const auto& t : tori)
    if (t.name == name) return t;
  throw Error(ErrorKind::InvalidArgument, "unknown torus " + name);
}

TwistedTorus RootDataCatalog::instantiate(const std::string& torus_name, std::uint64_t q) const {
  const TorusEntry& e = torus(torus_name);
  std::optional<RootDatum> d;
  if (!e.datum.empty()) d = datum(e.datum);
  return make_torus(e.name, std::move(d), e.frobenius, q);
}

namespace {

IntMatrix diag_matrix(std::size_t r, std::int64_t v) {
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = v;
  return m;
}

RootDataCatalog make_builtin() {
  RootDataCatalog c;
  c.data.push_back(RootDatum::from_simple("SL2", 1, {{2}}, {{1}}));
  c.data.push_back(RootDatum::from_simple("SL3", 2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}));
  c.data.push_back(RootDatum::from_simple("Sp4", 2, {{2, -1}, {-2, 2}}, {{1, 0}, {0, 1}}));
  c.data.push_back(RootDatum::from_simple("PGL2", 1, {{1}}, {{2}}));
  c.data.push_back(RootDatum::from_simple("GL2", 2, {{1, -1}}, {{1, -1}}));
  const RootDatum& sl3 = c.data[1];
  const RootDatum& sp4 = c.data[2];
  const IntMatrix swap(2, 2, {0, 1, 1, 0});
  c.tori = {
      {"split-1", "", diag_matrix(1, 1)},
      {"split-2", "", diag_matrix(2, 1)},
      {"norm-one", "", diag_matrix(1, -1)},
      {"weil-swap", "", swap},
      {"cyclic-3", "", IntMatrix(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0})},
      {"sl2-split", "SL2", diag_matrix(1, 1)},
      {"sl2-nonsplit", "SL2", diag_matrix(1, -1)},
      {"pgl2-split", "PGL2", diag_matrix(1, 1)},
      {"sl3-split", "SL3", diag_matrix(2, 1)},
      {"sl3-outer", "SL3", swap},
      {"sl3-coxeter", "SL3", int_mul(reflection_matrix(sl3, sl3.simple[0]), reflection_matrix(sl3, sl3.simple[1]))},
      {"sp4-split", "Sp4", diag_matrix(2, 1)},
      {"sp4-minus", "Sp4", diag_matrix(2, -1)},
      {"sp4-coxeter", "Sp4", int_mul(reflection_matrix(sp4, sp4.simple[0]), reflection_matrix(sp4, sp4.simple[1]))},
      {"gl2-swap", "GL2", swap},
  };
  return c;
}

std::string join(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_error(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

const RootDataCatalog& builtin_catalog() {
  static const RootDataCatalog c = make_builtin();
  return c;
}

std::string format_catalog(const RootDataCatalog& c) {
  std::ostringstream out;
  out << "bigness-rootdata v1\n";
  for (const auto& d : c.data) {
    out << "datum " << d.name << ' ' << d.rank << '\n';
    for (std::size_t i = 0; i < d.roots.size(); ++i)
      out << "pair " << join(d.roots[i]) << " | " << join(d.coroots[i]) << '\n';
    out << "simple";
    for (auto s : d.simple) out << ' ' << s;
    out << "\nend\n";
  }
  for (const auto& t : c.tori) {
    out << "torus " << t.name << ' ';
    if (t.datum.empty()) out << "lattice " << t.frobenius.rows() << '\n';
    else out << "datum " << t.datum << '\n';
    for (std::size_t i = 0; i < t.frobenius.rows(); ++i) {
      out << "row";
      for (std::size_t j = 0; j < t.frobenius.cols(); ++j) out << ' ' << t.frobenius(i, j);
      out << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

RootDataCatalog parse_catalog(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::vector<std::string>& toks) {
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      toks.clear();
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<std::string> toks;
  if (!next_line(toks) || toks != std::vector<std::string>{"bigness-rootdata", "v1"})
    parse_error(lineno, "expected header 'bigness-rootdata v1'");
  RootDataCatalog c;
  while (next_line(toks)) {
    if (toks[0] == "datum") {
      if (toks.size() != 3) parse_error(lineno, "expected 'datum NAME RANK'");
      RootDatum d;
      d.name = toks[1];
      const auto r = parse_int(toks[2], lineno);
      if (r < 0) parse_error(lineno, "negative rank");
      d.rank = static_cast<std::size_t>(r);
      for (;;) {
        if (!next_line(toks)) parse_error(lineno, "missing 'end'");
        if (toks[0] == "end" && toks.size() == 1) break;
        if (toks[0] == "pair") {
          if (toks.size() != 2 * d.rank + 2 || toks[d.rank + 1] != "|")
            parse_error(lineno, "expected 'pair ROOT | COROOT'");
          IVec a, b;
          for (std::size_t i = 0; i < d.rank; ++i) a.push_back(parse_int(toks[1 + i], lineno));
          for (std::size_t i = 0; i < d.rank; ++i) b.push_back(parse_int(toks[d.rank + 2 + i], lineno));
          d.roots.push_back(std::move(a));
          d.coroots.push_back(std::move(b));
        } else if (toks[0] == "simple") {
          for (std::size_t i = 1; i < toks.size(); ++i) {
            const auto s = parse_int(toks[i], lineno);
            if (s < 0 || static_cast<std::size_t>(s) >= d.roots.size()) parse_error(lineno, "simple index out of range");
            d.simple.push_back(static_cast<std::size_t>(s));
          }
        } else {
          parse_error(lineno, "unexpected '" + toks[0] + "' in datum");
        }
      }
      try {
        d.validate();
      } catch (const Error& e) {
        parse_error(lineno, e.what());
      }
      c.data.push_back(std::move(d));
    } else if (toks[0] == "torus") {
      if (toks.size() != 4 || (toks[2] != "datum" && toks[2] != "lattice"))
        parse_error(lineno, "expected 'torus NAME datum D' or 'torus NAME lattice R'");
      TorusEntry e;
      e.name = toks[1];
      std::size_t r = 0;
      if (toks[2] == "datum") {
        e.datum = toks[3];
        bool found = false;
        for (const auto& d : c.data)
          if (d.name == e.datum) {
            r = d.rank;
            found = true;
          }
        if (!found) parse_error(lineno, "unknown datum " + e.datum);
      } else {
        const auto v = parse_int(toks[3], lineno);
        if (v < 0) parse_error(lineno, "negative rank");
        r = static_cast<std::size_t>(v);
      }
      std::vector<std::int64_t> entries;
      std::size_t rows = 0;
      for (;;) {
        if (!next_line(toks)) parse_error(lineno, "missing 'end'");
        if (toks[0] == "end" && toks.size() == 1) break;
        if (toks[0] != "row" || toks.size() != r + 1) parse_error(lineno, "expected 'row' with " + std::to_string(r) + " entries");
        for (std::size_t i = 1; i < toks.size(); ++i) entries.push_back(parse_int(toks[i], lineno));
        ++rows;
      }
      if (rows != r) parse_error(lineno, "Frobenius needs " + std::to_string(r) + " rows");
      e.frobenius = IntMatrix(r, r, std::move(entries));
      c.tori.push_back(std::move(e));
    } else {
      parse_error(lineno, "unexpected '" + toks[0] + "'");
    }
  }
  return c;
}

}  // namespace bigness
