#include "bigness/engine.hpp"

#include <algorithm>
#include <chrono>

#include "bigness/cohomology.hpp"
#include "bigness/error.hpp"
#include "bigness/poly.hpp"
#include "bigness/reps.hpp"

namespace bigness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const MatrixGroup& enumerated(const MatrixGroup& g, std::optional<MatrixGroup>& storage, std::uint64_t cap) {
  if (g.enumerated()) return g;
  storage.emplace(g);
  storage->enumerate(cap);
  return *storage;
}

// psi(f) = phi f v for a simple eigenvalue alpha of g: v spans ker(g - alpha),
// phi spans the left kernel. psi(f) != 0 iff the composite through V_{g,alpha}
// is non-zero.
struct EigenFunctional {
  std::size_t element;
  Elem alpha;
  Vector psi;  // n*n, row-major
};

class FunctionalStream {
 public:
  explicit FunctionalStream(const MatrixGroup& g) : g_(g) {}

  const EigenFunctional* get(std::size_t k) {
    while (list_.size() <= k && next_ < g_.order()) extend(next_++);
    return k < list_.size() ? &list_[k] : nullptr;
  }

 private:
  void extend(std::size_t idx) {
    const Field& F = g_.field();
    const std::size_t n = g_.dimension();
    const Matrix a = g_.element(idx);
    const Poly cp = char_poly(F, a);
    auto roots = roots_in_field(F, cp);
    std::sort(roots.begin(), roots.end());
    for (Elem alpha : roots) {
      if (root_multiplicity(F, cp, alpha) != 1) continue;
      Matrix shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) = F.sub(shifted(i, i), alpha);
      const Matrix right = kernel(F, shifted);
      const Matrix left = kernel(F, transpose(shifted));
      Vector psi(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) psi[i * n + j] = F.mul(left(0, i), right(0, j));
      list_.push_back({idx, alpha, std::move(psi)});
    }
  }

  const MatrixGroup& g_;
  std::size_t next_ = 0;
  std::vector<EigenFunctional> list_;
};

}  // namespace

std::string BignessCertificate::failing() const {
  std::string s;
  auto add = [&](bool holds, const char* name) {
    if (holds) return;
    if (!s.empty()) s += ',';
    s += name;
  };
  add(b1.holds, "B1");
  add(b2.holds, "B2");
  add(b3.holds, "B3");
  add(b4.holds, "B4");
  return s;
}

B4Section b4_search(const MatrixGroup& group, const EngineOptions& opts) {
  std::optional<MatrixGroup> storage;
  const MatrixGroup& g = enumerated(group, storage, opts.cap);
  const Field& F = g.field();
  const std::size_t n = g.dimension();
  ChopOptions chop;
  chop.seed = opts.seed;
  const auto families = irreducible_submodules(ad_module(GModule::natural(g)), chop);
  FunctionalStream stream(g);
  B4Section out;
  out.holds = true;
  for (const auto& fam : families) {
    out.family_dims.push_back(fam.simple.dim());
    out.family_lines.push_back(fam.line_count);
  }
  for (std::size_t fi = 0; fi < families.size() && out.holds; ++fi) {
    for_each_line(F, families[fi], [&](std::uint64_t line, const Matrix& h) {
      for (std::size_t k = 0;; ++k) {
        const EigenFunctional* e = stream.get(k);
        if (!e) break;
        for (std::size_t c = 0; c < h.cols(); ++c) {
          const Vector col = h.column(c);
          if (dot(F, e->psi, col) == 0) continue;
          out.witnesses.push_back({fi, line, e->element, e->alpha, c, g.element(e->element), Matrix(n, n, col)});
          return true;
        }
      }
      out.holds = false;
      out.failing_family = fi;
      out.failing_line = line;
      return false;
    });
  }
  return out;
}

BignessCertificate check_bigness(const MatrixGroup& group, const EngineOptions& opts) {
  const auto start = Clock::now();
  std::optional<MatrixGroup> storage;
  const MatrixGroup& g = enumerated(group, storage, opts.cap);
  const Field& F = g.field();
  const std::uint32_t ell = F.characteristic();
  BignessCertificate cert;
  cert.group_name = g.name;
  cert.characteristic = ell;
  cert.degree = F.degree();
  cert.dimension = g.dimension();
  cert.order = g.order();
  cert.seed = opts.seed;
  cert.nonstandard_regime = g.dimension() % ell == 0;

  auto t = Clock::now();
  const B1Result b1 = satisfies_b1(g, ell, opts.cap);
  cert.b1 = {b1.holds, b1.abelianization_order};
  cert.timings.b1 = seconds_since(t);

  t = Clock::now();
  ChopOptions chop;
  chop.seed = opts.seed;
  const GModule v = GModule::natural(g);
  cert.b2.commutant_dim = commutant_dimension(v);
  for (const auto& f : composition_factors(v, chop)) cert.b2.constituent_dims.push_back(f.dim());
  cert.b2.holds = cert.b2.constituent_dims.size() == 1 && cert.b2.commutant_dim == 1;
  cert.timings.b2 = seconds_since(t);

  t = Clock::now();
  const GModule ad0 = ad0_module(v, false);
  const CocycleSpace cs = h1(g, ad0);
  cert.b3.z1 = cs.z1_dim;
  cert.b3.b1 = cs.b1_dim;
  cert.b3.h1 = cs.h1_dim;
  cert.b3.sylow_bound = h1_upper_bound_via_sylow(g, ad0);
  cert.b3.traceless_complement = !cert.nonstandard_regime;
  cert.b3.holds = cs.h1_dim == 0;
  cert.timings.b3 = seconds_since(t);

  t = Clock::now();
  if (opts.short_circuit && !(cert.b1.holds && cert.b2.holds && cert.b3.holds)) {
    cert.b4.evaluated = false;
  } else {
    cert.b4 = b4_search(g, opts);
  }
  cert.timings.b4 = seconds_since(t);

  cert.big = cert.b1.holds && cert.b2.holds && cert.b3.holds && cert.b4.holds;
  cert.timings.total = seconds_since(start);
  return cert;
}

EquivalenceResult check_scalar_extension_equivalence(const MatrixGroup& group, const EngineOptions& opts) {
  std::optional<MatrixGroup> storage;
  const MatrixGroup& g = enumerated(group, storage, opts.cap);
  const MatrixGroup s = with_scalars(g, opts.cap);
  EquivalenceResult r;
  r.first_big = check_bigness(g, opts).big;
  r.second_big = check_bigness(s, opts).big;
  r.agrees = r.first_big == r.second_big;
  return r;
}

MonotonicityResult check_normal_subgroup_monotonicity(const MatrixGroup& hgroup, const MatrixGroup& ggroup,
                                                      const EngineOptions& opts) {
  std::optional<MatrixGroup> hs, gs;
  const MatrixGroup& h = enumerated(hgroup, hs, opts.cap);
  const MatrixGroup& g = enumerated(ggroup, gs, opts.cap);
  if (!is_normal_subgroup(h, g)) throw Error(ErrorKind::NotNormal, "H is not a normal subgroup of G");
  const auto ch = check_bigness(h, opts);
  const auto cg = check_bigness(g, opts);
  MonotonicityResult r;
  r.h_b234 = ch.b2.holds && ch.b3.holds && ch.b4.holds;
  r.g_b234 = cg.b2.holds && cg.b3.holds && cg.b4.holds;
  r.h_big = ch.big;
  r.g_big = cg.big;
  r.index_prime_to_ell = (g.order() / h.order()) % g.field().characteristic() != 0;
  r.holds = (!r.h_b234 || r.g_b234) && (!(r.h_big && r.index_prime_to_ell) || r.g_big);
  return r;
}

MatrixGroup extend_group(const MatrixGroup& g, const FieldEmbedding& emb) {
  std::vector<Matrix> gens;
  for (const auto& s : g.generators()) {
    Matrix t(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j) t(i, j) = emb(s(i, j));
    gens.push_back(std::move(t));
  }
  MatrixGroup out(emb.target(), g.dimension(), std::move(gens));
  out.name = g.name.empty() ? "" : g.name + " over F_" + std::to_string(emb.target()->order());
  return out;
}

BaseChangeResult check_base_change(const MatrixGroup& group, std::uint32_t d, const EngineOptions& opts) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  std::optional<MatrixGroup> storage;
  const MatrixGroup& g = enumerated(group, storage, opts.cap);
  BaseChangeResult r;
  r.small_big = check_bigness(g, opts).big;
  r.holds = true;
  if (!r.small_big) return r;
  const Field& F = g.field();
  const FieldEmbedding emb(g.field_ptr(), d == 1 ? g.field_ptr() : Field::make(F.characteristic(), F.degree() * d));
  MatrixGroup big = extend_group(g, emb);
  big.enumerate(opts.cap);
  r.evaluated_large = true;
  r.large_big = check_bigness(big, opts).big;
  r.holds = r.large_big;
  return r;
}

}  // namespace bigness
