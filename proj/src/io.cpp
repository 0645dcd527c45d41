#include "bigness/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bigness/error.hpp"

namespace bigness {

namespace {

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  /// Next non-blank line split on whitespace; false at end of input.
  bool next() {
    while (std::getline(in_, line_)) {
      ++lineno_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      std::istringstream ls(line_);
      toks_.clear();
      std::string t;
      while (ls >> t) toks_.push_back(t);
      if (!toks_.empty()) return true;
    }
    return false;
  }

  void require_next(const char* what) {
    if (!next()) fail(std::string("unexpected end of input, expected ") + what);
  }

  const std::vector<std::string>& toks() const { return toks_; }
  const std::string& tok(std::size_t i) const {
    if (i >= toks_.size()) fail("missing field " + std::to_string(i));
    return toks_[i];
  }
  std::size_t size() const { return toks_.size(); }
  /// Text after the first token, with its separating whitespace removed.
  std::string rest() const {
    const auto p = line_.find_first_not_of(" \t");
    const auto q = line_.find_first_of(" \t", p);
    if (q == std::string::npos) return "";
    const auto r = line_.find_first_not_of(" \t", q);
    return r == std::string::npos ? "" : line_.substr(r);
  }

  void expect(const std::string& keyword, std::size_t count) const {
    if (toks_[0] != keyword) fail("expected '" + keyword + "', got '" + toks_[0] + "'");
    if (toks_.size() != count) fail("'" + keyword + "' takes " + std::to_string(count - 1) + " fields");
  }

  std::uint64_t uint(std::size_t i) const {
    const std::string& s = tok(i);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
      fail("expected a non-negative integer, got '" + s + "'");
    return std::stoull(s);
  }

  bool flag(std::size_t i, const char* yes, const char* no) const {
    if (tok(i) == yes) return true;
    if (tok(i) == no) return false;
    fail(std::string("expected '") + yes + "' or '" + no + "', got '" + tok(i) + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno_) + ": " + msg);
  }

 private:
  std::istringstream in_;
  std::string line_;
  std::vector<std::string> toks_;
  std::size_t lineno_ = 0;
};

void write_codes(std::ostringstream& out, const Matrix& m) {
  for (Elem e : m.data()) out << ' ' << e;
}

Matrix read_codes(const LineReader& r, std::size_t& pos, std::size_t n, const Field& F) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const auto v = r.uint(pos++);
    if (v >= F.order()) r.fail("entry out of field range");
    m(i / n, i % n) = static_cast<Elem>(v);
  }
  return m;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

MatrixGroup GroupDescription::to_group() const {
  MatrixGroup g(field, dimension, generators);
  g.name = name;
  return g;
}

std::string format_group(const MatrixGroup& g) {
  const Field& F = g.field();
  std::ostringstream out;
  out << "bigness-group v1\n";
  if (!g.name.empty()) out << "name " << g.name << '\n';
  out << "field " << F.characteristic() << ' ' << F.degree() << '\n';
  out << "modulus";
  for (auto c : F.modulus()) out << ' ' << c;
  out << "\ndimension " << g.dimension() << '\n';
  for (const auto& s : g.generators()) {
    out << "generator\n";
    for (std::size_t i = 0; i < s.rows(); ++i) {
      for (std::size_t j = 0; j < s.cols(); ++j) out << (j ? " " : "") << s(i, j);
      out << '\n';
    }
  }
  out << "end\n";
  return out.str();
}

GroupDescription parse_group(const std::string& text) {
  LineReader r(text);
  GroupDescription d;
  r.require_next("header");
  if (r.toks() != std::vector<std::string>{"bigness-group", "v1"}) r.fail("expected header 'bigness-group v1'");
  r.require_next("field");
  if (r.tok(0) == "name") {
    d.name = r.rest();
    if (d.name.empty()) r.fail("empty name");
    r.require_next("field");
  }
  r.expect("field", 3);
  const auto ell = r.uint(1), deg = r.uint(2);
  if (ell > UINT32_MAX || deg == 0 || deg > 64) r.fail("field parameters out of range");
  r.require_next("modulus");
  r.expect("modulus", deg + 2);
  std::vector<std::uint32_t> modulus;
  for (std::size_t i = 1; i <= deg + 1; ++i) modulus.push_back(static_cast<std::uint32_t>(r.uint(i)));
  d.field = Field::with_modulus(static_cast<std::uint32_t>(ell), modulus);
  r.require_next("dimension");
  r.expect("dimension", 2);
  d.dimension = r.uint(1);
  if (d.dimension == 0 || d.dimension > 64) r.fail("dimension out of range");
  for (;;) {
    r.require_next("'generator' or 'end'");
    if (r.toks() == std::vector<std::string>{"end"}) break;
    r.expect("generator", 1);
    Matrix m(d.dimension, d.dimension);
    for (std::size_t i = 0; i < d.dimension; ++i) {
      r.require_next("matrix row");
      if (r.size() != d.dimension) r.fail("row needs " + std::to_string(d.dimension) + " entries");
      for (std::size_t j = 0; j < d.dimension; ++j) {
        const auto v = r.uint(j);
        if (v >= d.field->order()) r.fail("entry out of field range");
        m(i, j) = static_cast<Elem>(v);
      }
    }
    if (!is_invertible(*d.field, m))
      throw Error(ErrorKind::Singular, "generator " + std::to_string(d.generators.size()) + " is not invertible");
    d.generators.push_back(std::move(m));
  }
  if (r.next()) r.fail("content after 'end'");
  return d;
}

std::string format_certificate(const BignessCertificate& c, bool timings) {
  auto hf = [](bool h) { return h ? "holds" : "fails"; };
  std::ostringstream out;
  out << "bigness-certificate v1\n";
  out << "version " << c.version << '\n';
  out << "seed " << c.seed << '\n';
  out << "group" << (c.group_name.empty() ? "" : " " + c.group_name) << '\n';
  out << "field " << c.characteristic << ' ' << c.degree << '\n';
  out << "dimension " << c.dimension << '\n';
  out << "order " << c.order << '\n';
  out << "regime " << (c.nonstandard_regime ? "nonstandard" : "standard") << '\n';
  out << "b1 " << hf(c.b1.holds) << " abelianization " << c.b1.abelianization_order << '\n';
  out << "b2 " << hf(c.b2.holds) << " commutant " << c.b2.commutant_dim << " constituents";
  for (auto d : c.b2.constituent_dims) out << ' ' << d;
  out << '\n';
  out << "b3 " << hf(c.b3.holds) << " h1 " << c.b3.h1 << " z1 " << c.b3.z1 << " b1 " << c.b3.b1 << " sylow-bound "
      << c.b3.sylow_bound << " traceless-complement " << (c.b3.traceless_complement ? "yes" : "no") << '\n';
  out << "b4 " << (c.b4.evaluated ? hf(c.b4.holds) : "skipped") << " families " << c.b4.family_dims.size() << '\n';
  for (std::size_t i = 0; i < c.b4.family_dims.size(); ++i)
    out << "family " << i << " dim " << c.b4.family_dims[i] << " lines " << c.b4.family_lines[i] << '\n';
  for (const auto& w : c.b4.witnesses) {
    out << "witness family " << w.family << " line " << w.line << " element " << w.element << " alpha " << w.alpha
        << " basis " << w.basis_index << " g";
    write_codes(out, w.g);
    out << " f";
    write_codes(out, w.f);
    out << '\n';
  }
  if (c.b4.failing_family) out << "unwitnessed family " << *c.b4.failing_family << " line " << *c.b4.failing_line << '\n';
  out << "verdict " << (c.big ? "big" : "not-big") << '\n';
  out << "failing " << (c.big ? "none" : c.failing()) << '\n';
  if (timings)
    out << "timings b1 " << format_seconds(c.timings.b1) << " b2 " << format_seconds(c.timings.b2) << " b3 "
        << format_seconds(c.timings.b3) << " b4 " << format_seconds(c.timings.b4) << " total "
        << format_seconds(c.timings.total) << '\n';
  out << "end\n";
  return out.str();
}

BignessCertificate parse_certificate(const std::string& text) {
  LineReader r(text);
  BignessCertificate c;
  r.require_next("header");
  if (r.toks() != std::vector<std::string>{"bigness-certificate", "v1"})
    r.fail("expected header 'bigness-certificate v1'");
  r.require_next("version");
  r.expect("version", 2);
  c.version = r.tok(1);
  r.require_next("seed");
  r.expect("seed", 2);
  c.seed = r.uint(1);
  r.require_next("group");
  if (r.tok(0) != "group") r.fail("expected 'group'");
  c.group_name = r.rest();
  r.require_next("field");
  r.expect("field", 3);
  c.characteristic = static_cast<std::uint32_t>(r.uint(1));
  c.degree = static_cast<std::uint32_t>(r.uint(2));
  const FieldPtr F = Field::make(c.characteristic, c.degree);
  r.require_next("dimension");
  r.expect("dimension", 2);
  c.dimension = r.uint(1);
  r.require_next("order");
  r.expect("order", 2);
  c.order = r.uint(1);
  r.require_next("regime");
  r.expect("regime", 2);
  c.nonstandard_regime = r.flag(1, "nonstandard", "standard");

  r.require_next("b1");
  r.expect("b1", 4);
  c.b1.holds = r.flag(1, "holds", "fails");
  if (r.tok(2) != "abelianization") r.fail("expected 'abelianization'");
  c.b1.abelianization_order = r.uint(3);

  r.require_next("b2");
  if (r.tok(0) != "b2" || r.size() < 5 || r.tok(2) != "commutant" || r.tok(4) != "constituents")
    r.fail("malformed b2 line");
  c.b2.holds = r.flag(1, "holds", "fails");
  c.b2.commutant_dim = r.uint(3);
  for (std::size_t i = 5; i < r.size(); ++i) c.b2.constituent_dims.push_back(r.uint(i));

  r.require_next("b3");
  r.expect("b3", 12);
  c.b3.holds = r.flag(1, "holds", "fails");
  if (r.tok(2) != "h1" || r.tok(4) != "z1" || r.tok(6) != "b1" || r.tok(8) != "sylow-bound" ||
      r.tok(10) != "traceless-complement")
    r.fail("malformed b3 line");
  c.b3.h1 = r.uint(3);
  c.b3.z1 = r.uint(5);
  c.b3.b1 = r.uint(7);
  c.b3.sylow_bound = r.uint(9);
  c.b3.traceless_complement = r.flag(11, "yes", "no");

  r.require_next("b4");
  r.expect("b4", 4);
  if (r.tok(1) == "skipped") {
    c.b4.evaluated = false;
  } else {
    c.b4.holds = r.flag(1, "holds", "fails");
  }
  if (r.tok(2) != "families") r.fail("expected 'families'");
  const auto fams = r.uint(3);
  for (std::uint64_t i = 0; i < fams; ++i) {
    r.require_next("family");
    r.expect("family", 6);
    if (r.uint(1) != i || r.tok(2) != "dim" || r.tok(4) != "lines") r.fail("malformed family line");
    c.b4.family_dims.push_back(r.uint(3));
    c.b4.family_lines.push_back(r.uint(5));
  }
  const std::size_t n = c.dimension;
  for (;;) {
    r.require_next("verdict");
    if (r.tok(0) == "witness") {
      r.expect("witness", 13 + 2 * n * n);
      static const char* keys[] = {"family", "line", "element", "alpha", "basis"};
      for (std::size_t k = 0; k < 5; ++k)
        if (r.tok(1 + 2 * k) != keys[k]) r.fail(std::string("expected '") + keys[k] + "'");
      B4Witness w;
      w.family = r.uint(2);
      w.line = r.uint(4);
      w.element = r.uint(6);
      w.alpha = static_cast<Elem>(r.uint(8));
      w.basis_index = r.uint(10);
      std::size_t pos = 11;
      if (r.tok(pos++) != "g") r.fail("expected 'g'");
      w.g = read_codes(r, pos, n, *F);
      if (r.tok(pos++) != "f") r.fail("expected 'f'");
      w.f = read_codes(r, pos, n, *F);
      c.b4.witnesses.push_back(std::move(w));
    } else if (r.tok(0) == "unwitnessed") {
      r.expect("unwitnessed", 5);
      if (r.tok(1) != "family" || r.tok(3) != "line") r.fail("malformed unwitnessed line");
      c.b4.failing_family = r.uint(2);
      c.b4.failing_line = r.uint(4);
    } else {
      break;
    }
  }
  r.expect("verdict", 2);
  c.big = r.flag(1, "big", "not-big");
  r.require_next("failing");
  r.expect("failing", 2);
  const std::string failing = r.tok(1);
  r.require_next("end");
  if (r.tok(0) == "timings") {
    r.expect("timings", 11);
    double* slots[] = {&c.timings.b1, &c.timings.b2, &c.timings.b3, &c.timings.b4, &c.timings.total};
    for (std::size_t k = 0; k < 5; ++k) *slots[k] = std::stod(r.tok(2 + 2 * k));
    r.require_next("end");
  }
  r.expect("end", 1);
  if (r.next()) r.fail("content after 'end'");
  if (c.big != (c.b1.holds && c.b2.holds && c.b3.holds && c.b4.holds)) r.fail("verdict contradicts conditions");
  if ((c.big ? "none" : c.failing()) != failing) r.fail("failing list contradicts conditions");
  return c;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path);
}

}  // namespace bigness
