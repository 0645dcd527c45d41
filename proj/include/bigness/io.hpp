#pragma once

#include <string>
#include <vector>

#include "bigness/engine.hpp"
#include "bigness/group.hpp"

namespace bigness {

/// Group description file:
///
///   bigness-group v1
///   name <text>                 (optional)
///   field <ell> <d>
///   modulus <c_0> ... <c_d>     (monic, low to high)
///   dimension <n>
///   generator                   (repeated; n rows of n codes follow)
///   <a_11> ... <a_1n>
///   ...
///   end
///
/// Entries are field codes. Blank lines are ignored; every other line is
/// significant.
struct GroupDescription {
  FieldPtr field;
  std::size_t dimension = 0;
  std::string name;
  std::vector<Matrix> generators;

  /// Unenumerated group.
  MatrixGroup to_group() const;
};

std::string format_group(const MatrixGroup& g);
/// Throws Parse on malformed input and the field / group errors on invalid
/// content.
GroupDescription parse_group(const std::string& text);

/// Certificate text, header "bigness-certificate v1". The timings line is
/// written only when requested so that default output is reproducible.
std::string format_certificate(const BignessCertificate& c, bool timings = false);
BignessCertificate parse_certificate(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bigness
