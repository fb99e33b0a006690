#ifndef MFCAT_IO_HPP
#define MFCAT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "mfcat/gorenstein.hpp"
#include "mfcat/hypersurface.hpp"
#include "mfcat/mf.hpp"
#include "mfcat/mon.hpp"

namespace mfcat {

/// The three terms and two maps of a candidate conflation. Terms are kept even
/// when they fail mon_validate; conflation_validate decides.
struct ConflationData {
  MonMorphism inflation;
  MonMorphism deflation;

  friend bool operator==(const ConflationData&, const ConflationData&) = default;
};

using Object = std::variant<MFObject, MonObject, MFGObject, MonGObject, GPModule, RModulePresentation, MFMorphism,
                            MonMorphism, ConflationData>;

/// "mf", "mon", "mfg", "mong", "gp", "rmod", "morphism" or "conflation".
std::string kind_name(const Object& x);

/// Malformed document. Line and column are 1-based; 0 when the problem is
/// in a well-formed document and only `path` locates it.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string path, const std::string& detail);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::size_t line_, column_;
  std::string path_;
};

/// A well-formed document whose object is rejected by its validator.
class ValidationError : public Error {
 public:
  explicit ValidationError(const Error& cause);
  ErrorKind cause() const noexcept { return cause_; }

 private:
  ErrorKind cause_;
};

/// Parses and validates. File references inside morphisms are resolved
/// against `base_dir`.
Object parse_object(std::string_view text, const std::filesystem::path& base_dir = {},
                    const SolveOptions& opts = {});
Object read_object(const std::filesystem::path& file, const SolveOptions& opts = {});

/// Canonical form: sorted keys, two-space indent, normalized polynomials,
/// trailing newline.
std::string serialize(const Object& x);

inline constexpr std::string_view format_version = "1";

}  // namespace mfcat

#endif  // MFCAT_IO_HPP
