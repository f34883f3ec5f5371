#pragma once

// Canonical point-set text format:
//
//   capset/1 n=<dim> size=<count>
//   <count> lines of <dim> characters over {0,1,2}, strictly ascending
//
// Every line, the last included, ends in '\n'. Nothing else is accepted.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "capset/errors.hpp"
#include "capset/point_set.hpp"

namespace capset {

enum class FileErrorKind {
  kIo,
  kMalformedHeader,
  kBadLineLength,
  kNonTritCharacter,
  kOrderViolation,
  kSizeMismatch,
  kMissingNewline,
};

std::string to_string(FileErrorKind kind);

class FileFormatError : public Error {
 public:
  FileFormatError(FileErrorKind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + what),
        kind_(kind),
        line_(line) {}

  FileErrorKind kind() const noexcept { return kind_; }
  // 1-based; line 1 is the header.
  std::size_t line() const noexcept { return line_; }

 private:
  FileErrorKind kind_;
  std::size_t line_;
};

inline constexpr std::string_view kCapsetFormatTag = "capset/1";

std::string format_capset(const PointSet& s);
PointSet parse_capset(std::string_view text);

void write_capset(const PointSet& s, std::ostream& out);
void write_capset(const PointSet& s, const std::filesystem::path& path);

PointSet read_capset(std::istream& in);
PointSet read_capset(const std::filesystem::path& path);

}  // namespace capset
