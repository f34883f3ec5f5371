#include "capset/capset_file.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace capset {
namespace {

// Parses "<key>=<decimal>" exactly.
bool parse_field(std::string_view tok, std::string_view key, std::uint64_t& value) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key ||
      tok[key.size()] != '=') {
    return false;
  }
  const auto digits = tok.substr(key.size() + 1);
  if (digits.size() > 1 && digits[0] == '0') return false;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

std::string to_string(FileErrorKind kind) {
  switch (kind) {
    case FileErrorKind::kIo:
      return "io error";
    case FileErrorKind::kMalformedHeader:
      return "malformed header";
    case FileErrorKind::kBadLineLength:
      return "bad line length";
    case FileErrorKind::kNonTritCharacter:
      return "non-trit character";
    case FileErrorKind::kOrderViolation:
      return "order violation";
    case FileErrorKind::kSizeMismatch:
      return "size mismatch";
    case FileErrorKind::kMissingNewline:
      return "missing newline";
  }
  return "unknown";
}

std::string format_capset(const PointSet& s) {
  std::string out;
  out.reserve(32 + s.size() * (static_cast<std::size_t>(s.dim()) + 1));
  out += kCapsetFormatTag;
  out += " n=" + std::to_string(s.dim()) + " size=" + std::to_string(s.size()) + "\n";
  for (const auto& p : s) {
    out += p.to_string();
    out += '\n';
  }
  return out;
}

PointSet parse_capset(std::string_view text) {
  const auto eol = text.find('\n');
  if (eol == std::string_view::npos) {
    throw FileFormatError(FileErrorKind::kMalformedHeader, 1, "header is not newline-terminated");
  }
  const std::string_view header = text.substr(0, eol);
  std::uint64_t dim = 0;
  std::uint64_t size = 0;
  {
    // Exactly three single-space separated tokens.
    const auto s1 = header.find(' ');
    const auto s2 = s1 == std::string_view::npos ? s1 : header.find(' ', s1 + 1);
    if (s1 == std::string_view::npos || s2 == std::string_view::npos ||
        header.find(' ', s2 + 1) != std::string_view::npos ||
        header.substr(0, s1) != kCapsetFormatTag ||
        !parse_field(header.substr(s1 + 1, s2 - s1 - 1), "n", dim) ||
        !parse_field(header.substr(s2 + 1), "size", size)) {
      throw FileFormatError(FileErrorKind::kMalformedHeader, 1,
                            "expected '" + std::string(kCapsetFormatTag) +
                                " n=<dim> size=<count>', got '" + std::string(header) + "'");
    }
    if (dim < 1 || dim > static_cast<std::uint64_t>(kMaxPointDim)) {
      throw FileFormatError(FileErrorKind::kMalformedHeader, 1,
                            "dimension " + std::to_string(dim) + " unsupported");
    }
  }
  const int n = static_cast<int>(dim);

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(size, 1u << 24)));
  std::size_t pos = eol + 1;
  std::size_t line = 1;
  std::vector<Trit> trits(n);
  while (pos < text.size()) {
    ++line;
    const auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      throw FileFormatError(FileErrorKind::kMissingNewline, line, "last line is not newline-terminated");
    }
    const std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    if (pts.size() == size) {
      throw FileFormatError(FileErrorKind::kSizeMismatch, line,
                            "more than the declared " + std::to_string(size) + " points");
    }
    for (std::size_t i = 0; i < row.size() && i < trits.size(); ++i) {
      if (row[i] < '0' || row[i] > '2') {
        throw FileFormatError(FileErrorKind::kNonTritCharacter, line,
                              "column " + std::to_string(i + 1) + " is not 0, 1 or 2");
      }
    }
    if (row.size() != static_cast<std::size_t>(n)) {
      // Characters past the expected width get the same check.
      for (std::size_t i = trits.size(); i < row.size(); ++i) {
        if (row[i] < '0' || row[i] > '2') {
          throw FileFormatError(FileErrorKind::kNonTritCharacter, line,
                                "column " + std::to_string(i + 1) + " is not 0, 1 or 2");
        }
      }
      throw FileFormatError(FileErrorKind::kBadLineLength, line,
                            "expected " + std::to_string(n) + " characters, got " +
                                std::to_string(row.size()));
    }
    for (int i = 0; i < n; ++i) trits[i] = static_cast<Trit>(row[i] - '0');
    const Point p = Point::from_trits(std::span<const Trit>(trits));
    if (!pts.empty() && !(pts.back() < p)) {
      throw FileFormatError(FileErrorKind::kOrderViolation, line,
                            pts.back() == p ? "duplicate point " + p.to_string()
                                            : "point " + p.to_string() + " out of order");
    }
    pts.push_back(p);
  }
  if (pts.size() != size) {
    throw FileFormatError(FileErrorKind::kSizeMismatch, line + 1,
                          "declared " + std::to_string(size) + " points, found " +
                              std::to_string(pts.size()));
  }
  return PointSet::from_sorted(n, std::move(pts));
}

void write_capset(const PointSet& s, std::ostream& out) {
  const std::string text = format_capset(s);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw FileFormatError(FileErrorKind::kIo, 0, "write failed");
}

void write_capset(const PointSet& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileFormatError(FileErrorKind::kIo, 0, "cannot open " + path.string() + " for writing");
  write_capset(s, out);
}

PointSet read_capset(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw FileFormatError(FileErrorKind::kIo, 0, "read failed");
  return parse_capset(text);
}

PointSet read_capset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError(FileErrorKind::kIo, 0, "cannot open " + path.string());
  return read_capset(in);
}

}  // namespace capset
