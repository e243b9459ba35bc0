#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "equilat/error.hpp"
#include "equilat/surface.hpp"

namespace equilat {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line) {
  long long value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

GluedSurface load_surface(std::string_view text) {
  int line_no = 0;
  int stage = 0;  // 0: expect header, 1: expect T, 2: gluings
  long long faces = 0;
  std::vector<std::pair<DartId, DartId>> pairs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (stage == 0) {
      if (toks.size() != 2 || toks[0] != "tsf" || toks[1] != "v1") {
        throw ParseError(line_no, "expected header 'tsf v1'");
      }
      stage = 1;
    } else if (stage == 1) {
      if (toks.size() != 2 || toks[0] != "T") throw ParseError(line_no, "expected 'T <int>'");
      faces = parse_int(toks[1], line_no);
      if (faces < 0 || faces > (1LL << 28)) throw ParseError(line_no, "face count out of range");
      stage = 2;
    } else {
      if (toks.size() != 3 || toks[0] != "g") throw ParseError(line_no, "expected 'g <dartA> <dartB>'");
      const long long a = parse_int(toks[1], line_no);
      const long long b = parse_int(toks[2], line_no);
      const long long darts = 3 * faces;
      if (a < 0 || a >= darts || b < 0 || b >= darts) {
        throw InvalidSurface("line " + std::to_string(line_no) + ": dart out of range (" +
                             std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      if (a == b) {
        throw InvalidSurface("line " + std::to_string(line_no) + ": dart " + std::to_string(a) +
                             " glued to itself");
      }
      pairs.emplace_back(static_cast<DartId>(a), static_cast<DartId>(b));
    }
    if (end == text.size()) break;
  }
  if (stage == 0) throw ParseError(line_no, "missing 'tsf v1' header");
  if (stage == 1) throw ParseError(line_no, "missing 'T <int>' line");
  return GluedSurface::from_pairs(static_cast<int>(faces), pairs);
}

std::string to_tsf(const GluedSurface& s) {
  std::string out = "tsf v1\nT " + std::to_string(s.face_count()) + "\n";
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const DartId p = s.partner(d);
    if (p != kNoDart && d < p) {
      out += "g ";
      out += std::to_string(d);
      out += ' ';
      out += std::to_string(p);
      out += '\n';
    }
  }
  return out;
}

GluedSurface read_surface_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_surface(buf.str());
}

void write_surface_file(const std::string& path, const GluedSurface& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << to_tsf(s);
}

}  // namespace equilat
