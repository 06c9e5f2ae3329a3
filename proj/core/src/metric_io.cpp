#include "frechet/metric_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "frechet/error.hpp"

namespace frechet {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

LabeledMatrix parse_distance_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty distance CSV");
  LabeledMatrix out;
  for (auto field : split(lines[0], ',')) out.labels.emplace_back(trim(field));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<double> row;
    for (auto field : split(lines[i], ',')) row.push_back(parse_double(field, i + 1));
    out.matrix.push_back(std::move(row));
  }
  return out;
}

std::string write_distance_csv(const FiniteMetricSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i) out += ',';
    out += space.label(i);
  }
  out += '\n';
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (j) out += ',';
      out += format_number(space(i, j));
    }
    out += '\n';
  }
  return out;
}

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string a, b, w, extra;
    if (!(in >> a)) continue;
    if (!(in >> b >> w) || (in >> extra)) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected '<nameA> <nameB> <weight>'");
    }
    edges.push_back({std::move(a), std::move(b), parse_double(w, line_no)});
  }
  return edges;
}

bool is_valid_utf8(std::string_view text) noexcept {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= n) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range code points.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) || (extra == 3 && cp < 0x10000) ||
        cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (!is_valid_utf8(text)) throw Error(ErrorCode::InvalidUtf8, path.string());
  return text;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

FiniteMetricSpace load_space(const std::filesystem::path& path, SpaceFormat format) {
  if (format == SpaceFormat::Auto) {
    format = path.extension() == ".csv" ? SpaceFormat::Csv : SpaceFormat::Edges;
  }
  const std::string text = read_text_file(path);
  if (format == SpaceFormat::Csv) {
    auto raw = parse_distance_csv(text);
    return make_space(raw.matrix, std::move(raw.labels));
  }
  const auto edges = parse_edge_list(text);
  return from_edge_list(edges);
}

}  // namespace frechet
