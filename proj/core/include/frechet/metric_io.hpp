#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "frechet/metric_space.hpp"

namespace frechet {

/// Unvalidated labels and matrix as read from disk.
struct LabeledMatrix {
  std::vector<std::string> labels;
  Matrix matrix;
};

/// Distance-matrix CSV: a label row followed by one row of distances per label.
LabeledMatrix parse_distance_csv(std::string_view text);
std::string write_distance_csv(const FiniteMetricSpace& space);

/// Edge list: `<nameA> <nameB> <weight>` per line, `#` starts a comment.
std::vector<Edge> parse_edge_list(std::string_view text);

bool is_valid_utf8(std::string_view text) noexcept;

/// Reads a whole file and rejects non-UTF-8 content.
std::string read_text_file(const std::filesystem::path& path);

/// Shortest round-trip decimal form of `value` ("2", "0.75", "1e-09").
std::string format_number(double value);

enum class SpaceFormat { Auto, Csv, Edges };

/// Loads a space file. Auto picks CSV for a `.csv` extension, edges otherwise.
/// Matrix files that fail validation throw Error(InvalidMetric).
FiniteMetricSpace load_space(const std::filesystem::path& path, SpaceFormat format = SpaceFormat::Auto);

}  // namespace frechet
