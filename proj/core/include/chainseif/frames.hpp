#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

#include "chainseif/movie.hpp"

namespace chainseif {

enum class FrameFormat { csv, svg, both };

/// Header `label,T,re,im`, one row per (frame, label), floats with `precision` significant digits.
void write_csv(std::ostream& out, const MovieResult& result, int precision = 17);
/// Inverse of write_csv; trajectories are returned indexed by label.
std::vector<Trajectory> read_csv(std::istream& in);

/// One SVG document for frame `frame`: the starting circle, every root and, on the last frame,
/// a cross at the colliding pair. Coordinates are scaled by the starting radius
/// and the viewBox is [-3, 3]^2.
void write_svg_frame(std::ostream& out, const MovieResult& result, std::size_t frame);

/// Writes roots.csv and/or frame_0000.svg, ... into `dir` (created if missing). Returns the paths
/// written; I/O failures throw std::runtime_error.
std::vector<std::filesystem::path> emit_frames(const std::filesystem::path& dir, const MovieResult& result,
                                               FrameFormat format, int precision = 17);

}  // namespace chainseif
