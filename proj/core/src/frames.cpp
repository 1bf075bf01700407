#include "chainseif/frames.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chainseif/errors.hpp"

namespace chainseif {

namespace {

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

template <class T>
T parse_number(const std::string& s) {
  T v{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) throw InvalidArgument("bad number in CSV: " + s);
  return v;
}

std::size_t frame_count(const MovieResult& r) { return r.trajectories.empty() ? 0 : r.trajectories.front().t.size(); }

void require_open(const std::ofstream& f, const std::filesystem::path& p) {
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

}  // namespace

void write_csv(std::ostream& out, const MovieResult& result, int precision) {
  out << "label,T,re,im\n";
  const std::size_t frames = frame_count(result);
  for (std::size_t f = 0; f < frames; ++f) {
    for (const Trajectory& tr : result.trajectories) {
      out << tr.label << ',' << format_double(tr.t[f], precision) << ',' << format_double(tr.z[f].real(), precision)
          << ',' << format_double(tr.z[f].imag(), precision) << '\n';
    }
  }
}

std::vector<Trajectory> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "label,T,re,im") throw InvalidArgument("CSV header must be label,T,re,im");
  std::vector<Trajectory> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string label, t, re, im;
    if (!std::getline(row, label, ',') || !std::getline(row, t, ',') || !std::getline(row, re, ',') ||
        !std::getline(row, im)) {
      throw InvalidArgument("malformed CSV row: " + line);
    }
    const auto l = parse_number<std::size_t>(label);
    if (l >= out.size()) out.resize(l + 1);
    out[l].label = l;
    out[l].t.push_back(parse_number<double>(t));
    out[l].z.emplace_back(parse_number<double>(re), parse_number<double>(im));
  }
  return out;
}

void write_svg_frame(std::ostream& out, const MovieResult& result, std::size_t frame) {
  if (frame >= frame_count(result)) throw InvalidArgument("frame index out of range");
  const double radius = std::pow(result.c, 1.0 / static_cast<double>(result.d));
  const double t = result.trajectories.front().t[frame];
  auto x = [&](Complex z) { return format_double(z.real() / radius, 6); };
  auto y = [&](Complex z) { return format_double(-z.imag() / radius, 6); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-3 -3 6 6\" width=\"600\" height=\"600\">\n";
  out << "<rect x=\"-3\" y=\"-3\" width=\"6\" height=\"6\" fill=\"white\"/>\n";
  out << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.01\"/>\n";
  out << "<text x=\"-2.9\" y=\"-2.75\" font-size=\"0.2\">T = " << format_double(t, 6) << "</text>\n";
  for (const Trajectory& tr : result.trajectories) {
    const Complex z = tr.z[frame];
    out << "<circle cx=\"" << x(z) << "\" cy=\"" << y(z) << "\" r=\"0.04\" fill=\"#1f5fa8\"/>\n";
    out << "<text x=\"" << x(z) << "\" y=\"" << y(z) << "\" dx=\"0.06\" font-size=\"0.15\">" << tr.label << "</text>\n";
  }
  if (result.petal && frame + 1 == frame_count(result)) {
    const Complex m = 0.5 * (result.trajectories[result.petal->first].z[frame] + result.trajectories[result.petal->second].z[frame]);
    const double cx = m.real() / radius;
    const double cy = -m.imag() / radius;
    const double s = 0.12;
    out << "<path d=\"M " << format_double(cx - s, 6) << ' ' << format_double(cy - s, 6) << " L "
        << format_double(cx + s, 6) << ' ' << format_double(cy + s, 6) << " M " << format_double(cx - s, 6) << ' '
        << format_double(cy + s, 6) << " L " << format_double(cx + s, 6) << ' ' << format_double(cy - s, 6)
        << "\" stroke=\"#c0392b\" stroke-width=\"0.03\"/>\n";
  }
  out << "</svg>\n";
}

std::vector<std::filesystem::path> emit_frames(const std::filesystem::path& dir, const MovieResult& result,
                                               FrameFormat format, int precision) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  if (format == FrameFormat::csv || format == FrameFormat::both) {
    const auto p = dir / "roots.csv";
    std::ofstream f(p);
    require_open(f, p);
    write_csv(f, result, precision);
    if (!f) throw std::runtime_error("write failed for " + p.string());
    written.push_back(p);
  }
  if (format == FrameFormat::svg || format == FrameFormat::both) {
    for (std::size_t i = 0; i < frame_count(result); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%04zu.svg", i);
      const auto p = dir / name;
      std::ofstream f(p);
      require_open(f, p);
      write_svg_frame(f, result, i);
      if (!f) throw std::runtime_error("write failed for " + p.string());
      written.push_back(p);
    }
  }
  return written;
}

}  // namespace chainseif
