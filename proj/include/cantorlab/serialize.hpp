// Table and report emission: CSV with a config header block, JSON reports,
// and minimal SVG scatter documents. Formatting is fixed so identical
// configurations produce byte-identical files.
#pragma once

#include "cantorlab/rational.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cantorlab {

struct KV {
  std::string key;
  std::string value;
};

inline std::string dec(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

inline std::string emit_csv(const std::vector<KV>& header,
                            const std::vector<std::string>& columns,
                            const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "# version=" << kVersion << "\n";
  for (const KV& kv : header) os << "# " << kv.key << "=" << kv.value << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ",";
    os << columns[i];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << row[i];
    }
    os << "\n";
  }
  return os.str();
}

// A fixed-size scatter plot; points are (x, y) in data coordinates.
inline std::string svg_scatter(const std::vector<std::pair<double, double>>& pts,
                               double xmin, double xmax, double ymin,
                               double ymax, const std::string& title) {
  const int w = 800, h = 800, margin = 40;
  auto sx = [&](double x) {
    return margin + (x - xmin) / (xmax - xmin) * (w - 2 * margin);
  };
  auto sy = [&](double y) {
    return h - margin - (y - ymin) / (ymax - ymin) * (h - 2 * margin);
  };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
     << "<title>" << title << "</title>\n"
     << "<rect width=\"" << w << "\" height=\"" << h
     << "\" fill=\"white\"/>\n"
     << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
     << w - 2 * margin << "\" height=\"" << h - 2 * margin
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  char buf[128];
  for (const auto& [x, y] : pts) {
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1\" fill=\"black\"/>\n",
                  sx(x), sy(y));
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cantorlab
