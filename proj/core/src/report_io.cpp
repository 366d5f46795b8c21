#include "polylog/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "polylog/errors.hpp"

namespace polylog {

std::string format_double(double v) {
  char buf[64];
  // %.17g round-trips every double; trim to the shortest form that reparses
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw error("cannot open " + tmp + " for writing");
    f << content;
    if (!f.good()) throw error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw error("cannot rename " + tmp + " to " + path);
}

}  // namespace polylog
