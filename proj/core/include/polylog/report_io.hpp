#ifndef POLYLOG_REPORT_IO_HPP
#define POLYLOG_REPORT_IO_HPP

#include <string>

namespace polylog {

// Shortest round-trip decimal form of a double (deterministic across runs).
std::string format_double(double v);

// RFC-4180 field quoting: quotes fields containing comma, quote or newline.
std::string csv_field(const std::string& s);

// Writes to <path>.tmp then renames, so readers never see a partial file.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace polylog

#endif
