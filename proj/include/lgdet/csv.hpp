#pragma once

#include <string>
#include <vector>

namespace lgdet {

// Round-trip-exact double formatting ("%.17g") for score/logit files.
std::string fmt_double(double v);
// Fixed 6-decimal formatting for report columns.
std::string fmt_fixed6(double v);

// Strict field parsers; throw FormatError mentioning `where` on failure.
double parse_double(const std::string& s, const std::string& where);
long parse_long(const std::string& s, const std::string& where);

// Splits one CSV line on ',' with no quoting rules; trailing '\r' is dropped.
std::vector<std::string> split_csv_line(const std::string& line);

struct CsvFile {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // line numbers = index + 2
};

// Reads a whole CSV file; throws MissingInputError if absent, FormatError if
// the header does not exactly match `expected_header`.
CsvFile read_csv(const std::string& path, const std::vector<std::string>& expected_header);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace lgdet
