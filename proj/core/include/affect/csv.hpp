#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affect {

// In-memory CSV with a mandatory header row. Fields may be quoted with
// double quotes; embedded quotes are doubled per RFC 4180. CRLF tolerated.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by name, -1 when absent.
  int column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
std::string csv_quote(const std::string& field);

}  // namespace affect
