#include "affect/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "affect/errors.hpp"

namespace affect {

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

// Reads one logical record (quoted fields may span lines). Returns false at EOF.
bool read_record(std::istream& in, std::vector<std::string>& fields, long& line_no) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;

  std::string field;
  bool in_quotes = false;
  bool saw_any = false;
  while (true) {
    if (c == EOF) {
      if (in_quotes) throw DataError("unterminated quoted field", line_no);
      fields.push_back(field);
      return true;
    }
    char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        int next = in.peek();
        if (next == '"') {
          in.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line_no;
        field.push_back(ch);
      }
    } else {
      if (ch == '"' && field.empty() && !saw_any) {
        in_quotes = true;
        saw_any = true;
      } else if (ch == ',') {
        fields.push_back(field);
        field.clear();
        saw_any = false;
      } else if (ch == '\n') {
        ++line_no;
        if (!field.empty() && field.back() == '\r') field.pop_back();
        fields.push_back(field);
        return true;
      } else {
        field.push_back(ch);
        saw_any = true;
      }
    }
    c = in.get();
  }
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  long line_no = 1;
  std::vector<std::string> fields;
  if (!read_record(in, fields, line_no)) throw DataError("empty CSV: no header row");
  table.header = fields;

  while (read_record(in, fields, line_no)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != table.header.size())
      throw DataError("row has " + std::to_string(fields.size()) + " fields, header has " +
                          std::to_string(table.header.size()),
                      static_cast<long>(table.rows.size() + 2));
    table.rows.push_back(fields);
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  return read_csv(in);
}

std::string csv_quote(const std::string& field) {
  bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << csv_quote(fields[i]);
  }
  out.put('\n');
}

}  // namespace affect
