#include "isingdos/dos_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace isingdos {

FormatError::FormatError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Header {
  int rows = 0;
  int cols = 0;
  int depth = 0;
  double coupling = 0.0;
  int spins = 0;
  int bonds = 0;
  int version = 0;
};

LatticeSpec spec_from_header(const Header& h, int line) {
  if (h.version != kDoSFormatVersion) {
    throw FormatError(line, "unsupported format version " + std::to_string(h.version));
  }
  try {
    LatticeSpec spec(h.rows, h.cols, h.depth, h.coupling);
    if (spec.spins() != h.spins || spec.bonds() != h.bonds) {
      throw FormatError(line, "N/B in header do not match the lattice dimensions");
    }
    return spec;
  } catch (const LatticeError& e) {
    throw FormatError(line, std::string("invalid lattice in header: ") + e.what());
  }
}

Header parse_header(std::string_view text, int line) {
  if (text.empty() || text.front() != '#') throw FormatError(line, "missing '# rows=...' header");
  text.remove_prefix(1);
  std::map<std::string, std::string, std::less<>> fields;
  std::istringstream tokens{std::string(text)};
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw FormatError(line, "header token '" + token + "' is not key=value");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto integer = [&](const char* key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw FormatError(line, std::string("header is missing ") + key);
    auto v = parse_number<int>(it->second);
    if (!v) throw FormatError(line, std::string("header field ") + key + " is not an integer");
    return *v;
  };
  Header h;
  h.rows = integer("rows");
  h.cols = integer("cols");
  h.depth = integer("depth");
  h.spins = integer("N");
  h.bonds = integer("B");
  h.version = integer("version");
  auto it = fields.find("J");
  if (it == fields.end()) throw FormatError(line, "header is missing J");
  auto j = parse_number<double>(it->second);
  if (!j) throw FormatError(line, "header field J is not a number");
  h.coupling = *j;
  return h;
}

void add_cell(DoSHistogram& dos, std::int64_t count, int m, int e, int line) {
  if (count <= 0) throw FormatError(line, "count must be positive");
  if (!dos.contains(m, e)) {
    throw FormatError(line, "cell (M=" + std::to_string(m) + ", E=" + std::to_string(e) +
                                ") is outside the lattice grid or has the wrong parity");
  }
  if (dos.count(m, e) != 0) {
    throw FormatError(line, "duplicate cell (M=" + std::to_string(m) + ", E=" + std::to_string(e) + ")");
  }
  dos.add(m, e, static_cast<std::uint64_t>(count));
}

DoSHistogram read_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    Header h;
    h.rows = doc.at("rows").get<int>();
    h.cols = doc.at("cols").get<int>();
    h.depth = doc.at("depth").get<int>();
    h.coupling = doc.at("J").get<double>();
    h.spins = doc.at("N").get<int>();
    h.bonds = doc.at("B").get<int>();
    h.version = doc.at("version").get<int>();
    DoSHistogram dos(spec_from_header(h, 0));
    for (const auto& cell : doc.at("cells")) {
      if (!cell.is_array() || cell.size() != 3) throw FormatError(0, "each cell must be [count, M, E]");
      add_cell(dos, cell[0].get<std::int64_t>(), cell[1].get<int>(), cell[2].get<int>(), 0);
    }
    return dos;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(0, std::string("malformed DoS JSON: ") + e.what());
  }
}

}  // namespace

void write_dos_csv(std::ostream& out, const DoSHistogram& dos) {
  const LatticeSpec& spec = dos.spec();
  out << "# rows=" << spec.rows() << " cols=" << spec.cols() << " depth=" << spec.depth()
      << " J=" << format_double(spec.coupling()) << " N=" << spec.spins() << " B=" << spec.bonds()
      << " version=" << kDoSFormatVersion << "\n";
  out << "count,M,E\n";
  for (const DoSCell& cell : dos.cells()) {
    out << cell.count << "," << cell.magnetization << "," << cell.energy << "\n";
  }
}

void write_dos_json(std::ostream& out, const DoSHistogram& dos) {
  const LatticeSpec& spec = dos.spec();
  nlohmann::json doc;
  doc["rows"] = spec.rows();
  doc["cols"] = spec.cols();
  doc["depth"] = spec.depth();
  doc["J"] = spec.coupling();
  doc["N"] = spec.spins();
  doc["B"] = spec.bonds();
  doc["version"] = kDoSFormatVersion;
  auto cells = nlohmann::json::array();
  for (const DoSCell& cell : dos.cells()) {
    cells.push_back({cell.count, cell.magnetization, cell.energy});
  }
  doc["cells"] = std::move(cells);
  out << doc.dump() << "\n";
}

DoSHistogram read_dos(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw FormatError(1, "empty DoS file");
  if (text[first] == '{') return read_json(text);

  std::istringstream lines(text);
  std::string raw;
  int line = 0;
  std::optional<DoSHistogram> dos;
  bool seen_columns = false;
  std::optional<std::pair<int, int>> previous;
  while (std::getline(lines, raw)) {
    ++line;
    const std::string_view row = trim(raw);
    if (row.empty()) continue;
    if (!dos) {
      dos.emplace(spec_from_header(parse_header(row, line), line));
      continue;
    }
    if (!seen_columns) {
      if (row != "count,M,E") throw FormatError(line, "expected column header 'count,M,E'");
      seen_columns = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest = row;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 3) {
      throw FormatError(line, "expected 3 fields 'count,M,E', got " + std::to_string(fields.size()));
    }
    const auto count = parse_number<std::int64_t>(fields[0]);
    const auto m = parse_number<int>(fields[1]);
    const auto e = parse_number<int>(fields[2]);
    if (!count || !m || !e) throw FormatError(line, "non-integer field in '" + std::string(row) + "'");
    if (previous && (*m > previous->first || (*m == previous->first && *e <= previous->second))) {
      throw FormatError(line, "rows must be sorted by M descending, then E ascending");
    }
    add_cell(*dos, *count, *m, *e, line);
    previous = std::make_pair(*m, *e);
  }
  if (!seen_columns) throw FormatError(line + 1, "truncated file: missing 'count,M,E' column header");
  if (text.back() != '\n') {
    throw FormatError(line, "truncated file: last line has no terminating newline");
  }
  return std::move(*dos);
}

}  // namespace isingdos
