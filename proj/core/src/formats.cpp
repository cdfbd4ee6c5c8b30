#include "pathpoly/formats.hpp"

#include <sstream>

#include "pathpoly/errors.hpp"

namespace pathpoly {

namespace {

const char kCoordinateComment[] = "* coordinate order:";

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string matrix_header(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + " " + std::to_string(cols) + " rational";
}

}  // namespace

std::string write_ext(const VRep& v, const std::vector<LeafPair>& pairs) {
  if (!pairs.empty() && pairs.size() != v.vertices.size())
    fail(errc::internal, "leaf pair list does not run parallel to vertices");

  std::ostringstream out;
  out << kCoordinateComment;
  for (const std::string& name : v.basis.names) out << " " << name;
  out << "\n";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out << "* row " << i + 1 << ": leaf pair (" << pairs[i].first << ","
        << pairs[i].second << ")\n";
  out << "V-representation\n";
  out << "begin\n";
  out << matrix_header(v.vertices.size(), v.basis.size() + 1) << "\n";
  for (const QVec& x : v.vertices) {
    out << "1";
    for (const Rat& c : x) out << " " << format_rational(c);
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

VRep parse_ext(const std::string& text) {
  std::istringstream raw(text);
  std::string line;
  std::vector<std::string> names;
  bool saw_header = false;

  auto bad = [](const std::string& what) {
    fail(errc::bad_parameters, "V-representation file: " + what);
  };
  auto next_line = [&raw](std::string& into) {
    if (!std::getline(raw, into)) return false;
    if (!into.empty() && into.back() == '\r') into.pop_back();
    return true;
  };

  while (next_line(line)) {
    if (line.rfind(kCoordinateComment, 0) == 0) {
      names = tokens_of(line.substr(sizeof(kCoordinateComment) - 1));
      continue;
    }
    if (line.empty() || line[0] == '*') continue;
    if (line == "V-representation") {
      saw_header = true;
      continue;
    }
    if (line == "begin") break;
    bad("unexpected line \"" + line + "\" before begin");
  }
  if (!saw_header) bad("missing the V-representation header");

  if (!next_line(line)) bad("missing the size line");
  std::vector<std::string> size_tokens = tokens_of(line);
  if (size_tokens.size() != 3 || size_tokens[2] != "rational")
    bad("size line must read \"<rows> <cols> rational\"");
  std::size_t rows = 0, cols = 0;
  try {
    rows = std::stoul(size_tokens[0]);
    cols = std::stoul(size_tokens[1]);
  } catch (const std::exception&) {
    bad("size line must read \"<rows> <cols> rational\"");
  }
  if (cols < 2) bad("a vertex row needs the leading 1 and a coordinate");

  if (!names.empty() && names.size() != cols - 1)
    bad("coordinate order comment names " + std::to_string(names.size()) +
        " coordinates, matrix has " + std::to_string(cols - 1));
  if (names.empty())
    for (std::size_t c = 1; c < cols; ++c)
      names.push_back("c" + std::to_string(c));

  std::vector<QVec> points;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!next_line(line)) bad("matrix ends early");
    std::vector<std::string> entries = tokens_of(line);
    if (entries.size() != cols)
      bad("row " + std::to_string(r + 1) + " has " +
          std::to_string(entries.size()) + " entries, expected " +
          std::to_string(cols));
    if (parse_rational(entries[0]) != 1)
      bad("row " + std::to_string(r + 1) +
          " is not a vertex (leading entry must be 1)");
    QVec x;
    for (std::size_t c = 1; c < cols; ++c)
      x.push_back(parse_rational(entries[c]));
    points.push_back(std::move(x));
  }
  bool saw_end = false;
  while (!saw_end && next_line(line)) {
    if (line.empty() || line[0] == '*') continue;
    if (line != "end") bad("expected end after the matrix");
    saw_end = true;
  }
  if (!saw_end) bad("missing end");

  return VRep::make(Basis{std::move(names)}, std::move(points));
}

std::string write_ine(const HRep& h) {
  std::ostringstream out;
  out << kCoordinateComment;
  for (const std::string& name : h.basis.names) out << " " << name;
  out << "\n";
  out << "H-representation\n";
  if (!h.equalities.empty()) {
    out << "linearity " << h.equalities.size();
    for (std::size_t i = 1; i <= h.equalities.size(); ++i) out << " " << i;
    out << "\n";
  }
  out << "begin\n";
  std::size_t rows = h.equalities.size() + h.inequalities.size();
  out << matrix_header(rows, h.basis.size() + 1) << "\n";
  auto put = [&](const LinearConstraint& c) {
    out << Int(-c.rhs());
    for (const Int& a : c.coeffs()) out << " " << a;
    out << "\n";
  };
  for (const LinearConstraint& c : h.equalities) put(c);
  for (const LinearConstraint& c : h.inequalities) put(c);
  out << "end\n";
  return out.str();
}

}  // namespace pathpoly
