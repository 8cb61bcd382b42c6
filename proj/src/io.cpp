#include "almostcover/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "almostcover/error.hpp"

namespace almostcover {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

PointSet parse_point_set(std::string_view text) {
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::vector<Point> points;
  std::set<Point> seen;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tok = tokens(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "field") {
      if (field) throw ParseError(line_no, "duplicate field line");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'field rational' or 'field gf:<p>'");
      try {
        field = Field::parse_name(tok[1]);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "dim") {
      if (dim) throw ParseError(line_no, "duplicate dim line");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'dim <n>'");
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n);
      if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size() || n == 0) {
        throw ParseError(line_no, "dimension must be a positive integer");
      }
      dim = n;
    } else if (key == "point") {
      if (!field) throw ParseError(line_no, "point before the field line");
      if (!dim) throw ParseError(line_no, "point before the dim line");
      if (tok.size() != *dim + 1) {
        throw ParseError(line_no, "expected " + std::to_string(*dim) + " coordinates, got " +
                                      std::to_string(tok.size() - 1));
      }
      Vector coords;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        try {
          coords.push_back(field->parse(tok[i]));
        } catch (const Error& e) {
          throw ParseError(line_no, e.what());
        }
      }
      Point p(std::move(coords));
      if (!seen.insert(p).second) throw ParseError(line_no, "duplicate point " + p.to_string());
      points.push_back(std::move(p));
    } else {
      throw ParseError(line_no, "unknown directive '" + key + "'");
    }
  }
  if (!field) throw ParseError(line_no, "missing field line");
  if (!dim) throw ParseError(line_no, "missing dim line");
  if (points.empty()) throw ParseError(line_no, "no points");
  return PointSet(*field, *dim, std::move(points));
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_point_set(buffer.str());
}

std::string write_point_set(const PointSet& set) {
  std::string out = "field " + set.field().name() + "\ndim " + std::to_string(set.dim()) + "\n";
  for (const Point& p : set.points()) {
    out += "point";
    for (const Scalar& c : p.coords()) out += " " + c.to_string();
    out += "\n";
  }
  return out;
}

}  // namespace almostcover
