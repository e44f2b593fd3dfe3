#include "lightframe/chart.hpp"

#include <cctype>
#include <unordered_set>

#include "lightframe/error.hpp"
#include "lightframe/parser.hpp"

namespace lightframe {

namespace {

bool valid_coordinate_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  std::size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i == s.size();
}

}  // namespace

Chart::Chart(std::string name, std::vector<std::string> coordinates)
    : name_(std::move(name)), coords_(std::move(coordinates)) {
  if (coords_.empty()) throw MathError("chart '" + name_ + "' has no coordinates");
  std::unordered_set<std::string> seen;
  for (const std::string& c : coords_) {
    if (!valid_coordinate_name(c)) {
      throw MathError("chart '" + name_ + "' has invalid coordinate name '" + c + "'");
    }
    if (!seen.insert(c).second) {
      throw MathError("chart '" + name_ + "' repeats coordinate '" + c + "'");
    }
  }
}

RationalExpr Chart::parse(const std::string& text) const {
  return parse_expression(text, coords_);
}

}  // namespace lightframe
