#include "ecm/rational.hpp"

#include <stdexcept>

namespace ecm {

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Int& x) { return x.get_str(); }

namespace {

Int parse_int(std::string_view s) {
  std::string t(s);
  std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (start == t.size()) throw std::invalid_argument("malformed integer: '" + t + "'");
  for (std::size_t i = start; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("malformed integer: '" + t + "'");
  }
  if (t[0] == '+') t.erase(0, 1);
  return Int(t, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ecm
