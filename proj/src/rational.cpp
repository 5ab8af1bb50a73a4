#include "virfock/rational.hpp"

namespace virfock {

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw ParseError("bad rational: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace virfock
