#include "gaudinlab/rational.hpp"

namespace gaudinlab {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts leading '+' and whitespace; we are stricter so that
  // parse(print(q)) is the identity on exactly the canonical strings.
  std::size_t pos = 0;
  auto check_int = [&](std::size_t begin, std::size_t end) {
    if (begin >= end) throw std::invalid_argument("bad rational literal: " + s);
    std::size_t i = begin;
    if (s[i] == '-') ++i;
    if (i >= end) throw std::invalid_argument("bad rational literal: " + s);
    for (; i < end; ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad rational literal: " + s);
  };
  pos = s.find('/');
  if (pos == std::string::npos) {
    check_int(0, s.size());
  } else {
    check_int(0, pos);
    check_int(pos + 1, s.size());
  }
  Rat q(s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace gaudinlab
