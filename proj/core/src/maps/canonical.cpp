#include "qp/maps/canonical.hpp"

#include <algorithm>
#include <deque>

namespace qp::maps {
namespace {

void put(std::string& s, int v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

std::string canonical_code(const CombinatorialMap& m, bool with_pointed) {
  const int n = m.dart_count();
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::deque<int> queue{m.root};
  id[m.root] = 0;
  order.push_back(m.root);
  while (!queue.empty()) {
    const int d = queue.front();
    queue.pop_front();
    for (int e : {m.sigma[d], m.alpha[d]}) {
      if (id[e] < 0) {
        id[e] = static_cast<int>(order.size());
        order.push_back(e);
        queue.push_back(e);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw MapError("canonical_code: map is not connected");
  std::string code;
  code.reserve(static_cast<std::size_t>(4 * n + 6));
  put(code, n);
  for (int d : order) {
    put(code, id[m.sigma[d]]);
    put(code, id[m.alpha[d]]);
  }
  if (with_pointed) {
    int mark = 0xffff;
    if (m.pointed >= 0) {
      for (int d : orbit(m.sigma, m.pointed)) mark = std::min(mark, id[d]);
    }
    put(code, mark);
  }
  return code;
}

}  // namespace qp::maps
