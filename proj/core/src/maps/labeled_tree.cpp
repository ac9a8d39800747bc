#include "qp/maps/labeled_tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qp/maps/combinatorial_map.hpp"

namespace qp::maps {

bool LabeledPlaneTree::well_labeled() const {
  if (labels.empty()) return false;
  for (std::size_t v = 1; v < labels.size(); ++v) {
    if (std::abs(labels[v] - labels[static_cast<std::size_t>(parent[v])]) > 1) return false;
  }
  return *std::min_element(labels.begin(), labels.end()) == 1;
}

namespace {

// Dyck words of semilength n, 1 = step down into a new child.
void dyck_words(int n, std::vector<int>& word, int open, int depth, const std::function<void()>& emit) {
  if (static_cast<int>(word.size()) == 2 * n) {
    emit();
    return;
  }
  if (open < n) {
    word.push_back(1);
    dyck_words(n, word, open + 1, depth + 1, emit);
    word.pop_back();
  }
  if (depth > 0) {
    word.push_back(0);
    dyck_words(n, word, open, depth - 1, emit);
    word.pop_back();
  }
}

}  // namespace

void for_each_tree(int n, const std::function<void(const LabeledPlaneTree&)>& visit) {
  if (n < 1 || n > kMaxTreeEdges) {
    throw MapError("tree size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxTreeEdges));
  }
  std::vector<int> word;
  LabeledPlaneTree tree;
  dyck_words(n, word, 0, 0, [&] {
    tree.parent.assign(1, -1);
    tree.children.assign(1, {});
    int cur = 0;
    for (int step : word) {
      if (step == 1) {
        const int v = static_cast<int>(tree.parent.size());
        tree.parent.push_back(cur);
        tree.children.emplace_back();
        tree.children[static_cast<std::size_t>(cur)].push_back(v);
        cur = v;
      } else {
        cur = tree.parent[static_cast<std::size_t>(cur)];
      }
    }
    // Label increments in base 3, one digit per non-root vertex.
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    std::vector<int> raw(static_cast<std::size_t>(n) + 1);
    for (int code = 0; code < total; ++code) {
      int c = code;
      raw[0] = 0;
      for (int v = 1; v <= n; ++v) {
        raw[static_cast<std::size_t>(v)] = raw[static_cast<std::size_t>(tree.parent[v])] + (c % 3) - 1;
        c /= 3;
      }
      const int lo = *std::min_element(raw.begin(), raw.end());
      tree.labels.resize(raw.size());
      for (std::size_t v = 0; v < raw.size(); ++v) tree.labels[v] = raw[v] - lo + 1;
      for (int eps : {1, -1}) {
        tree.epsilon = eps;
        tree.root_corner = 0;
        visit(tree);
      }
    }
  });
}

std::uint64_t tree_stream_length(int n) {
  std::uint64_t cat = 1;
  for (int i = 0; i < n; ++i) cat = cat * 2 * (2 * i + 1) / (i + 2);
  std::uint64_t p3 = 1;
  for (int i = 0; i < n; ++i) p3 *= 3;
  return cat * p3 * 2;
}

}  // namespace qp::maps
