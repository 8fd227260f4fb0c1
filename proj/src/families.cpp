#include "sia/families.hpp"

#include <string>
#include <vector>

#include "sia/error.hpp"

namespace sia {

namespace {

void require_at_least(std::size_t n, std::size_t min, char const* what) {
  if (n < min) {
    throw InvalidArgument(std::string(what) + " needs n >= "
                          + std::to_string(min));
  }
}

}  // namespace

MatrixSet cerny_set(std::size_t n) {
  require_at_least(n, 2, "cerny_set");
  std::vector<std::size_t> a(n);
  std::vector<std::size_t> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = (i + 1) % n;
    b[i] = i;
  }
  b[0] = 1;
  return MatrixSet(
      {BooleanPattern::from_images(a), BooleanPattern::from_images(b)});
}

MatrixSet wielandt_set(std::size_t n) {
  require_at_least(n, 3, "wielandt_set");
  std::vector<std::size_t> a(n);
  std::vector<std::size_t> b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a[i] = i + 1;
    b[i] = i + 1;
  }
  a[n - 1] = 1;
  b[n - 1] = 0;
  return MatrixSet(
      {BooleanPattern::from_images(a), BooleanPattern::from_images(b)});
}

BooleanPattern wielandt_matrix(std::size_t n) {
  require_at_least(n, 2, "wielandt_matrix");
  return BooleanPattern::from_predicate(n, [n](std::size_t i, std::size_t j) {
    return j == i + 1 || (i == n - 1 && j <= 1);
  });
}

BooleanPattern line_automaton(std::size_t n) {
  require_at_least(n, 1, "line_automaton");
  std::vector<std::size_t> img(n);
  for (std::size_t i = 1; i < n; ++i) {
    img[i] = i - 1;
  }
  return BooleanPattern::from_images(img);
}

bool is_initially_connected(MatrixSet const& s) {
  BooleanPattern const g = s.union_pattern();
  std::size_t const    n = g.dim();
  // DFS from each candidate root.
  for (std::size_t root = 0; root < n; ++root) {
    StateSet                 seen(n);
    std::vector<std::size_t> stack{root};
    seen.set(root);
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t const v = stack.back();
      stack.pop_back();
      g.row(v).for_each([&](std::size_t w) {
        if (!seen.test(w)) {
          seen.set(w);
          ++reached;
          stack.push_back(w);
        }
      });
    }
    if (reached == n) {
      return true;
    }
  }
  return false;
}

}  // namespace sia
