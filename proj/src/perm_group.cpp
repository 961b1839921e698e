#include "cyclomin/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace cyclomin {

namespace {

void require_n(int n) {
  if (n < 3) {
    throw std::domain_error("permutation degree must be at least 3, got " +
                            std::to_string(n));
  }
}

bool is_normalized(const std::vector<int>& img) {
  return img.front() == 1 && img[1] < img.back();
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  require_n(static_cast<int>(images_.size()));
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::domain_error("one-line notation is not a bijection of {1..n}");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  require_n(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) {
    throw std::domain_error("cannot compose permutations of different degree");
  }
  std::vector<int> img(static_cast<std::size_t>(p.n()));
  for (int k = 1; k <= p.n(); ++k) {
    img[static_cast<std::size_t>(k - 1)] = p(q(k));
  }
  return Permutation(std::move(img));
}

PermClass::PermClass(Permutation rep) : rep_(std::move(rep)) {
  if (!is_normalized(rep_.images())) {
    throw std::domain_error(
        "class representative must satisfy rep(1)=1 and rep(2)<rep(n)");
  }
}

Family::Family(std::array<int, 3> odd_set) : odd_set_(odd_set) {
  std::sort(odd_set_.begin(), odd_set_.end());
  if (odd_set_[0] != 1 || odd_set_[0] == odd_set_[1] ||
      odd_set_[1] == odd_set_[2] || odd_set_[2] > 6 || odd_set_[1] < 2) {
    throw std::domain_error("family must be a 3-subset of {1..6} containing 1");
  }
}

std::pair<Permutation, Permutation> generators(int n) {
  require_n(n);
  std::vector<int> c(static_cast<std::size_t>(n));
  std::vector<int> m(static_cast<std::size_t>(n));
  c[0] = n;
  for (int k = 2; k <= n; ++k) c[static_cast<std::size_t>(k - 1)] = k - 1;
  for (int k = 1; k <= n; ++k) m[static_cast<std::size_t>(k - 1)] = n + 1 - k;
  return {Permutation(std::move(c)), Permutation(std::move(m))};
}

std::vector<Permutation> h_group(int n) {
  const auto [c, m] = generators(n);
  std::set<std::vector<int>> seen;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto* gen : {&c, &m}) {
        Permutation h = compose(g, *gen);
        if (seen.insert(h.images()).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(seen.size());
  for (const auto& img : seen) out.emplace_back(img);
  return out;
}

PermClass canonicalize(const Permutation& p) {
  for (const auto& h : h_group(p.n())) {
    Permutation q = compose(p, h);
    if (is_normalized(q.images())) return PermClass(std::move(q));
  }
  throw std::logic_error("coset has no normalized member");  // unreachable
}

std::vector<PermClass> enumerate_representatives(int n) {
  require_n(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<PermClass> out;
  do {
    if (img.front() != 1) break;  // lexicographic order: the 1-first block ends
    if (img[1] < img.back()) out.emplace_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Family family_of(const PermClass& p) {
  if (p.n() != 6) {
    throw std::domain_error("families are defined for n = 6 only");
  }
  const auto& img = p.images();
  return Family({img[0], img[2], img[4]});
}

PermClass max_permutation(int n) {
  require_n(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  const int mid = n / 2;
  int val = 2;
  for (int pos = mid; pos >= 1; --pos, val += 2) {
    img[static_cast<std::size_t>(pos - 1)] = val;
  }
  val = 1;
  for (int pos = mid + 1; pos <= n; ++pos, val += 2) {
    img[static_cast<std::size_t>(pos - 1)] = val;
  }
  return canonicalize(Permutation(std::move(img)));
}

}  // namespace cyclomin
