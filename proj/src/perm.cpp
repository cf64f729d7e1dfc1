#include "noohi/perm.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "noohi/bounds.hpp"
#include "noohi/errors.hpp"

namespace noohi {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<std::uint16_t>(x);
  return q;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t degree,
                          std::uint64_t limit) {
  std::set<Perm> seen;
  std::vector<Perm> elements;
  std::deque<Perm> queue;
  Perm id = identity_perm(degree);
  seen.insert(id);
  elements.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Perm h = compose(g, s);
      if (seen.insert(h).second) {
        if (elements.size() >= limit) return {};
        elements.push_back(h);
        queue.push_back(std::move(h));
      }
    }
  }
  return elements;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os << ']';
}

std::uint64_t factorial(int d) {
  std::uint64_t f = 1;
  for (int k = 2; k <= d; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

SymmetricGroup::SymmetricGroup(int degree) : degree_(degree) {
  Perm p = identity_perm(static_cast<std::size_t>(degree));
  do {
    elements_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table_[a * n + b] = index_of(compose(elements_[a], elements_[b]));
    }
  }
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = index_of(inverse(elements_[a]));
  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    SymIndex x = static_cast<SymIndex>(a);
    std::uint8_t k = 1;
    while (x != identity()) {
      x = mul(x, static_cast<SymIndex>(a));
      ++k;
    }
    orders_[a] = k;
  }
}

SymIndex SymmetricGroup::index_of(const Perm& p) const {
  // Lehmer code in lexicographic order.
  std::size_t idx = 0;
  const std::size_t d = p.size();
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (p[j] < p[i]) ++smaller;
    }
    idx = idx * (d - i) + smaller;
  }
  return static_cast<SymIndex>(idx);
}

SymIndex SymmetricGroup::pow(SymIndex a, int e) const noexcept {
  const int ord = orders_[a];
  int k = ((e % ord) + ord) % ord;
  SymIndex r = identity();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

const SymmetricGroup& SymmetricGroup::of(int degree) {
  if (degree < 0 || degree > kHardMaxDegree) {
    throw InputError("symmetric group degree " + std::to_string(degree) +
                     " outside supported range [0, " + std::to_string(kHardMaxDegree) + "]");
  }
  static std::array<std::once_flag, kHardMaxDegree + 1> flags;
  static std::array<std::unique_ptr<SymmetricGroup>, kHardMaxDegree + 1> groups;
  std::call_once(flags[static_cast<std::size_t>(degree)], [degree] {
    groups[static_cast<std::size_t>(degree)].reset(new SymmetricGroup(degree));
  });
  return *groups[static_cast<std::size_t>(degree)];
}

}  // namespace noohi
