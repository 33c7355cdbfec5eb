#include "permgen/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permgen {

Perm Perm::from_images(std::vector<uint32_t> images) {
  const size_t n = images.size();
  std::vector<bool> seen(n, false);
  for (uint32_t v : images) {
    if (v >= n || seen[v])
      throw std::invalid_argument("images do not form a bijection of {1..n}");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

unsigned CycleType::n() const {
  unsigned s = 0;
  for (uint32_t p : parts) s += p;
  return s;
}

std::vector<uint32_t> CycleType::counts() const {
  std::vector<uint32_t> c(n() + 1, 0);
  for (uint32_t p : parts) ++c[p];
  return c;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<uint32_t> img(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  Perm r;
  return Perm::from_images(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<uint32_t> img(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) img[p(i)] = i;
  return Perm::from_images(std::move(img));
}

std::vector<std::vector<uint32_t>> cycles(const Perm& p) {
  const unsigned n = p.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<uint32_t>> out;
  for (uint32_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<uint32_t> cyc;
    uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = p(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

namespace {

Perm power_mod_lengths(const Perm& p, auto step_of) {
  const unsigned n = p.degree();
  std::vector<uint32_t> img(n);
  for (const auto& cyc : cycles(p)) {
    const size_t len = cyc.size();
    const size_t step = step_of(len);
    for (size_t t = 0; t < len; ++t) img[cyc[t]] = cyc[(t + step) % len];
  }
  return Perm::from_images(std::move(img));
}

}  // namespace

Perm power(const Perm& p, long long k) {
  return power_mod_lengths(p, [k](size_t len) {
    long long m = k % static_cast<long long>(len);
    if (m < 0) m += static_cast<long long>(len);
    return static_cast<size_t>(m);
  });
}

Perm power(const Perm& p, const BigInt& k) {
  return power_mod_lengths(p, [&k](size_t len) {
    BigInt m = k % len;
    if (m < 0) m += len;
    return static_cast<size_t>(m);
  });
}

Perm conjugate(const Perm& p, const Perm& g) {
  return compose(g, compose(p, inverse(g)));
}

CycleType cycle_type(const Perm& p) {
  CycleType t;
  for (const auto& cyc : cycles(p)) t.parts.push_back(static_cast<uint32_t>(cyc.size()));
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  return t;
}

BigInt order(const CycleType& t) {
  BigInt l = 1;
  for (uint32_t p : t.parts) l = boost::multiprecision::lcm(l, BigInt(p));
  return l;
}

BigInt order(const Perm& p) { return order(cycle_type(p)); }

unsigned fixed_points(const Perm& p) {
  unsigned c = 0;
  for (uint32_t i = 0; i < p.degree(); ++i)
    if (p(i) == i) ++c;
  return c;
}

bool is_even(const Perm& p) {
  // sign = (-1)^(n - #cycles)
  return ((p.degree() - cycles(p).size()) % 2) == 0;
}

uint32_t min_degree_cyclic(const CycleType& t) {
  // Collect primes dividing some cycle length, with the maximal valuation
  // e_q attained among the lengths. p^(ord/q) fixes exactly the cycles whose
  // length has valuation < e_q.
  uint32_t best = kUnboundedDegree;
  std::vector<uint32_t> primes;
  for (uint32_t len : t.parts) {
    uint32_t m = len;
    for (uint32_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(m);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  for (uint32_t q : primes) {
    auto val = [q](uint32_t x) {
      uint32_t e = 0;
      while (x % q == 0) x /= q, ++e;
      return e;
    };
    uint32_t eq = 0;
    for (uint32_t len : t.parts) eq = std::max(eq, val(len));
    uint32_t moved = 0;
    for (uint32_t len : t.parts)
      if (val(len) == eq) moved += len;
    best = std::min(best, moved);
  }
  return best;
}

uint32_t min_degree_cyclic(const Perm& p) { return min_degree_cyclic(cycle_type(p)); }

bool in_frak_c(const CycleType& t, const std::vector<uint32_t>& primes) {
  for (uint32_t len : t.parts)
    if (std::binary_search(primes.begin(), primes.end(), len)) return true;
  return false;
}

bool in_frak_c(const Perm& p, const std::vector<uint32_t>& primes) {
  return in_frak_c(cycle_type(p), primes);
}

bool in_frak_m(const CycleType& t, unsigned n) {
  const uint32_t md = min_degree_cyclic(t);
  if (md == kUnboundedDegree) return true;
  return 4ull * md * md > n;
}

bool in_frak_m(const Perm& p) { return in_frak_m(cycle_type(p), p.degree()); }

namespace {

Perm parse_cycle_notation(const std::string& text, unsigned n) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("expected point in cycle notation");
      unsigned long v = std::stoul(text.substr(start, i - start));
      if (v < 1 || v > n) throw std::invalid_argument("point out of range 1..n");
      uint32_t pt = static_cast<uint32_t>(v - 1);
      if (used[pt]) throw std::invalid_argument("repeated point in cycle notation");
      used[pt] = true;
      cyc.push_back(pt);
    }
    for (size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k]] = cyc[k + 1];
    if (cyc.size() > 1) img[cyc.back()] = cyc.front();
    skip_ws();
  }
  return Perm::from_images(std::move(img));
}

Perm parse_one_line(const std::string& text, unsigned n) {
  std::istringstream in(text);
  std::vector<uint32_t> img;
  unsigned long v;
  while (in >> v) {
    if (v < 1 || v > n) throw std::invalid_argument("point out of range 1..n");
    img.push_back(static_cast<uint32_t>(v - 1));
  }
  if (!in.eof()) throw std::invalid_argument("malformed one-line permutation");
  if (img.size() != n) throw std::invalid_argument("one-line permutation has wrong length");
  return Perm::from_images(std::move(img));  // rejects repeats
}

}  // namespace

Perm parse_perm(const std::string& text, unsigned n) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '(' ? parse_cycle_notation(text, n) : parse_one_line(text, n);
  }
  throw std::invalid_argument("empty permutation text");
}

std::string format_cycles(const Perm& p) {
  std::string out;
  for (const auto& cyc : cycles(p)) {
    if (cyc.size() < 2) continue;
    out += '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string format_one_line(const Perm& p) {
  std::string out;
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

Perm random_perm(Rng& rng, unsigned n) {
  if (n < 1) throw std::invalid_argument("random_perm: n >= 1 required");
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (uint32_t i = n - 1; i >= 1; --i) {
    uint64_t j = rng.below(i + 1);
    std::swap(img[i], img[j]);
  }
  return Perm::from_images(std::move(img));
}

Perm random_even_perm(Rng& rng, unsigned n) {
  if (n < 2) throw std::invalid_argument("random_even_perm: n >= 2 required");
  for (;;) {
    Perm p = random_perm(rng, n);
    if (is_even(p)) return p;
  }
}

}  // namespace permgen
