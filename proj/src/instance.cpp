#include "oumv/instance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace oumv {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void check_index(int i, int n, const char* what) {
  if (i < 1 || i > n) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " outside [1," + std::to_string(n) + "]");
  }
}

}  // namespace

BitVector::BitVector(int n) : n_(n), words_(word_count(static_cast<std::size_t>(n))) {
  if (n < 0) throw std::invalid_argument("negative vector length");
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector x(static_cast<int>(bits.size()));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') throw std::invalid_argument("bad bit character in '" + bits + "'");
    x.set(static_cast<int>(k) + 1, bits[k] == '1');
  }
  return x;
}

bool BitVector::get(int i) const {
  check_index(i, n_, "vector");
  std::size_t k = static_cast<std::size_t>(i - 1);
  return (words_[k / 64] >> (k % 64)) & 1U;
}

void BitVector::set(int i, bool value) {
  check_index(i, n_, "vector");
  std::size_t k = static_cast<std::size_t>(i - 1);
  std::uint64_t mask = std::uint64_t{1} << (k % 64);
  if (value)
    words_[k / 64] |= mask;
  else
    words_[k / 64] &= ~mask;
}

int BitVector::popcount() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::string BitVector::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i)
    if (get(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

BitMatrix::BitMatrix(int n) : n_(n), stride_(static_cast<int>(word_count(static_cast<std::size_t>(n)))) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
  words_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(stride_), 0);
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n);
  for (int i = 1; i <= n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::ones(int n) {
  BitMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i, j, true);
  return m;
}

std::size_t BitMatrix::index(int i, int j) const {
  check_index(i, n_, "matrix row");
  check_index(j, n_, "matrix column");
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(stride_) * 64 + static_cast<std::size_t>(j - 1);
}

bool BitMatrix::get(int i, int j) const {
  std::size_t k = index(i, j);
  return (words_[k / 64] >> (k % 64)) & 1U;
}

void BitMatrix::set(int i, int j, bool value) {
  std::size_t k = index(i, j);
  std::uint64_t mask = std::uint64_t{1} << (k % 64);
  if (value)
    words_[k / 64] |= mask;
  else
    words_[k / 64] &= ~mask;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

std::string BitMatrix::row_string(int i) const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int j = 1; j <= n_; ++j)
    if (get(i, j)) s[static_cast<std::size_t>(j - 1)] = '1';
  return s;
}

void OuMvInstance::validate() const {
  int n = matrix.size();
  if (n < 1) throw std::invalid_argument("instance dimension must be positive");
  for (const auto& p : pairs)
    if (p.u.size() != n || p.v.size() != n) throw std::invalid_argument("vector length differs from matrix size");
  if (!truth.empty() && truth.size() != pairs.size()) throw std::invalid_argument("truth table size mismatch");
}

void OuMvInstance::recompute_truth() {
  truth.clear();
  for (const auto& p : pairs) truth.push_back(vmv(p.u, matrix, p.v));
}

InstanceMode parse_instance_mode(const std::string& name) {
  if (name == "uniform") return InstanceMode::uniform;
  if (name == "planted_one") return InstanceMode::planted_one;
  if (name == "planted_zero") return InstanceMode::planted_zero;
  if (name == "sparse") return InstanceMode::sparse;
  throw std::invalid_argument("unknown instance mode: " + name);
}

std::string to_string(InstanceMode mode) {
  switch (mode) {
    case InstanceMode::uniform: return "uniform";
    case InstanceMode::planted_one: return "planted_one";
    case InstanceMode::planted_zero: return "planted_zero";
    case InstanceMode::sparse: return "sparse";
  }
  return "?";
}

bool vmv(const BitVector& u, const BitMatrix& m, const BitVector& v) {
  int n = m.size();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("vmv dimension mismatch");
  for (int i = 1; i <= n; ++i) {
    if (!u.get(i)) continue;
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j) && v.get(j)) return true;
  }
  return false;
}

AugmentedTriple augment_instance(const BitVector& u, const BitMatrix& m, const BitVector& v) {
  int n = m.size();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("augment dimension mismatch");
  AugmentedTriple out{pad_vector(u, 2 * n), BitMatrix(2 * n), pad_vector(v, 2 * n)};
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) out.m.set(i, j, (i <= n && j <= n) ? m.get(i, j) : true);
  return out;
}

BitVector pad_vector(const BitVector& x, int target) {
  if (target < x.size()) throw std::invalid_argument("padding target below current size");
  BitVector out(target);
  for (int i = 1; i <= x.size(); ++i) out.set(i, x.get(i));
  return out;
}

BitMatrix pad_matrix(const BitMatrix& m, int target) {
  if (target < m.size()) throw std::invalid_argument("padding target below current size");
  BitMatrix out(target);
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) out.set(i, j, m.get(i, j));
  return out;
}

OuMvInstance pad_instance(const OuMvInstance& inst, int target) {
  OuMvInstance out;
  out.matrix = pad_matrix(inst.matrix, target);
  for (const auto& p : inst.pairs) out.pairs.push_back({pad_vector(p.u, target), pad_vector(p.v, target)});
  out.recompute_truth();
  return out;
}

namespace {

BitVector random_vector(int n, std::mt19937_64& rng, int cap) {
  BitVector x(n);
  if (cap >= n) {
    std::bernoulli_distribution coin(0.5);
    for (int i = 1; i <= n; ++i) x.set(i, coin(rng));
    return x;
  }
  std::uniform_int_distribution<int> size_dist(0, cap);
  int k = size_dist(rng);
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 1);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int a = 0; a < k; ++a) x.set(idx[static_cast<std::size_t>(a)], true);
  return x;
}

}  // namespace

OuMvInstance generate_instance(int n, InstanceMode mode, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("instance dimension must be positive");
  std::mt19937_64 rng(seed);
  OuMvInstance inst;
  inst.matrix = BitMatrix(n);
  int cap = mode == InstanceMode::sparse ? static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) : n;
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick(1, n);

  if (mode == InstanceMode::sparse) {
    for (int i = 1; i <= n; ++i) {
      BitVector row = random_vector(n, rng, cap);
      for (int j = 1; j <= n; ++j) inst.matrix.set(i, j, row.get(j));
    }
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) inst.matrix.set(i, j, coin(rng));
  }

  if (mode == InstanceMode::planted_one) {
    // Every pair gets an aligned triple; at least one matrix one is forced.
    int i0 = pick(rng), j0 = pick(rng);
    inst.matrix.set(i0, j0, true);
    for (int k = 0; k < n; ++k) {
      BitVector u = random_vector(n, rng, n), v = random_vector(n, rng, n);
      std::vector<std::pair<int, int>> ones;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (inst.matrix.get(i, j)) ones.emplace_back(i, j);
      std::uniform_int_distribution<std::size_t> which(0, ones.size() - 1);
      auto [i, j] = ones[which(rng)];
      u.set(i, true);
      v.set(j, true);
      inst.pairs.push_back({u, v});
    }
  } else if (mode == InstanceMode::planted_zero) {
    // u is random; v avoids every column reachable from u through M.
    for (int k = 0; k < n; ++k) {
      BitVector u = random_vector(n, rng, n), v(n);
      for (int j = 1; j <= n; ++j) {
        bool hit = false;
        for (int i = 1; i <= n && !hit; ++i) hit = u.get(i) && inst.matrix.get(i, j);
        if (!hit) v.set(j, coin(rng));
      }
      inst.pairs.push_back({u, v});
    }
  } else {
    for (int k = 0; k < n; ++k) {
      BitVector u = random_vector(n, rng, cap);
      BitVector v = random_vector(n, rng, cap);
      inst.pairs.push_back({u, v});
    }
  }
  inst.recompute_truth();
  return inst;
}

OuMvInstance enumerate_instance(int n, std::uint64_t index) {
  OuMvInstance inst;
  inst.matrix = BitMatrix(n);
  int b = 0;
  auto bit = [&]() { return ((index >> b++) & 1U) != 0; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) inst.matrix.set(i, j, bit());
  BitVector u(n), v(n);
  for (int i = 1; i <= n; ++i) u.set(i, bit());
  for (int i = 1; i <= n; ++i) v.set(i, bit());
  inst.pairs.push_back({u, v});
  inst.recompute_truth();
  return inst;
}

OuMvInstance make_instance(const BitMatrix& m, std::vector<VectorPair> pairs) {
  OuMvInstance inst;
  inst.matrix = m;
  inst.pairs = std::move(pairs);
  inst.validate();
  inst.recompute_truth();
  return inst;
}

void write_instance(std::ostream& os, const OuMvInstance& inst) {
  int n = inst.n();
  os << n << '\n';
  for (int i = 1; i <= n; ++i) os << inst.matrix.row_string(i) << '\n';
  for (const auto& p : inst.pairs) os << p.u.to_string() << ' ' << p.v.to_string() << '\n';
}

OuMvInstance read_instance(std::istream& is) {
  int n = 0;
  if (!(is >> n) || n < 1) throw std::runtime_error("instance: missing or invalid dimension");
  OuMvInstance inst;
  inst.matrix = BitMatrix(n);
  for (int i = 1; i <= n; ++i) {
    std::string row;
    if (!(is >> row) || static_cast<int>(row.size()) != n) throw std::runtime_error("instance: bad matrix row " + std::to_string(i));
    BitVector r = BitVector::from_string(row);
    for (int j = 1; j <= n; ++j) inst.matrix.set(i, j, r.get(j));
  }
  std::string us, vs;
  while (is >> us) {
    if (!(is >> vs)) throw std::runtime_error("instance: unpaired vector line");
    if (static_cast<int>(us.size()) != n || static_cast<int>(vs.size()) != n)
      throw std::runtime_error("instance: vector length differs from n");
    inst.pairs.push_back({BitVector::from_string(us), BitVector::from_string(vs)});
  }
  if (static_cast<int>(inst.pairs.size()) != n)
    throw std::runtime_error("instance: expected " + std::to_string(n) + " vector pairs");
  inst.recompute_truth();
  return inst;
}

}  // namespace oumv
