#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace oumv {

// Packed boolean vector with 1-based public indexing.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int n);
  static BitVector from_string(const std::string& bits);

  int size() const { return n_; }
  bool get(int i) const;
  void set(int i, bool value);
  int popcount() const;
  bool any() const { return popcount() > 0; }
  std::string to_string() const;

  bool operator==(const BitVector& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Packed square boolean matrix, row-major, 1-based public indexing.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n);
  static BitMatrix identity(int n);
  static BitMatrix ones(int n);

  int size() const { return n_; }
  bool get(int i, int j) const;
  void set(int i, int j, bool value);
  BitMatrix transpose() const;
  std::string row_string(int i) const;

  bool operator==(const BitMatrix& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  std::size_t index(int i, int j) const;
  int n_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VectorPair {
  BitVector u;
  BitVector v;
};

struct OuMvInstance {
  BitMatrix matrix;
  std::vector<VectorPair> pairs;
  std::vector<bool> truth;

  int n() const { return matrix.size(); }
  void validate() const;
  void recompute_truth();
};

enum class InstanceMode { uniform, planted_one, planted_zero, sparse };

InstanceMode parse_instance_mode(const std::string& name);
std::string to_string(InstanceMode mode);

bool vmv(const BitVector& u, const BitMatrix& m, const BitVector& v);

struct AugmentedTriple {
  BitVector u;
  BitMatrix m;
  BitVector v;
};

AugmentedTriple augment_instance(const BitVector& u, const BitMatrix& m, const BitVector& v);

// Zero padding up to dimension `target`; the vmv bit is unchanged.
BitVector pad_vector(const BitVector& x, int target);
BitMatrix pad_matrix(const BitMatrix& m, int target);
OuMvInstance pad_instance(const OuMvInstance& inst, int target);

OuMvInstance generate_instance(int n, InstanceMode mode, std::uint64_t seed);

// Enumerates every (M,u,v) of dimension n, with the single pair (u,v).
// Index layout: matrix bits low, then u, then v.
OuMvInstance enumerate_instance(int n, std::uint64_t index);
OuMvInstance make_instance(const BitMatrix& m, std::vector<VectorPair> pairs);

void write_instance(std::ostream& os, const OuMvInstance& inst);
OuMvInstance read_instance(std::istream& is);

}  // namespace oumv
