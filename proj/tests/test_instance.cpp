#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "oumv/instance.hpp"

using namespace oumv;

TEST_CASE("zero vector annihilates") {
  BitMatrix m = BitMatrix::ones(2);
  CHECK_FALSE(vmv(BitVector(2), m, BitVector::from_string("11")));
}

TEST_CASE("single aligned triple") {
  CHECK(vmv(oracle::unit(2, 1), BitMatrix::identity(2), oracle::unit(2, 1)));
  CHECK_FALSE(vmv(oracle::unit(2, 1), BitMatrix::identity(2), oracle::unit(2, 2)));
}

TEST_CASE("vmv agrees with a reversed-loop oracle") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    BitVector u = oracle::random_vector(6, rng), v = oracle::random_vector(6, rng);
    BitMatrix m = oracle::random_matrix(6, rng, 0.15);
    CHECK(vmv(u, m, v) == oracle::vmv_transposed(u, m, v));
  }
}

TEST_CASE("augmentation of a one-dimensional instance") {
  AugmentedTriple a = augment_instance(BitVector::from_string("1"), BitMatrix(1), BitVector::from_string("1"));
  CHECK(a.u.size() == 2);
  CHECK(a.u.get(1));
  CHECK_FALSE(a.u.get(2));
  CHECK_FALSE(a.v.get(2));
  CHECK_FALSE(a.m.get(1, 1));
  CHECK(a.m.get(1, 2));
  CHECK(a.m.get(2, 1));
  CHECK(a.m.get(2, 2));
}

TEST_CASE("augmentation preserves the bit on every n=2 instance") {
  std::set<std::string> seen;
  for (std::uint64_t k = 0; k < 256; ++k) {
    OuMvInstance inst = enumerate_instance(2, k);
    const VectorPair& p = inst.pairs[0];
    AugmentedTriple a = augment_instance(p.u, inst.matrix, p.v);
    CHECK(vmv(p.u, inst.matrix, p.v) == vmv(a.u, a.m, a.v));
    CHECK(inst.truth[0] == vmv(p.u, inst.matrix, p.v));
    seen.insert(inst.matrix.row_string(1) + inst.matrix.row_string(2) + p.u.to_string() + p.v.to_string());
  }
  CHECK(seen.size() == 256);
}

TEST_CASE("planted generators keep their promise") {
  OuMvInstance zero = generate_instance(4, InstanceMode::planted_zero, 7);
  OuMvInstance one = generate_instance(4, InstanceMode::planted_one, 7);
  REQUIRE(zero.pairs.size() == 4);
  REQUIRE(one.pairs.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK_FALSE(zero.truth[k]);
    CHECK(one.truth[k]);
  }
}

TEST_CASE("generation is deterministic") {
  OuMvInstance a = generate_instance(8, InstanceMode::uniform, 1);
  OuMvInstance b = generate_instance(8, InstanceMode::uniform, 1);
  CHECK(a.matrix == b.matrix);
  for (std::size_t k = 0; k < a.pairs.size(); ++k) {
    CHECK(a.pairs[k].u == b.pairs[k].u);
    CHECK(a.pairs[k].v == b.pairs[k].v);
  }
}

TEST_CASE("padding keeps the bits") {
  for (InstanceMode mode : {InstanceMode::uniform, InstanceMode::planted_one, InstanceMode::sparse}) {
    OuMvInstance inst = generate_instance(3, mode, 5);
    OuMvInstance p = pad_instance(inst, 4);
    CHECK(p.n() == 4);
    CHECK(p.truth == inst.truth);
    for (std::size_t k = 0; k < p.pairs.size(); ++k)
      CHECK(vmv(p.pairs[k].u, p.matrix, p.pairs[k].v) == inst.truth[k]);
  }
  CHECK_THROWS(pad_vector(BitVector(3), 2));
}

TEST_CASE("instances round-trip through text") {
  OuMvInstance inst = generate_instance(5, InstanceMode::uniform, 3);
  std::stringstream ss;
  write_instance(ss, inst);
  OuMvInstance back = read_instance(ss);
  CHECK(back.matrix == inst.matrix);
  CHECK(back.truth == inst.truth);
  REQUIRE(back.pairs.size() == inst.pairs.size());
  CHECK(back.pairs[2].u == inst.pairs[2].u);
}

TEST_CASE("bit vectors check their bounds") {
  BitVector v(3);
  CHECK_THROWS(v.get(0));
  CHECK_THROWS(v.set(4, true));
}
