#include "fforest/zoo.hpp"

namespace fforest {

namespace {

Semigroup u1() {
  // "1" is an identity, "0" absorbs.
  return Semigroup("u1", {"1", "0"}, {{0, 1}, {1, 1}});
}

Semigroup flip_flop() {
  // {1, a, b} with x*a = a, x*b = b and identity 1.
  return Semigroup("flipflop", {"1", "a", "b"},
                   {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
}

}  // namespace

std::vector<ZooEntry> standard_zoo() {
  std::vector<ZooEntry> zoo;

  zoo.push_back({"trivial", Homomorphism(cyclic_group(1), {{'x', 0}})});
  zoo.push_back({"u1", Homomorphism(u1(), {{'a', 0}, {'b', 1}})});
  for (std::size_t n = 2; n <= 6; ++n) {
    zoo.push_back({"z" + std::to_string(n),
                   Homomorphism(cyclic_group(n), {{'g', 1}})});
  }

  // Bands over minimal generating sets: all rows and columns occur, so
  // products reach every element.
  zoo.push_back({"rect_2_2",
                 Homomorphism(rectangular_band(2, 2), {{'a', 1}, {'b', 2}})});
  zoo.push_back({"rect_2_3", Homomorphism(rectangular_band(2, 3),
                                          {{'a', 0}, {'b', 4}, {'c', 2}})});

  zoo.push_back({"flipflop", Homomorphism(flip_flop(), {{'a', 1}, {'b', 2}})});

  {
    // Two constant maps: a right-zero band.
    auto rz = transformation_closure(2, {{0, 0}, {1, 1}});
    zoo.push_back({"rz2", Homomorphism(std::move(rz.semigroup),
                                       {{'a', rz.generator_elements[0]},
                                        {'b', rz.generator_elements[1]}})});
  }
  {
    // Swap and a constant generate all four maps on two points.
    auto t2 = transformation_closure(2, {{1, 0}, {0, 0}});
    zoo.push_back({"t2_full", Homomorphism(std::move(t2.semigroup),
                                           {{'a', t2.generator_elements[0]},
                                            {'b', t2.generator_elements[1]}})});
  }
  {
    // 3-cycle, transposition and a rank-2 idempotent generate T3.
    auto t3 = transformation_closure(3, {{1, 2, 0}, {1, 0, 2}, {0, 0, 2}});
    zoo.push_back({"t3_full", Homomorphism(std::move(t3.semigroup),
                                           {{'a', t3.generator_elements[0]},
                                            {'b', t3.generator_elements[1]},
                                            {'c', t3.generator_elements[2]}})});
  }

  return zoo;
}

}  // namespace fforest
