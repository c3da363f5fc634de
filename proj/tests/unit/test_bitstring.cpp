#include <doctest.h>

#include <algorithm>

#include "polytrav/bitstring.hpp"
#include "support/brute_force.hpp"

using namespace polytrav;
using polytrav::testing::Rng;

namespace {

BitString bs(const char* s) { return BitString::parse(s); }

Listing listing(std::initializer_list<const char*> items) {
  Listing out;
  for (const char* s : items) out.push_back(bs(s));
  return out;
}

}  // namespace

TEST_CASE("parse and print round trip, position 1 is leftmost") {
  const BitString x = bs("1010110");
  CHECK(x.size() == 7);
  CHECK(x.to_string() == "1010110");
  CHECK(x[1]);
  CHECK_FALSE(x[2]);
  CHECK(x.ones() == std::vector<Position>{1, 3, 5, 6});
  CHECK(x.count() == 4);
  CHECK_THROWS_AS(BitString::parse("01a"), std::invalid_argument);
  CHECK_THROWS_AS(x.at(8), ContractViolation);
}

TEST_CASE("long bitstrings span several words") {
  std::string text(150, '0');
  text[0] = text[64] = text[149] = '1';
  const BitString x = BitString::parse(text);
  CHECK(x.to_string() == text);
  CHECK(x.ones() == std::vector<Position>{1, 65, 150});
  BitString y = x;
  y.flip(100);
  CHECK(lambda(x, y) == 100);
  CHECK(hamming(x, y) == 1);
}

TEST_CASE("lambda examples") {
  CHECK(lambda(bs("1010110"), bs("0111110")) == 4);
  CHECK(lambda(bs("01100"), bs("11100")) == 1);
  CHECK(lambda(bs("0"), bs("1")) == 1);
  CHECK_THROWS_AS(lambda(bs("01"), bs("01")), ContractViolation);
  CHECK_THROWS_AS(lambda(bs("01"), bs("011")), ContractViolation);
}

TEST_CASE("restricted lambda examples") {
  CHECK(lambda_restricted(bs("1010110"), bs("0111110"), {1, 7}) == ExtendedPosition(4));
  CHECK(lambda_restricted(bs("1010110"), bs("0111110"), {5, 7}).is_infinite());
  CHECK(lambda_restricted(bs("01100"), bs("11100"), {1, 1}) == ExtendedPosition(1));
}

TEST_CASE("hamming examples") {
  CHECK(hamming(bs("1010110"), bs("0111110")) == 3);
  CHECK(hamming(bs("01100"), bs("11100")) == 1);
  CHECK(hamming(bs("0110"), bs("0110")) == 0);
  CHECK_THROWS_AS(hamming(bs("0"), bs("00")), ContractViolation);
}

TEST_CASE("extended positions order infinity last") {
  CHECK(ExtendedPosition(3) < kInfinity);
  CHECK(ExtendedPosition(2) < ExtendedPosition(3));
  CHECK(kInfinity == ExtendedPosition::infinity());
  CHECK_THROWS_AS(kInfinity.value(), ContractViolation);
}

TEST_CASE("is_genlex examples") {
  CHECK(is_genlex(listing({"00", "10", "01", "11"})));
  CHECK_FALSE(is_genlex(listing({"00", "01", "10", "11"})));
  CHECK(is_genlex(listing({"11", "01", "00", "10"})));
  CHECK_THROWS_AS(is_genlex(listing({"00", "00"})), ContractViolation);
}

TEST_CASE("listing cost examples") {
  CHECK(listing_cost(listing({"00", "10", "01", "11"})) == 4);
  CHECK(listing_cost(listing({"0110"})) == 0);
  CHECK(listing_cost(listing({"00", "11"})) == 2);
}

TEST_CASE("genlex cost examples") {
  CHECK(genlex_cost(listing({"00", "01", "10", "11"})) == 4);
  CHECK(genlex_cost(listing({"101"})) == 0);
  CHECK(genlex_cost(listing({"110", "011", "101"})) == 5);
  CHECK_THROWS_AS(genlex_cost(Listing{}), ContractViolation);
}

TEST_CASE("lambda and hamming are symmetric") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pair = polytrav::testing::random_set(rng, 1 + trial % 70, 2);
    CHECK(lambda(pair[0], pair[1]) == lambda(pair[1], pair[0]));
    CHECK(hamming(pair[0], pair[1]) == hamming(pair[1], pair[0]));
    CHECK(hamming(pair[0], pair[1]) >= 1);
  }
}

TEST_CASE("genlex orderings are exactly the cost-optimal orderings") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t cap = std::min<std::size_t>(std::size_t{1} << n, 7);
    const std::size_t size = 1 + rng() % cap;
    const auto X = polytrav::testing::random_set(rng, n, size);
    const auto check = polytrav::testing::check_all_orderings(X);
    CHECK(check.min_cost == genlex_cost(X));
    CHECK(check.all_minimizers_genlex);
  }
}

TEST_CASE("genlex structure and separation hold in every genlex ordering") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto X = polytrav::testing::random_set(rng, 4, 1 + trial % 7);
    std::sort(X.begin(), X.end());
    do {
      if (!is_genlex(X)) continue;
      for (std::size_t i = 0; i + 1 < X.size(); ++i) {
        for (std::size_t j = i + 1; j < X.size(); ++j) {
          CHECK(lambda(X[i], X[i + 1]) <= lambda(X[i], X[j]));
          for (std::size_t k = j + 1; k < X.size(); ++k) {
            CHECK(lambda(X[i], X[j]) != lambda(X[j], X[k]));
          }
        }
      }
    } while (std::next_permutation(X.begin(), X.end()));
  }
}
