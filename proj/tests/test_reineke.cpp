#include <vector>

#include "doctest.h"
#include "quiverk/errors.hpp"
#include "quiverk/reineke.hpp"

using namespace quiverk;

namespace {

Quiver a2() { return Quiver(2, {{0, 1}}); }
Quiver a3_inbound() { return Quiver(3, {{0, 1}, {2, 1}}); }

// A2 positive roots.
const DimVector r11 = {1, 0};
const DimVector r12 = {1, 1};
const DimVector r22 = {0, 1};

// Inbound A3 positive roots used by the worked orbit.
const DimVector s22 = {0, 1, 0};
const DimVector s12 = {1, 1, 0};
const DimVector s13 = {1, 1, 1};
const DimVector s33 = {0, 0, 1};

}  // namespace

TEST_CASE("directedness checker") {
  const Quiver q = a2();
  const std::vector<DimVector> support = {r11, r12, r22};

  SUBCASE("the worked A2 partition is directed") {
    const PartitionCheck c = is_directed_partition(q, support, {{r22}, {r12, r11}});
    CHECK(c.ok);
    CHECK(c.reason.empty());
  }

  SUBCASE("reversing the parts breaks the cross condition") {
    const PartitionCheck c = is_directed_partition(q, support, {{r12, r11}, {r22}});
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.reason.empty());
  }

  SUBCASE("the worked inbound A3 partition is directed") {
    const PartitionCheck c = is_directed_partition(a3_inbound(), {s22, s12, s13, s33},
                                                   {{s22}, {s12, s13}, {s33}});
    CHECK(c.ok);
  }

  SUBCASE("coverage violations are reported") {
    CHECK_FALSE(is_directed_partition(q, support, {{r22}, {r11}}).ok);  // missing r12
    CHECK_FALSE(is_directed_partition(q, support, {{r22}, {r12, r11}, {r22}}).ok);  // repeat
    CHECK_FALSE(is_directed_partition(q, {r11}, {{r11, r22}}).ok);  // outside support
  }
}

TEST_CASE("directed partition construction") {
  SUBCASE("full A2 root system") {
    const Quiver q = a2();
    const std::vector<DimVector> support = {r11, r12, r22};
    const RootPartition parts = directed_partition(q, support);
    CHECK(is_directed_partition(q, support, parts).ok);
  }

  SUBCASE("singleton support") {
    const RootPartition parts = directed_partition(a2(), {r12});
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == std::vector<DimVector>{r12});
  }

  SUBCASE("worked A3 support") {
    const Quiver q = a3_inbound();
    const std::vector<DimVector> support = {s12, s13, s22, s33};
    CHECK(is_directed_partition(q, support, directed_partition(q, support)).ok);
  }

  SUBCASE("deterministic") {
    const Quiver q = a3_inbound();
    const std::vector<DimVector> support = {s12, s13, s22, s33};
    CHECK(directed_partition(q, support) == directed_partition(q, support));
  }

  SUBCASE("full root systems of both A3 orientations") {
    for (const Quiver& q : {a3_inbound(), Quiver(3, {{0, 1}, {1, 2}})}) {
      const auto support = q.positive_roots();
      CHECK(is_directed_partition(q, support, directed_partition(q, support)).ok);
    }
  }
}

TEST_CASE("resolution pairs") {
  SUBCASE("worked inbound A3 orbit") {
    const Quiver q = a3_inbound();
    const OrbitVector m =
        OrbitVector::from_entries({{s12, 1}, {s13, 1}, {s22, 1}, {s33, 1}});
    const ResolutionPair rp = resolution_pair(q, m, {{s22}, {s12, s13}, {s33}});
    CHECK(rp == ResolutionPair{{1, 0, 2, 1, 2}, {1, 2, 1, 2, 1}});
    // The internally chosen partition must reproduce the same pair.
    CHECK(resolution_pair(q, m) == rp);
    validate_resolution_pair(q, dimension_vector(q, m), rp);
  }

  SUBCASE("A2 unit multiplicities") {
    const Quiver q = a2();
    const OrbitVector m = OrbitVector::from_entries({{r11, 1}, {r12, 1}, {r22, 1}});
    const ResolutionPair rp = resolution_pair(q, m, {{r22}, {r12, r11}});
    CHECK(rp == ResolutionPair{{1, 0, 1}, {1, 2, 1}});
  }

  SUBCASE("A2 general multiplicities follow (m22, e1, m12)") {
    const Quiver q = a2();
    for (int m11 = 0; m11 <= 2; ++m11) {
      for (int m12 = 1; m12 <= 2; ++m12) {
        for (int m22 = 1; m22 <= 2; ++m22) {
          std::vector<std::pair<DimVector, int>> entries = {{r12, m12}, {r22, m22}};
          if (m11 > 0) entries.push_back({r11, m11});
          const OrbitVector m = OrbitVector::from_entries(std::move(entries));
          const ResolutionPair rp = resolution_pair(q, m, {{r22}, {r12, r11}});
          CHECK(rp == ResolutionPair{{1, 0, 1},
                                     {m22, m11 + m12, m12}});
        }
      }
    }
  }

  SUBCASE("per-vertex rank sums stay within the dimension vector") {
    const Quiver q = a3_inbound();
    const OrbitVector m =
        OrbitVector::from_entries({{s12, 2}, {s13, 1}, {s22, 3}, {s33, 2}});
    const DimVector v = dimension_vector(q, m);
    const ResolutionPair rp = resolution_pair(q, m);
    validate_resolution_pair(q, v, rp);
    for (int i = 0; i < q.vertex_count(); ++i) {
      int sum = 0;
      for (std::size_t l = 0; l < rp.steps(); ++l)
        if (rp.vertex[l] == i) sum += rp.rank[l];
      CHECK(sum <= v[i]);
    }
  }

  SUBCASE("empty orbit gives an empty pair") {
    CHECK(resolution_pair(a2(), OrbitVector{}).steps() == 0);
  }
}

TEST_CASE("resolution pair hygiene") {
  const Quiver q = a2();

  SUBCASE("zero-rank steps vanish") {
    const ResolutionPair rp = drop_zero_steps({{1, 0, 1}, {1, 0, 2}});
    CHECK(rp == ResolutionPair{{1, 1}, {1, 2}});
    CHECK_THROWS_AS(drop_zero_steps({{0}, {-1}}), DomainError);
  }

  SUBCASE("validation") {
    validate_resolution_pair(q, {2, 2}, {{1, 0, 1}, {1, 2, 1}});
    // Rank sum at vertex 1 exceeds v_1.
    CHECK_THROWS_AS(validate_resolution_pair(q, {1, 2}, {{1, 0, 1}, {1, 2, 1}}), DomainError);
    CHECK_THROWS_AS(validate_resolution_pair(q, {2, 2}, {{2}, {1}}), DomainError);
    CHECK_THROWS_AS(validate_resolution_pair(q, {2, 2}, {{0}, {0}}), DomainError);
    CHECK_THROWS_AS(validate_resolution_pair(q, {2, 2}, {{0, 1}, {1}}), DomainError);
  }
}
