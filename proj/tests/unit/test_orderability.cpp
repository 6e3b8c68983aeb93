#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "ordkit/error.hpp"
#include "ordkit/orderability.hpp"
#include "ordkit/parallel.hpp"
#include "ordkit/partition.hpp"

using namespace ordkit;
using namespace testing_support;

TEST_SUITE("orderability") {

TEST_CASE("criterion examples") {
  const auto s = eilenberg_criterion(sierpinski());
  CHECK(s.satisfied);
  REQUIRE(s.components.size() == 1);
  CHECK(*s.components[0].punctured_disconnected);

  const auto ind = eilenberg_criterion(FiniteTopology::indiscrete(letters(2)));
  CHECK_FALSE(ind.satisfied);

  const auto disc = eilenberg_criterion(FiniteTopology::discrete(letters(3)));
  CHECK(disc.satisfied);
  CHECK(disc.component_count == 3);
  for (const auto& v : disc.components) {
    CHECK(v.exempt);
    CHECK_FALSE(v.punctured_disconnected.has_value());
  }
}

TEST_CASE("find_order examples") {
  auto c = letters(2);
  const auto d = find_order(FiniteTopology::discrete(c));
  REQUIRE(d);
  CHECK(d->relation == reflexive_closure(rel_of(c, {{"a", "b"}})));
  CHECK(d->certifies(FiniteTopology::discrete(c)));
  CHECK_FALSE(find_order(FiniteTopology::indiscrete(c)));
  CHECK_FALSE(find_order(sierpinski()));
}

TEST_CASE("find_order returns the first continuous permutation") {
  // Discrete 3-point: permutation (a,b,c) comes first.
  auto c = letters(3);
  const auto w = find_order(FiniteTopology::discrete(c));
  REQUIRE(w);
  CHECK(w->relation == linear_order(c, std::vector<std::size_t>{0, 1, 2}));
}

TEST_CASE("glue examples") {
  auto c2 = letters(2);
  const auto d2 = FiniteTopology::discrete(c2);
  const std::vector<std::size_t> b_over_a = {1, 0};
  const auto g2 = glue_component_orders(d2, {}, b_over_a);
  CHECK(g2 == reflexive_closure(rel_of(c2, {{"b", "a"}})));
  CHECK(make_witness(g2, OrderKind::order, d2).certifies(d2));

  auto c3 = letters(3);
  const auto d3 = FiniteTopology::discrete(c3);
  const std::vector<std::size_t> cba = {2, 1, 0};
  const auto g3 = glue_component_orders(d3, {}, cba);
  CHECK(g3 == linear_order(c3, std::vector<std::size_t>{2, 1, 0}));
  const auto props = check_properties(g3);
  for (auto p : kAllProperties) CHECK(props[p].holds);
}

TEST_CASE("glue on a discrete 4-point space with per-component witnesses") {
  auto c = letters(4);
  const auto d4 = FiniteTopology::discrete(c);
  std::vector<OrderWitness> orders;
  const auto comps = components(d4);
  for (std::size_t k = 0; k < comps.count(); ++k) orders.push_back(*find_order(subspace(d4, comps.block(k))));
  const std::vector<std::size_t> ranking = {1, 3, 0, 2};
  const auto glued = glue_component_orders(d4, orders, ranking);
  const auto w = make_witness(glued, OrderKind::order, d4);
  CHECK(w.certifies(d4));
  CHECK(glued == linear_order(c, std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST_CASE("glue rejects bad input") {
  auto c = letters(2);
  const auto d2 = FiniteTopology::discrete(c);
  const std::vector<std::size_t> short_rank = {0};
  CHECK_THROWS_AS(glue_component_orders(d2, {}, short_rank), InputError);
  const std::vector<std::size_t> repeated = {0, 0};
  CHECK_THROWS_AS(glue_component_orders(d2, {}, repeated), InputError);

  // A non-singleton component with a discontinuous order.
  const auto s = sierpinski();
  const auto bad = make_witness(reflexive_closure(rel_of(s.carrier(), {{"a", "b"}})), OrderKind::order, s);
  const std::vector<OrderWitness> orders = {bad};
  const std::vector<std::size_t> one = {0};
  CHECK_THROWS_AS(glue_component_orders(s, orders, one), InputError);
}

TEST_CASE("induced quotient relation examples") {
  auto c2 = letters(2);
  const auto full = induced_quotient_relation(BinaryRelation::full(c2));
  CHECK(full.classes.block_count() == 1);
  CHECK(full.quotient.size() == 1);
  CHECK(full.quotient.holds(0, 0));

  const auto chain = induced_quotient_relation(reflexive_closure(rel_of(c2, {{"a", "b"}})));
  CHECK(chain.classes.block_count() == 2);
  CHECK(chain.quotient.holds(0, 1));
  CHECK_FALSE(chain.quotient.holds(1, 0));

  auto c3 = letters(3);
  const auto r = reflexive_closure(rel_of(c3, {{"a", "b"}, {"b", "a"}, {"a", "c"}, {"b", "c"}}));
  const auto q = induced_quotient_relation(r);
  CHECK(q.classes.rgs() == std::vector<std::size_t>{0, 0, 1});
  CHECK(q.quotient.carrier()->label(0) == "{a,b}");
  CHECK(q.quotient.holds(0, 1));
  CHECK_FALSE(q.quotient.holds(1, 0));
  const auto qp = check_properties(q.quotient);
  CHECK(qp.all({Property::anti_symmetric, Property::complete, Property::transitive}));

  // a~b, b~c, but not a~c.
  const auto bad = reflexive_closure(rel_of(c3, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}}));
  try {
    induced_quotient_relation(bad);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("transitivity") != std::string::npos);
  }
}

TEST_CASE("lift examples") {
  auto c2 = letters(2);
  const auto d2 = FiniteTopology::discrete(c2);
  const auto eq = Partition::discrete(2);
  const auto qc = class_carrier(*c2, eq);
  const auto qrel = BinaryRelation::from_pairs(qc, std::vector<std::pair<std::string, std::string>>{
                                                       {"{a}", "{a}"}, {"{b}", "{b}"}, {"{b}", "{a}"}});
  const auto lifted = lift_quotient_relation(d2, eq, qrel);
  CHECK(lifted == reflexive_closure(rel_of(c2, {{"b", "a"}})));

  const auto total = Partition::single_block(2);
  const auto one = BinaryRelation::full(class_carrier(*c2, total));
  CHECK(lift_quotient_relation(d2, total, one) == BinaryRelation::full(c2));

  auto c3 = letters(3);
  const auto d3 = FiniteTopology::discrete(c3);
  const Partition p({0, 0, 1});
  const auto pc = class_carrier(*c3, p);
  const auto two = linear_order(pc, std::vector<std::size_t>{0, 1});
  const auto l3 = lift_quotient_relation(d3, p, two);
  const auto w = make_witness(l3, OrderKind::weak_order, d3, p);
  CHECK(w.certifies(d3));
  CHECK(l3.holds(0, 1));
  CHECK(l3.holds(1, 0));
  CHECK(l3.holds(0, 2));
  CHECK_FALSE(l3.holds(2, 0));

  CHECK_THROWS_AS(lift_quotient_relation(d3, p, BinaryRelation::identity(c3)), InputError);
}

TEST_CASE("lift contract over every equivalence and topology up to n=4") {
  for (int n = 2; n <= 4; ++n) {
    auto c = letters(n);
    for (const auto& top : all_topologies(c))
      for (const auto& p : all_partitions(n)) {
        const auto q = quotient(top, p);
        const auto order = find_order(q.space);
        if (!order) continue;
        const auto lifted = lift_quotient_relation(top, p, order->relation);
        const auto props = check_properties(lifted);
        CHECK(props.all({Property::complete, Property::transitive}));
        CHECK(is_continuous(lifted, top).continuous);
        CHECK(symmetric_part(lifted) == equivalence_relation(c, p));
        if (p.block_count() >= 2) CHECK(props[Property::non_trivial].holds);
      }
  }
}

TEST_CASE("weak order searches") {
  auto c = letters(2);
  CHECK_FALSE(find_weak_order(FiniteTopology::indiscrete(c)));
  const auto w = find_weak_order(FiniteTopology::discrete(c));
  REQUIRE(w);
  CHECK(w->equivalence->block_count() == 2);
  CHECK(w->certifies(FiniteTopology::discrete(c)));

  CHECK(brute_force_weak_order(FiniteTopology::discrete(c)));
  CHECK_FALSE(brute_force_weak_order(FiniteTopology::indiscrete(c)));
  CHECK_FALSE(brute_force_weak_order(FiniteTopology::indiscrete(letters(3))));
}

TEST_CASE("searches agree with the naive oracles up to n=3") {
  for (int n = 1; n <= 3; ++n) {
    auto c = letters(n);
    for (const auto& fam : naive::all_topologies(n)) {
      const auto top = from_family(c, fam);
      const auto o = find_order(top);
      CHECK(o.has_value() == naive::has_continuous_linear_order(fam, n));
      if (o) CHECK(o->certifies(top));
      const auto w = find_weak_order(top);
      const auto b = brute_force_weak_order(top);
      const bool truth = naive::has_continuous_weak_order(fam, n);
      CHECK(w.has_value() == truth);
      CHECK(b.has_value() == truth);
      if (w) CHECK(w->certifies(top));
      if (b) CHECK(b->certifies(top));
      // Finite spaces: orderable iff discrete; weakly orderable iff disconnected.
      CHECK(o.has_value() == (fam.size() == (std::size_t{1} << n)));
      CHECK(w.has_value() == (n >= 2 && !naive::connected(fam, n)));
    }
  }
}

TEST_CASE("brute force returns the least relation in matrix order") {
  auto c = letters(2);
  const auto w = brute_force_weak_order(FiniteTopology::discrete(c));
  REQUIRE(w);
  // Candidates on 2 points: 1011 (b over a) and 1101 (a over b).
  CHECK(w->relation.index() == 0b1011);
  CHECK(next_weak_order_candidate(2, 0) == std::optional<std::uint64_t>{0b1011});
  CHECK(next_weak_order_candidate(2, 0b1100) == std::optional<std::uint64_t>{0b1101});
  CHECK_FALSE(next_weak_order_candidate(2, 0b1110));
}

TEST_CASE("search caps") {
  auto big = [](std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FiniteTopology::indiscrete(make_carrier(labels));
  };
  CHECK_THROWS_AS(find_order(big(9)), CapExceeded);
  CHECK_NOTHROW(find_order(big(9), 9));
  CHECK_THROWS_AS(find_order(big(13), 20), CapExceeded);
  CHECK_THROWS_AS(find_weak_order(big(7)), CapExceeded);
  CHECK_THROWS_AS(brute_force_weak_order(big(5)), CapExceeded);
}

TEST_CASE("searches do not depend on the worker count") {
  for (int n = 2; n <= 4; ++n) {
    auto c = letters(n);
    for (const auto& top : all_topologies(c)) {
      std::optional<OrderWitness> a, b;
      {
        ScopedWorkerThreads one(1);
        a = brute_force_weak_order(top);
      }
      {
        ScopedWorkerThreads four(4);
        b = brute_force_weak_order(top);
      }
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->relation == b->relation);
    }
  }
}

}
