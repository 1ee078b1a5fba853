#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "beepid/identify.hpp"

using namespace beepid;

namespace {

std::vector<DeviceId> ids(std::initializer_list<std::uint64_t> values) {
  std::vector<DeviceId> out;
  for (auto v : values) out.push_back(DeviceId{v});
  return out;
}

}  // namespace

TEST_CASE("all-ones trace accepts every candidate") {
  const auto candidates = ids({1, 2, 3, 99});
  const IdSet result = identify(ChannelTrace(50, true), candidates, 0.4, 50);
  CHECK(result.identified == candidates);
}

TEST_CASE("a pattern identifies itself") {
  const auto trace = generate_pattern(DeviceId{5}, 0.5, 16).slots();
  const IdSet result = identify(trace, ids({5}), 0.5, 16);
  CHECK(result.identified == ids({5}));
}

TEST_CASE("two active ids, one silent candidate") {
  const std::string union_ref =
      oracle::or_ref(oracle::pattern_ref(1, 0.5, 16), oracle::pattern_ref(2, 0.5, 16));
  const ChannelTrace trace = SlotBits::from_string(union_ref);
  const IdSet result = identify(trace, ids({1, 2, 3}), 0.5, 16);
  CHECK(result.contains(DeviceId{1}));
  CHECK(result.contains(DeviceId{2}));
  const bool silent_covered = oracle::subset_ref(oracle::pattern_ref(3, 0.5, 16), union_ref);
  CHECK(result.contains(DeviceId{3}) == silent_covered);
  // Slot 1 of id 3 is uncovered by the union of 1 and 2.
  CHECK_FALSE(silent_covered);
  CHECK(result.candidates == ids({1, 2, 3}));
}

TEST_CASE("length mismatch is rejected") {
  CHECK_THROWS_AS(identify(ChannelTrace(10), ids({1}), 0.5, 11), std::invalid_argument);
}

TEST_CASE("all-zero candidate pattern is always identified") {
  const IdSet result = identify(ChannelTrace(20), ids({4, 5}), 0.0, 20);
  CHECK(result.identified == ids({4, 5}));
}

TEST_CASE("property: identify equals brute-force subset test and is monotone") {
  std::mt19937_64 gen(7);
  std::bernoulli_distribution coin(0.6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t slots = 1 + gen() % 40;
    const double p = 0.05 + 0.5 * static_cast<double>(gen() % 100) / 100.0;
    std::string trace_ref(slots, '0');
    for (auto& c : trace_ref) c = coin(gen) ? '1' : '0';
    std::vector<DeviceId> candidates;
    for (int i = 0; i < 8; ++i) candidates.push_back(DeviceId{gen()});

    const IdSet result = identify(SlotBits::from_string(trace_ref), candidates, p, slots);
    for (DeviceId id : candidates) {
      REQUIRE(result.contains(id) ==
              oracle::subset_ref(oracle::pattern_ref(id.value, p, slots), trace_ref));
    }

    std::string denser = trace_ref;
    denser[gen() % slots] = '1';
    const IdSet wider = identify(SlotBits::from_string(denser), candidates, p, slots);
    for (DeviceId id : result.identified) REQUIRE(wider.contains(id));
  }
}

TEST_CASE("lossless union identifies every transmitter") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t slots = 5 + gen() % 100;
    std::vector<DeviceId> active;
    ChannelTrace trace(slots);
    for (int i = 0; i < 5; ++i) {
      active.push_back(DeviceId{gen()});
      trace |= generate_pattern(active.back(), 0.3, slots).slots();
    }
    REQUIRE(identify(trace, active, 0.3, slots).identified == active);
  }
}

TEST_CASE("filter window push and eviction") {
  FilterWindow window(3);
  CHECK_THROWS_AS(window.apply(), std::logic_error);
  window = filter_push(window, SlotBits::from_string("1000"));
  CHECK(window.size() == 1);
  window = filter_push(window, SlotBits::from_string("0100"));
  window = filter_push(window, SlotBits::from_string("0010"));
  CHECK(window.full());
  CHECK(filter_apply(window).to_string() == "1110");
  window = filter_push(window, SlotBits::from_string("0001"));
  CHECK(window.size() == 3);
  CHECK(filter_apply(window).to_string() == "0111");
  CHECK_THROWS_AS(window.push(SlotBits::from_string("00001")), std::invalid_argument);
  CHECK_THROWS_AS(FilterWindow(0), std::invalid_argument);
}

TEST_CASE("filter apply on small windows") {
  FilterWindow window(2);
  window.push(SlotBits::from_string("0101"));
  CHECK(window.apply().to_string() == "0101");
  window.push(SlotBits::from_string("0011"));
  CHECK(window.apply().to_string() == "0111");
}

TEST_CASE("a slot detected in only one of four periods survives filtering") {
  // Four periods as the receiver sees them; slot 3 shows up only in period 2.
  FilterWindow window(4);
  window.push(SlotBits::from_string("110000"));
  window.push(SlotBits::from_string("101000"));
  window.push(SlotBits::from_string("100010"));
  window.push(SlotBits::from_string("110010"));
  const ChannelTrace filtered = window.apply();
  CHECK(filtered.test(2));
  CHECK(filtered.to_string() == "111010");
}

TEST_CASE("property: filtered trace is the OR of the window and never loses ids") {
  std::mt19937_64 gen(17);
  std::bernoulli_distribution coin(0.7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t slots = 1 + gen() % 70;
    const std::size_t m = 1 + gen() % 6;
    FilterWindow window(m);
    std::vector<std::string> pushed;
    for (std::size_t k = 0; k < m + gen() % 4; ++k) {
      std::string t(slots, '0');
      for (auto& c : t) c = coin(gen) ? '1' : '0';
      pushed.push_back(t);
      window.push(SlotBits::from_string(t));
    }
    std::string expected(slots, '0');
    for (std::size_t k = pushed.size() - m; k < pushed.size(); ++k) {
      expected = oracle::or_ref(expected, pushed[k]);
    }
    const ChannelTrace merged = window.apply();
    REQUIRE(merged.to_string() == expected);

    std::vector<DeviceId> candidates;
    for (int i = 0; i < 6; ++i) candidates.push_back(DeviceId{gen()});
    const IdSet filtered = identify(merged, candidates, 0.2, slots);
    for (const ChannelTrace& member : window.traces()) {
      REQUIRE(member.count() <= merged.count());
      for (DeviceId id : identify(member, candidates, 0.2, slots).identified) {
        REQUIRE(filtered.contains(id));
      }
    }
  }
}
