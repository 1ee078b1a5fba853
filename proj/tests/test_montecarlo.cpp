#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "beepid/montecarlo.hpp"

using namespace beepid;

namespace {

SimConfig small_config() {
  SimConfig cfg;
  cfg.runs = 6;
  cfg.period_ms = {50, 200};
  cfg.p = {0.2, 0.5};
  cfg.interference_rate = {0.0, 0.1};
  cfg.master_seed = 4242;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  SimConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.period_slots(50) == 5);
  CHECK(cfg.total_slots() == 500);

  SimConfig bad = cfg;
  bad.n_active = 11;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.period_ms = {55};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.period_ms = {6000};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.p.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.runs = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.interference_rate = {0.1, 1.5};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("scorable periods account for the filter warm-up") {
  SimConfig cfg;
  CHECK(scorable_periods(cfg, {500, 0.1, 0.0, 0}) == 10);
  CHECK(scorable_periods(cfg, {500, 0.1, 0.0, 1}) == 10);
  CHECK(scorable_periods(cfg, {500, 0.1, 0.0, 6}) == 5);
  CHECK(scorable_periods(cfg, {1000, 0.1, 0.0, 6}) == 1);
  CHECK(scorable_periods(cfg, {150, 0.1, 0.0, 0}) == 33);
}

TEST_CASE("layout places the receiver centrally and nodes in the square") {
  SimConfig cfg;
  const RunLayout layout = make_layout(cfg, 77);
  CHECK(layout.receiver.x == 50.0);
  CHECK(layout.receiver.y == 50.0);
  REQUIRE(layout.roster.size() == cfg.n_nodes);
  for (const NodeRadio& r : layout.radios) {
    CHECK(r.position.x >= 0.0);
    CHECK(r.position.x <= 100.0);
    CHECK(r.position.y >= 0.0);
    CHECK(r.position.y <= 100.0);
  }
  for (std::size_t i = 0; i < layout.roster.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.roster.size(); ++j) {
      CHECK(layout.roster[i] != layout.roster[j]);
    }
  }
}

TEST_CASE("ideal channel without interference never misses a transmitter") {
  SimConfig cfg = small_config();
  cfg.ideal_channel = true;
  cfg.interference_rate = {0.0};
  for (const MetricsRecord& r : sweep_serial(cfg)) {
    CHECK(r.fn == 0);
    CHECK(r.tp_rate() == 1.0);
  }
}

TEST_CASE("no transmitters: only all-zero silent patterns are accepted") {
  SimConfig cfg = small_config();
  cfg.n_active = 0;
  const SimPoint point{50, 0.2, 0.0, 0};
  for (std::uint64_t run = 0; run < 20; ++run) {
    const std::uint64_t seed = run_seed_for(cfg.master_seed, point, run);
    const MetricsRecord r = run_once(cfg, point, seed);
    CHECK(r.tp + r.fn == 0);
    CHECK(std::isnan(r.tp_rate()));
    std::uint64_t empty_patterns = 0;
    for (DeviceId id : make_layout(cfg, seed).roster) {
      empty_patterns += generate_pattern(id, point.p, 5).beep_count() == 0;
    }
    CHECK(r.fp == empty_patterns * r.events);
  }
}

TEST_CASE("saturated channel accepts every candidate") {
  SimConfig cfg = small_config();
  cfg.ideal_channel = true;
  cfg.n_active = cfg.n_nodes;
  const MetricsRecord r = run_once(cfg, {200, 1.0, 0.0, 0}, 9);
  CHECK(r.tp == cfg.n_nodes * r.events);
  CHECK(r.fn == 0);
}

TEST_CASE("conservation of scored nodes") {
  const SimConfig cfg = small_config();
  for (const MetricsRecord& r : sweep(cfg, 2)) {
    const std::uint64_t events = scorable_periods(cfg, r.point) * cfg.runs;
    CHECK(r.events == events);
    CHECK(r.tp + r.fn == cfg.n_active * events);
    CHECK(r.tn + r.fp == (cfg.n_nodes - cfg.n_active) * events);
    CHECK(r.runs == cfg.runs);
  }
}

TEST_CASE("run_once is deterministic") {
  const SimConfig cfg = small_config();
  const SimPoint point{200, 0.3, 0.1, 3};
  CHECK(run_once(cfg, point, 5) == run_once(cfg, point, 5));
  CHECK_FALSE(run_once(cfg, point, 5) == run_once(cfg, point, 6));
}

TEST_CASE("parallel sweep equals the serial reference") {
  SimConfig cfg = small_config();
  cfg.filter_len = 2;
  const auto reference = sweep_serial(cfg);
  for (int threads : {1, 3, 8}) CHECK(sweep(cfg, threads) == reference);
}

TEST_CASE("sweep covers the Cartesian grid") {
  SimConfig cfg;
  cfg.runs = 1;
  const auto records = sweep(cfg);
  CHECK(records.size() == 180);
  CHECK(records.front().point == SimPoint{50, 0.1, 0.0, 0});
  CHECK(records.back().point == SimPoint{1000, 0.5, 0.2, 0});
}

TEST_CASE("single-point sweep is the sum of its runs") {
  SimConfig cfg = small_config();
  cfg.period_ms = {100};
  cfg.p = {0.3};
  cfg.interference_rate = {0.05};
  const auto records = sweep(cfg);
  REQUIRE(records.size() == 1);
  MetricsRecord total;
  total.point = records[0].point;
  for (std::uint64_t run = 0; run < cfg.runs; ++run) {
    total.merge(run_once(cfg, total.point, run_seed_for(cfg.master_seed, total.point, run)));
  }
  CHECK(records[0] == total);
}

TEST_CASE("seeds ignore interference rate and filter length") {
  const SimPoint a{100, 0.3, 0.0, 0};
  const SimPoint b{100, 0.3, 0.2, 6};
  CHECK(run_seed_for(1, a, 3) == run_seed_for(1, b, 3));
  CHECK(run_seed_for(1, a, 3) != run_seed_for(1, SimPoint{150, 0.3, 0.0, 0}, 3));
  CHECK(run_seed_for(1, a, 3) != run_seed_for(1, SimPoint{100, 0.4, 0.0, 0}, 3));
  CHECK(run_seed_for(1, a, 3) != run_seed_for(2, a, 3));
}

TEST_CASE("interference only adds energy: paired runs") {
  const SimConfig cfg = small_config();
  for (std::uint64_t t_ms : {50, 200}) {
    for (double p : {0.2, 0.5}) {
      for (std::uint64_t run = 0; run < 10; ++run) {
        const SimPoint clean{t_ms, p, 0.0, 0};
        const SimPoint jammed{t_ms, p, 0.2, 0};
        const std::uint64_t seed = run_seed_for(cfg.master_seed, clean, run);
        const MetricsRecord a = run_once(cfg, clean, seed);
        const MetricsRecord b = run_once(cfg, jammed, seed);
        REQUIRE(b.tp >= a.tp);
        REQUIRE(b.tn <= a.tn);
      }
    }
  }
}

TEST_CASE("filter comparison") {
  SimConfig cfg = small_config();

  cfg.filter_len = 0;
  CHECK_THROWS_AS(compare_filtering(cfg), std::invalid_argument);

  cfg.filter_len = 1;
  for (const FilterComparison& row : compare_filtering(cfg)) {
    CHECK(row.on.tp == row.off.tp);
    CHECK(row.on.tn == row.off.tn);
    CHECK(row.on.events == row.off.events);
    CHECK(row.tp_gain == 0.0);
    CHECK(row.tn_loss == 0.0);
  }

  cfg.filter_len = 4;
  cfg.ideal_channel = true;
  cfg.interference_rate = {0.0};
  for (const FilterComparison& row : compare_filtering(cfg)) {
    CHECK(row.tp_gain == 0.0);
    CHECK(row.tn_loss >= 0.0);
    CHECK(row.net == doctest::Approx(row.tp_gain - row.tn_loss));
  }
}
