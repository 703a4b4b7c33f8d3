#include "lgfo/measures.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <stdexcept>

using namespace lgfo;

TEST_CASE("predict applies the group threshold inclusively") {
  const ThresholdPair pair(0.5, 0.5);
  CHECK(predict({"a", 0.9, 0, 1}, pair) == 1);
  CHECK(predict({"b", 0.5, 1, 0}, pair) == 1);  // boundary: score == threshold
  CHECK(predict({"c", 0.3, 0, 0}, pair) == 0);
  CHECK(predict({"d", 0.7, 1, 0}, ThresholdPair(0.1, 0.8)) == 0);
}

TEST_CASE("confusion counts on the hand-enumerated fixture") {
  const Dataset ds = test::f1();
  const GroupConfusion counts = confusion(ds, ThresholdPair(0.5, 0.5));
  CHECK(counts.group[0].tp == 1);
  CHECK(counts.group[0].fp == 1);
  CHECK(counts.group[0].fn == 1);
  CHECK(counts.group[0].tn == 1);
  CHECK(counts.group[1].tp == 2);
  CHECK(counts.group[1].fp == 0);
  CHECK(counts.group[1].fn == 0);
  CHECK(counts.group[1].tn == 2);
  CHECK(counts.group[0].size() == ds.group_size(0));
  CHECK(counts.group[1].size() == ds.group_size(1));
}

TEST_CASE("threshold 0 predicts everything positive") {
  const Dataset ds = test::f1();
  const GroupConfusion counts = confusion(ds, ThresholdPair(0.0, 0.0));
  for (int g : {0, 1})
    CHECK(counts.group[g].predicted_positive() == ds.group_size(g));
  CHECK(positives_count(ds, ThresholdPair(0.0, 0.0)) == long(ds.size()));
}

TEST_CASE("statistical parity") {
  const Dataset ds = test::f1();
  CHECK(statistical_parity(ds, ThresholdPair(0.5, 0.5)) == 0.0);
  CHECK(statistical_parity(ds, ThresholdPair(0.0, 0.0)) == 0.0);

  // group 0: 2 of 4 positive, group 1: 1 of 4 positive
  const Dataset skew({{"a", 0.9, 0, 1},
                      {"b", 0.6, 0, 0},
                      {"c", 0.4, 0, 1},
                      {"d", 0.3, 0, 0},
                      {"e", 0.8, 1, 1},
                      {"f", 0.2, 1, 0},
                      {"g", 0.1, 1, 0},
                      {"h", 0.05, 1, 0}});
  CHECK(statistical_parity(skew, ThresholdPair(0.5, 0.5)) == 0.25);
}

TEST_CASE("sufficiency and the undefined-precision policy") {
  const Dataset ds = test::f1();
  CHECK(sufficiency(ds, ThresholdPair(0.5, 0.5)) == 0.5);

  // all positive predictions correct in both groups
  const Dataset clean({{"a", 0.9, 0, 1},
                       {"b", 0.1, 0, 0},
                       {"c", 0.8, 1, 1},
                       {"d", 0.2, 1, 0}});
  CHECK(sufficiency(clean, ThresholdPair(0.5, 0.5)) == 0.0);

  // no group-0 score reaches 1.0: one-sided undefined precision
  CHECK(sufficiency(ds, ThresholdPair(1.0, 0.5)) == 1.0);
  const MeasureValue one_sided =
      sufficiency_value(confusion(ds, ThresholdPair(1.0, 0.5)));
  CHECK(one_sided.value == 1.0);
  CHECK(one_sided.undefined_denominator);

  // no score at all reaches 1.0: both groups undefined, compared as equal
  const MeasureValue both_sides =
      sufficiency_value(confusion(ds, ThresholdPair(1.0, 1.0)));
  CHECK(both_sides.value == 0.0);
  CHECK(both_sides.undefined_denominator);
}

TEST_CASE("delta_f and the undefined-FPR policy") {
  const Dataset ds = test::f1();
  CHECK(delta_f(ds, ThresholdPair(0.5, 0.5)) == 0.5);

  // every negative scored below the threshold in both groups
  const Dataset clean({{"a", 0.9, 0, 1},
                       {"b", 0.1, 0, 0},
                       {"c", 0.8, 1, 1},
                       {"d", 0.2, 1, 0}});
  CHECK(delta_f(clean, ThresholdPair(0.5, 0.5)) == 0.0);

  // group 1 has no negative labels
  const Dataset no_neg({{"a", 0.9, 0, 1},
                        {"b", 0.6, 0, 0},
                        {"c", 0.8, 1, 1},
                        {"d", 0.7, 1, 1}});
  const MeasureValue v = delta_f_value(confusion(no_neg, ThresholdPair(0.5, 0.5)));
  CHECK(v.value == 1.0);
  CHECK(v.undefined_denominator);
}

TEST_CASE("accuracy") {
  const Dataset ds = test::f1();
  CHECK(accuracy(ds, ThresholdPair(0.5, 0.5)) == 0.75);

  const Dataset separated({{"a", 1.0, 0, 1},
                           {"b", 0.0, 0, 0},
                           {"c", 1.0, 1, 1},
                           {"d", 0.0, 1, 0}});
  CHECK(accuracy(separated, ThresholdPair(0.5, 0.5)) == 1.0);
}

TEST_CASE("flipping every label complements accuracy") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset ds = test::random_dataset(rng);
    std::vector<ScoredExample> flipped = ds.examples();
    for (ScoredExample& ex : flipped) ex.label = 1 - ex.label;
    const Dataset flipped_ds(std::move(flipped));
    const ThresholdPair pair(test::uniform01(rng), test::uniform01(rng));
    CHECK(accuracy(flipped_ds, pair) ==
          doctest::Approx(1.0 - accuracy(ds, pair)).epsilon(1e-12));
  }
}

TEST_CASE("positives_count") {
  const Dataset ds = test::f1();
  CHECK(positives_count(ds, ThresholdPair(0.5, 0.5)) == 4);
  CHECK(positives_count(ds, ThresholdPair(1.0, 1.0)) == 0);
}

TEST_CASE("dataset validation") {
  CHECK_THROWS_WITH_AS(Dataset({}), "dataset is empty", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dataset({{"a", 0.5, 0, 1}, {"b", 0.2, 0, 0}}),
                       "group 1 absent", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dataset({{"a", 0.5, 1, 1}, {"b", 0.2, 1, 0}}),
                       "group 0 absent", std::invalid_argument);
  CHECK_THROWS_AS(Dataset({{"a", 1.2, 0, 1}, {"b", 0.2, 1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Dataset({{"a", 0.5, 2, 1}, {"b", 0.2, 1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Dataset({{"a", 0.5, 0, 3}, {"b", 0.2, 1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("threshold pair validation") {
  CHECK_THROWS_AS(ThresholdPair(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ThresholdPair(0.5, 1.1), std::invalid_argument);
  CHECK_NOTHROW(ThresholdPair(0.0, 1.0));
}

TEST_CASE("measure names round-trip") {
  for (Measure m : kAllMeasures)
    CHECK(measure_from_name(measure_name(m)) == m);
  CHECK(!measure_from_name("equalized_odds").has_value());
}
