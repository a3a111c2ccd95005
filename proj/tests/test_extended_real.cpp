#include <gtest/gtest.h>

#include "setopt/extended_real.hpp"

using namespace setopt;

namespace {

std::vector<ExtReal> grid() {
  return {ExtReal::minus_inf(), ExtReal(-3), frac(-1, 2), ExtReal(0), frac(2, 3), ExtReal(5), ExtReal::plus_inf()};
}

}  // namespace

TEST(InfAdd, Examples) {
  EXPECT_EQ(inf_add(2, 3), ExtReal(5));
  EXPECT_EQ(inf_add(ExtReal::plus_inf(), ExtReal::minus_inf()), ExtReal::plus_inf());
  EXPECT_EQ(inf_add(ExtReal::minus_inf(), ExtReal::plus_inf()), ExtReal::plus_inf());
  EXPECT_EQ(inf_add(ExtReal::minus_inf(), 7), ExtReal::minus_inf());
}

TEST(Residual, Examples) {
  EXPECT_EQ(residual(5, 3), ExtReal(2));
  EXPECT_EQ(residual(ExtReal::plus_inf(), ExtReal::plus_inf()), ExtReal::minus_inf());
  EXPECT_EQ(residual(3, ExtReal::minus_inf()), ExtReal::plus_inf());
  EXPECT_EQ(residual(ExtReal::minus_inf(), ExtReal::minus_inf()), ExtReal::minus_inf());
}

TEST(Order, TotalWithInfinities) {
  EXPECT_LT(ExtReal::minus_inf(), ExtReal(-1000));
  EXPECT_LT(ExtReal(1000), ExtReal::plus_inf());
  EXPECT_LT(frac(1, 3), frac(1, 2));
  EXPECT_EQ(ExtReal::plus_inf(), ExtReal::plus_inf());
}

// r <= s +. t  iff  r -. s <= t, on a grid containing both infinities.
TEST(Residual, AdjunctionOnGrid) {
  for (const auto& r : grid())
    for (const auto& s : grid())
      for (const auto& t : grid())
        EXPECT_EQ(r <= inf_add(s, t), residual(r, s) <= t) << r.str() << " " << s.str() << " " << t.str();
}

TEST(Residual, IsInfimumOfAdmissibleSet) {
  // r -. s is itself admissible and every admissible t on the grid is above it.
  for (const auto& r : grid())
    for (const auto& s : grid()) {
      const ExtReal q = residual(r, s);
      EXPECT_LE(r, inf_add(s, q));
      for (const auto& t : grid())
        if (r <= inf_add(s, t)) EXPECT_LE(q, t);
    }
}

TEST(Scale, ZeroTimesAnythingIsZero) {
  EXPECT_EQ(scale(0, ExtReal::plus_inf()), ExtReal(0));
  EXPECT_EQ(scale(0, ExtReal::minus_inf()), ExtReal(0));
  EXPECT_EQ(scale(2, ExtReal::minus_inf()), ExtReal::minus_inf());
  EXPECT_EQ(scale(frac(1, 2), 3), ExtReal(frac(3, 2)));
}

TEST(Divide, PreservesInfinities) {
  EXPECT_EQ(divide(ExtReal::plus_inf(), 3), ExtReal::plus_inf());
  EXPECT_EQ(divide(1, 4), ExtReal(frac(1, 4)));
}

TEST(Strings, Format) {
  EXPECT_EQ(ExtReal::plus_inf().str(), "+inf");
  EXPECT_EQ(ExtReal::minus_inf().str(), "-inf");
  EXPECT_EQ(ExtReal(frac(-3, 6)).str(), "-1/2");
}
