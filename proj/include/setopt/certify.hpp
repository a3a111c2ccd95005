#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setopt/dini.hpp"
#include "setopt/set_map.hpp"

namespace setopt {

enum class Condition {
  Min,
  WlMin,
  WscMin,
  WMin,
  SVI_M,
  svi_M,
  MVI_M,
  mvi_M,
  SVI_W,
  svi_W,
  MVI_W,
  mvi_W,
  SR,
  WR,
};

/// The twelve minimality and variational-inequality conditions, in report order.
inline constexpr std::array<Condition, 12> kTwelveConditions{
    Condition::Min,   Condition::WlMin, Condition::WscMin, Condition::WMin,  Condition::SVI_M, Condition::svi_M,
    Condition::MVI_M, Condition::mvi_M, Condition::SVI_W,  Condition::svi_W, Condition::MVI_W, Condition::mvi_W,
};

std::string_view condition_name(Condition c);
std::optional<Condition> parse_condition(std::string_view name);
/// Conditions that quantify over functionals z* in B*.
bool is_scalarized(Condition c);
bool is_weak(Condition c);

/// Finite replacement for "for all x in X". Points are deduplicated in
/// first-seen order.
struct TestSet {
  std::vector<Vec> points;

  static TestSet of(std::vector<Vec> points);
  /// Every point lo + (hi - lo)·k/steps per coordinate, k = 0..steps.
  static TestSet grid(const Vec& lo, const Vec& hi, int steps);
};

struct WitnessSearch {
  enum class Strategy { Vertices, MStar, Grid, Regions };
  Strategy strategy = Strategy::Regions;
  std::vector<Vec> mstar;
  int grid = 4;

  /// Regions: base vertices of B* together with every row normal of f
  /// rescaled into B*. The support functions of f(x) are linear on the cones
  /// spanned by these directions, and each scalar test in this map class is
  /// decided on them, so a failed search is a certified failure.
  bool complete() const { return strategy == Strategy::Regions; }
  std::string describe() const;
};

struct ClauseResult {
  bool holds = true;
  /// x is outside the quantifier range of the condition.
  bool excluded = false;
  /// Functional satisfying the existential part, when one was needed.
  std::optional<Vec> zstar;
  std::string detail;
};

struct PointVerdict {
  Vec x;
  ClauseResult clause;
};

struct ConditionVerdict {
  Condition id = Condition::Min;
  bool holds = true;
  /// First failing point; set exactly when holds is false.
  std::optional<Vec> witness_x;
  std::optional<Vec> witness_zstar;
  std::vector<PointVerdict> points;
  std::vector<std::string> caveats;
};

/// Evaluation cache for one map and one candidate point. Not thread-safe;
/// use one context per thread.
class CertificationContext {
 public:
  CertificationContext(MapPtr f, Vec x0, WitnessSearch search = {});

  const HFamilyMap& map() const { return *f_; }
  const MapPtr& map_ptr() const { return f_; }
  const Vec& x0() const { return x0_; }
  const WitnessSearch& search() const { return search_; }

  const UpperSet& value(const Vec& x);
  const UpperSet& recession(const Vec& x);
  ExtReal sigma(const Vec& zstar, const Vec& x);
  const SetDerivative& derivative(const Vec& x, const Vec& u);
  ExtReal scalar_derivative(const Vec& zstar, const Vec& x, const Vec& u);
  bool same_as_x0(const Vec& x);
  const std::vector<Vec>& candidates();

  /// The defining clause of `c` at one comparison point x.
  ClauseResult clause(Condition c, const Vec& x);
  ConditionVerdict certify(Condition c, const TestSet& t);

 private:
  MapPtr f_;
  Vec x0_;
  WitnessSearch search_;
  std::optional<std::vector<Vec>> candidates_;
  std::map<Vec, UpperSet> values_;
  std::map<Vec, UpperSet> recessions_;
  std::map<std::pair<Vec, Vec>, ExtReal> sigmas_;
  std::map<std::pair<Vec, Vec>, SetDerivative> derivatives_;
  std::map<std::array<Vec, 3>, ExtReal> scalar_derivatives_;
};

/// Points of B* on the barycentric grid with denominator k over the base vertices.
std::vector<Vec> base_grid(const OrderingCone& cone, int k);

ConditionVerdict certify_min(const MapPtr& f, const Vec& x0, const TestSet& t);
enum class WeakVariant { L, Sc, Plain };
ConditionVerdict certify_weak_min(const MapPtr& f, const Vec& x0, const TestSet& t, WeakVariant v,
                                  const WitnessSearch& w = {});
ConditionVerdict certify_svi(const MapPtr& f, const Vec& x0, const TestSet& t, bool strong, bool scalarized,
                             const WitnessSearch& w = {});
ConditionVerdict certify_mvi(const MapPtr& f, const Vec& x0, const TestSet& t, bool strong, bool scalarized,
                             const WitnessSearch& w = {});

}  // namespace setopt
