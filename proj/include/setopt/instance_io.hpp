#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "setopt/instances.hpp"

namespace setopt {

/// Malformed instance text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct InstanceFile {
  Instance instance;  // x0 is the first candidate, empty when none is given
  std::vector<Vec> candidates;
};

/// Line-oriented instance text. Keywords:
///   instance NAME            first line
///   space M
///   cone orthant | cone ray z1 .. zM (repeatable)
///   interior e1 .. eM
///   xdim N
///   domain g1 .. gN <= h     (repeatable)
///   normal a1 .. aM          starts a row of the H-family map
///   piece g1 .. gN h         offset piece of the current row (minimum)
///   component                starts a coordinate of a vector map ψ, read as ψ^C
///   affine g1 .. gN h        piece of the current component (maximum)
///   candidate x1 .. xN
///   test x1 .. xN
///   grid lo1 .. loN hi1 .. hiN K
///   witness regions | vertices | grid K | mstar
///   mstar z1 .. zM
///   expect CONDITION holds|fails
///   note TEXT
///   end                      last line
/// '#' starts a comment. Numbers are integers or p/q; anything else is
/// rejected. Semantic failures (bad cone, ψ not C-convex) raise
/// ValidationError or StructuralError.
InstanceFile parse_instance(std::string_view text);
InstanceFile load_instance_file(const std::string& path);

/// Inverse of parse_instance up to formatting.
std::string export_instance(const Instance& inst, const std::vector<Vec>& candidates = {});

}  // namespace setopt
