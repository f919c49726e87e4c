#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpap {

// The four path families. M1 and M2 take unit up-steps and down-jumps of any
// depth; M1R and M2R are their mirror images (up-jumps of any height, unit
// down-steps). M1/M1R forbid two consecutive jumps of the long kind; M2
// requires every down or flat step to be followed by an up step unless it is
// the last step, and M2R requires every up or flat step other than the first
// to be preceded by a down step.
enum class Family { M1, M2, M1R, M2R };

Family family_from_tag(std::string_view tag);  // "m1" "m2" "m1r" "m2r"
std::string family_tag(Family f);

// rise > 0: up-jump of that height; rise < 0: down-jump; rise == 0: flat.
struct Step {
  int rise = 0;
  bool operator==(const Step&) const = default;
};
constexpr Step up(int j = 1) { return Step{j}; }
constexpr Step down(int j = 1) { return Step{-j}; }
constexpr Step flat() { return Step{0}; }

enum class StepClass { Empty, Up, Down, Flat };
inline StepClass step_class(Step s) {
  if (s.rise > 0) return StepClass::Up;
  if (s.rise < 0) return StepClass::Down;
  return StepClass::Flat;
}

enum class PathErrorKind {
  IllegalStep,         // step shape outside the family alphabet
  NegativeHeight,      // prefix height drops below zero
  AdjacencyViolation,  // forbidden consecutive pair (M1, M1R)
  PositionalViolation, // follow/precede requirement broken (M2, M2R)
  TokenSyntax,         // parse_path only
};

struct PathError {
  PathErrorKind kind;
  int index;  // step index (or token index for TokenSyntax)
  std::string to_string() const;
};

struct LatticePath {
  Family family;
  std::vector<Step> steps;
  std::vector<int> heights;  // heights[i] = height after steps[0..i]
  int length() const { return static_cast<int>(steps.size()); }
  int end_height() const { return heights.empty() ? 0 : heights.back(); }
};

struct PathResult {
  std::optional<LatticePath> path;
  std::optional<PathError> error;
  bool ok() const { return path.has_value(); }
};

// Checks the family alphabet, the adjacency/positional rules, and
// nonnegativity of every prefix height, reporting the first violation in
// reading order. Pair rules are charged to the step that carries the
// requirement: the first of a forbidden adjacent pair, the unfollowed step
// for M2, the unpreceded step for M2R.
PathResult validate_path(Family f, const std::vector<Step>& steps);

StepClass last_step_class(const LatticePath& p);

// Text form: steps separated by spaces, "U"/"D"/"H" with an optional jump
// size suffix, e.g. "U H D2". parse_path validates after tokenizing.
PathResult parse_path(Family f, std::string_view text);
std::string render_path(const LatticePath& p);

// Reading the path right to left with all rises negated. Lands in the
// mirror family (M1 <-> M1R, M2 <-> M2R) when the path ends on the x-axis.
PathResult reverse_path(const LatticePath& p);

}  // namespace mpap
