#include "mpap/paths.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mpap {

Family family_from_tag(std::string_view tag) {
  if (tag == "m1") return Family::M1;
  if (tag == "m2") return Family::M2;
  if (tag == "m1r") return Family::M1R;
  if (tag == "m2r") return Family::M2R;
  throw std::invalid_argument("unknown family tag: " + std::string(tag));
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::M1: return "m1";
    case Family::M2: return "m2";
    case Family::M1R: return "m1r";
    case Family::M2R: return "m2r";
  }
  return "?";
}

std::string PathError::to_string() const {
  const char* what = "";
  switch (kind) {
    case PathErrorKind::IllegalStep: what = "illegal step"; break;
    case PathErrorKind::NegativeHeight: what = "negative height"; break;
    case PathErrorKind::AdjacencyViolation: what = "adjacency violation"; break;
    case PathErrorKind::PositionalViolation: what = "positional violation"; break;
    case PathErrorKind::TokenSyntax: what = "token syntax"; break;
  }
  return std::string(what) + " at index " + std::to_string(index);
}

namespace {

bool step_legal(Family f, Step s) {
  switch (f) {
    case Family::M1:
    case Family::M2:
      return s.rise <= 1;  // up-jumps limited to 1, any down depth, flat
    case Family::M1R:
    case Family::M2R:
      return s.rise >= -1;  // down-jumps limited to 1, any up height, flat
  }
  return false;
}

std::optional<PathError> pair_error(Family f, Step prev, Step cur, int prev_index) {
  StepClass a = step_class(prev), b = step_class(cur);
  switch (f) {
    case Family::M1:
      if (a == StepClass::Down && b == StepClass::Down)
        return PathError{PathErrorKind::AdjacencyViolation, prev_index};
      break;
    case Family::M1R:
      if (a == StepClass::Up && b == StepClass::Up)
        return PathError{PathErrorKind::AdjacencyViolation, prev_index};
      break;
    case Family::M2:
      // prev now has a follower, so the last-step exemption does not apply
      if ((a == StepClass::Down || a == StepClass::Flat) && b != StepClass::Up)
        return PathError{PathErrorKind::PositionalViolation, prev_index};
      break;
    case Family::M2R:
      if ((b == StepClass::Up || b == StepClass::Flat) && a != StepClass::Down)
        return PathError{PathErrorKind::PositionalViolation, prev_index + 1};
      break;
  }
  return std::nullopt;
}

}  // namespace

PathResult validate_path(Family f, const std::vector<Step>& steps) {
  int h = 0;
  std::vector<int> heights;
  heights.reserve(steps.size());
  for (size_t i = 0; i < steps.size(); ++i) {
    Step s = steps[i];
    if (!step_legal(f, s))
      return {std::nullopt, PathError{PathErrorKind::IllegalStep, static_cast<int>(i)}};
    if (i > 0) {
      if (auto e = pair_error(f, steps[i - 1], s, static_cast<int>(i) - 1))
        return {std::nullopt, e};
    }
    h += s.rise;
    if (h < 0)
      return {std::nullopt, PathError{PathErrorKind::NegativeHeight, static_cast<int>(i)}};
    heights.push_back(h);
  }
  return {LatticePath{f, steps, std::move(heights)}, std::nullopt};
}

StepClass last_step_class(const LatticePath& p) {
  if (p.steps.empty()) return StepClass::Empty;
  return step_class(p.steps.back());
}

PathResult parse_path(Family f, std::string_view text) {
  std::vector<Step> steps;
  std::istringstream in{std::string(text)};
  std::string tok;
  int index = 0;
  while (in >> tok) {
    char head = tok[0];
    int jump = 1;
    bool ok = true;
    if (tok.size() > 1) {
      if (head == 'H') {
        ok = false;
      } else {
        for (size_t i = 1; i < tok.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(tok[i]))) ok = false;
        if (ok) jump = std::stoi(tok.substr(1));
        if (jump <= 0) ok = false;
      }
    }
    if (ok) {
      switch (head) {
        case 'U': steps.push_back(up(jump)); break;
        case 'D': steps.push_back(down(jump)); break;
        case 'H': steps.push_back(flat()); break;
        default: ok = false;
      }
    }
    if (!ok) return {std::nullopt, PathError{PathErrorKind::TokenSyntax, index}};
    ++index;
  }
  return validate_path(f, steps);
}

std::string render_path(const LatticePath& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.steps.size(); ++i) {
    if (i) os << ' ';
    Step s = p.steps[i];
    if (s.rise == 0) {
      os << 'H';
    } else {
      os << (s.rise > 0 ? 'U' : 'D');
      int j = s.rise > 0 ? s.rise : -s.rise;
      if (j != 1) os << j;
    }
  }
  return os.str();
}

PathResult reverse_path(const LatticePath& p) {
  Family mirror;
  switch (p.family) {
    case Family::M1: mirror = Family::M1R; break;
    case Family::M1R: mirror = Family::M1; break;
    case Family::M2: mirror = Family::M2R; break;
    case Family::M2R: mirror = Family::M2; break;
    default: throw std::logic_error("bad family");
  }
  std::vector<Step> steps(p.steps.rbegin(), p.steps.rend());
  for (auto& s : steps) s.rise = -s.rise;
  return validate_path(mirror, steps);
}

}  // namespace mpap
