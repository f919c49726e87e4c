#include "mpap/enumerate.hpp"

#include <stdexcept>

namespace mpap {

namespace {

bool tall_family(Family f) { return f == Family::M1R || f == Family::M2R; }

struct Walker {
  Family f;
  int n, cap;
  const std::function<void(const LatticePath&)>* visit;
  std::vector<Step> steps;
  std::vector<int> heights;
  LatticePath scratch;

  void emit() {
    scratch.family = f;
    scratch.steps = steps;
    scratch.heights = heights;
    (*visit)(scratch);
  }

  // Appends every legal step at position i (current height h), ascending by
  // rise so output is lexicographic in the step sequence.
  void extend(int i, int h) {
    if (i == n) {
      if (h <= cap) emit();
      return;
    }
    int rem_after = n - i - 1;
    StepClass prev = i ? step_class(steps[i - 1]) : StepClass::Empty;
    auto push = [&](int rise) {
      steps.push_back(Step{rise});
      heights.push_back(h + rise);
      extend(i + 1, h + rise);
      steps.pop_back();
      heights.pop_back();
    };
    switch (f) {
      case Family::M1:
        // down-jumps of any depth <= h, no two in a row, then flat, then up
        if (prev != StepClass::Down)
          for (int d = h; d >= 1; --d) push(-d);
        push(0);
        push(1);
        break;
      case Family::M2:
        // after a down or flat step only an up step may follow
        if (prev == StepClass::Down || prev == StepClass::Flat) {
          push(1);
        } else {
          for (int d = h; d >= 1; --d) push(-d);
          push(0);
          push(1);
        }
        break;
      case Family::M1R: {
        if (h >= 1) push(-1);
        push(0);
        if (prev != StepClass::Up) {
          // final height can still fall by at most rem_after
          int top = cap + rem_after - h;
          for (int u = 1; u <= top; ++u) push(u);
        }
        break;
      }
      case Family::M2R: {
        if (h >= 1) push(-1);
        // up and flat steps (beyond the first) must sit right after a down
        bool free_pos = (i == 0) || prev == StepClass::Down;
        if (free_pos) {
          push(0);
          int top = cap + rem_after - h;
          for (int u = 1; u <= top; ++u) push(u);
        }
        break;
      }
    }
  }

  void run() { extend(0, 0); }
};

}  // namespace

void enumerate_paths(Family f, int n, int k_cap,
                     const std::function<void(const LatticePath&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (k_cap < 0) {
    if (tall_family(f))
      throw std::invalid_argument("height cap is required for " + family_tag(f));
    k_cap = n;
  }
  Walker w{f, n, k_cap, &visit, {}, {}, {}};
  w.steps.reserve(static_cast<size_t>(n));
  w.heights.reserve(static_cast<size_t>(n));
  w.run();
}

std::vector<LatticePath> collect_paths(Family f, int n, int k_cap) {
  std::vector<LatticePath> out;
  enumerate_paths(f, n, k_cap, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

CountTable count_table(Family f, int n_max, int k_max) {
  CountTable t;
  t.family = f;
  t.n_max = n_max;
  t.k_max = k_max;
  t.counts.assign(n_max + 1, std::vector<Int>(k_max + 1));
  t.by_class.assign(n_max + 1, std::vector<CountTable::Split>(k_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    enumerate_paths(f, n, k_max, [&](const LatticePath& p) {
      int k = p.end_height();
      t.counts[n][k] += 1;
      switch (last_step_class(p)) {
        case StepClass::Empty:
        case StepClass::Up: t.by_class[n][k].up += 1; break;
        case StepClass::Down: t.by_class[n][k].down += 1; break;
        case StepClass::Flat: t.by_class[n][k].flat += 1; break;
      }
    });
  }
  return t;
}

Int antidiagonal_count(Family f, int n) {
  Int acc = 0;
  for (int len = 0; len <= n; ++len) {
    int want = n - len;
    enumerate_paths(f, len, want, [&](const LatticePath& p) {
      if (p.end_height() == want) acc += 1;
    });
  }
  return acc;
}

}  // namespace mpap
