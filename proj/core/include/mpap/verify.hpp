#pragma once

#include <string>
#include <vector>

#include "mpap/report.hpp"

namespace mpap {

// Self-check suites shared by the command line tool and the test harness.
// order/width control the z-truncation and column window where a suite works
// with series; checks with intrinsic windows (reference matrices, the
// enumeration cross-checks) use their own bounds.

Report verify_triangles(int order, int width);    // reference blocks, recurrences,
                                                  // decompositions, convolutions
Report verify_sequences();                        // pinned sequence prefixes
Report verify_enumeration(int order, int width);  // worked examples, cross-route, reversal
Report verify_kernel(int order, int width);       // roots, equations, total columns
Report verify_riordan(int order);                 // array identities, rectifications
Report verify_formulas(int order, int width);     // closed forms vs triangles
Report verify_oeis();                             // embedded references, alignments

std::vector<std::string> verify_suite_names();  // excludes "all"
std::vector<Report> run_suites(const std::string& name, int order, int width);

}  // namespace mpap
