#pragma once

// Reference rows for the three-component example (C1, C2, C3) and the
// systems built from it. Quality columns are rendered level lists.

#include <cstddef>

namespace qrcomp::testing {

struct StateRow {
  const char* config;
  const char* levels;
  const char* outputs;
  double value;
};

struct ExprRow {
  const char* config;
  const char* levels;
  const char* outputs;
  const char* expr;
  double value;
};

// C3 then C2 in series.
inline constexpr StateRow kSeriesRows[] = {
    {"1X1", "<50,20>", "<30,10>", 0.855}, {"1X0", "<0>", "<0>", 0.045},
    {"011", "<50,20>", "<30,10>", 0.076}, {"1XY", "<0>", "<0>", 0.900},
    {"Y11", "<50,20>", "<30,10>", 0.760}, {"010", "<0>", "<0>", 0.004},
    {"Y10", "<0>", "<0>", 0.040},         {"001", "<0>", "<0>", 0.019},
    {"01Y", "<0>", "<0>", 0.080},         {"0Y1", "<0>", "<0>", 0.095},
    {"Y1Y", "<0>", "<0>", 0.800},         {"Y01", "<0>", "<0>", 0.190},
    {"YY1", "<0>", "<0>", 0.950},         {"000", "<0>", "<0>", 0.001},
    {"0Y0", "<0>", "<0>", 0.005},         {"Y00", "<0>", "<0>", 0.010},
    {"YY0", "<0>", "<0>", 0.050},         {"00Y", "<0>", "<0>", 0.020},
    {"0YY", "<0>", "<0>", 0.100},         {"Y0Y", "<0>", "<0>", 0.200},
    {"YYY", "<0>", "<0>", 1.000},
};

// C1 beside C2, best branch wins.
inline constexpr StateRow kParallelMaxRows[] = {
    {"1X1", "<50,40,30,10>", "<40,30,25,10>", 0.760},
    {"1X0", "<50,30,20>", "<40,25,10>", 0.040},
    {"011", "<50,40,30,10>", "<35,30,25,10>", 0.133},
    {"1XY", "<50,30,20>", "<40,25,10>", 0.800},
    {"Y11", "<50,40,30,10>", "<35,30,25,10>", 0.665},
    {"010", "<50,30,20>", "<35,25,10>", 0.007},
    {"Y10", "<50,30,20>", "<35,25,10>", 0.035},
    {"001", "<40,10>", "<30,10>", 0.057},
    {"01Y", "<50,30,20>", "<35,25,10>", 0.140},
    {"0Y1", "<40,10>", "<30,10>", 0.190},
    {"Y1Y", "<50,30,20>", "<35,25,10>", 0.700},
    {"Y01", "<40,10>", "<30,10>", 0.285},
    {"YY1", "<40,10>", "<30,10>", 0.950},
    {"000", "<0>", "<0>", 0.003},
    {"0Y0", "<0>", "<0>", 0.010},
    {"Y00", "<0>", "<0>", 0.015},
    {"YY0", "<0>", "<0>", 0.050},
    {"00Y", "<0>", "<0>", 0.060},
    {"0YY", "<0>", "<0>", 0.200},
    {"Y0Y", "<0>", "<0>", 0.300},
    {"YYY", "<0>", "<0>", 1.000},
};

// C1 beside C2, C1 preferred.
inline constexpr StateRow kParallelOrderedRows[] = {
    {"1X1", "<50,30,20>", "<40,25,10>", 0.760}, {"1X0", "<50,30,20>", "<40,25,10>", 0.040},
    {"011", "<50,30,20>", "<35,25,10>", 0.133}, {"1XY", "<50,30,20>", "<40,25,10>", 0.800},
    {"Y11", "<50,30,20>", "<35,25,10>", 0.665}, {"010", "<50,30,20>", "<35,25,10>", 0.007},
    {"Y10", "<50,30,20>", "<35,25,10>", 0.035}, {"001", "<40,10>", "<30,10>", 0.057},
    {"01Y", "<50,30,20>", "<35,25,10>", 0.140}, {"0Y1", "<40,10>", "<30,10>", 0.190},
    {"Y1Y", "<50,30,20>", "<35,25,10>", 0.700}, {"Y01", "<40,10>", "<30,10>", 0.285},
    {"YY1", "<40,10>", "<30,10>", 0.950},       {"000", "<0>", "<0>", 0.003},
    {"0Y0", "<0>", "<0>", 0.010},               {"Y00", "<0>", "<0>", 0.015},
    {"YY0", "<0>", "<0>", 0.050},               {"00Y", "<0>", "<0>", 0.060},
    {"0YY", "<0>", "<0>", 0.200},               {"Y0Y", "<0>", "<0>", 0.300},
    {"YYY", "<0>", "<0>", 1.000},
};

// Failure-reachable states of the series and parallel systems.
inline constexpr StateRow kSeriesAbstractRows[] = {
    {"1X1", "<50,20>", "<30,10>", 0.855}, {"1X0", "<0>", "<0>", 0.045},
    {"011", "<50,20>", "<30,10>", 0.076}, {"010", "<0>", "<0>", 0.004},
    {"001", "<0>", "<0>", 0.019},         {"000", "<0>", "<0>", 0.001},
};

inline constexpr StateRow kParallelAbstractRows[] = {
    {"1X1", "<50,40,30,10>", "<40,30,25,10>", 0.760},
    {"1X0", "<50,30,20>", "<40,25,10>", 0.040},
    {"011", "<50,40,30,10>", "<35,30,25,10>", 0.133},
    {"010", "<50,30,20>", "<35,25,10>", 0.007},
    {"001", "<40,10>", "<30,10>", 0.057},
    {"000", "<0>", "<0>", 0.003},
};

// Failure-reachable states of the case-study system (C1 || C2 || C3 -> C2).
// Row 00101 is replaced by kCaseStudyCorrections.
inline constexpr ExprRow kCaseStudyAbstractRows[] = {
    {"1X11X", "<50,40,30,10>", "<40,30,25,10>", "r_{1,1}.r_{2,1}.r_{3,1}", 0.68400},
    {"0111X", "<50,40,30,10>", "<35,30,25,10>", "(1-r_{1,1}).r_{1,2}.r_{2,1}.r_{3,1}", 0.11970},
    {"1X01X", "<50,30,20>", "<40,25,10>", "r_{1,1}.(1-r_{2,1}).r_{3,1}", 0.03600},
    {"1X101", "<50,40,30,10>", "<40,30,25,10>", "r_{1,1}.r_{2,1}.(1-r_{3,1}).r_{3,2}", 0.06080},
    {"0011X", "<40,10>", "<30,10>", "(1-r_{1,1}).(1-r_{1,2}).r_{2,1}.r_{3,1}", 0.05130},
    {"0101X", "<50,30,20>", "<35,25,10>", "(1-r_{1,1}).r_{1,2}.(1-r_{2,1}).r_{3,1}", 0.00630},
    {"01101", "<50,40,30,10>", "<35,30,25,10>", "(1-r_{1,1}).r_{1,2}.r_{2,1}.(1-r_{3,1}).r_{3,2}",
     0.01064},
    {"1X001", "<50,30,20>", "<40,25,10>", "r_{1,1}.(1-r_{2,1}).(1-r_{3,1}).r_{3,2}", 0.00320},
    {"1X100", "<50,40,30,10>", "<40,30,25,10>", "r_{1,1}.r_{2,1}.(1-r_{3,1}).(1-r_{3,2})", 0.01520},
    {"0001X", "<0>", "<0>", "(1-r_{1,1}).(1-r_{1,2}).(1-r_{2,1}).r_{3,1}", 0.00270},
    {"00101", "<50,20>", "<30,10>", "(1-r_{1,1}).(1-r_{1,2}).r_{2,1}.(1-r_{3,1}).r_{3,2}", 0.04560},
    {"01001", "<50,30,20>", "<35,25,10>", "(1-r_{1,1}).r_{1,2}.(1-r_{2,1}).(1-r_{3,1}).r_{3,2}",
     0.00056},
    {"01100", "<50,40,30,10>", "<35,30,25,10>",
     "(1-r_{1,1}).r_{1,2}.r_{2,1}.(1-r_{3,1}).(1-r_{3,2})", 0.00266},
    {"1X000", "<50,30,20>", "<40,25,10>", "r_{1,1}.(1-r_{2,1}).(1-r_{3,1}).(1-r_{3,2})", 0.00080},
    {"00001", "<0>", "<0>", "(1-r_{1,1}).(1-r_{1,2}).(1-r_{2,1}).(1-r_{3,1}).r_{3,2}", 0.00024},
    {"00100", "<40,10>", "<30,10>", "(1-r_{1,1}).(1-r_{1,2}).r_{2,1}.(1-r_{3,1}).(1-r_{3,2})",
     0.00114},
    {"01000", "<50,30,20>", "<35,25,10>", "(1-r_{1,1}).r_{1,2}.(1-r_{2,1}).(1-r_{3,1}).(1-r_{3,2})",
     0.00014},
    {"00000", "<0>", "<0>", "(1-r_{1,1}).(1-r_{1,2}).(1-r_{2,1}).(1-r_{3,1}).(1-r_{3,2})",
     0.00006},
};

// Row 00101 as its own expression evaluates (0.1*0.3*0.95*0.1*0.8), with
// the map the C2 branch and the C3 -> C2 branch merge to. The listed
// value and map disagree with the row's expression and with row 0011X.
inline constexpr ExprRow kCaseStudyCorrections[] = {
    {"00101", "<40,10>", "<30,10>", "(1-r_{1,1}).(1-r_{1,2}).r_{2,1}.(1-r_{3,1}).r_{3,2}", 0.00456},
};

struct ReliabilityRow {
  const char* config;
  const char* levels;
  const char* outputs;
  double reliability;
};

struct ProbabilityRow {
  const char* config;
  double operate_prob;
  std::size_t failures;
};

// Query1 over C1 || C2.
inline constexpr ReliabilityRow kQuery1ParallelRows[] = {
    {"1X1", "<50,40,30>", "<40,30,25>", 0.990},
    {"011", "<50,40,30>", "<35,30,25>", 0.985},
    {"001", "<40>", "<30>", 0.950},
};

// Query2 over C1 || C2; at most one failure tolerated, none of C2.
inline constexpr ProbabilityRow kQuery2ParallelRows[] = {
    {"1X1", 0.760, 0}, {"011", 0.133, 0}, {"001", 0.057, 1},
    {"0Y1", 0.190, 0}, {"Y11", 0.665, 0}, {"Y01", 0.285, 0},
};

// Query1 over the case-study system; a subset of the engine's rows.
inline constexpr ReliabilityRow kQuery1CaseStudyRows[] = {
    {"1X11X", "<50,40,30>", "<40,30,25>", 0.990}, {"0111X", "<50,40,30>", "<35,30,25>", 0.985},
    {"0011X", "<40>", "<30>", 0.950},             {"01101", "<50,40,30>", "<35,30,25>", 0.985},
    {"1X101", "<50,40,30>", "<40,30,25>", 0.990}, {"1X100", "<50,40,30>", "<40,30,25>", 0.990},
};

// Query2 over the case-study system.
inline constexpr ProbabilityRow kQuery2CaseStudyRows[] = {
    {"1X11X", 0.68400, 0}, {"0111X", 0.11970, 0}, {"0011X", 0.05130, 1}, {"00101", 0.00456, 1},
    {"00100", 0.00114, 2}, {"0010Y", 0.00570, 1}, {"001Y1", 0.04560, 1}, {"001Y0", 0.01140, 1},
    {"0Y11X", 0.17100, 0}, {"0Y101", 0.01520, 0}, {"0Y100", 0.00380, 1}, {"01101", 0.01064, 0},
    {"01100", 0.00266, 1}, {"0110Y", 0.01330, 0}, {"011Y1", 0.10640, 0}, {"011Y0", 0.02660, 0},
    {"Y111X", 0.59850, 0}, {"Y011X", 0.25650, 0}, {"Y0101", 0.02280, 0}, {"Y0100", 0.00570, 1},
    {"Y1101", 0.05320, 0}, {"Y1100", 0.01330, 1}, {"1X101", 0.06080, 0}, {"1X100", 0.01520, 1},
    {"1X10Y", 0.07600, 0}, {"1X1Y1", 0.60800, 0}, {"1X1Y0", 0.15200, 0},
};

}  // namespace qrcomp::testing
